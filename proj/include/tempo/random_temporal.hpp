#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// {1..alpha} split into four consecutive colour ranges A1..A4 whose sizes
// differ by at most one (the remainder v = alpha mod 4 tops up the last v
// ranges), so each colour has probability mass at least floor(alpha/4)/alpha.
struct LabelPartition {
    int alpha = 0;
    std::array<std::pair<Label, Label>, 4> ranges;  // inclusive [lo, hi]

    // colour of a label, 0-based index into ranges
    int colour_of(Label l) const {
        for (int c = 0; c < 4; ++c)
            if (l >= ranges[c].first && l <= ranges[c].second) return c;
        throw std::out_of_range("label outside the partitioned universe");
    }
    double mass(int colour) const {
        return static_cast<double>(ranges[colour].second - ranges[colour].first + 1) / alpha;
    }
};

LabelPartition partition_labels(int alpha);

// one label per edge, i.i.d. uniform on {1..alpha}, drawn in canonical edge
// order; the same seed always produces the same labelling
TemporalGraph uniform_random_labelling(const TemporalGraph& g, int alpha, std::uint64_t seed);

// Erdos-Renyi skeleton with empty label sets, pairs visited in order (0,1),
// (0,2), ... so that for a fixed seed the edge set grows monotonically in p
TemporalGraph gnp_instance(int n, double p, std::uint64_t seed);

struct RouterReport {
    int n = 0;
    bool clique = false;
    double p = 1.0;
    int alpha = 0;
    double gamma = 0.0;
    std::uint64_t seed = 0;
    long long kept_labels = 0;
    bool tc_verdict = false;
    // clique: usable middle lanes (v_in_i coloured A2 towards the centre and
    // v0 coloured A3 towards v_out_i); gnp: number of thetas found
    long long path_count = 0;
    long long unattached = 0;  // gnp only: outside vertices with no green/red pair
};

struct CliqueRouter {
    Vertex centre = 0;
    std::vector<Vertex> v_in, v_out;  // s vertices each
};

CliqueRouter make_clique_router(int n, double gamma);

// the four-edge path (w, v_in[lane], centre, v_out[lane], w2), as a journey
// when its labels fall in A1..A4 in order, nullopt otherwise
std::optional<Journey> special_path_journey(const TemporalGraph& labelled, const CliqueRouter& r,
                                            const LabelPartition& partition, Vertex w, Vertex w2,
                                            int lane);

// Labels K_n uniformly from {1..alpha}, then keeps only labels on edges with
// an endpoint in the router (edges inside it plus every outside-to-router
// edge). Kept label count is (2s+1)2s/2 + (n-2s-1)(2s+1) with
// s = ceil(gamma*log2 n); the report records the actual TC verdict.
std::pair<TemporalGraph, RouterReport> clique_router_sparsify(int n, int alpha, double gamma,
                                                              std::uint64_t seed);

struct Theta {
    Vertex a = 0, b = 0;
};

struct ThetaRouter {
    Vertex v1 = 0, v2 = 1;
    std::vector<Theta> thetas;
};

// Samples G(n,p), labels every vertex pair uniformly from {1..alpha} (labels
// are drawn whether or not the edge exists, keeping draws aligned across p),
// pairs the non-hub vertices after a seeded shuffle, and collects the thetas:
// five existing edges per pair with colours green {a,b}, yellow {a,v1},
// blue {v1,b}, blue {v2,a}, yellow {b,v2}. Keeps the theta edges plus, for
// every outside vertex, its first green/red attachment pair by theta index.
// Vertices with no attachment stay disconnected and the TC verdict reports
// whatever actually holds.
std::pair<TemporalGraph, RouterReport> gnp_router_sparsify(int n, double p, int alpha,
                                                           std::uint64_t seed);

// the router alone (thetas plus hubs) as a temporal graph, for structural
// tests: internal journeys and router-only TC
TemporalGraph theta_router_subgraph(const TemporalGraph& labelled, const ThetaRouter& router);

// the seven internal journey families between theta vertices and the hubs
std::vector<Journey> theta_internal_journeys(const TemporalGraph& labelled,
                                             const ThetaRouter& router);

// exposed for tests that need the same pairing the sparsifier used
ThetaRouter find_thetas(const TemporalGraph& labelled, const LabelPartition& partition,
                        std::uint64_t shuffle_seed);

}  // namespace tempo
