#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "tempo/reachability.hpp"
#include "tempo/rng.hpp"
#include "tempo/temporal_graph.hpp"

namespace testutil {

using namespace tempo;

inline TemporalGraph complete_graph(int n) {
    TemporalGraph g(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// distinct labels, a shuffled permutation of 1..n(n-1)/2
inline TemporalGraph random_slse_clique(Rng& rng, int n) {
    std::vector<Label> labels(n * (n - 1) / 2);
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Label>(i) + 1;
    rng.shuffle(labels);
    TemporalGraph g(n, false);
    std::size_t next = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, {labels[next++]});
    return g;
}

// up to max_labels random (edge, label) draws on up to max_n vertices;
// roughly half the instances are directed
inline TemporalGraph random_temporal_graph(Rng& rng, int max_n, int max_labels, Label alpha) {
    int n = rng.range(2, max_n);
    TemporalGraph g(n, rng.chance(0.5));
    int draws = rng.range(0, max_labels);
    for (int i = 0; i < draws; ++i) {
        Vertex u = rng.range(0, n - 1);
        Vertex v = rng.range(0, n - 1);
        if (u == v) continue;
        g.add_label(u, v, rng.range(1, alpha));
    }
    return g;
}

// random spanning tree plus extra undirected edges, label sets left empty
inline TemporalGraph random_connected_graph(Rng& rng, int n, int extra_edges) {
    TemporalGraph g(n, false);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, rng.range(0, v - 1));
    for (int i = 0; i < extra_edges; ++i) {
        Vertex u = rng.range(0, n - 1);
        Vertex v = rng.range(0, n - 1);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

// a temporally connected instance with cost <= max_cost; falls back to a
// labelled clique (always TC) if rejection sampling runs dry
inline TemporalGraph random_tc_instance(Rng& rng, int max_cost, Label alpha) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int n = rng.range(3, 5);
        TemporalGraph g(n, false);
        int draws = rng.range(n, max_cost);
        for (int i = 0; i < draws; ++i) {
            Vertex u = rng.range(0, n - 1);
            Vertex v = rng.range(0, n - 1);
            if (u == v) continue;
            g.add_label(u, v, rng.range(1, alpha));
        }
        if (cost(g) <= max_cost && is_temporally_connected(g)) return g;
    }
    int n = rng.range(3, 4);
    TemporalGraph g(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, {rng.range(1, alpha)});
    return g;
}

inline TemporalGraph prufer_tree(const std::vector<int>& code, int n) {
    TemporalGraph g(n, false);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::vector<char> used(n, 0);
    for (int c : code) {
        for (Vertex leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] != 1 || used[leaf]) continue;
            g.add_edge(leaf, c);
            used[leaf] = 1;
            --degree[c];
            break;
        }
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!used[v] && degree[v] == 1) rest.push_back(v);
    g.add_edge(rest[0], rest[1]);
    return g;
}

// all trees on n vertices up to isomorphism: decode every Prufer code and
// dedupe on the lexicographically smallest edge list over all relabellings
inline std::vector<TemporalGraph> all_trees_up_to_iso(int n) {
    std::vector<TemporalGraph> out;
    if (n < 2 || n > 7) throw std::invalid_argument("tree enumeration works for 2 <= n <= 7");
    std::set<std::vector<Edge>> seen;
    std::vector<int> code(n > 2 ? n - 2 : 0, 0);
    while (true) {
        TemporalGraph tree = prufer_tree(code, n);
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = v;
        std::vector<Edge> best;
        do {
            std::vector<Edge> relabelled;
            for (const auto& [edge, labels] : tree.edges()) {
                Vertex u = perm[edge.first], v = perm[edge.second];
                relabelled.emplace_back(std::min(u, v), std::max(u, v));
            }
            std::sort(relabelled.begin(), relabelled.end());
            if (best.empty() || relabelled < best) best = relabelled;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(tree);

        std::size_t i = code.size();
        while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
        if (i == 0) break;
        ++code[i - 1];
    }
    return out;
}

// monotone XOR(3) formula text via the configuration model: three stubs per
// variable, shuffled, paired; reshuffle whenever a clause would be x_i = x_j
inline std::string random_formula_text(Rng& rng, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("variable count must be even, >= 2");
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    while (true) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        rng.shuffle(stubs);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2)
            if (stubs[i] == stubs[i + 1]) ok = false;
        if (!ok) continue;
        std::string text = "p mxor3 " + std::to_string(n) + " " + std::to_string(3 * n / 2) + "\n";
        for (std::size_t i = 0; i < stubs.size(); i += 2)
            text += std::to_string(stubs[i] + 1) + " " + std::to_string(stubs[i + 1] + 1) + "\n";
        return text;
    }
}

// exhaustive removal profit: try all subsets of (edge, label) pairs
inline long long removal_profit_sweep(const TemporalGraph& g) {
    std::vector<std::pair<Edge, Label>> pairs;
    for (const auto& [edge, labels] : g.edges())
        for (Label l : labels) pairs.emplace_back(edge, l);
    std::size_t m = pairs.size();
    if (m > 20) throw std::invalid_argument("too many labels for the subset sweep");
    long long best = 0;
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        long long size = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) ++size;
        if (size <= best) continue;
        TemporalGraph h = g;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) h.erase_label(pairs[i].first.first, pairs[i].first.second, pairs[i].second);
        if (is_temporally_connected(h)) best = size;
    }
    return best;
}

// every journey leaving source, found by depth-first extension over time
// edges with strictly larger labels; every prefix is itself a journey
struct JourneyEnumeration {
    bool capped = false;
    std::vector<std::vector<Journey>> to;  // per destination
};

namespace detail {

inline void extend(const std::vector<std::vector<TimeEdge>>& out, Journey& j, Vertex cur,
                   JourneyEnumeration& result, std::size_t cap) {
    for (const TimeEdge& te : out[cur]) {
        if (!j.steps.empty() && te.label <= j.steps.back().label) continue;
        std::size_t total = 0;
        for (const auto& bucket : result.to) total += bucket.size();
        if (total >= cap) {
            result.capped = true;
            return;
        }
        j.steps.push_back(te);
        j.arrival_time = te.label;
        result.to[te.to].push_back(j);
        extend(out, j, te.to, result, cap);
        j.steps.pop_back();
        j.arrival_time = j.steps.empty() ? 0 : j.steps.back().label;
    }
}

}  // namespace detail

inline JourneyEnumeration enumerate_journeys(const TemporalGraph& g, Vertex source,
                                             std::size_t cap = 100000) {
    std::vector<std::vector<TimeEdge>> out(g.vertex_count());
    for (const TimeEdge& te : time_edges_sorted(g)) out[te.from].push_back(te);
    JourneyEnumeration result;
    result.to.resize(g.vertex_count());
    Journey j;
    detail::extend(out, j, source, result, cap);
    return result;
}

}  // namespace testutil
