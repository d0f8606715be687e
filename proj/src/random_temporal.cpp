#include "tempo/random_temporal.hpp"

#include <algorithm>
#include <cmath>

#include "tempo/reachability.hpp"
#include "tempo/rng.hpp"

namespace tempo {

LabelPartition partition_labels(int alpha) {
    if (alpha < 4) throw std::invalid_argument("universe too small to partition into colours");
    int k = alpha / 4;
    int v = alpha % 4;
    LabelPartition part;
    part.alpha = alpha;
    Label next = 1;
    for (int c = 0; c < 4; ++c) {
        int size = k + (c >= 4 - v ? 1 : 0);  // the remainder tops up the last v ranges
        part.ranges[c] = {next, next + size - 1};
        next += size;
    }
    return part;
}

TemporalGraph uniform_random_labelling(const TemporalGraph& g, int alpha, std::uint64_t seed) {
    if (alpha < 1) throw std::invalid_argument("empty label universe");
    Rng rng(seed);
    TemporalGraph out(g.vertex_count(), g.directed());
    for (const auto& [edge, labels] : g.edges())
        out.add_edge(edge.first, edge.second,
                     {static_cast<Label>(1 + rng.below(static_cast<std::uint64_t>(alpha)))});
    return out;
}

TemporalGraph gnp_instance(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of range");
    Rng rng(seed);
    TemporalGraph g(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) g.add_edge(u, v);
    return g;
}

CliqueRouter make_clique_router(int n, double gamma) {
    if (n < 2) throw std::invalid_argument("clique too small");
    if (gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    int s = static_cast<int>(std::ceil(gamma * std::log2(static_cast<double>(n))));
    if (s < 1 || 2 * s + 1 >= n) throw std::invalid_argument("router does not fit in the clique");
    CliqueRouter r;
    r.centre = 0;
    for (int i = 1; i <= s; ++i) r.v_in.push_back(i);
    for (int i = s + 1; i <= 2 * s; ++i) r.v_out.push_back(i);
    return r;
}

std::optional<Journey> special_path_journey(const TemporalGraph& labelled, const CliqueRouter& r,
                                            const LabelPartition& partition, Vertex w, Vertex w2,
                                            int lane) {
    if (lane < 0 || lane >= static_cast<int>(r.v_in.size()))
        throw std::out_of_range("bad lane index");
    Vertex limit = 2 * static_cast<Vertex>(r.v_in.size());
    if (w <= limit || w2 <= limit || w == w2)
        throw std::invalid_argument("endpoints must be distinct outside vertices");
    std::array<TimeEdge, 4> steps{{{w, r.v_in[lane], labelled.labels(w, r.v_in[lane]).front()},
                                   {r.v_in[lane], r.centre,
                                    labelled.labels(r.v_in[lane], r.centre).front()},
                                   {r.centre, r.v_out[lane],
                                    labelled.labels(r.centre, r.v_out[lane]).front()},
                                   {r.v_out[lane], w2, labelled.labels(r.v_out[lane], w2).front()}}};
    for (int c = 0; c < 4; ++c)
        if (partition.colour_of(steps[c].label) != c) return std::nullopt;
    Journey j;
    j.steps.assign(steps.begin(), steps.end());
    j.arrival_time = steps.back().label;
    return j;
}

std::pair<TemporalGraph, RouterReport> clique_router_sparsify(int n, int alpha, double gamma,
                                                              std::uint64_t seed) {
    CliqueRouter router = make_clique_router(n, gamma);
    LabelPartition partition = partition_labels(alpha);

    TemporalGraph clique(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) clique.add_edge(u, v);
    TemporalGraph labelled = uniform_random_labelling(clique, alpha, seed);

    Vertex last_router = 2 * static_cast<Vertex>(router.v_in.size());
    TemporalGraph kept(n, false);
    for (const auto& [edge, labels] : labelled.edges()) {
        if (edge.first > last_router && edge.second > last_router) continue;
        kept.add_edge(edge.first, edge.second, labels);
    }

    RouterReport report;
    report.n = n;
    report.clique = true;
    report.alpha = alpha;
    report.gamma = gamma;
    report.seed = seed;
    report.kept_labels = cost(kept);
    for (std::size_t lane = 0; lane < router.v_in.size(); ++lane) {
        Label in = labelled.labels(router.v_in[lane], router.centre).front();
        Label out = labelled.labels(router.centre, router.v_out[lane]).front();
        if (partition.colour_of(in) == 1 && partition.colour_of(out) == 2) ++report.path_count;
    }
    report.tc_verdict = is_temporally_connected(kept);
    return {std::move(kept), report};
}

namespace {

struct PairSampler {
    // one existence draw and one label draw per vertex pair, in a fixed
    // order, so a fixed seed couples instances across different p
    std::vector<char> exists;
    std::vector<Label> label;
    int n;

    PairSampler(int n, double p, int alpha, std::uint64_t seed) : n(n) {
        Rng redges(split_seed(seed, 0));
        Rng rlabels(split_seed(seed, 1));
        exists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        label.reserve(exists.capacity());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                exists.push_back(redges.chance(p));
                label.push_back(static_cast<Label>(1 + rlabels.below(alpha)));
            }
    }

    std::size_t index(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
    }
};

std::vector<Vertex> shuffled_non_hubs(int n, std::uint64_t shuffle_seed) {
    std::vector<Vertex> others;
    for (Vertex v = 2; v < n; ++v) others.push_back(v);
    Rng rng(shuffle_seed);
    rng.shuffle(others);
    return others;
}

}  // namespace

ThetaRouter find_thetas(const TemporalGraph& labelled, const LabelPartition& partition,
                        std::uint64_t shuffle_seed) {
    int n = labelled.vertex_count();
    if (n < 4) throw std::invalid_argument("too few vertices for a theta router");
    ThetaRouter router;
    auto others = shuffled_non_hubs(n, shuffle_seed);
    std::size_t half = others.size() / 2;
    auto colour = [&](Vertex u, Vertex v, int want) {
        return labelled.has_edge(u, v) && !labelled.labels(u, v).empty() &&
               partition.colour_of(labelled.labels(u, v).front()) == want;
    };
    for (std::size_t i = 0; i < half; ++i) {
        Vertex a = others[i], b = others[half + i];
        if (colour(a, b, 0) && colour(a, router.v1, 1) && colour(router.v1, b, 2) &&
            colour(router.v2, a, 2) && colour(b, router.v2, 1))
            router.thetas.push_back({a, b});
    }
    return router;
}

TemporalGraph theta_router_subgraph(const TemporalGraph& labelled, const ThetaRouter& router) {
    TemporalGraph out(labelled.vertex_count(), false);
    for (const Theta& th : router.thetas) {
        for (auto [u, v] : {Edge{th.a, th.b}, Edge{th.a, router.v1}, Edge{router.v1, th.b},
                            Edge{router.v2, th.a}, Edge{th.b, router.v2}})
            out.add_edge(u, v, labelled.labels(u, v));
    }
    return out;
}

std::vector<Journey> theta_internal_journeys(const TemporalGraph& labelled,
                                             const ThetaRouter& router) {
    std::vector<Journey> out;
    auto label = [&](Vertex u, Vertex v) { return labelled.labels(u, v).front(); };
    auto add = [&](std::vector<TimeEdge> steps) {
        Journey j{std::move(steps), 0};
        j.arrival_time = j.steps.back().label;
        out.push_back(std::move(j));
    };
    const auto& th = router.thetas;
    Vertex v1 = router.v1, v2 = router.v2;
    for (std::size_t i = 0; i < th.size(); ++i) {
        for (std::size_t j = 0; j < th.size(); ++j) {
            add({{th[i].a, v1, label(th[i].a, v1)}, {v1, th[j].b, label(v1, th[j].b)}});
            add({{th[i].b, v2, label(th[i].b, v2)}, {v2, th[j].a, label(v2, th[j].a)}});
            if (i != j) {
                add({{th[i].a, th[i].b, label(th[i].a, th[i].b)},
                     {th[i].b, v2, label(th[i].b, v2)},
                     {v2, th[j].a, label(v2, th[j].a)}});
                add({{th[i].b, th[i].a, label(th[i].b, th[i].a)},
                     {th[i].a, v1, label(th[i].a, v1)},
                     {v1, th[j].b, label(v1, th[j].b)}});
            }
        }
        add({{v1, th[i].a, label(v1, th[i].a)}, {th[i].a, v2, label(th[i].a, v2)}});
        add({{v2, th[i].b, label(v2, th[i].b)}, {th[i].b, v1, label(th[i].b, v1)}});
        // the remaining connections are single direct edges
        for (auto [u, v] : {Edge{th[i].a, th[i].b}, Edge{th[i].a, v1}, Edge{v1, th[i].b},
                            Edge{v2, th[i].a}, Edge{th[i].b, v2}}) {
            add({{u, v, label(u, v)}});
            add({{v, u, label(u, v)}});
        }
    }
    return out;
}

std::pair<TemporalGraph, RouterReport> gnp_router_sparsify(int n, double p, int alpha,
                                                           std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("too few vertices for a theta router");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("probability out of range");
    LabelPartition partition = partition_labels(alpha);

    PairSampler sampler(n, p, alpha, seed);
    TemporalGraph labelled(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (sampler.exists[sampler.index(u, v)])
                labelled.add_edge(u, v, {sampler.label[sampler.index(u, v)]});

    ThetaRouter router = find_thetas(labelled, partition, split_seed(seed, 2));

    TemporalGraph kept = theta_router_subgraph(labelled, router);
    std::vector<char> in_router(n, 0);
    in_router[router.v1] = in_router[router.v2] = 1;
    for (const Theta& th : router.thetas) in_router[th.a] = in_router[th.b] = 1;

    RouterReport report;
    report.n = n;
    report.clique = false;
    report.p = p;
    report.alpha = alpha;
    report.seed = seed;
    report.path_count = static_cast<long long>(router.thetas.size());

    auto colour = [&](Vertex u, Vertex v, int want) {
        return labelled.has_edge(u, v) &&
               partition.colour_of(labelled.labels(u, v).front()) == want;
    };
    for (Vertex u = 0; u < n; ++u) {
        if (in_router[u]) continue;
        bool attached = false;
        for (const Theta& th : router.thetas) {
            if (!colour(u, th.a, 0) || !colour(th.b, u, 3)) continue;
            kept.add_edge(u, th.a, labelled.labels(u, th.a));
            kept.add_edge(th.b, u, labelled.labels(th.b, u));
            attached = true;
            break;
        }
        if (!attached) ++report.unattached;
    }

    report.kept_labels = cost(kept);
    report.tc_verdict = is_temporally_connected(kept);
    return {std::move(kept), report};
}

}  // namespace tempo
