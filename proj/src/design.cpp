#include "tempo/design.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>

#include "tempo/reachability.hpp"

namespace tempo {

namespace {

std::vector<std::vector<Vertex>> sorted_adjacency(const TemporalGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.vertex_count());
    for (const auto& [edge, labels] : g.edges()) {
        adj[edge.first].push_back(edge.second);
        adj[edge.second].push_back(edge.first);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

}  // namespace

TreeDesign spanning_tree_labelling(const TemporalGraph& g, Vertex root) {
    if (g.directed()) throw std::invalid_argument("needs an undirected graph");
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    if (root < 0 || root >= n) throw std::out_of_range("bad root");

    TreeDesign design;
    design.root = root;
    design.parent.assign(n, -1);
    design.parent[root] = root;

    auto adj = sorted_adjacency(g);
    std::vector<Vertex> order;
    order.reserve(n);
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        order.push_back(v);
        for (Vertex w : adj[v]) {
            if (design.parent[w] != -1) continue;
            design.parent[w] = v;
            frontier.push(w);
        }
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("graph not connected");

    // upward phase, leaves towards the root: the edge above v gets one more
    // than the largest label already placed inside v's subtree
    std::vector<Label> subtree_max(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == root) continue;
        Label up = subtree_max[v] + 1;
        Vertex p = design.parent[v];
        design.up_label[g.edge_key(p, v)] = up;
        subtree_max[p] = std::max(subtree_max[p], up);
    }
    design.radius = subtree_max[root];

    // downward phase, root towards the leaves
    std::vector<Label> depth_label(n, 0);
    for (Vertex v : order) {
        if (v == root) continue;
        Vertex p = design.parent[v];
        Label down = p == root ? design.radius + 1 : depth_label[p] + 1;
        depth_label[v] = down;
        design.down_label[g.edge_key(p, v)] = down;
    }

    design.labelling = TemporalGraph(n, false);
    for (const auto& [edge, labels] : g.edges()) design.labelling.add_edge(edge.first, edge.second);
    for (const auto& [edge, up] : design.up_label) {
        design.labelling.add_label(edge.first, edge.second, up);
        design.labelling.add_label(edge.first, edge.second, design.down_label.at(edge));
    }
    return design;
}

TemporalGraph star_optimal_labelling(int n) {
    if (n < 3) throw std::invalid_argument("star needs at least 3 vertices");
    TemporalGraph g(n, false);
    for (Vertex leaf = 1; leaf + 1 < n; ++leaf) g.add_edge(0, leaf, {1, 3});
    g.add_edge(0, n - 1, {2});
    return g;
}

namespace {

// minimal in-place TC check for the exhaustive tree sweep: edges and label
// choices live in flat arrays, buffers are reused across combinations
struct SweepChecker {
    int n;
    std::vector<Edge> edges;
    std::vector<TimeEdge> time_edges;
    std::vector<Label> arrival;

    bool tc(const std::vector<std::vector<Label>>& choice) {
        time_edges.clear();
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (Label l : choice[e]) {
                time_edges.push_back({edges[e].first, edges[e].second, l});
                time_edges.push_back({edges[e].second, edges[e].first, l});
            }
        std::sort(time_edges.begin(), time_edges.end(),
                  [](const TimeEdge& a, const TimeEdge& b) { return a.label < b.label; });
        for (Vertex s = 0; s < n; ++s) {
            arrival.assign(n, -1);
            arrival[s] = 0;
            int reached = 1;
            for (const TimeEdge& te : time_edges) {
                if (arrival[te.from] < 0 || arrival[te.to] >= 0) continue;
                if (arrival[te.from] < te.label) {
                    arrival[te.to] = te.label;
                    ++reached;
                }
            }
            if (reached != n) return false;
        }
        return true;
    }
};

bool next_combination(std::vector<Label>& comb, Label universe) {
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < universe - static_cast<Label>(k - 1 - i)) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void size_vectors(int budget, std::size_t edges, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    if (current.size() == edges) {
        out.push_back(current);
        return;
    }
    int rest = static_cast<int>(edges - current.size()) - 1;
    for (int s = 1; s + rest <= budget; ++s) {
        current.push_back(s);
        size_vectors(budget - s, edges, current, out);
        current.pop_back();
    }
}

}  // namespace

bool tree_lower_bound_check(const TemporalGraph& tree, int budget, Label label_universe) {
    if (tree.directed()) throw std::invalid_argument("needs an undirected tree");
    int n = tree.vertex_count();
    if (n < 1) throw std::invalid_argument("empty graph");
    if (tree.edge_count() + 1 != static_cast<std::size_t>(n))
        throw std::invalid_argument("not a tree");
    {
        auto adj = sorted_adjacency(tree);
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int found = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++found;
                    stack.push_back(w);
                }
        }
        if (found != n) throw std::invalid_argument("not a tree");
    }
    if (n > 7) throw std::invalid_argument("tree too large for exhaustive sweep");
    if (label_universe < 1 || budget < 0) throw std::invalid_argument("bad budget or universe");
    if (n == 1) return true;

    SweepChecker checker;
    checker.n = n;
    for (const auto& [edge, labels] : tree.edges()) checker.edges.push_back(edge);
    std::size_t m = checker.edges.size();
    if (budget < static_cast<int>(m)) return false;  // a label-free tree edge is a dead bridge

    std::vector<std::vector<int>> sizes;
    std::vector<int> scratch;
    size_vectors(budget, m, scratch, sizes);
    // balanced vectors first: a connected labelling tends to spread labels,
    // so the positive case exits early; the negative case sweeps everything
    std::stable_sort(sizes.begin(), sizes.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) > *std::min_element(b.begin(), b.end());
    });

    std::vector<std::vector<Label>> choice(m);
    for (const auto& size : sizes) {
        bool feasible = true;
        for (std::size_t e = 0; e < m; ++e) {
            if (size[e] > label_universe) feasible = false;
            choice[e].resize(size[e]);
            std::iota(choice[e].begin(), choice[e].end(), 1);
        }
        if (!feasible) continue;
        while (true) {
            if (checker.tc(choice)) return true;
            std::size_t e = m;
            while (e-- > 0) {
                if (next_combination(choice[e], label_universe)) break;
                std::iota(choice[e].begin(), choice[e].end(), 1);
                if (e == 0) goto next_size;
            }
        }
    next_size:;
    }
    return false;
}

HypercubeDesign hypercube_design(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("dimension out of range");
    int n = 1 << k;
    HypercubeDesign design;
    design.k = k;
    design.labelling = TemporalGraph(n, false);
    Label half = 1 << (k - 1);
    for (int dim = 1; dim <= k; ++dim) {
        int bit = 1 << (dim - 1);
        Label next = static_cast<Label>(dim - 1) * half + 1;
        for (Vertex u = 0; u < n; ++u) {
            if (u & bit) continue;
            design.labelling.add_edge(u, u | bit, {next++});
        }
    }
    return design;
}

Journey hypercube_journey(const HypercubeDesign& design, Vertex u, Vertex v) {
    int n = design.labelling.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("bad vertex");
    if (u == v) throw std::invalid_argument("endpoints must differ");
    Journey j;
    Vertex cur = u;
    for (int bit = 0; bit < design.k; ++bit) {
        int mask = 1 << bit;
        if (((u ^ v) & mask) == 0) continue;
        Vertex next = cur ^ mask;
        Label l = design.labelling.labels(cur, next).front();
        j.steps.push_back({cur, next, l});
        cur = next;
    }
    j.arrival_time = j.steps.back().label;
    return j;
}

namespace {

struct K4Frame {
    std::array<Vertex, 4> v;  // v[0..3] play v1..v4
    Label a, b, c, d, x, y;
};

// layout: {v1,v2}=a {v1,v4}=b {v2,v3}=c {v3,v4}=d, diagonals {v2,v4}=x {v1,v3}=y
std::optional<std::pair<Edge, Label>> match_case(const TemporalGraph& g, const K4Frame& f) {
    auto removed = [&](Vertex p, Vertex q, Label l) {
        return std::make_pair(g.edge_key(p, q), l);
    };
    const Label a = f.a, b = f.b, c = f.c, d = f.d, x = f.x, y = f.y;
    if (a < b && d < b && d < c && a < c)  // alternation; both diagonals are free, return x
        return removed(f.v[1], f.v[3], x);
    if (a < b && b < d && d < c)  // cycle
        return removed(f.v[1], f.v[3], x);
    if (a < b && b < c && c < d) {  // entanglement
        if (x < b && y < c) return removed(f.v[0], f.v[1], a);
        if (x < b && y > c) return removed(f.v[0], f.v[3], b);
        if (x > b && y > c) return removed(f.v[0], f.v[1], a);
        if (x > b && y > b && y < c) return removed(f.v[1], f.v[3], x);
        if (x > b && y < b) return removed(f.v[1], f.v[2], c);
    }
    return std::nullopt;
}

}  // namespace

std::pair<Edge, Label> k4_redundant(const TemporalGraph& k4) {
    if (k4.directed() || k4.vertex_count() != 4 || k4.edge_count() != 6)
        throw std::invalid_argument("needs an undirected K4");
    if (!is_slse(k4)) throw std::invalid_argument("needs one distinct label per edge");

    std::array<Vertex, 4> perm{0, 1, 2, 3};
    do {
        K4Frame f;
        f.v = perm;
        f.a = k4.labels(perm[0], perm[1]).front();
        f.b = k4.labels(perm[0], perm[3]).front();
        f.c = k4.labels(perm[1], perm[2]).front();
        f.d = k4.labels(perm[2], perm[3]).front();
        f.x = k4.labels(perm[1], perm[3]).front();
        f.y = k4.labels(perm[0], perm[2]).front();
        if (auto hit = match_case(k4, f)) return *hit;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw std::logic_error("no case matched a distinctly labelled K4");
}

TemporalGraph clique_slse_reduce(const TemporalGraph& kn) {
    if (kn.directed()) throw std::invalid_argument("needs an undirected clique");
    int n = kn.vertex_count();
    if (n < 4) throw std::invalid_argument("clique too small, nothing to reduce");
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!kn.has_edge(u, v)) throw std::invalid_argument("graph is not complete");
    if (!is_slse(kn)) throw std::invalid_argument("needs one distinct label per edge");

    TemporalGraph out = kn;
    for (int group = 0; group + 4 <= n; group += 4) {
        TemporalGraph local(4, false);
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                local.add_edge(i, j, {kn.labels(group + i, group + j).front()});
        auto [edge, label] = k4_redundant(local);
        out.erase_label(group + edge.first, group + edge.second, label);
    }
    return out;
}

}  // namespace tempo
