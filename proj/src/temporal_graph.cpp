#include "tempo/temporal_graph.hpp"

#include <algorithm>
#include <set>

namespace tempo {

long long cost(const TemporalGraph& g) {
    long long total = 0;
    for (const auto& [edge, labels] : g.edges()) total += static_cast<long long>(labels.size());
    return total;
}

bool is_slse(const TemporalGraph& g) {
    std::set<Label> seen;
    for (const auto& [edge, labels] : g.edges()) {
        if (labels.size() != 1) return false;
        if (!seen.insert(labels.front()).second) return false;
    }
    return true;
}

bool validate_journey(const TemporalGraph& g, const Journey& j) {
    if (j.steps.empty()) return true;
    Label prev = 0;
    for (std::size_t i = 0; i < j.steps.size(); ++i) {
        const TimeEdge& step = j.steps[i];
        if (i > 0) {
            if (step.from != j.steps[i - 1].to) return false;
            if (step.label <= prev) return false;
        }
        if (step.from < 0 || step.from >= g.vertex_count()) return false;
        if (step.to < 0 || step.to >= g.vertex_count()) return false;
        if (step.from == step.to) return false;
        if (!g.has_label(step.from, step.to, step.label)) return false;
        prev = step.label;
    }
    return j.arrival_time == j.steps.back().label;
}

TemporalGraph remove_label(const TemporalGraph& g, Vertex u, Vertex v, Label l) {
    TemporalGraph out = g;
    out.erase_label(u, v, l);
    return out;
}

std::vector<TimeEdge> time_edges_sorted(const TemporalGraph& g) {
    std::vector<TimeEdge> out;
    for (const auto& [edge, labels] : g.edges()) {
        for (Label l : labels) {
            out.push_back({edge.first, edge.second, l});
            if (!g.directed()) out.push_back({edge.second, edge.first, l});
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const TimeEdge& a, const TimeEdge& b) { return a.label < b.label; });
    return out;
}

}  // namespace tempo
