#pragma once

#include <cstddef>
#include <optional>

#include "tempo/temporal_graph.hpp"

namespace tempo {

struct ForemostResult {
    Vertex source = 0;
    Label start_time = 0;
    // arrival[v]: earliest arrival of a journey departing strictly after
    // start_time, nullopt if unreachable; arrival[source] == start_time
    std::vector<std::optional<Label>> arrival;
    std::vector<std::optional<TimeEdge>> parent;
};

// Single pass over the label-sorted time edges: a time edge (a,b,l) settles b
// the first time a is already reached with arrival[a] < l. Runs in
// O(c log c) for c labels, dominated by the sort.
ForemostResult foremost(const TemporalGraph& g, Vertex source, Label start_time = 0);

// same scan over pre-sorted time edges, for callers that run many sources
ForemostResult foremost_over(const TemporalGraph& g, const std::vector<TimeEdge>& sorted,
                             Vertex source, Label start_time = 0);

// nullopt if v unreachable; the journey for v == source has zero steps
std::optional<Journey> reconstruct(const ForemostResult& res, Vertex v);

// every ordered pair must have a journey; trivially true for n <= 1.
// threads > 1 fans sources out over that many workers.
bool is_temporally_connected(const TemporalGraph& g, unsigned threads = 1);

struct TcReport {
    bool tc = true;
    std::vector<std::pair<Vertex, Vertex>> failures;  // ordered pairs, capped
};

TcReport temporal_connectivity_report(const TemporalGraph& g, std::size_t max_failures = 10);

// Reference implementation used to cross-check foremost: breadth-first
// search over (vertex, last label) states, no sorting, no greedy argument.
// Throws when n * (distinct labels + 1) exceeds state_budget.
ForemostResult foremost_oracle(const TemporalGraph& g, Vertex source, Label start_time = 0,
                               std::size_t state_budget = 1u << 22);

}  // namespace tempo
