#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tempo {

using Vertex = int;
using Label = int;
using Edge = std::pair<Vertex, Vertex>;

// One directed appearance of an edge at one time step. Undirected edges
// contribute two time edges per label, one per orientation.
struct TimeEdge {
    Vertex from = 0;
    Vertex to = 0;
    Label label = 0;

    friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

// A journey is a chain of time edges with strictly increasing labels.
// arrival_time is the last label, or 0 for the empty journey (u to itself).
struct Journey {
    std::vector<TimeEdge> steps;
    Label arrival_time = 0;

    Vertex destination_or(Vertex source) const {
        return steps.empty() ? source : steps.back().to;
    }
};

// Static graph plus a finite set of positive integer labels per edge.
// Vertices are 0..n-1. Undirected edge keys are stored as (min,max);
// label sets are kept sorted and duplicate-free. Edges with empty label
// sets are allowed (they carry no time edges).
class TemporalGraph {
public:
    explicit TemporalGraph(int vertex_count = 0, bool directed = false)
        : n_(vertex_count), directed_(directed) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    bool directed() const { return directed_; }
    std::size_t edge_count() const { return edges_.size(); }

    Edge edge_key(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        if (!directed_ && u > v) std::swap(u, v);
        return {u, v};
    }

    void add_edge(Vertex u, Vertex v) { edges_.try_emplace(edge_key(u, v)); }

    void add_edge(Vertex u, Vertex v, std::vector<Label> labels) {
        add_edge(u, v);
        for (Label l : labels) add_label(u, v, l);
    }

    void add_label(Vertex u, Vertex v, Label l) {
        if (l <= 0) throw std::invalid_argument("labels are positive integers");
        auto& set = edges_[edge_key(u, v)];
        auto it = std::lower_bound(set.begin(), set.end(), l);
        if (it == set.end() || *it != l) set.insert(it, l);
    }

    bool has_edge(Vertex u, Vertex v) const { return edges_.count(edge_key(u, v)) != 0; }

    bool has_label(Vertex u, Vertex v, Label l) const {
        auto it = edges_.find(edge_key(u, v));
        if (it == edges_.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), l);
    }

    // sorted label set; empty if the edge is absent
    const std::vector<Label>& labels(Vertex u, Vertex v) const {
        static const std::vector<Label> none;
        auto it = edges_.find(edge_key(u, v));
        return it == edges_.end() ? none : it->second;
    }

    const std::map<Edge, std::vector<Label>>& edges() const { return edges_; }

    void erase_label(Vertex u, Vertex v, Label l) {
        auto it = edges_.find(edge_key(u, v));
        if (it == edges_.end()) throw std::invalid_argument("no such edge");
        auto pos = std::lower_bound(it->second.begin(), it->second.end(), l);
        if (pos == it->second.end() || *pos != l)
            throw std::invalid_argument("label not present on edge");
        it->second.erase(pos);
    }

    friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_;
    bool directed_;
    std::map<Edge, std::vector<Label>> edges_;
};

// total number of labels over all edges
long long cost(const TemporalGraph& g);

// true iff every edge has exactly one label and no label value repeats
bool is_slse(const TemporalGraph& g);

// checks vertex chaining, strictly increasing labels, membership of every
// step in the graph (orientation is free on undirected graphs), and that
// arrival_time is the last label; the empty journey is vacuously valid
bool validate_journey(const TemporalGraph& g, const Journey& j);

// copy of g with one label removed; the edge itself stays even if its
// label set becomes empty
TemporalGraph remove_label(const TemporalGraph& g, Vertex u, Vertex v, Label l);

// S(L): every (orientation, label) pair, sorted ascending by label; ties keep
// the generation order (edge map order, then label order, then orientation)
std::vector<TimeEdge> time_edges_sorted(const TemporalGraph& g);

}  // namespace tempo
