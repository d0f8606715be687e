#pragma once

#include <map>

#include "tempo/temporal_graph.hpp"

namespace tempo {

struct TreeDesign {
    Vertex root = 0;
    std::vector<Vertex> parent;  // parent[root] == root
    int radius = 0;              // longest root-to-leaf path in the BFS tree
    std::map<Edge, Label> up_label;
    std::map<Edge, Label> down_label;
    TemporalGraph labelling;  // tree edges carry {up,down}, non-tree edges are empty
};

// BFS tree from root (neighbours visited in increasing id), then: the edge
// above vertex v gets the max label in v's subtree plus one (leaf edges get
// 1), and downward labels start at radius+1 at the root and grow by one per
// level. Cost is exactly 2(n-1) and the result is temporally connected.
TreeDesign spanning_tree_labelling(const TemporalGraph& g, Vertex root = 0);

// Star with centre 0: edges {0,i} get {1,3} except {0,n-1} which gets {2}.
// Cost 2n-3, temporally connected, n >= 2.
TemporalGraph star_optimal_labelling(int n);

// True iff some labelling of the tree's edges with labels from
// {1..label_universe} and total label count <= budget is temporally
// connected. Exhaustive; every tree edge is a bridge, so edges with empty
// label sets are skipped (such a labelling can never be TC). Guarded to
// small trees.
bool tree_lower_bound_check(const TemporalGraph& tree, int budget, Label label_universe);

struct HypercubeDesign {
    int k = 0;
    TemporalGraph labelling;  // n = 2^k vertices, one label per edge
};

// Dimension i edges (bit i-1), ordered by smaller endpoint id, take the
// consecutive labels (i-1)*2^(k-1)+1 .. i*2^(k-1). Single-labelled, all
// labels distinct, cost k*2^(k-1).
HypercubeDesign hypercube_design(int k);

// The unique journey from u to v: flip differing bit positions in
// increasing order; label ranges grow with the dimension, so labels
// strictly increase.
Journey hypercube_journey(const HypercubeDesign& design, Vertex u, Vertex v);

// For a K4 with one distinct label per edge, returns an (edge, label) whose
// removal keeps the graph temporally connected. Scans the 24 vertex
// assignments in lexicographic order and applies the first matching case
// pattern (alternation, cycle, or entanglement with five sub-cases).
std::pair<Edge, Label> k4_redundant(const TemporalGraph& k4);

// Partitions vertices of a single-labelled clique into groups of four
// (ids 0-3, 4-7, ...) and removes one redundant label inside each full
// group; floor(n/4) labels go away and TC is preserved.
TemporalGraph clique_slse_reduce(const TemporalGraph& kn);

}  // namespace tempo
