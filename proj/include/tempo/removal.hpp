#pragma once

#include <cstdint>
#include <limits>

#include "tempo/temporal_graph.hpp"

namespace tempo {

struct RemovalResult {
    std::vector<std::pair<Edge, Label>> removed;
    long long profit = 0;
    bool exact = false;
    TemporalGraph residual;
};

// true iff removing any single label breaks temporal connectivity;
// the input must be temporally connected
bool is_minimal(const TemporalGraph& g);

// One pass over all (edge, label) pairs in a seeded random order, removing
// whichever pair keeps the graph temporally connected. Labels only become
// harder to remove as others go away, so the residual is always minimal.
RemovalResult greedy_removal(const TemporalGraph& g, std::uint64_t order_seed);

struct ExactOptions {
    std::size_t label_cap = 22;  // refuse instances with more labels than this
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t order_seed = 0;
};

// Maximum number of labels removable while preserving temporal
// connectivity. Branch and bound over label subsets: candidates are ordered
// by a greedy warm start, a partial removal that already breaks TC prunes
// every superset, and cost(g) - (n-1) caps the achievable profit. If the
// node budget runs out the best set found so far comes back with
// exact = false.
RemovalResult removal_profit_exact(const TemporalGraph& g, const ExactOptions& options = {});

}  // namespace tempo
