#include "tempo/removal.hpp"

#include <algorithm>

#include "tempo/reachability.hpp"
#include "tempo/rng.hpp"

namespace tempo {

namespace {

std::vector<std::pair<Edge, Label>> label_pairs(const TemporalGraph& g) {
    std::vector<std::pair<Edge, Label>> pairs;
    for (const auto& [edge, labels] : g.edges())
        for (Label l : labels) pairs.emplace_back(edge, l);
    return pairs;
}

void require_tc(const TemporalGraph& g) {
    if (!is_temporally_connected(g))
        throw std::invalid_argument("input graph is not temporally connected");
}

}  // namespace

bool is_minimal(const TemporalGraph& g) {
    require_tc(g);
    for (const auto& [edge, label] : label_pairs(g)) {
        if (is_temporally_connected(remove_label(g, edge.first, edge.second, label)))
            return false;
    }
    return true;
}

RemovalResult greedy_removal(const TemporalGraph& g, std::uint64_t order_seed) {
    require_tc(g);
    auto pairs = label_pairs(g);
    Rng rng(order_seed);
    rng.shuffle(pairs);

    RemovalResult result;
    result.residual = g;
    for (const auto& [edge, label] : pairs) {
        TemporalGraph candidate = remove_label(result.residual, edge.first, edge.second, label);
        if (!is_temporally_connected(candidate)) continue;
        result.residual = std::move(candidate);
        result.removed.emplace_back(edge, label);
    }
    result.profit = static_cast<long long>(result.removed.size());
    result.exact = false;
    return result;
}

namespace {

struct ExactSearch {
    std::vector<std::pair<Edge, Label>> candidates;
    long long ceiling = 0;  // cost - (n-1), no TC labelling can go below n-1 labels
    std::uint64_t node_budget = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    std::vector<std::size_t> chosen, best;

    void dfs(const TemporalGraph& current, std::size_t index) {
        if (budget_hit) return;
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        if (chosen.size() > best.size()) best = chosen;
        if (static_cast<long long>(best.size()) >= ceiling) return;
        if (index >= candidates.size()) return;
        // even removing every remaining candidate cannot beat the best
        if (chosen.size() + (candidates.size() - index) <= best.size()) return;

        const auto& [edge, label] = candidates[index];
        TemporalGraph next = remove_label(current, edge.first, edge.second, label);
        if (is_temporally_connected(next)) {  // otherwise every superset fails too
            chosen.push_back(index);
            dfs(next, index + 1);
            chosen.pop_back();
        }
        dfs(current, index + 1);
    }
};

}  // namespace

RemovalResult removal_profit_exact(const TemporalGraph& g, const ExactOptions& options) {
    require_tc(g);
    long long total = cost(g);
    if (total > static_cast<long long>(options.label_cap))
        throw std::invalid_argument("instance exceeds the exact search label cap");

    RemovalResult warm = greedy_removal(g, options.order_seed);

    ExactSearch search;
    search.node_budget = options.node_budget;
    search.ceiling = std::max<long long>(0, total - (g.vertex_count() - 1));
    // warm-start order: pairs the greedy pass removed first, rest after,
    // so deep removal chains are explored before shallow ones
    auto rest = label_pairs(g);
    Rng rng(options.order_seed);
    rng.shuffle(rest);
    for (const auto& pair : warm.removed) search.candidates.push_back(pair);
    for (const auto& pair : rest)
        if (std::find(warm.removed.begin(), warm.removed.end(), pair) == warm.removed.end())
            search.candidates.push_back(pair);

    search.best.clear();
    search.dfs(g, 0);

    RemovalResult result;
    for (std::size_t idx : search.best) result.removed.push_back(search.candidates[idx]);
    result.profit = static_cast<long long>(result.removed.size());
    result.exact = !search.budget_hit;
    result.residual = g;
    for (const auto& [edge, label] : result.removed)
        result.residual.erase_label(edge.first, edge.second, label);
    return result;
}

}  // namespace tempo
