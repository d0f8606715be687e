#include "tempo/reachability.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>

namespace tempo {

ForemostResult foremost_over(const TemporalGraph& g, const std::vector<TimeEdge>& sorted,
                             Vertex source, Label start_time) {
    if (source < 0 || source >= g.vertex_count()) throw std::out_of_range("bad source");
    if (start_time < 0) throw std::invalid_argument("negative start time");
    ForemostResult res;
    res.source = source;
    res.start_time = start_time;
    res.arrival.assign(g.vertex_count(), std::nullopt);
    res.parent.assign(g.vertex_count(), std::nullopt);
    res.arrival[source] = start_time;
    for (const TimeEdge& te : sorted) {
        if (!res.arrival[te.from] || res.arrival[te.to]) continue;
        if (*res.arrival[te.from] < te.label) {
            res.arrival[te.to] = te.label;
            res.parent[te.to] = te;
        }
    }
    return res;
}

ForemostResult foremost(const TemporalGraph& g, Vertex source, Label start_time) {
    return foremost_over(g, time_edges_sorted(g), source, start_time);
}

std::optional<Journey> reconstruct(const ForemostResult& res, Vertex v) {
    if (v < 0 || v >= static_cast<Vertex>(res.arrival.size()))
        throw std::out_of_range("bad vertex");
    if (!res.arrival[v]) return std::nullopt;
    Journey j;
    if (v == res.source) return j;
    Vertex cur = v;
    while (cur != res.source) {
        const auto& step = res.parent[cur];
        if (!step) throw std::logic_error("broken parent chain");
        j.steps.push_back(*step);
        cur = step->from;
    }
    std::reverse(j.steps.begin(), j.steps.end());
    j.arrival_time = j.steps.back().label;
    return j;
}

namespace {

bool source_reaches_all(const TemporalGraph& g, const std::vector<TimeEdge>& sorted, Vertex s) {
    ForemostResult res = foremost_over(g, sorted, s, 0);
    for (const auto& a : res.arrival)
        if (!a) return false;
    return true;
}

}  // namespace

bool is_temporally_connected(const TemporalGraph& g, unsigned threads) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<TimeEdge> sorted = time_edges_sorted(g);
    if (threads <= 1) {
        for (Vertex s = 0; s < n; ++s)
            if (!source_reaches_all(g, sorted, s)) return false;
        return true;
    }
    std::atomic<bool> ok{true};
    std::atomic<Vertex> next{0};
    auto worker = [&] {
        while (ok.load(std::memory_order_relaxed)) {
            Vertex s = next.fetch_add(1);
            if (s >= n) break;
            if (!source_reaches_all(g, sorted, s)) ok.store(false);
        }
    };
    std::vector<std::thread> pool;
    unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(n));
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return ok.load();
}

TcReport temporal_connectivity_report(const TemporalGraph& g, std::size_t max_failures) {
    TcReport report;
    int n = g.vertex_count();
    if (n <= 1) return report;
    std::vector<TimeEdge> sorted = time_edges_sorted(g);
    for (Vertex s = 0; s < n; ++s) {
        ForemostResult res = foremost_over(g, sorted, s, 0);
        for (Vertex v = 0; v < n; ++v) {
            if (res.arrival[v]) continue;
            report.tc = false;
            if (report.failures.size() < max_failures) report.failures.emplace_back(s, v);
        }
        if (!report.tc && report.failures.size() >= max_failures) break;
    }
    return report;
}

ForemostResult foremost_oracle(const TemporalGraph& g, Vertex source, Label start_time,
                               std::size_t state_budget) {
    if (source < 0 || source >= g.vertex_count()) throw std::out_of_range("bad source");
    if (start_time < 0) throw std::invalid_argument("negative start time");
    int n = g.vertex_count();

    std::vector<Label> labels;
    for (const auto& [edge, set] : g.edges())
        for (Label l : set) labels.push_back(l);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::size_t L = labels.size();
    if (static_cast<std::size_t>(n) * (L + 1) > state_budget)
        throw std::runtime_error("instance too large for reachability oracle");

    // time edges grouped by tail vertex, in no particular label order
    std::vector<std::vector<TimeEdge>> out(n);
    for (const auto& [edge, set] : g.edges()) {
        for (Label l : set) {
            out[edge.first].push_back({edge.first, edge.second, l});
            if (!g.directed()) out[edge.second].push_back({edge.second, edge.first, l});
        }
    }

    auto label_index = [&](Label l) {
        return static_cast<std::size_t>(
            std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };

    // state (v, i): v was reached by a journey whose last label is labels[i];
    // i == L encodes "no edge used yet" for the source
    std::vector<std::vector<char>> seen(n, std::vector<char>(L + 1, 0));
    std::vector<std::vector<std::optional<TimeEdge>>> via(
        n, std::vector<std::optional<TimeEdge>>(L + 1));
    std::deque<std::pair<Vertex, std::size_t>> queue;
    seen[source][L] = 1;
    queue.emplace_back(source, L);
    while (!queue.empty()) {
        auto [v, i] = queue.front();
        queue.pop_front();
        Label floor = i == L ? start_time : labels[i];
        for (const TimeEdge& te : out[v]) {
            if (te.label <= floor) continue;
            std::size_t j = label_index(te.label);
            if (seen[te.to][j]) continue;
            seen[te.to][j] = 1;
            via[te.to][j] = te;
            queue.emplace_back(te.to, j);
        }
    }

    ForemostResult res;
    res.source = source;
    res.start_time = start_time;
    res.arrival.assign(n, std::nullopt);
    res.parent.assign(n, std::nullopt);
    res.arrival[source] = start_time;
    for (Vertex v = 0; v < n; ++v) {
        if (v == source) continue;
        for (std::size_t i = 0; i < L; ++i) {
            if (!seen[v][i]) continue;
            res.arrival[v] = labels[i];
            res.parent[v] = via[v][i];
            break;
        }
    }
    return res;
}

}  // namespace tempo
