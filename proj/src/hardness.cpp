#include "tempo/hardness.hpp"

#include <algorithm>
#include <sstream>

#include "tempo/reachability.hpp"

namespace tempo {

namespace {

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw std::runtime_error("formula line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

XorFormula parse_formula(std::istream& in) {
    XorFormula phi;
    bool have_header = false;
    int expected_clauses = 0;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream fields(line);
        if (!have_header) {
            std::string p, kind;
            int n, m;
            if (!(fields >> p >> kind >> n >> m) || p != "p" || kind != "mxor3")
                fail(lineno, "expected 'p mxor3 <n> <m>'");
            if (n < 2 || n % 2 != 0) fail(lineno, "variable count must be even and at least 2");
            if (m != 3 * n / 2) fail(lineno, "clause count must be 3n/2");
            phi.variable_count = n;
            expected_clauses = m;
            have_header = true;
            continue;
        }
        int i, j;
        if (!(fields >> i >> j)) fail(lineno, "expected a clause '<i> <j>'");
        std::string extra;
        if (fields >> extra) fail(lineno, "trailing garbage");
        if (i < 1 || i > phi.variable_count || j < 1 || j > phi.variable_count)
            fail(lineno, "variable index out of range");
        if (i == j) fail(lineno, "clause pairs a variable with itself");
        phi.clauses.emplace_back(i - 1, j - 1);
    }
    if (!have_header) throw std::runtime_error("formula has no header line");
    if (static_cast<int>(phi.clauses.size()) != expected_clauses)
        throw std::runtime_error("formula clause count does not match header");

    phi.occurrences.assign(phi.variable_count, {});
    std::vector<int> seen(phi.variable_count, 0);
    for (int c = 0; c < static_cast<int>(phi.clauses.size()); ++c) {
        auto note = [&](int var, bool is_first) {
            if (seen[var] == 3)
                throw std::runtime_error("variable x" + std::to_string(var + 1) +
                                         " occurs more than three times");
            phi.occurrences[var][seen[var]++] = {c, is_first};
        };
        note(phi.clauses[c].first, true);
        note(phi.clauses[c].second, false);
    }
    for (int var = 0; var < phi.variable_count; ++var)
        if (seen[var] != 3)
            throw std::runtime_error("variable x" + std::to_string(var + 1) +
                                     " occurs " + std::to_string(seen[var]) +
                                     " times, expected 3");
    return phi;
}

XorFormula parse_formula_text(const std::string& text) {
    std::istringstream in(text);
    return parse_formula(in);
}

int satisfied_count(const XorFormula& phi, const Assignment& tau) {
    if (static_cast<int>(tau.size()) != phi.variable_count)
        throw std::invalid_argument("assignment size mismatch");
    int k = 0;
    for (const auto& [i, j] : phi.clauses)
        if (tau[i] != tau[j]) ++k;
    return k;
}

namespace {

void replay_construction_journeys(const GadgetGraph& gg) {
    const TemporalGraph& g = gg.graph;
    int n = gg.formula.variable_count;
    int m = static_cast<int>(gg.formula.clauses.size());
    auto expect = [&](std::vector<TimeEdge> steps) {
        Journey j{std::move(steps), 0};
        j.arrival_time = j.steps.back().label;
        if (!validate_journey(g, j))
            throw std::logic_error("gadget self-check: replayed journey is invalid");
    };
    for (int i = 0; i < n; ++i) {
        Vertex up = gg.u_branch(i, 0), vp = gg.v_branch(i, 0);
        Vertex tc = gg.t[gg.clause_of(i, 0)];
        Vertex peer = gg.s[(i + 1) % n];
        // base to base through a u-side path, t and t0
        expect({{gg.s[i], gg.u0[i], 1}, {gg.u0[i], up, 3}, {up, tc, 4},
                {tc, gg.t0, 5}, {gg.t0, peer, 6}});
        // the v-side mirror
        expect({{gg.s[i], gg.v0[i], 1}, {gg.v0[i], vp, 3}, {vp, tc, 4},
                {tc, gg.t0, 5}, {gg.t0, peer, 6}});
        // into and out of the base w
        expect({{gg.s[i], gg.u0[i], 1}, {gg.u0[i], gg.w0[i], 2}, {gg.w0[i], gg.w[0], 7}});
        expect({{gg.w0[i], gg.u0[i], 1}, {gg.u0[i], up, 3}, {up, tc, 4}, {tc, gg.t0, 5}});
        expect({{gg.u0[i], gg.t0, 6}});
    }
    for (int c = 0; c < m; ++c) {
        expect({{gg.w[c], gg.t[c], 1}, {gg.t[c], gg.t0, 5}});
        expect({{gg.t[c], gg.w[c], 1}, {gg.w[c], gg.w0[0], 7}});
        expect({{gg.a[c], gg.w[c], 1}, {gg.w[c], gg.b[c], 2}});
        if (m > 1) expect({{gg.t[c], gg.t[(c + 1) % m], 7}});
    }
    expect({{gg.t0, gg.w0[n - 1], 5}, {gg.w0[n - 1], gg.w[0], 7}});
    expect({{gg.t0, gg.t[0], 5}});
    expect({{gg.t0, gg.s[0], 6}});
}

}  // namespace

GadgetGraph build_gadget(const XorFormula& phi) {
    int n = phi.variable_count;
    int m = static_cast<int>(phi.clauses.size());
    if (n < 2 || m != 3 * n / 2) throw std::invalid_argument("malformed formula");

    GadgetGraph gg;
    gg.formula = phi;
    gg.graph = TemporalGraph(10 * n + 1, false);
    for (int i = 0; i < n; ++i) {
        gg.s.push_back(4 * i);
        gg.u0.push_back(4 * i + 1);
        gg.w0.push_back(4 * i + 2);
        gg.v0.push_back(4 * i + 3);
    }
    for (int c = 0; c < m; ++c) {
        gg.t.push_back(4 * n + 4 * c);
        gg.w.push_back(4 * n + 4 * c + 1);
        gg.a.push_back(4 * n + 4 * c + 2);
        gg.b.push_back(4 * n + 4 * c + 3);
    }
    gg.t0 = 10 * n;

    TemporalGraph& g = gg.graph;
    for (int i = 0; i < n; ++i) {
        g.add_edge(gg.s[i], gg.u0[i], {1});
        g.add_edge(gg.s[i], gg.v0[i], {1});
        g.add_edge(gg.u0[i], gg.w0[i], {1, 2});
        g.add_edge(gg.w0[i], gg.v0[i], {1, 2});
        for (int p = 0; p < 3; ++p) {
            g.add_edge(gg.u0[i], gg.u_branch(i, p), {3});
            g.add_edge(gg.v0[i], gg.v_branch(i, p), {3});
        }
    }
    for (int c = 0; c < m; ++c) {
        g.add_edge(gg.a[c], gg.w[c], {1, 2});
        g.add_edge(gg.w[c], gg.b[c], {1, 2});
        g.add_edge(gg.a[c], gg.t[c], {4});
        g.add_edge(gg.b[c], gg.t[c], {4});
        g.add_edge(gg.t[c], gg.w[c], {1});
    }

    std::vector<Vertex> all_w = gg.w0;
    all_w.insert(all_w.end(), gg.w.begin(), gg.w.end());
    for (std::size_t i = 0; i < all_w.size(); ++i)
        for (std::size_t j = i + 1; j < all_w.size(); ++j) g.add_edge(all_w[i], all_w[j], {7});
    for (int c = 0; c < m; ++c)
        for (int d = c + 1; d < m; ++d) g.add_edge(gg.t[c], gg.t[d], {7});

    g.add_edge(gg.t0, gg.w0[n - 1], {5});
    for (int c = 0; c < m; ++c) g.add_edge(gg.t0, gg.t[c], {5});
    for (int i = 0; i < n; ++i) {
        g.add_edge(gg.t0, gg.s[i], {6});
        g.add_edge(gg.t0, gg.u0[i], {6});
        g.add_edge(gg.t0, gg.v0[i], {6});
    }
    for (int c = 0; c < m; ++c) {
        g.add_edge(gg.t0, gg.a[c], {6});
        g.add_edge(gg.t0, gg.b[c], {6});
    }

    replay_construction_journeys(gg);
    return gg;
}

TemporalGraph assignment_to_labelling(const GadgetGraph& gg, const Assignment& tau) {
    const XorFormula& phi = gg.formula;
    int n = phi.variable_count;
    int m = static_cast<int>(phi.clauses.size());
    if (static_cast<int>(tau.size()) != n) throw std::invalid_argument("assignment size mismatch");

    TemporalGraph kept(gg.graph.vertex_count(), false);
    for (const auto& [edge, labels] : gg.graph.edges()) kept.add_edge(edge.first, edge.second);

    // shared structure every assignment keeps
    for (const auto& [edge, labels] : gg.graph.edges())
        if (edge.first == gg.t0 || edge.second == gg.t0)
            for (Label l : labels) kept.add_label(edge.first, edge.second, l);
    std::vector<Vertex> all_w = gg.w0;
    all_w.insert(all_w.end(), gg.w.begin(), gg.w.end());
    for (std::size_t i = 0; i < all_w.size(); ++i)
        for (std::size_t j = i + 1; j < all_w.size(); ++j)
            kept.add_label(all_w[i], all_w[j], 7);
    for (int c = 0; c < m; ++c)
        for (int d = c + 1; d < m; ++d) kept.add_label(gg.t[c], gg.t[d], 7);
    for (int c = 0; c < m; ++c) kept.add_label(gg.t[c], gg.w[c], 1);

    for (int i = 0; i < n; ++i) {
        if (!tau[i]) {  // keep the three u-side paths
            kept.add_label(gg.s[i], gg.u0[i], 1);
            for (int p = 0; p < 3; ++p) {
                kept.add_label(gg.u0[i], gg.u_branch(i, p), 3);
                kept.add_label(gg.u_branch(i, p), gg.t[gg.clause_of(i, p)], 4);
            }
            kept.add_label(gg.w0[i], gg.v0[i], 1);
            kept.add_label(gg.u0[i], gg.w0[i], 2);
        } else {  // keep the three v-side paths
            kept.add_label(gg.s[i], gg.v0[i], 1);
            for (int p = 0; p < 3; ++p) {
                kept.add_label(gg.v0[i], gg.v_branch(i, p), 3);
                kept.add_label(gg.v_branch(i, p), gg.t[gg.clause_of(i, p)], 4);
            }
            kept.add_label(gg.u0[i], gg.w0[i], 1);
            kept.add_label(gg.w0[i], gg.v0[i], 2);
        }
    }

    for (int c = 0; c < m; ++c) {
        const auto& [i, j] = phi.clauses[c];
        bool satisfied = tau[i] != tau[j];
        if (satisfied && !tau[i]) {  // x_i = 0, x_j = 1
            kept.add_label(gg.b[c], gg.w[c], 1);
            kept.add_label(gg.w[c], gg.a[c], 2);
        } else if (satisfied) {  // x_i = 1, x_j = 0
            kept.add_label(gg.a[c], gg.w[c], 1);
            kept.add_label(gg.w[c], gg.b[c], 2);
        } else {
            kept.add_label(gg.a[c], gg.w[c], 1);
            kept.add_label(gg.w[c], gg.b[c], 1);
        }
    }

    long long removed = cost(gg.graph) - cost(kept);
    if (removed != 9ll * n + satisfied_count(phi, tau))
        throw std::logic_error("assignment labelling dropped an unexpected label count");
    return kept;
}

TemporalGraph assignment_to_labelling(const XorFormula& phi, const Assignment& tau) {
    return assignment_to_labelling(build_gadget(phi), tau);
}

namespace {

bool subset_of(const TemporalGraph& part, const TemporalGraph& whole) {
    if (part.vertex_count() != whole.vertex_count() || part.directed() != whole.directed())
        return false;
    for (const auto& [edge, labels] : part.edges())
        for (Label l : labels)
            if (!whole.has_label(edge.first, edge.second, l)) return false;
    return true;
}

struct PathStatus {
    bool u_side_kept = false;
    bool v_side_kept = false;
};

PathStatus path_status(const GadgetGraph& gg, const TemporalGraph& L, int var, int appearance) {
    int c = gg.clause_of(var, appearance);
    PathStatus st;
    st.u_side_kept = L.has_label(gg.s[var], gg.u0[var], 1) &&
                     L.has_label(gg.u0[var], gg.u_branch(var, appearance), 3) &&
                     L.has_label(gg.u_branch(var, appearance), gg.t[c], 4);
    st.v_side_kept = L.has_label(gg.s[var], gg.v0[var], 1) &&
                     L.has_label(gg.v0[var], gg.v_branch(var, appearance), 3) &&
                     L.has_label(gg.v_branch(var, appearance), gg.t[c], 4);
    return st;
}

void set_single_label(TemporalGraph& g, Vertex u, Vertex v, Label l) {
    for (Label existing : std::vector<Label>(g.labels(u, v)))
        if (existing != l) g.erase_label(u, v, existing);
    g.add_label(u, v, l);
}

}  // namespace

Assignment labelling_to_assignment(const GadgetGraph& gg, const TemporalGraph& labelling) {
    if (!subset_of(labelling, gg.graph))
        throw std::invalid_argument("labelling is not a sub-labelling of the gadget");
    if (!is_temporally_connected(labelling))
        throw std::invalid_argument("labelling is not temporally connected");

    int n = gg.formula.variable_count;
    TemporalGraph work = labelling;
    Assignment tau(n, false);
    for (int i = 0; i < n; ++i) {
        int u_kept = 0, v_kept = 0;
        for (int p = 0; p < 3; ++p) {
            PathStatus st = path_status(gg, work, i, p);
            u_kept += st.u_side_kept;
            v_kept += st.v_side_kept;
        }
        // a connected sub-labelling keeps a full side path per appearance,
        // so one side always reaches two of the three appearances
        bool v_side = u_kept < 2;
        if (v_side && v_kept < 2)
            throw std::logic_error("no majority side; labelling cannot be connected");
        tau[i] = v_side;

        // normalise the variable to its majority side: complete the three
        // majority paths, drop the minority base edges, and pin one label
        // per base transition; this never adds more labels than it removes
        for (int p = 0; p < 3; ++p) {
            int c = gg.clause_of(i, p);
            if (!v_side) {
                work.add_label(gg.u0[i], gg.u_branch(i, p), 3);
                work.add_label(gg.u_branch(i, p), gg.t[c], 4);
            } else {
                work.add_label(gg.v0[i], gg.v_branch(i, p), 3);
                work.add_label(gg.v_branch(i, p), gg.t[c], 4);
            }
        }
        Vertex minority0 = v_side ? gg.u0[i] : gg.v0[i];
        if (work.has_label(gg.s[i], minority0, 1)) work.erase_label(gg.s[i], minority0, 1);
        for (int p = 0; p < 3; ++p) {
            Vertex bridge = v_side ? gg.u_branch(i, p) : gg.v_branch(i, p);
            if (work.has_label(minority0, bridge, 3)) work.erase_label(minority0, bridge, 3);
        }
        if (!v_side) {
            set_single_label(work, gg.w0[i], gg.v0[i], 1);
            set_single_label(work, gg.u0[i], gg.w0[i], 2);
        } else {
            set_single_label(work, gg.u0[i], gg.w0[i], 1);
            set_single_label(work, gg.w0[i], gg.v0[i], 2);
        }
    }
    return tau;
}

Assignment labelling_to_assignment(const XorFormula& phi, const TemporalGraph& labelling) {
    return labelling_to_assignment(build_gadget(phi), labelling);
}

NecessaryLabelsReport verify_necessary_labels(const GadgetGraph& gg,
                                              const TemporalGraph& labelling) {
    NecessaryLabelsReport report;
    auto violation = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.violations.size() < 20) report.violations.push_back(what);
    };

    const XorFormula& phi = gg.formula;
    int n = phi.variable_count;
    int m = static_cast<int>(phi.clauses.size());

    auto check_transition = [&](Vertex p, Vertex q, const std::string& name) {
        if (labelling.labels(p, q).empty())
            violation(report.transition_edges_ok, "transition edge " + name + " has no label");
    };
    for (int i = 0; i < n; ++i) {
        check_transition(gg.u0[i], gg.w0[i], "{u0,w0} of x" + std::to_string(i + 1));
        check_transition(gg.w0[i], gg.v0[i], "{w0,v0} of x" + std::to_string(i + 1));
    }
    for (int c = 0; c < m; ++c) {
        check_transition(gg.a[c], gg.w[c], "{u,w} of clause " + std::to_string(c));
        check_transition(gg.w[c], gg.b[c], "{w,v} of clause " + std::to_string(c));
        if (!labelling.has_label(gg.t[c], gg.w[c], 1))
            violation(report.tw_edges_ok,
                      "{t,w} of clause " + std::to_string(c) + " lost label 1");
    }
    for (int c = 0; c < m; ++c)
        for (int d = c + 1; d < m; ++d)
            if (!labelling.has_label(gg.t[c], gg.t[d], 7))
                violation(report.t_clique_ok, "t-clique edge (" + std::to_string(c) + "," +
                                                  std::to_string(d) + ") lost label 7");
    std::vector<Vertex> all_w = gg.w0;
    all_w.insert(all_w.end(), gg.w.begin(), gg.w.end());
    for (std::size_t i = 0; i < all_w.size(); ++i)
        for (std::size_t j = i + 1; j < all_w.size(); ++j)
            if (!labelling.has_label(all_w[i], all_w[j], 7))
                violation(report.w_clique_ok, "w-clique edge (" + std::to_string(all_w[i]) + "," +
                                                  std::to_string(all_w[j]) + ") lost label 7");
    for (const auto& [edge, labels] : gg.graph.edges()) {
        if (edge.first != gg.t0 && edge.second != gg.t0) continue;
        for (Label l : labels)
            if (!labelling.has_label(edge.first, edge.second, l))
                violation(report.t0_edges_ok, "t0 edge (" + std::to_string(edge.first) + "," +
                                                  std::to_string(edge.second) + ") lost label " +
                                                  std::to_string(l));
    }
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 3; ++p) {
            PathStatus st = path_status(gg, labelling, i, p);
            if (!st.u_side_kept && !st.v_side_kept)
                violation(report.paths_ok, "x" + std::to_string(i + 1) + " appearance " +
                                               std::to_string(p + 1) +
                                               " kept neither side path");
        }
    return report;
}

NecessaryLabelsReport verify_necessary_labels(const XorFormula& phi,
                                              const TemporalGraph& labelling) {
    return verify_necessary_labels(build_gadget(phi), labelling);
}

}  // namespace tempo
