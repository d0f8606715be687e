#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Monotone XOR formula: every clause is (x_i XOR x_j), i != j, and every
// variable appears in exactly three clauses, so m = 3n/2.
struct XorFormula {
    struct Occurrence {
        int clause = -1;
        bool is_first = false;  // slot of the variable inside the clause
    };

    int variable_count = 0;
    std::vector<std::pair<int, int>> clauses;              // 0-based variable ids
    std::vector<std::array<Occurrence, 3>> occurrences;    // per variable, clause order
};

using Assignment = std::vector<bool>;

// Text format, '#' starts a comment:
//   p mxor3 <n> <m>
//   <i> <j>            (1-based, one clause per line, duplicates allowed)
XorFormula parse_formula(std::istream& in);
XorFormula parse_formula_text(const std::string& text);

int satisfied_count(const XorFormula& phi, const Assignment& tau);

// The reduction graph for a formula: per variable a base {s, u0, w0, v0},
// per clause one shared branch {t, w, a, b} where a is the u-side of the
// clause's first variable (and the v-side of its second), b the reverse.
// 10n+1 vertices, 17/4 n^2 + 28n + 1 labels in total.
struct GadgetGraph {
    XorFormula formula;
    TemporalGraph graph;
    std::vector<Vertex> s, u0, w0, v0;  // per variable
    std::vector<Vertex> t, w, a, b;     // per clause
    Vertex t0 = 0;

    int clause_of(int var, int appearance) const {
        return formula.occurrences[var][appearance].clause;
    }
    // u_p / v_p of a variable resolve to the a or b side of the shared branch
    Vertex u_branch(int var, int appearance) const {
        const auto& occ = formula.occurrences[var][appearance];
        return occ.is_first ? a[occ.clause] : b[occ.clause];
    }
    Vertex v_branch(int var, int appearance) const {
        const auto& occ = formula.occurrences[var][appearance];
        return occ.is_first ? b[occ.clause] : a[occ.clause];
    }
};

// Builds the gadget and replays the journey families its connectivity
// argument quotes (base to branch to t0 chains and back); construction
// fails if any replayed journey is invalid.
GadgetGraph build_gadget(const XorFormula& phi);

// The labelling that keeps, per variable, the three u-side or three v-side
// paths as dictated by tau, plus one label per transition edge and all
// shared labels. Removes exactly 9n + (satisfied clause count) labels and
// stays temporally connected.
TemporalGraph assignment_to_labelling(const GadgetGraph& gadget, const Assignment& tau);
TemporalGraph assignment_to_labelling(const XorFormula& phi, const Assignment& tau);

// Reads an assignment back from any temporally connected sub-labelling:
// variables whose three u-side paths survive map to 0, v-side to 1. Mixed
// variables are first normalised to their majority side (the rewrite never
// adds more labels than it drops and keeps the labelling connected), which
// gives the guarantee satisfied(tau) >= removed - 9n.
Assignment labelling_to_assignment(const GadgetGraph& gadget, const TemporalGraph& labelling);
Assignment labelling_to_assignment(const XorFormula& phi, const TemporalGraph& labelling);

// Checks the label families every temporally connected sub-labelling must
// retain: (a) a label on every transition edge, (b) label 1 on every
// {t,w} edge, (c,d) the clique labels among t's and among w's, (e) every
// t0-incident label, (f) per variable appearance a full u-side or v-side
// path. Violations falsify temporal connectivity, so this doubles as a
// test oracle.
struct NecessaryLabelsReport {
    bool transition_edges_ok = true;
    bool tw_edges_ok = true;
    bool t_clique_ok = true;
    bool w_clique_ok = true;
    bool t0_edges_ok = true;
    bool paths_ok = true;
    std::vector<std::string> violations;

    bool all_ok() const {
        return transition_edges_ok && tw_edges_ok && t_clique_ok && w_clique_ok && t0_edges_ok &&
               paths_ok;
    }
};

NecessaryLabelsReport verify_necessary_labels(const GadgetGraph& gadget,
                                              const TemporalGraph& labelling);
NecessaryLabelsReport verify_necessary_labels(const XorFormula& phi,
                                              const TemporalGraph& labelling);

}  // namespace tempo
