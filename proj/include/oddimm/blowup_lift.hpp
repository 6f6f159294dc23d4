#pragma once

#include "blowup.hpp"
#include "coloring.hpp"
#include "verify.hpp"

namespace oddimm {

// Copy-index routing for lifting one pair-path into all m*m copy pairs.
// Row t holds (a_t, b_t); the copy path between copy i of the first
// terminal and copy j of the second uses k_t = (a_t*i + b_t*j) mod m at
// step t. Rows: (1,0) start, (0,1) end, (1, t mod 2) between. Every
// consecutive row pair has determinant +-1, hence each edge-copy
// transition (k_t, k_t+1) is a bijection of (i,j) pairs for every m, which
// is exactly what makes the m*m lifted paths pairwise edge-disjoint.
struct BlowupRouting {
    int m = 1;
    int len = 1;
    std::vector<std::pair<int, int>> rows;

    int copy_at(int t, int i, int j) const {
        return (rows[t].first * i + rows[t].second * j) % m;
    }

    std::vector<int> copy_sequence(int i, int j) const {
        std::vector<int> seq(len + 1);
        for (int t = 0; t <= len; ++t) seq[t] = copy_at(t, i, j);
        return seq;
    }
};

inline BlowupRouting route(int m, int len) {
    if (m < 1) throw invariant_error("route: multiplicity must be positive");
    if (len < 1) throw invariant_error("route: pair paths have at least one edge");
    BlowupRouting r;
    r.m = m;
    r.len = len;
    r.rows.resize(len + 1);
    r.rows[0] = {1, 0};
    for (int t = 1; t < len; ++t) r.rows[t] = {1, t % 2};
    r.rows[len] = {0, 1};
    return r;
}

// Exhaustive check that every transition of the routing is a bijection
// from (i,j) pairs to (k_t, k_t+1) pairs.
inline bool routing_transitions_bijective(int m, int len) {
    BlowupRouting r = route(m, len);
    for (int t = 0; t + 1 <= len; ++t) {
        std::vector<char> hit(m * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                int slot = r.copy_at(t, i, j) * m + r.copy_at(t + 1, i, j);
                if (hit[slot]) return false;
                hit[slot] = 1;
            }
    }
    return true;
}

// Lifts a verified K_t certificate in L(H) to a K_{m*t} certificate in
// L(mH). Edge copy k of host edge e has id m*e+k in mH, so L(H) vertex v
// fans out to copies m*v+k. Original pair-paths lift m*m times under the
// routing; the m copies of each original terminal form cliques of
// parallel-edge vertices, connected by single L(mH) edges.
inline ImmersionCertificate lift_certificate(const ImmersionCertificate& cert,
                                             const Multigraph& h, int m) {
    if (m < 1) throw precondition_error("lift_certificate: multiplicity must be positive");
    if (!h.is_simple()) throw precondition_error("lift_certificate: host graph must be simple");
    Multigraph l = line_graph(h).graph;
    if (!same_graph(l, cert.host))
        throw precondition_error(
            "lift_certificate: certificate host is not the line graph of the given graph");
    auto rep = verify(l, cert, CheckFlags{true, cert.strong, cert.totally_odd, true});
    if (!rep.overall)
        throw precondition_error("lift_certificate: input certificate failed verification:\n" +
                                 rep.to_text());

    Multigraph lm = line_graph(multiply_edges(h, m)).graph;
    ImmersionCertificate out;
    out.host = lm;
    out.t = m * cert.t;
    for (int v : cert.terminals)
        for (int k = 0; k < m; ++k) out.terminals.push_back(m * v + k);

    for (const PairPath& p : cert.paths) {
        BlowupRouting r = route(m, p.length());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                PairPath q;
                q.a = m * p.a + i;
                q.b = m * p.b + j;
                q.vertices.resize(p.vertices.size());
                for (size_t t = 0; t < p.vertices.size(); ++t)
                    q.vertices[t] = m * p.vertices[t] + r.copy_at(static_cast<int>(t), i, j);
                out.paths.push_back(std::move(q));
            }
    }
    for (int v : cert.terminals)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                out.paths.push_back({m * v + i, m * v + j, {m * v + i, m * v + j}});

    out.strong = cert.strong;
    out.totally_odd = cert.totally_odd;
    out.case_tag = "blowup(m=" + std::to_string(m) + ")";

    long long want = static_cast<long long>(out.t) * (out.t - 1) / 2;
    if (static_cast<long long>(out.paths.size()) != want)
        throw invariant_error("lift produced " + std::to_string(out.paths.size()) +
                              " paths, expected " + std::to_string(want));
    auto outrep = verify(lm, out, CheckFlags{true, out.strong, out.totally_odd, true});
    if (!outrep.overall)
        throw invariant_error("lifted certificate failed verification:\n" + outrep.to_text());
    return out;
}

struct ChiBoundReport {
    int chi_l = 0;       // chi(L(H)), exact
    int chi_lm = 0;      // chi(L(mH)); exact unless `exact` is false
    int bound = 0;       // m * chi(L(H))
    bool exact = true;   // false: chi_lm is only a greedy upper bound
    bool pass = false;   // chi_lm <= bound
};

// chi(L(mH)) <= m * chi(L(H)): checked exactly when the budget allows,
// otherwise via the greedy bound and flagged as weaker evidence.
inline ChiBoundReport chi_bound_check(const Multigraph& h, int m,
                                      const SolverBudget& budget = {}) {
    if (m < 1) throw precondition_error("chi_bound_check: multiplicity must be positive");
    ChiBoundReport rep;
    Multigraph l = line_graph(h).graph;
    rep.chi_l = chromatic_number(l, budget).first;
    rep.bound = m * rep.chi_l;
    Multigraph lm = line_graph(multiply_edges(h, m)).graph;
    try {
        rep.chi_lm = chromatic_number(lm, budget).first;
        rep.exact = true;
    } catch (const budget_error&) {
        rep.chi_lm = greedy_coloring_bound(lm);
        rep.exact = false;
    }
    rep.pass = rep.chi_lm <= rep.bound;
    return rep;
}

}  // namespace oddimm
