#pragma once

#include "oracle.hpp"
#include "paths.hpp"

namespace oddimm {

// A path system seen through L(H): path P_i = x, h^i_1, .., h^i_l, y of
// l internal vertices lifts to the L(H) path Q_i over P_i's edge ids,
// which has length exactly l. Paths are reordered so the odd-length Q_i
// come first (stably) and a degenerate single-edge path, if present, goes
// last; a simple host admits at most one degenerate path per pair.
struct LiftedSystem {
    PathSystem host;
    std::vector<std::vector<int>> q;
    std::vector<int> len;
    int j = 0;            // number of odd-length lifted paths
    int degenerate = -1;  // index of the length-0 lifted path, if any
};

inline LiftedSystem lift_paths(const PathSystem& sys) {
    LiftedSystem out;
    const int d = static_cast<int>(sys.paths.size());
    std::vector<int> order(d);
    for (int i = 0; i < d; ++i) order[i] = i;
    auto rank = [&sys](int i) {
        int l = sys.paths[i].length() - 1;
        if (l == 0) return 2;
        return l % 2 == 1 ? 0 : 1;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return rank(a) < rank(b); });
    out.host = sys;
    out.host.paths.clear();
    for (int i : order) out.host.paths.push_back(sys.paths[i]);
    for (int i = 0; i < d; ++i) {
        const Walk& p = out.host.paths[i];
        out.q.push_back(p.edges);
        out.len.push_back(p.length() - 1);
        if (out.len.back() % 2 == 1) ++out.j;
        if (out.len.back() == 0) {
            if (out.degenerate >= 0)
                throw invariant_error("two degenerate paths would repeat the xy edge");
            out.degenerate = i;
        }
    }
    return out;
}

namespace detail {

struct Attachment {
    int edge = -1;  // the L(H) vertex to splice in
    int pos = 0;    // insert before q[pos]; 1 = at h^i_1, 2 = at h^i_2
    int tier = 0;   // 0 best: off every path and not a terminal
};

// Candidate edges at h^i_1 (and h^i_2 when allowed) that are off P_i.
// Tiers: off all paths beats on-some-path, avoiding terminals beats not;
// candidates that are last edges of other paths are skipped outside the
// off-all tiers since they could collide with hub edges at y.
inline std::optional<Attachment> pick_attachment(const Multigraph& h,
                                                 const std::vector<Walk>& paths, int i,
                                                 const std::vector<char>& on_any_path,
                                                 const std::set<int>& backs,
                                                 const std::set<int>& terminal_ids,
                                                 bool allow_h2) {
    const Walk& p = paths[i];
    std::set<int> own(p.edges.begin(), p.edges.end());
    auto inc = incidence_lists(h);
    std::optional<Attachment> best;
    int max_pos = allow_h2 ? 2 : 1;
    for (int pos = 1; pos <= max_pos; ++pos) {
        if (static_cast<int>(p.vertices.size()) < pos + 2) break;
        int w = p.vertices[pos];
        for (const IncidentEdge& ie : inc[w]) {
            if (own.count(ie.edge)) continue;
            bool off_all = !on_any_path[ie.edge];
            bool non_back = !backs.count(ie.edge);
            bool non_term = !terminal_ids.count(ie.edge);
            int tier;
            if (off_all && non_term)
                tier = 0;
            else if (off_all)
                tier = 1;
            else if (non_back && non_term)
                tier = 2;
            else if (non_back)
                tier = 3;
            else
                continue;
            if (!best || std::tie(tier, pos, ie.edge) <
                             std::tie(best->tier, best->pos, best->edge))
                best = Attachment{ie.edge, pos, tier};
        }
    }
    return best;
}

// At a branch vertex of degree exactly 3 the two path edges leave exactly
// one other edge, and a counting argument puts it off every path: any
// other path through the vertex would need two further edges there.
inline int third_edge_at_degree3(const Multigraph& h, const std::vector<Walk>& paths, int i,
                                 const std::vector<char>& on_any_path) {
    int w = paths[i].vertices[1];
    std::set<int> own(paths[i].edges.begin(), paths[i].edges.end());
    auto inc = incidence_lists(h);
    for (const IncidentEdge& ie : inc[w]) {
        if (own.count(ie.edge)) continue;
        if (on_any_path[ie.edge])
            throw invariant_error(
                "third edge at a degree-3 branch vertex lies on another path");
        return ie.edge;
    }
    throw invariant_error("no third edge at a degree-3 branch vertex");
}

}  // namespace detail

struct AssembledCertificate {
    ImmersionCertificate cert;                    // immersion + parity verified
    std::vector<CheckWitness> strong_violations;  // empty iff the certificate is strong
};

// Turns a classified path system over an edge-critical host into a
// K_{d+1} certificate in L(H). Dispatch is on (j, d, degenerate) and each
// branch follows its fixed recipe; structural failures (adjacency, parity,
// disjointness) throw naming the branch, while strongness violations are
// reported for the caller to log and repair. Hosts that are not actually
// edge-critical can legitimately lack the needed attachment edges; that
// surfaces as an input-integrity invariant_error.
inline AssembledCertificate assemble(const Multigraph& h, const LiftedSystem& input) {
    LiftedSystem s = input;
    const int d = static_cast<int>(s.q.size());
    if (d < 3) throw precondition_error("assemble: needs degree at least 3");
    if (d != s.host.d) throw invariant_error("assemble: path count disagrees with d");

    auto deg = h.degrees();
    auto swap_paths = [&s](int a, int b) {
        std::swap(s.q[a], s.q[b]);
        std::swap(s.len[a], s.len[b]);
        std::swap(s.host.paths[a], s.host.paths[b]);
        if (s.degenerate == a)
            s.degenerate = b;
        else if (s.degenerate == b)
            s.degenerate = a;
    };
    auto branch_vertex = [&s](int i) { return s.host.paths[i].vertices[1]; };

    std::string tag;
    int vstar_path = 0;  // v* is the last vertex of this path

    // Case-specific reorders first; they must precede the terminal set.
    if (s.j >= 4) {
        tag = "j>=4";
    } else if (s.j == 3 && d == 3) {
        tag = "j=3,d=3";
        std::vector<int> heavy, light;
        for (int i = 0; i < 3; ++i)
            (deg[branch_vertex(i)] == 3 ? heavy : light).push_back(i);
        if (heavy.size() < 2)
            throw invariant_error(
                "assemble[j=3,d=3]: fewer than two degree-3 branch vertices; "
                "host is not edge-critical");
        std::vector<int> order = light;
        order.insert(order.end(), heavy.begin(), heavy.end());
        LiftedSystem t = s;
        for (int i = 0; i < 3; ++i) {
            t.q[i] = s.q[order[i]];
            t.len[i] = s.len[order[i]];
            t.host.paths[i] = s.host.paths[order[i]];
        }
        s = t;
    } else if (s.j == 3 && s.len[3] == 0) {
        tag = "j=3,l4=0";
        if (d != 4)
            throw invariant_error("assemble[j=3,l4=0]: degenerate path not last, d != 4");
        int pick = -1;
        for (int i = 0; i < 3 && pick < 0; ++i)
            if (deg[branch_vertex(i)] >= 3) pick = i;
        if (pick < 0)
            throw invariant_error(
                "assemble[j=3,l4=0]: no odd path starts toward a degree>=3 vertex; "
                "host is not edge-critical");
        swap_paths(pick, 2);
    } else if (s.j == 3) {
        tag = "j=3,l4>=2";
        vstar_path = 3;
        if (s.len[3] < 2 || s.len[3] % 2 != 0)
            throw invariant_error("assemble[j=3,l4>=2]: fourth path not even of length >= 2");
    } else if (s.j == 2 && d == 3) {
        tag = "j=2,d=3";
        if (deg[branch_vertex(1)] == 3) {
        } else if (deg[branch_vertex(0)] == 3) {
            swap_paths(0, 1);
        } else {
            throw invariant_error(
                "assemble[j=2,d=3]: neither odd path starts toward a degree-3 vertex; "
                "host is not edge-critical");
        }
    } else if (s.j == 2) {
        tag = "j=2,d>=4";
    } else if (s.j == 1) {
        tag = "j=1";
    } else {
        tag = "j=0";
        int pick = -1;
        for (int i = 0; i < d && pick < 0; ++i)
            if (s.len[i] >= 2) pick = i;
        if (pick < 0) throw invariant_error("assemble[j=0]: every path is degenerate");
        swap_paths(pick, 0);
    }

    std::vector<int> back(d);
    for (int i = 0; i < d; ++i) back[i] = s.q[i].back();
    const int vstar = back[vstar_path];

    std::vector<int> terminal_ids;
    for (int i = 0; i < d; ++i) terminal_ids.push_back(s.q[i][0]);
    terminal_ids.push_back(vstar);
    {
        std::set<int> dedup(terminal_ids.begin(), terminal_ids.end());
        if (static_cast<int>(dedup.size()) != d + 1)
            throw invariant_error("assemble[" + tag + "]: terminal vertices collide");
    }
    std::set<int> terminal_set(terminal_ids.begin(), terminal_ids.end());
    std::set<int> backs(back.begin(), back.end());
    std::vector<char> on_any(h.m(), 0);
    for (const Walk& p : s.host.paths)
        for (int e : p.edges) on_any[e] = 1;

    auto insert_at = [&s](int i, const detail::Attachment& a) {
        std::vector<int> out = s.q[i];
        out.insert(out.begin() + a.pos, a.edge);
        return out;
    };
    auto attach = [&](int i, bool allow_h2) {
        auto got = detail::pick_attachment(h, s.host.paths, i, on_any, backs, terminal_set,
                                           allow_h2);
        if (!got)
            throw invariant_error("assemble[" + tag + "]: no attachment edge for path " +
                                  std::to_string(i) + "; host is not edge-critical");
        return *got;
    };

    std::vector<std::vector<int>> spoke(d);
    std::vector<int> expect(d);
    auto append = [&](int i, std::initializer_list<int> tail) {
        spoke[i] = s.q[i];
        for (int v : tail) spoke[i].push_back(v);
        expect[i] = s.len[i] + static_cast<int>(tail.size());
    };

    if (tag == "j>=4") {
        append(0, {});
        for (int i = 1; i + 1 < s.j; ++i) append(i, {back[i + 1], back[0]});
        append(s.j - 1, {back[1], back[0]});
        for (int i = s.j; i < d; ++i) append(i, {back[0]});
    } else if (tag == "j=3,l4>=2") {
        append(0, {back[1], back[3]});
        append(1, {back[2], back[3]});
        append(2, {back[0], back[3]});
        detail::Attachment a = attach(3, true);
        spoke[3] = insert_at(3, a);
        expect[3] = s.len[3] + 1;
        for (int i = 4; i < d; ++i) append(i, {back[3]});
    } else if (tag == "j=3,l4=0") {
        append(0, {});
        append(1, {back[2], back[0]});
        detail::Attachment a = attach(2, false);
        spoke[2] = insert_at(2, a);
        spoke[2].push_back(s.q[3][0]);
        spoke[2].push_back(back[1]);
        spoke[2].push_back(back[0]);
        expect[2] = s.len[2] + 4;
        spoke[3] = {s.q[3][0], back[0]};
        expect[3] = 1;
    } else if (tag == "j=3,d=3") {
        append(0, {});
        for (int i = 1; i <= 2; ++i) {
            int b = detail::third_edge_at_degree3(h, s.host.paths, i, on_any);
            spoke[i] = insert_at(i, {b, 1, 0});
            spoke[i].push_back(back[0]);
            expect[i] = s.len[i] + 2;
        }
    } else if (tag == "j=2,d=3") {
        append(0, {});
        int b = detail::third_edge_at_degree3(h, s.host.paths, 1, on_any);
        spoke[1] = insert_at(1, {b, 1, 0});
        spoke[1].push_back(back[0]);
        expect[1] = s.len[1] + 2;
        append(2, {back[0]});
    } else if (tag == "j=2,d>=4") {
        append(0, {});
        append(1, {back[2], back[0]});
        append(2, {back[3], back[1], back[0]});
        for (int i = 3; i < d; ++i) append(i, {back[0]});
    } else if (tag == "j=1") {
        append(0, {});
        for (int i = 1; i < d; ++i) append(i, {back[0]});
    } else {  // j=0
        detail::Attachment a = attach(0, true);
        spoke[0] = insert_at(0, a);
        expect[0] = s.len[0] + 1;
        for (int i = 1; i < d; ++i) append(i, {back[0]});
    }

    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(spoke[i].size()) != expect[i] + 1)
            throw invariant_error("assemble[" + tag + "]: path " + std::to_string(i) +
                                  " length " + std::to_string(spoke[i].size() - 1) +
                                  ", expected " + std::to_string(expect[i]));
        if (expect[i] % 2 == 0)
            throw invariant_error("assemble[" + tag + "]: path " + std::to_string(i) +
                                  " has even length");
        if (spoke[i].front() != terminal_ids[i] || spoke[i].back() != vstar)
            throw invariant_error("assemble[" + tag + "]: path " + std::to_string(i) +
                                  " endpoints are wrong");
    }

    AssembledCertificate out;
    out.cert.host = line_graph(h).graph;
    out.cert.t = d + 1;
    out.cert.terminals = terminal_ids;
    for (int i = 0; i <= d; ++i)
        for (int k = i + 1; k <= d; ++k) {
            PairPath pp;
            pp.a = terminal_ids[i];
            pp.b = terminal_ids[k];
            if (k < d)
                pp.vertices = {terminal_ids[i], terminal_ids[k]};
            else
                pp.vertices = spoke[i];
            out.cert.paths.push_back(std::move(pp));
        }
    out.cert.totally_odd = true;
    out.cert.case_tag = tag;

    auto rep = verify(out.cert.host, out.cert, CheckFlags{true, true, true, true});
    for (const CheckResult& c : rep.checks) {
        if (c.name == "strong") {
            out.strong_violations = c.witnesses;
            continue;
        }
        if (!c.passed)
            throw invariant_error("assemble[" + tag + "]: check '" + c.name + "' failed:\n" +
                                  rep.to_text());
    }
    out.cert.strong = out.strong_violations.empty();
    return out;
}

struct RepairOutcome {
    bool ok = false;
    ImmersionCertificate cert;
    std::string note;
};

// Reroutes the flagged pair-paths, shortest-first, keeping everything else
// fixed; if that cannot reach the goal properties it reruns the oracle
// restricted to the same terminal set. Terminal-level damage is not
// repairable by rerouting and fails fast.
inline RepairOutcome repair(const ImmersionCertificate& cert, const VerificationReport& report,
                            OracleFlags goal, const SearchBudget& budget = {}) {
    RepairOutcome out;
    for (const char* name : {"terminals", "clique-order"}) {
        const CheckResult* c = report.find(name);
        if (c && !c->passed) {
            out.note = std::string("unrepairable: check '") + name + "' failed";
            return out;
        }
    }
    std::set<int> offending;
    for (const CheckResult& c : report.checks)
        if (!c.passed)
            for (const CheckWitness& w : c.witnesses)
                if (w.path >= 0) offending.insert(w.path);

    const Multigraph& g = cert.host;
    ImmersionCertificate fixed = cert;

    if (!offending.empty()) {
        std::vector<std::vector<int>> nbr(g.n);
        std::vector<std::vector<int>> eid(g.n, std::vector<int>(g.n, -1));
        for (int e = 0; e < g.m(); ++e) {
            nbr[g.edges[e].u].push_back(g.edges[e].v);
            nbr[g.edges[e].v].push_back(g.edges[e].u);
            eid[g.edges[e].u][g.edges[e].v] = eid[g.edges[e].v][g.edges[e].u] = e;
        }
        for (auto& l : nbr) std::sort(l.begin(), l.end());
        std::vector<char> is_terminal(g.n, 0);
        for (int v : cert.terminals)
            if (v >= 0 && v < g.n) is_terminal[v] = 1;

        long long nodes = 0;
        bool local_ok = true;
        for (int p : offending) {
            std::vector<char> used(g.m(), 0);
            for (size_t k = 0; k < fixed.paths.size(); ++k) {
                if (static_cast<int>(k) == p) continue;
                if (offending.count(static_cast<int>(k)) && static_cast<int>(k) > p)
                    continue;  // still to be rerouted; its old edges are free
                const auto& vs = fixed.paths[k].vertices;
                for (size_t i = 0; i + 1 < vs.size(); ++i) {
                    int e = eid[vs[i]][vs[i + 1]];
                    if (e >= 0) used[e] = 1;
                }
            }
            int a = fixed.paths[p].a, b = fixed.paths[p].b;
            std::vector<int> found;
            std::vector<char> visited(g.n, 0);
            std::vector<int> stack{a};
            visited[a] = 1;
            auto dfs = [&](auto&& self, int cur, int want) -> bool {
                if (++nodes > budget.max_nodes)
                    throw detail::search_out_of_nodes{};
                for (int w : nbr[cur]) {
                    if (visited[w]) continue;
                    int e = eid[cur][w];
                    if (used[e]) continue;
                    if (w == b) {
                        if (static_cast<int>(stack.size()) != want) continue;
                        stack.push_back(b);
                        found = stack;
                        stack.pop_back();
                        return true;
                    }
                    if (static_cast<int>(stack.size()) >= want) continue;
                    if (goal.strong && is_terminal[w]) continue;
                    visited[w] = 1;
                    stack.push_back(w);
                    bool got = self(self, w, want);
                    stack.pop_back();
                    visited[w] = 0;
                    if (got) return true;
                }
                return false;
            };
            bool got = false;
            try {
                int step = goal.totally_odd ? 2 : 1;
                int start = goal.totally_odd ? 1 : 1;
                for (int want = start; want < g.n && !got; want += step)
                    got = dfs(dfs, a, want);
            } catch (const detail::search_out_of_nodes&) {
                local_ok = false;
                break;
            }
            if (!got) {
                local_ok = false;
                break;
            }
            fixed.paths[p].vertices = found;
        }

        if (local_ok) {
            fixed.strong = goal.strong || cert.strong;
            fixed.totally_odd = goal.totally_odd || cert.totally_odd;
            auto rep = verify(g, fixed,
                              CheckFlags{true, fixed.strong, fixed.totally_odd, true});
            if (rep.overall) {
                fixed.case_tag = cert.case_tag + "+repair";
                out.ok = true;
                out.cert = fixed;
                out.note = "rerouted " + std::to_string(offending.size()) + " path(s)";
                return out;
            }
        }
    }

    SearchResult res = find_immersion_with_terminals(g, cert.terminals, goal, budget);
    switch (res.status) {
        case SearchStatus::found:
            out.ok = true;
            out.cert = res.cert;
            out.cert.case_tag = cert.case_tag + "+oracle-repair";
            out.note = "rebuilt all pair paths over the original terminals";
            return out;
        case SearchStatus::exhausted_no:
            out.note = "no system with these terminals and properties exists (exhausted)";
            return out;
        case SearchStatus::budget_out:
            out.note = "search budget exhausted before a replacement was found";
            return out;
    }
    return out;
}

struct BuildEvent {
    std::string kind;      // constructed | strongness-violation | repaired | repair-failed
    std::string case_tag;
    std::string detail;
};

struct ConstructionResult {
    ImmersionCertificate cert;
    std::vector<BuildEvent> log;
};

// End-to-end: chromatic index decides the route. Class-1 hosts get the
// star certificate at a maximum-degree vertex; class-2 hosts of maximum
// degree 2 get the odd-cycle certificate; everything else runs reduction,
// path system, assembly, and (if strongness verification fails) repair.
// The certificate order t always equals chi(L(H)).
inline ConstructionResult construct_immersion(const Multigraph& h,
                                              const SolverBudget& coloring_budget = {},
                                              const SearchBudget& search_budget = {}) {
    ConstructionResult out;
    auto [chi, witness] = chromatic_index(h, coloring_budget);
    int delta = h.max_degree();
    LineGraphMap l = line_graph(h);

    if (chi == delta) {  // class 1 (includes the edgeless host)
        out.cert.host = l.graph;
        out.cert.t = delta;
        out.cert.strong = true;
        out.cert.totally_odd = true;
        out.cert.case_tag = "star";
        if (delta > 0) {
            auto deg = h.degrees();
            int center = -1;
            for (int v = 0; v < h.n && center < 0; ++v)
                if (deg[v] == delta) center = v;
            auto inc = incidence_lists(h);
            for (const IncidentEdge& ie : inc[center]) out.cert.terminals.push_back(ie.edge);
            for (int i = 0; i < delta; ++i)
                for (int k = i + 1; k < delta; ++k)
                    out.cert.paths.push_back({out.cert.terminals[i], out.cert.terminals[k],
                                              {out.cert.terminals[i], out.cert.terminals[k]}});
        }
        auto rep = verify(l.graph, out.cert, CheckFlags{true, true, true, true});
        if (!rep.overall) throw invariant_error("star certificate failed verification");
        out.log.push_back({"constructed", "star", "t=" + std::to_string(out.cert.t)});
        return out;
    }

    if (delta == 2) {  // class 2 at maximum degree 2: some component is an odd cycle
        auto comp = component_ids(h);
        auto deg = h.degrees();
        int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
        std::vector<int> esize(ncomp, 0), bad(ncomp, 0);
        for (const Edge& e : h.edges) ++esize[comp[e.u]];
        for (int v = 0; v < h.n; ++v)
            if (deg[v] != 2) bad[comp[v]] = 1;
        int pick = -1;
        for (int c = 0; c < ncomp && pick < 0; ++c)
            if (!bad[c] && esize[c] % 2 == 1 && esize[c] >= 3) pick = c;
        if (pick < 0) throw invariant_error("class-2 host of degree 2 without an odd cycle");

        int start = -1;
        for (int v = 0; v < h.n && start < 0; ++v)
            if (comp[v] == pick) start = v;
        auto inc = incidence_lists(h);
        std::vector<int> ring;  // edge ids in cyclic order
        int cur = start, prev_edge = -1;
        do {
            int next_edge = -1;
            for (const IncidentEdge& ie : inc[cur])
                if (ie.edge != prev_edge) {
                    next_edge = ie.edge;
                    break;
                }
            ring.push_back(next_edge);
            cur = h.edges[next_edge].other(cur);
            prev_edge = next_edge;
        } while (cur != start);

        const int k = static_cast<int>(ring.size());
        out.cert.host = l.graph;
        out.cert.t = 3;
        out.cert.terminals = {ring[0], ring[1], ring[2]};
        std::sort(out.cert.terminals.begin(), out.cert.terminals.end());
        PairPath p01{ring[0], ring[1], {ring[0], ring[1]}};
        PairPath p12{ring[1], ring[2], {ring[1], ring[2]}};
        PairPath p02{ring[0], ring[2], {ring[0]}};
        for (int i = k - 1; i >= 2; --i) p02.vertices.push_back(ring[i]);
        out.cert.strong = true;
        out.cert.totally_odd = true;
        out.cert.case_tag = "odd-cycle";
        // store in lexicographic pair order over sorted terminals
        std::vector<PairPath> trio{p01, p12, p02};
        std::sort(trio.begin(), trio.end(), [](const PairPath& a, const PairPath& b) {
            return std::minmax(a.a, a.b) < std::minmax(b.a, b.b);
        });
        out.cert.paths = trio;
        auto rep = verify(l.graph, out.cert, CheckFlags{true, true, true, true});
        if (!rep.overall)
            throw invariant_error("odd-cycle certificate failed verification:\n" + rep.to_text());
        out.log.push_back({"constructed", "odd-cycle",
                           "component of " + std::to_string(k) + " edges"});
        return out;
    }

    // class 2, maximum degree >= 3: the full route
    CriticalReduction red = critical_subgraph(h, coloring_budget);
    PathSystem sys = thomassen_system(red.graph, delta, coloring_budget, false);
    LiftedSystem lifted = lift_paths(sys);
    AssembledCertificate made = assemble(red.graph, lifted);

    // Re-home the certificate from L(reduced) into L(H): the reduced edges
    // keep their adjacency, so the map is just the edge id translation.
    ImmersionCertificate cert = made.cert;
    cert.host = l.graph;
    for (int& v : cert.terminals) v = red.edge_to_host[v];
    for (PairPath& p : cert.paths) {
        p.a = red.edge_to_host[p.a];
        p.b = red.edge_to_host[p.b];
        for (int& v : p.vertices) v = red.edge_to_host[v];
    }
    out.log.push_back({"constructed", cert.case_tag,
                       "reduced host has " + std::to_string(red.graph.n) + " vertices, " +
                           std::to_string(red.graph.m()) + " edges; x=" +
                           std::to_string(red.vertex_to_host[sys.x] + 1) + " y=" +
                           std::to_string(red.vertex_to_host[sys.y] + 1)});

    auto rep = verify(l.graph, cert, CheckFlags{true, true, true, true});
    for (const CheckResult& c : rep.checks)
        if (!c.passed && c.name != "strong")
            throw invariant_error("constructed certificate failed check '" + c.name + "':\n" +
                                  rep.to_text());
    const CheckResult* strong = rep.find("strong");
    if (strong && !strong->passed) {
        std::string detail;
        for (const CheckWitness& w : strong->witnesses) {
            if (!detail.empty()) detail += "; ";
            detail += w.text;
        }
        out.log.push_back({"strongness-violation", cert.case_tag, detail});
        cert.strong = false;
        RepairOutcome fixed = repair(cert, rep, OracleFlags{true, true}, search_budget);
        if (fixed.ok) {
            cert = fixed.cert;
            out.log.push_back({"repaired", cert.case_tag, fixed.note});
        } else {
            out.log.push_back({"repair-failed", cert.case_tag, fixed.note});
        }
    } else {
        cert.strong = true;
    }
    out.cert = cert;
    if (out.cert.t != chi)
        throw invariant_error("certificate order disagrees with chi(L(H))");
    return out;
}

}  // namespace oddimm
