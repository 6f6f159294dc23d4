#pragma once

#include <atomic>
#include <set>
#include <thread>

#include "coloring.hpp"
#include "io.hpp"
#include "verify.hpp"

namespace oddimm {

struct SearchBudget {
    long long max_nodes = 5'000'000;
    int max_paths_per_pair = 200'000;
};

enum class SearchStatus { found, exhausted_no, budget_out };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted_no: return "exhausted-no";
        case SearchStatus::budget_out: return "budget-out";
    }
    return "?";
}

struct OracleFlags {
    bool strong = false;
    bool totally_odd = false;
};

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted_no;
    ImmersionCertificate cert;  // meaningful when status == found
    long long nodes = 0;
};

namespace detail {

struct search_out_of_nodes {};

// Exhaustive pair-path assignment for one fixed terminal set. Paths are
// enumerated in lexicographic vertex order and constraints are pushed into
// the enumeration, so a completed sweep is a proof of absence.
struct TerminalSolver {
    const Multigraph& g;
    OracleFlags flags;
    const SearchBudget& budget;
    long long* nodes;

    std::vector<std::vector<int>> nbr;        // sorted neighbor lists
    std::vector<std::vector<int>> eid;        // vertex pair -> edge id
    std::vector<char> is_terminal;
    std::vector<int> terminals;
    std::vector<std::pair<int, int>> pairs;   // assignment order
    std::vector<char> edge_used;
    std::vector<std::vector<int>> chosen;     // per pair, the accepted path
    bool complete = true;

    TerminalSolver(const Multigraph& g, const std::vector<int>& ts, OracleFlags flags,
                   const SearchBudget& budget, long long* nodes)
        : g(g), flags(flags), budget(budget), nodes(nodes), nbr(g.n),
          eid(g.n, std::vector<int>(g.n, -1)), is_terminal(g.n, 0), terminals(ts),
          edge_used(g.m(), 0) {
        for (int e = 0; e < g.m(); ++e) {
            nbr[g.edges[e].u].push_back(g.edges[e].v);
            nbr[g.edges[e].v].push_back(g.edges[e].u);
            eid[g.edges[e].u][g.edges[e].v] = eid[g.edges[e].v][g.edges[e].u] = e;
        }
        for (auto& l : nbr) std::sort(l.begin(), l.end());
        for (int v : terminals) is_terminal[v] = 1;
    }

    void tick() {
        if (++*nodes > budget.max_nodes) throw search_out_of_nodes{};
    }

    bool parity_ok(int len) const { return !flags.totally_odd || len % 2 == 1; }

    // Counts simple a-b paths under the flag constraints, stopping at cap.
    // A zero is exact and proves the pair (hence the terminal set) dead.
    int count_paths(int a, int b, int cap) {
        int found = 0;
        std::vector<char> visited(g.n, 0);
        std::vector<int> stack{a};
        visited[a] = 1;
        auto dfs = [&](auto&& self, int cur) -> void {
            if (found >= cap) return;
            tick();
            for (int w : nbr[cur]) {
                if (visited[w]) continue;
                if (w == b) {
                    if (parity_ok(static_cast<int>(stack.size()))) ++found;
                    if (found >= cap) return;
                    continue;
                }
                if (flags.strong && is_terminal[w]) continue;
                visited[w] = 1;
                stack.push_back(w);
                self(self, w);
                stack.pop_back();
                visited[w] = 0;
            }
        };
        dfs(dfs, a);
        return found;
    }

    // Depth-first over pairs; within a pair, depth-first over simple paths
    // with used edges excluded as the path grows. `visited` is local to
    // the pair: different paths may share vertices, only edges are scarce.
    bool assign(size_t k) {
        if (k == pairs.size()) return true;
        auto [a, b] = pairs[k];
        int tried = 0;
        std::vector<char> visited(g.n, 0);
        std::vector<int> path{a};
        visited[a] = 1;
        auto dfs = [&](auto&& self, int cur) -> bool {
            tick();
            for (int w : nbr[cur]) {
                if (visited[w]) continue;
                int e = eid[cur][w];
                if (edge_used[e]) continue;
                if (w == b) {
                    if (!parity_ok(static_cast<int>(path.size()))) continue;
                    if (++tried > budget.max_paths_per_pair) {
                        complete = false;
                        return false;
                    }
                    edge_used[e] = 1;
                    path.push_back(b);
                    if (assign(k + 1)) {
                        chosen[k] = path;
                        return true;
                    }
                    path.pop_back();
                    edge_used[e] = 0;
                    continue;
                }
                if (flags.strong && is_terminal[w]) continue;
                edge_used[e] = 1;
                visited[w] = 1;
                path.push_back(w);
                if (self(self, w)) return true;
                path.pop_back();
                visited[w] = 0;
                edge_used[e] = 0;
            }
            return false;
        };
        return dfs(dfs, a);
    }

    // found -> certificate written; false -> none under this terminal set
    // (a proof only if `complete` stayed true).
    bool run(ImmersionCertificate* out) {
        std::vector<std::pair<int, int>> raw;
        std::vector<long long> avail;
        for (size_t i = 0; i < terminals.size(); ++i)
            for (size_t j = i + 1; j < terminals.size(); ++j)
                raw.emplace_back(terminals[i], terminals[j]);
        for (auto& [a, b] : raw) {
            int c = count_paths(a, b, 64);
            if (c == 0) return false;
            avail.push_back(c);
        }
        pairs = raw;
        std::vector<size_t> order(raw.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t x, size_t y) { return avail[x] < avail[y]; });
        pairs.clear();
        for (size_t i : order) pairs.push_back(raw[i]);
        chosen.assign(pairs.size(), {});
        if (!assign(0)) return false;

        out->host = g;
        out->t = static_cast<int>(terminals.size());
        out->terminals = terminals;
        out->paths.assign(raw.size(), {});
        for (size_t k = 0; k < pairs.size(); ++k) {
            PairPath pp;
            pp.a = pairs[k].first;
            pp.b = pairs[k].second;
            pp.vertices = chosen[k];
            out->paths[order[k]] = std::move(pp);  // back to lexicographic pair order
        }
        out->strong = flags.strong;
        out->totally_odd = flags.totally_odd;
        out->case_tag = "oracle";
        return true;
    }
};

// u and v are twins when swapping them is an automorphism; the xor of
// their neighbor rows then lies inside {u,v}. Twin transpositions compose
// to the full symmetric group on each merged class, so restricting
// terminal choices to per-class prefixes discards only isomorphic
// candidates. That keeps an exhausted sweep a genuine proof.
inline std::vector<int> twin_prefix_rule(const Multigraph& g) {
    auto rows = adjacency_bits(g);
    const int words = std::max(1, (g.n + 63) / 64);
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool twin = true;
            for (int w = 0; w < words && twin; ++w) {
                uint64_t x = rows[u][w] ^ rows[v][w];
                uint64_t allowed = 0;
                if (u / 64 == w) allowed |= uint64_t(1) << (u % 64);
                if (v / 64 == w) allowed |= uint64_t(1) << (v % 64);
                if (x & ~allowed) twin = false;
            }
            if (twin) parent[find(u)] = find(v);
        }
    // prev[v] = largest class member below v (-1 when v leads its class)
    std::vector<int> prev(g.n, -1), last(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        int c = find(v);
        prev[v] = last[c];
        last[c] = v;
    }
    return prev;
}

}  // namespace detail

// Exhaustive search for a strong/odd K_t immersion with a chosen terminal
// set. Only subset-minimal representatives per twin orbit are tried.
inline SearchResult find_immersion(const Multigraph& g, int t, OracleFlags flags = {},
                                   const SearchBudget& budget = {}) {
    if (!g.is_simple()) throw precondition_error("find_immersion: host must be simple");
    if (t < 0) throw precondition_error("find_immersion: negative order");
    SearchResult res;
    if (t > g.n) {
        res.status = SearchStatus::exhausted_no;
        return res;
    }
    if (t <= 1) {
        res.status = SearchStatus::found;
        res.cert.host = g;
        res.cert.t = t;
        if (t == 1) res.cert.terminals = {0};
        res.cert.strong = flags.strong;
        res.cert.totally_odd = flags.totally_odd;
        res.cert.case_tag = "oracle";
        return res;
    }

    auto prev = detail::twin_prefix_rule(g);
    std::vector<int> subset;
    bool complete = true;
    bool found = false;
    try {
        auto enumerate = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(subset.size()) == t) {
                detail::TerminalSolver solver(g, subset, flags, budget, &res.nodes);
                bool got = solver.run(&res.cert);
                complete = complete && solver.complete;
                return got;
            }
            int slack = t - static_cast<int>(subset.size());
            for (int v = from; v + slack <= g.n; ++v) {
                if (prev[v] >= 0) {
                    // prefix rule: v's class must be taken lowest-first
                    bool prev_in = false;
                    for (int s : subset)
                        if (s == prev[v]) prev_in = true;
                    if (!prev_in) continue;
                }
                subset.push_back(v);
                if (self(self, v + 1)) return true;
                subset.pop_back();
            }
            return false;
        };
        found = enumerate(enumerate, 0);
    } catch (const detail::search_out_of_nodes&) {
        res.status = SearchStatus::budget_out;
        return res;
    }
    if (found) {
        res.status = SearchStatus::found;
        auto rep = verify(g, res.cert,
                          CheckFlags{true, flags.strong, flags.totally_odd, true});
        if (!rep.overall) throw invariant_error("oracle certificate failed verification");
    } else {
        res.status = complete ? SearchStatus::exhausted_no : SearchStatus::budget_out;
    }
    return res;
}

inline SearchResult find_immersion_with_terminals(const Multigraph& g,
                                                  const std::vector<int>& terminals,
                                                  OracleFlags flags = {},
                                                  const SearchBudget& budget = {}) {
    if (!g.is_simple())
        throw precondition_error("find_immersion_with_terminals: host must be simple");
    std::set<int> dedup(terminals.begin(), terminals.end());
    if (dedup.size() != terminals.size())
        throw precondition_error("find_immersion_with_terminals: terminals repeat");
    for (int v : terminals)
        if (v < 0 || v >= g.n)
            throw precondition_error("find_immersion_with_terminals: terminal out of range");
    SearchResult res;
    if (terminals.size() <= 1) {
        res.status = SearchStatus::found;
        res.cert.host = g;
        res.cert.t = static_cast<int>(terminals.size());
        res.cert.terminals = terminals;
        res.cert.strong = flags.strong;
        res.cert.totally_odd = flags.totally_odd;
        res.cert.case_tag = "oracle";
        return res;
    }
    try {
        detail::TerminalSolver solver(g, terminals, flags, budget, &res.nodes);
        if (solver.run(&res.cert)) {
            res.status = SearchStatus::found;
            auto rep = verify(g, res.cert,
                              CheckFlags{true, flags.strong, flags.totally_odd, true});
            if (!rep.overall) throw invariant_error("oracle certificate failed verification");
        } else {
            res.status = solver.complete ? SearchStatus::exhausted_no : SearchStatus::budget_out;
        }
    } catch (const detail::search_out_of_nodes&) {
        res.status = SearchStatus::budget_out;
    }
    return res;
}

// Branch-and-bound minimum adjacency bitstring over all vertex orders.
// The bit layout matches graph6, so the minimum is directly the canonical
// graph6 line. Falls back to a flagged raw encoding if the search blows
// its node cap (possible only on large, highly symmetric inputs).
inline std::string canonical_graph6(const Multigraph& g) {
    if (!g.is_simple()) throw precondition_error("canonical_graph6: simple graphs only");
    if (g.n > 62) throw precondition_error("canonical_graph6: at most 62 vertices");
    const int n = g.n;
    if (n == 0) return to_graph6(g);
    auto rows = adjacency_bits(g);
    auto adj = [&](int u, int v) -> int { return rows[u][v / 64] >> (v % 64) & 1; };

    // Invariant: cur always equals the best prefix of its length. On a
    // strictly smaller bit, best is rewritten at once to cur plus an
    // all-ones tail, so pruning may always compare against best directly.
    std::vector<char> best;
    std::vector<char> cur;
    std::vector<int> perm;
    std::vector<char> placed(n, 0);
    long long nodes = 0;
    const long long cap = 2'000'000;
    bool capped = false;

    auto rec = [&](auto&& self) -> void {
        if (capped) return;
        if (static_cast<int>(perm.size()) == n) {
            if (best.empty()) best = cur;
            return;
        }
        size_t base = cur.size();
        int depth = static_cast<int>(perm.size());
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (++nodes > cap) {
                capped = true;
                return;
            }
            bool worse = false;
            for (int i = 0; i < depth; ++i) {
                char bit = static_cast<char>(adj(v, perm[i]));
                cur.push_back(bit);
                if (!best.empty()) {
                    char ref = best[cur.size() - 1];
                    if (bit > ref) {
                        worse = true;
                        break;
                    }
                    if (bit < ref) {
                        std::copy(cur.begin(), cur.end(), best.begin());
                        std::fill(best.begin() + cur.size(), best.end(), 1);
                    }
                }
            }
            if (!worse) {
                placed[v] = 1;
                perm.push_back(v);
                self(self);
                perm.pop_back();
                placed[v] = 0;
            }
            cur.resize(base);
            if (capped) return;
        }
    };
    rec(rec);
    if (capped) return "raw:" + to_graph6(g);

    Multigraph canon(n);
    size_t idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (best[idx++]) canon.add_edge(u, v);
    return to_graph6(canon);
}

// All simple graphs on 1..max_n vertices up to isomorphism, ordered by
// (vertex count, canonical graph6). Plain enumeration of edge subsets;
// max_n is capped where that stops being sane.
inline std::vector<Multigraph> generate_graphs(int max_n, bool connected_only) {
    if (max_n < 1 || max_n > 7)
        throw precondition_error("generate_graphs: supported range is 1..7 vertices");
    std::vector<Multigraph> out;
    for (int n = 1; n <= max_n; ++n) {
        int slots = n * (n - 1) / 2;
        std::set<std::string> seen;
        std::vector<std::pair<std::string, uint32_t>> keep;
        for (uint32_t mask = 0; mask < (uint32_t(1) << slots); ++mask) {
            Multigraph g(n);
            int bit = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            if (connected_only && !is_connected(g)) continue;
            std::string key = canonical_graph6(g);
            if (seen.insert(key).second) keep.emplace_back(key, mask);
        }
        std::sort(keep.begin(), keep.end());
        for (const auto& [key, mask] : keep) out.push_back(from_graph6(key));
    }
    return out;
}

struct ScanEntry {
    std::string key;  // canonical graph6 of the scanned graph
    int n = 0;
    int m = 0;
    int chi = -1;     // -1 when the coloring blew its budget
    SearchStatus status = SearchStatus::exhausted_no;
    long long nodes = 0;
};

struct ScanLedger {
    std::vector<ScanEntry> entries;
    int counterexample = -1;  // index of the first exhausted-no entry
    bool budget_hit = false;

    std::string to_text() const {
        std::ostringstream out;
        int found = 0;
        for (const ScanEntry& e : entries) {
            out << "graph " << e.key << " n=" << e.n << " m=" << e.m << " chi=";
            if (e.chi < 0)
                out << "?";
            else
                out << e.chi;
            out << " status=" << to_string(e.status) << " nodes=" << e.nodes << "\n";
            if (e.status == SearchStatus::found) ++found;
        }
        out << "scan: " << entries.size() << " graphs, " << found << " found";
        if (counterexample >= 0)
            out << ", COUNTEREXAMPLE at entry " << counterexample << " ("
                << entries[counterexample].key << ")";
        else if (budget_hit)
            out << ", budget exhausted on some entries";
        else
            out << ", no counterexample";
        out << "\n";
        return out.str();
    }
};

// Runs find_immersion at t = chi(G) over each graph. Work is farmed out
// in fixed blocks and the ledger is truncated right after the first
// exhausted-no in input order, so the outcome does not depend on the
// worker count.
inline ScanLedger scan_conjecture(const std::vector<Multigraph>& graphs, OracleFlags flags,
                                  const SearchBudget& budget, const SolverBudget& coloring_budget,
                                  int workers = 1) {
    if (workers < 1) workers = 1;
    ScanLedger ledger;
    std::vector<ScanEntry> results(graphs.size());

    auto work = [&](size_t idx) {
        const Multigraph& g = graphs[idx];
        ScanEntry e;
        e.key = canonical_graph6(g);
        e.n = g.n;
        e.m = g.m();
        try {
            auto [chi, witness] = chromatic_number(g, coloring_budget);
            e.chi = chi;
            SearchResult r = find_immersion(g, chi, flags, budget);
            e.status = r.status;
            e.nodes = r.nodes;
        } catch (const budget_error&) {
            e.chi = -1;
            e.status = SearchStatus::budget_out;
        }
        results[idx] = std::move(e);
    };

    for (size_t block = 0; block < graphs.size(); block += workers) {
        size_t end = std::min(graphs.size(), block + workers);
        if (workers == 1) {
            work(block);
        } else {
            std::vector<std::thread> pool;
            for (size_t i = block; i < end; ++i) pool.emplace_back(work, i);
            for (auto& th : pool) th.join();
        }
        for (size_t i = block; i < end; ++i) {
            ledger.entries.push_back(results[i]);
            if (results[i].status == SearchStatus::budget_out) ledger.budget_hit = true;
            if (results[i].status == SearchStatus::exhausted_no) {
                ledger.counterexample = static_cast<int>(ledger.entries.size()) - 1;
                return ledger;
            }
        }
    }
    return ledger;
}

}  // namespace oddimm
