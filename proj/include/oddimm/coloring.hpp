#pragma once

#include <bit>
#include <optional>

#include "line_graph.hpp"
#include "multigraph.hpp"

namespace oddimm {

// Node cap shared by every exact search a single operation performs.
// Exceeding it raises budget_error; results are never silently truncated.
struct SolverBudget {
    long long max_nodes = 10'000'000;
};

struct VertexColoring {
    std::vector<int> color;  // one entry per vertex
    int palette = 0;         // colors used are 0..palette-1
};

struct EdgeColoring {
    std::vector<int> color;  // one entry per edge id
    int palette = 0;
};

inline bool is_proper_vertex_coloring(const Multigraph& g, const VertexColoring& c) {
    if (static_cast<int>(c.color.size()) != g.n) return false;
    for (int v = 0; v < g.n; ++v)
        if (c.color[v] < 0 || c.color[v] >= c.palette) return false;
    for (const Edge& e : g.edges)
        if (c.color[e.u] == c.color[e.v]) return false;
    return true;
}

inline bool is_proper_edge_coloring(const Multigraph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.color.size()) != g.m()) return false;
    for (int e = 0; e < g.m(); ++e)
        if (c.color[e] < 0 || c.color[e] >= c.palette) return false;
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            if (c.color[e] == c.color[f] &&
                (g.edges[e].meets(g.edges[f].u) || g.edges[e].meets(g.edges[f].v)))
                return false;
    return true;
}

// 1-based ids and colors, matching the 1-based graph text format.
inline std::string serialize_coloring(const std::vector<int>& color) {
    std::string out;
    for (size_t i = 0; i < color.size(); ++i)
        out += "color " + std::to_string(i + 1) + " " + std::to_string(color[i] + 1) + "\n";
    return out;
}

namespace detail {

struct ColorSearch {
    int n, k;
    std::vector<std::vector<int>> nbr;
    std::vector<int> deg;
    std::vector<int> color;               // -1 = uncolored
    std::vector<std::vector<int>> seen;   // seen[v][c] = colored neighbors of v with color c
    std::vector<int> sat;                 // distinct colors among colored neighbors
    long long* nodes;
    long long max_nodes;

    ColorSearch(const Multigraph& g, int k, long long* nodes, long long max_nodes)
        : n(g.n), k(k), nbr(g.n), deg(g.degrees()), color(g.n, -1),
          seen(g.n, std::vector<int>(std::max(k, 1), 0)), sat(g.n, 0), nodes(nodes),
          max_nodes(max_nodes) {
        for (const Edge& e : g.edges) {
            nbr[e.u].push_back(e.v);
            nbr[e.v].push_back(e.u);
        }
    }

    int pick() const {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[best] || (sat[v] == sat[best] && deg[v] > deg[best]))
                best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color[v] = c;
        for (int u : nbr[v])
            if (seen[u][c]++ == 0) ++sat[u];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        for (int u : nbr[v])
            if (--seen[u][c] == 0) --sat[u];
    }

    // used = number of colors appearing so far; trying at most one fresh
    // color kills the color-permutation symmetry.
    bool solve(int colored, int used) {
        if (colored == n) return true;
        int v = pick();
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (seen[v][c] > 0) continue;
            if (++*nodes > max_nodes)
                throw budget_error("coloring search exceeded " + std::to_string(max_nodes) +
                                   " nodes");
            assign(v, c);
            if (solve(colored + 1, std::max(used, c + 1))) return true;
            unassign(v, c);
        }
        return false;
    }
};

struct mis_out_of_nodes {};

// Exact maximum independent set on <= 64 vertices, plain two-way branching
// on a max-degree vertex with greedy pickup of degree <= 1 vertices.
struct MisSearch {
    int n;
    std::vector<uint64_t> row;
    long long* nodes;
    long long max_nodes;

    int run(uint64_t avail) {
        if (++*nodes > max_nodes) throw mis_out_of_nodes{};
        if (!avail) return 0;
        int pick = -1, pick_deg = -1;
        for (uint64_t rest = avail; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(row[v] & avail);
            if (d <= 1) {
                uint64_t drop = (row[v] & avail) | (uint64_t(1) << v);
                return 1 + run(avail & ~drop);
            }
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        uint64_t bit = uint64_t(1) << pick;
        int with = 1 + run(avail & ~(row[pick] | bit));
        int without = run(avail & ~bit);
        return std::max(with, without);
    }
};

inline int greedy_clique_bound(const Multigraph& g) {
    auto rows = adjacency_bits(g);
    auto deg = g.degrees();
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });
    int best = 0;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int v : order) {
            if (v == seed) continue;
            bool ok = true;
            for (int u : clique)
                if (!(rows[v][u / 64] >> (u % 64) & 1)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

inline std::pair<int, std::vector<int>> dsatur_greedy(const Multigraph& g) {
    ColorSearch s(g, std::max(g.n, 1), nullptr, 0);
    int used = 0;
    for (int step = 0; step < g.n; ++step) {
        int v = s.pick();
        int c = 0;
        while (s.seen[v][c] > 0) ++c;
        s.assign(v, c);
        used = std::max(used, c + 1);
    }
    return {used, s.color};
}

}  // namespace detail

// One-pass DSATUR upper bound, the fallback evidence when an exact
// chromatic number blows its budget.
inline int greedy_coloring_bound(const Multigraph& g) {
    if (!g.is_simple()) throw precondition_error("greedy_coloring_bound: input must be simple");
    return detail::dsatur_greedy(g).first;
}

// Exact k-colorability test (DSATUR order, fresh-color symmetry breaking).
// Returns a proper coloring or nullopt for a proven non-coloring; only a
// blown budget throws.
inline std::optional<std::vector<int>> k_colorable(const Multigraph& g, int k,
                                                   const SolverBudget& budget,
                                                   long long& nodes_used) {
    if (k < 0) throw invariant_error("k_colorable: negative k");
    if (!g.is_simple()) throw precondition_error("k_colorable: input must be simple");
    if (g.n == 0) return std::vector<int>{};
    if (k == 0) return std::nullopt;
    if (k >= g.n) {
        std::vector<int> ident(g.n);
        for (int v = 0; v < g.n; ++v) ident[v] = v;
        return ident;
    }
    detail::ColorSearch s(g, k, &nodes_used, budget.max_nodes);
    if (s.solve(0, 0)) return s.color;
    return std::nullopt;
}

inline std::optional<std::vector<int>> k_colorable(const Multigraph& g, int k,
                                                   const SolverBudget& budget = {}) {
    long long nodes = 0;
    return k_colorable(g, k, budget, nodes);
}

// Exact chromatic number with a coloring witness. Lower bounds: greedy
// clique, and ceil(n / alpha) with alpha computed exactly when the graph
// fits in one machine word (that bound is what makes overfull line graphs
// close instantly).
inline std::pair<int, VertexColoring> chromatic_number(const Multigraph& g,
                                                       const SolverBudget& budget = {}) {
    if (!g.is_simple()) throw precondition_error("chromatic_number: input must be simple");
    if (g.n == 0) return {0, {}};
    long long nodes = 0;

    int lb = std::max(1, detail::greedy_clique_bound(g));
    if (g.n <= 64) {
        auto rows = adjacency_bits(g);
        detail::MisSearch mis;
        mis.n = g.n;
        mis.row.resize(g.n);
        for (int v = 0; v < g.n; ++v) mis.row[v] = rows[v][0];
        mis.nodes = &nodes;
        mis.max_nodes = budget.max_nodes;
        try {
            uint64_t all = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
            int alpha = mis.run(all);
            lb = std::max(lb, (g.n + alpha - 1) / alpha);
        } catch (const detail::mis_out_of_nodes&) {
            // keep the clique bound; the downward search still decides exactly
        }
    }

    auto [best, witness] = detail::dsatur_greedy(g);

    for (int k = best - 1; k >= lb; --k) {
        auto got = k_colorable(g, k, budget, nodes);
        if (!got) break;
        witness = *got;
        best = k;
    }
    return {best, VertexColoring{witness, best}};
}

// Chromatic index via L(H). Simple hosts only need the single test at
// Delta; multigraph hosts run the full downward search on L(H).
inline std::pair<int, EdgeColoring> chromatic_index(const Multigraph& h,
                                                    const SolverBudget& budget = {}) {
    if (h.m() == 0) return {0, {}};
    Multigraph l = line_graph(h).graph;
    if (h.is_simple()) {
        int delta = h.max_degree();
        long long nodes = 0;
        if (auto got = k_colorable(l, delta, budget, nodes))
            return {delta, EdgeColoring{*got, delta}};
        auto over = k_colorable(l, delta + 1, budget, nodes);
        if (!over) throw invariant_error("simple host not (Delta+1)-edge-colorable");
        return {delta + 1, EdgeColoring{*over, delta + 1}};
    }
    auto [chi, witness] = chromatic_number(l, budget);
    return {chi, EdgeColoring{witness.color, chi}};
}

struct CriticalReduction {
    Multigraph graph;
    std::vector<int> edge_to_host;    // result edge id -> host edge id
    std::vector<int> vertex_to_host;  // result vertex id -> host vertex id
};

// Greedy descent to an edge-critical subgraph with the same chromatic
// index. One ascending pass over edge ids suffices: removal candidates
// only shrink, so an edge once kept stays necessary. Isolated vertices
// are dropped from the result.
inline CriticalReduction critical_subgraph(const Multigraph& h, const SolverBudget& budget = {}) {
    if (!h.is_simple()) throw precondition_error("critical_subgraph: input must be simple");
    int delta = h.max_degree();
    auto [chi, witness] = chromatic_index(h, budget);
    if (chi != delta + 1)
        throw precondition_error("critical_subgraph: input is class 1 (chromatic index " +
                                 std::to_string(chi) + " equals maximum degree)");

    std::vector<char> kept(h.m(), 1);
    for (int e = 0; e < h.m(); ++e) {
        Multigraph cand(h.n);
        for (int f = 0; f < h.m(); ++f)
            if (kept[f] && f != e) cand.add_edge(h.edges[f].u, h.edges[f].v);
        // Removal keeps the class-2 value iff L(candidate) has no
        // (chi-1)-coloring; subgraph monotonicity rules out anything above.
        long long nodes = 0;
        Multigraph l = line_graph(cand).graph;
        if (!k_colorable(l, chi - 1, budget, nodes)) kept[e] = 0;
    }

    Multigraph pruned(h.n);
    CriticalReduction out;
    for (int e = 0; e < h.m(); ++e)
        if (kept[e]) {
            pruned.add_edge(h.edges[e].u, h.edges[e].v);
            out.edge_to_host.push_back(e);
        }

    auto deg = pruned.degrees();
    std::vector<int> dense(h.n, -1);
    for (int v = 0; v < h.n; ++v)
        if (deg[v] > 0) {
            dense[v] = static_cast<int>(out.vertex_to_host.size());
            out.vertex_to_host.push_back(v);
        }
    out.graph = Multigraph(static_cast<int>(out.vertex_to_host.size()));
    for (const Edge& e : pruned.edges) out.graph.add_edge(dense[e.u], dense[e.v]);

    if (out.graph.max_degree() != delta)
        throw invariant_error("critical reduction changed the maximum degree");
    return out;
}

struct DegreeAuditEntry {
    int vertex = 0;
    int heavy_neighbors = 0;  // neighbors of maximum degree
};

// Adjacency condition satisfied by every edge-critical graph: each vertex
// has at least two neighbors of degree Delta. Returns the offenders, so an
// empty list is the expected outcome on critical inputs.
inline std::vector<DegreeAuditEntry> vizing_adjacency_audit(const Multigraph& h) {
    if (!h.is_simple()) throw precondition_error("vizing_adjacency_audit: input must be simple");
    auto deg = h.degrees();
    int delta = h.max_degree();
    auto rows = adjacency_bits(h);
    std::vector<DegreeAuditEntry> out;
    for (int v = 0; v < h.n; ++v) {
        int heavy = 0;
        for (int u = 0; u < h.n; ++u)
            if (u != v && (rows[v][u / 64] >> (u % 64) & 1) && deg[u] == delta) ++heavy;
        if (heavy < 2) out.push_back({v, heavy});
    }
    return out;
}

}  // namespace oddimm
