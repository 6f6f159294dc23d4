#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddimm {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The exact solvers give up rather than run unbounded; see SolverBudget.
class budget_error : public error {
public:
    using error::error;
};

// An operation was called outside its stated contract (e.g. class-1 input
// to the critical reduction).
class precondition_error : public error {
public:
    using error::error;
};

// An internal structural guarantee failed; the message names the case.
class invariant_error : public error {
public:
    using error::error;
};

struct Edge {
    int u = 0;
    int v = 0;

    bool meets(int x) const { return u == x || v == x; }
    int other(int x) const { return u == x ? v : u; }
    bool same_pair(const Edge& o) const {
        return (u == o.u && v == o.v) || (u == o.v && v == o.u);
    }
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }

// Loopless multigraph with dense vertex ids 0..n-1 and dense edge ids
// 0..m-1. Parallel edges are distinct entries with distinct ids.
struct Multigraph {
    int n = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    explicit Multigraph(int vertices) : n(vertices) {
        if (vertices < 0) throw invariant_error("negative vertex count");
    }

    int m() const { return static_cast<int>(edges.size()); }

    int add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invariant_error("edge endpoint out of range: " + std::to_string(u) + "," +
                                  std::to_string(v));
        if (u == v) throw invariant_error("loop edge rejected at vertex " + std::to_string(u));
        edges.push_back({u, v});
        return m() - 1;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (const Edge& e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        return deg;
    }

    int max_degree() const {
        int best = 0;
        for (int d : degrees()) best = std::max(best, d);
        return best;
    }

    int multiplicity(int u, int v) const {
        int c = 0;
        for (const Edge& e : edges)
            if (e.meets(u) && e.meets(v)) ++c;
        return c;
    }

    bool has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

    bool is_simple() const {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(edges.size());
        for (const Edge& e : edges) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(pairs.begin(), pairs.end());
        return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
    }
};

inline bool same_graph(const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    auto norm = [](const Multigraph& g) {
        std::vector<std::pair<int, int>> p;
        p.reserve(g.edges.size());
        for (const Edge& e : g.edges) p.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(p.begin(), p.end());
        return p;
    };
    return norm(a) == norm(b);
}

struct IncidentEdge {
    int edge = 0;  // edge id
    int to = 0;    // far endpoint
};

// Incidence lists sorted by edge id (the iteration order every search in
// this library relies on for determinism).
inline std::vector<std::vector<IncidentEdge>> incidence_lists(const Multigraph& g) {
    std::vector<std::vector<IncidentEdge>> inc(g.n);
    for (int e = 0; e < g.m(); ++e) {
        inc[g.edges[e].u].push_back({e, g.edges[e].v});
        inc[g.edges[e].v].push_back({e, g.edges[e].u});
    }
    return inc;
}

// Neighbor sets as multi-word bitrows; only meaningful for simple graphs.
inline std::vector<std::vector<uint64_t>> adjacency_bits(const Multigraph& g) {
    const int words = (g.n + 63) / 64;
    std::vector<std::vector<uint64_t>> rows(g.n, std::vector<uint64_t>(words, 0));
    for (const Edge& e : g.edges) {
        rows[e.u][e.v / 64] |= uint64_t(1) << (e.v % 64);
        rows[e.v][e.u / 64] |= uint64_t(1) << (e.u % 64);
    }
    return rows;
}

inline std::vector<int> component_ids(const Multigraph& g) {
    std::vector<int> comp(g.n, -1);
    auto inc = incidence_lists(g);
    int next = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const IncidentEdge& ie : inc[v])
                if (comp[ie.to] < 0) {
                    comp[ie.to] = next;
                    q.push(ie.to);
                }
        }
        ++next;
    }
    return comp;
}

inline bool is_connected(const Multigraph& g) {
    if (g.n <= 1) return true;
    auto comp = component_ids(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace oddimm
