#pragma once

#include "coloring.hpp"
#include "multigraph.hpp"

namespace oddimm {

// A walk with explicit edge ids; in a multigraph the vertex sequence alone
// does not pin down which parallel edge was used.
struct Walk {
    std::vector<int> vertices;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
};

inline bool walk_is_valid(const Multigraph& g, const Walk& w) {
    if (w.vertices.empty() || w.vertices.size() != w.edges.size() + 1) return false;
    std::vector<char> used(g.m(), 0);
    for (size_t i = 0; i < w.edges.size(); ++i) {
        int e = w.edges[i];
        if (e < 0 || e >= g.m() || used[e]) return false;
        used[e] = 1;
        int a = w.vertices[i], b = w.vertices[i + 1];
        if (!(g.edges[e].meets(a) && g.edges[e].meets(b) && a != b)) return false;
    }
    for (int v : w.vertices)
        if (v < 0 || v >= g.n) return false;
    return true;
}

inline bool path_is_simple(const Walk& w) {
    std::vector<int> vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline bool edge_disjoint(const std::vector<Walk>& walks) {
    std::vector<int> all;
    for (const Walk& w : walks) all.insert(all.end(), w.edges.begin(), w.edges.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

struct FlowResult {
    int count = 0;
    std::vector<Walk> trails;  // edge-disjoint x->y trails realizing the flow
};

// Maximum number of pairwise edge-disjoint x->y trails: unit-capacity max
// flow with BFS augmentation over per-edge direction state. Incidence is
// scanned in edge-id order throughout, so the outcome is reproducible.
inline FlowResult max_edge_disjoint_paths(const Multigraph& g, int x, int y) {
    if (x < 0 || y < 0 || x >= g.n || y >= g.n || x == y)
        throw invariant_error("max_edge_disjoint_paths: bad terminal pair");
    auto inc = incidence_lists(g);
    std::vector<int> dir(g.m(), 0);  // 0 unused, +1 along (u,v), -1 against

    auto arc_open = [&](int e, int from) {
        bool forward = g.edges[e].u == from;
        return dir[e] == 0 || dir[e] == (forward ? -1 : 1);
    };

    int count = 0;
    for (;;) {
        std::vector<int> via_edge(g.n, -1), via_from(g.n, -1);
        std::vector<char> seen(g.n, 0);
        std::queue<int> q;
        seen[x] = 1;
        q.push(x);
        while (!q.empty() && !seen[y]) {
            int v = q.front();
            q.pop();
            for (const IncidentEdge& ie : inc[v]) {
                if (seen[ie.to] || !arc_open(ie.edge, v)) continue;
                seen[ie.to] = 1;
                via_edge[ie.to] = ie.edge;
                via_from[ie.to] = v;
                q.push(ie.to);
            }
        }
        if (!seen[y]) break;
        for (int v = y; v != x; v = via_from[v]) {
            int e = via_edge[v], from = via_from[v];
            if (dir[e] == 0)
                dir[e] = g.edges[e].u == from ? 1 : -1;
            else
                dir[e] = 0;  // cancels the opposing unit
        }
        ++count;
    }

    // Deterministic trail extraction: out-arcs per vertex in edge-id order,
    // each walk runs until its first arrival at y. Leftover circulation (a
    // possible artifact of cancellation) carries no x->y value and is
    // dropped.
    std::vector<std::vector<IncidentEdge>> out(g.n);
    for (int e = 0; e < g.m(); ++e) {
        if (dir[e] == 0) continue;
        int tail = dir[e] > 0 ? g.edges[e].u : g.edges[e].v;
        out[tail].push_back({e, g.edges[e].other(tail)});
    }
    std::vector<size_t> next(g.n, 0);
    FlowResult res;
    res.count = count;
    for (int t = 0; t < count; ++t) {
        Walk w;
        w.vertices.push_back(x);
        int cur = x;
        while (cur != y) {
            if (next[cur] >= out[cur].size())
                throw invariant_error("flow decomposition stalled off the sink");
            const IncidentEdge& a = out[cur][next[cur]++];
            w.edges.push_back(a.edge);
            w.vertices.push_back(a.to);
            cur = a.to;
        }
        res.trails.push_back(std::move(w));
    }
    return res;
}

// Cuts the detour between the two visits at the first repeated vertex,
// repeatedly, leaving a simple path on a subset of the trail's edges.
inline Walk shortcut_to_simple(const Walk& trail) {
    Walk w = trail;
    for (;;) {
        size_t cut_i = 0, cut_j = 0;
        bool found = false;
        for (size_t j = 1; j < w.vertices.size() && !found; ++j)
            for (size_t i = 0; i < j; ++i)
                if (w.vertices[i] == w.vertices[j]) {
                    cut_i = i;
                    cut_j = j;
                    found = true;
                    break;
                }
        if (!found) return w;
        w.vertices.erase(w.vertices.begin() + cut_i + 1, w.vertices.begin() + cut_j + 1);
        w.edges.erase(w.edges.begin() + cut_i, w.edges.begin() + cut_j);
    }
}

// d pairwise edge-disjoint simple x-y paths in a Delta=d host; the pair is
// the first one (lexicographically) carrying flow at least d.
struct PathSystem {
    int x = 0;
    int y = 0;
    int d = 0;
    std::vector<Walk> paths;
};

inline bool validate_path_system(const Multigraph& g, const PathSystem& sys) {
    if (static_cast<int>(sys.paths.size()) != sys.d) return false;
    for (const Walk& p : sys.paths) {
        if (!walk_is_valid(g, p) || !path_is_simple(p)) return false;
        if (p.front() != sys.x || p.back() != sys.y) return false;
    }
    return edge_disjoint(sys.paths);
}

inline PathSystem thomassen_system(const Multigraph& h, int d, const SolverBudget& budget = {},
                                   bool recheck_class = true) {
    if (!h.is_simple()) throw precondition_error("thomassen_system: input must be simple");
    if (h.max_degree() != d)
        throw precondition_error("thomassen_system: maximum degree is " +
                                 std::to_string(h.max_degree()) + ", not " + std::to_string(d));
    if (recheck_class) {
        auto [chi, witness] = chromatic_index(h, budget);
        if (chi != d + 1)
            throw precondition_error(
                "thomassen_system: input is class 1 (chromatic index equals maximum degree)");
    }
    auto deg = h.degrees();
    for (int x = 0; x < h.n; ++x) {
        if (deg[x] < d) continue;
        for (int y = x + 1; y < h.n; ++y) {
            if (deg[y] < d) continue;
            FlowResult flow = max_edge_disjoint_paths(h, x, y);
            if (flow.count < d) continue;
            PathSystem sys;
            sys.x = x;
            sys.y = y;
            sys.d = d;
            for (int i = 0; i < d; ++i) sys.paths.push_back(shortcut_to_simple(flow.trails[i]));
            if (!validate_path_system(h, sys))
                throw invariant_error("thomassen_system: extracted paths failed validation");
            return sys;
        }
    }
    throw precondition_error("thomassen_system: no system found (no vertex pair carries " +
                             std::to_string(d) + " edge-disjoint paths)");
}

}  // namespace oddimm
