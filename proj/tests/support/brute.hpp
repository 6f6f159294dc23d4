#pragma once

// Small exhaustive reference implementations used only by the tests.
// Everything here is written from the problem statement, not from the
// library code, so a shared bug would have to be invented twice.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oddimm/certificate.hpp"
#include "oddimm/multigraph.hpp"

namespace brute {

inline bool color_edges(const oddimm::Multigraph& g, int k) {
    int m = g.m();
    std::vector<int> color(m, -1);
    auto clash = [&](int e, int c) {
        for (int f = 0; f < e; ++f)
            if (color[f] == c &&
                (g.edges[f].meets(g.edges[e].u) || g.edges[f].meets(g.edges[e].v)))
                return true;
        return false;
    };
    auto rec = [&](auto&& self, int e) -> bool {
        if (e == m) return true;
        // Colors beyond the first untouched one are interchangeable.
        int used = 0;
        for (int f = 0; f < e; ++f) used = std::max(used, color[f] + 1);
        for (int c = 0; c <= used && c < k; ++c) {
            if (clash(e, c)) continue;
            color[e] = c;
            if (self(self, e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_index(const oddimm::Multigraph& g) {
    if (g.m() == 0) return 0;
    for (int k = g.max_degree();; ++k)
        if (color_edges(g, k)) return k;
}

inline bool color_vertices(const oddimm::Multigraph& g, int k) {
    std::vector<int> color(g.n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n) return true;
        int used = 0;
        for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
        for (int c = 0; c <= used && c < k; ++c) {
            bool bad = false;
            for (const oddimm::Edge& e : g.edges)
                if (e.meets(v) && e.other(v) < v && color[e.other(v)] == c) bad = true;
            if (bad) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int chromatic_number(const oddimm::Multigraph& g) {
    if (g.n == 0) return 0;
    for (int k = 1;; ++k)
        if (color_vertices(g, k)) return k;
}

// Menger duality: the maximum number of pairwise edge-disjoint x-y paths
// equals the smallest edge set whose removal separates x from y. Checking
// every edge subset is independent of any augmenting-path machinery.
inline int min_edge_cut(const oddimm::Multigraph& g, int x, int y) {
    int m = g.m();
    auto separated = [&](unsigned removed) {
        std::vector<char> seen(g.n, 0);
        std::vector<int> stack{x};
        seen[x] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                if (removed >> e & 1) continue;
                if (!g.edges[e].meets(v)) continue;
                int u = g.edges[e].other(v);
                if (!seen[u]) { seen[u] = 1; stack.push_back(u); }
            }
        }
        return !seen[y];
    };
    int best = m;
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (separated(mask)) best = std::min(best, __builtin_popcount(mask));
    return best;
}

// Independent certificate check. Returns "" when the certificate is a
// valid strong/odd (as requested) K_t immersion, otherwise the first
// complaint found. Edge use is tracked by consuming multiplicities.
inline std::string check_certificate(const oddimm::Multigraph& g,
                                     const oddimm::ImmersionCertificate& cert,
                                     bool need_strong, bool need_odd) {
    auto in_range = [&](int v) { return v >= 0 && v < g.n; };
    if (static_cast<int>(cert.terminals.size()) != cert.t) return "terminal count";
    for (int v : cert.terminals)
        if (!in_range(v)) return "terminal out of range";
    std::set<int> tset(cert.terminals.begin(), cert.terminals.end());
    if (static_cast<int>(tset.size()) != cert.t) return "terminal repeated";

    long long want = static_cast<long long>(cert.t) * (cert.t - 1) / 2;
    if (static_cast<long long>(cert.paths.size()) != want) return "path count";

    std::map<std::pair<int, int>, int> avail;
    for (const oddimm::Edge& e : g.edges) ++avail[std::minmax(e.u, e.v)];

    std::set<std::pair<int, int>> covered;
    for (const oddimm::PairPath& p : cert.paths) {
        if (!tset.count(p.a) || !tset.count(p.b) || p.a == p.b) return "pair not terminals";
        if (!covered.insert(std::minmax(p.a, p.b)).second) return "pair repeated";
        if (p.vertices.size() < 2) return "path too short";
        if (p.vertices.front() != p.a || p.vertices.back() != p.b) return "endpoints";
        std::set<int> once;
        for (int v : p.vertices) {
            if (!in_range(v)) return "vertex out of range";
            if (!once.insert(v).second) return "vertex repeated on path";
        }
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            auto key = std::minmax(p.vertices[i], p.vertices[i + 1]);
            auto it = avail.find(key);
            if (it == avail.end() || it->second == 0) return "edge missing or reused";
            --it->second;
        }
        if (need_odd && p.vertices.size() % 2 != 0) return "even path";
        if (need_strong)
            for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
                if (tset.count(p.vertices[i])) return "terminal interior";
    }
    return "";
}

}  // namespace brute
