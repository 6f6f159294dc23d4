#pragma once

#include <numeric>
#include <random>

#include "multigraph.hpp"

namespace oddimm {

inline Multigraph path_graph(int k) {
    Multigraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Multigraph cycle_graph(int k) {
    if (k < 3) throw invariant_error("cycle needs at least 3 vertices");
    Multigraph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline Multigraph complete_graph(int k) {
    Multigraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

inline Multigraph complete_bipartite(int a, int b) {
    Multigraph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

// Star with the center as vertex 0.
inline Multigraph star_graph(int leaves) {
    Multigraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Multigraph petersen_graph() {
    Multigraph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);        // outer C_5
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);              // spokes
    return g;
}

inline Multigraph circulant_graph(int n, const std::vector<int>& offsets) {
    Multigraph g(n);
    for (int s : offsets) {
        if (s <= 0 || 2 * s > n) throw invariant_error("circulant offset out of range");
        int count = (2 * s == n) ? n / 2 : n;  // the antipodal offset closes early
        for (int i = 0; i < count; ++i) g.add_edge(i, (i + s) % n);
    }
    return g;
}

// Removes vertex v, renumbering vertices above it down by one.
inline Multigraph remove_vertex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.n) throw invariant_error("remove_vertex: no such vertex");
    Multigraph out(g.n - 1);
    auto map = [v](int x) { return x < v ? x : x - 1; };
    for (const Edge& e : g.edges)
        if (!e.meets(v)) out.add_edge(map(e.u), map(e.v));
    return out;
}

// Replaces edge id e by a path through `times` fresh internal vertices.
// The first segment reuses slot e in the edge order; the rest append.
inline Multigraph subdivide_edge(const Multigraph& g, int e, int times = 1) {
    if (e < 0 || e >= g.m()) throw invariant_error("subdivide_edge: no such edge");
    if (times < 1) throw invariant_error("subdivide_edge: need at least one new vertex");
    Multigraph out(g.n + times);
    for (int i = 0; i < g.m(); ++i) {
        if (i != e) {
            out.add_edge(g.edges[i].u, g.edges[i].v);
            continue;
        }
        int prev = g.edges[i].u;
        for (int k = 0; k < times; ++k) {
            out.add_edge(prev, g.n + k);
            prev = g.n + k;
        }
        out.add_edge(prev, g.edges[i].v);
    }
    return out;
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph out(a.n + b.n);
    for (const Edge& e : a.edges) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges) out.add_edge(e.u + a.n, e.v + a.n);
    return out;
}

// G(n,p) with a fixed generator so a seed pins the graph exactly.
inline Multigraph random_graph(int n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw invariant_error("random_graph: bad parameters");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Spider with t legs of two edges each, then extra subdivisions chosen so
// that every leaf-to-leaf path through the center has odd length. Strand
// (i,k) is the k-th of the t-1 legs reserved for leaf i's route toward
// leaf partner(i,k); the default adds one vertex on strand (i,j) exactly
// when i < j, which makes each leaf pair's two strands sum to odd.
struct FlowerGraph {
    Multigraph graph;
    int center = 0;
    std::vector<int> leaves;              // t leaf ids
    std::vector<std::vector<int>> strands;  // t*(t-1) strands as vertex paths center..leaf
};

inline int flower_partner(int i, int k) { return k < i ? k : k + 1; }

inline FlowerGraph flower_graph(int t, const std::vector<int>& strand_extra) {
    if (t < 1) throw invariant_error("flower needs at least one leaf");
    const int strands = t * (t - 1);
    if (static_cast<int>(strand_extra.size()) != strands)
        throw invariant_error("flower: need one extra-count per strand");
    FlowerGraph f;
    int total = 1 + t;
    for (int s = 0; s < strands; ++s) {
        if (strand_extra[s] < 0) throw invariant_error("flower: negative subdivision count");
        total += 1 + strand_extra[s];
    }
    f.graph = Multigraph(total);
    f.center = 0;
    for (int i = 0; i < t; ++i) f.leaves.push_back(1 + i);
    int next = 1 + t;
    for (int i = 0; i < t; ++i) {
        for (int k = 0; k < t - 1; ++k) {
            int s = i * (t - 1) + k;
            std::vector<int> strand{f.center};
            for (int x = 0; x < 1 + strand_extra[s]; ++x) strand.push_back(next++);
            strand.push_back(f.leaves[i]);
            for (size_t q = 0; q + 1 < strand.size(); ++q)
                f.graph.add_edge(strand[q], strand[q + 1]);
            f.strands.push_back(std::move(strand));
        }
    }
    return f;
}

inline FlowerGraph flower_graph(int t) {
    std::vector<int> extra(t * (t - 1), 0);
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < t - 1; ++k)
            if (i < flower_partner(i, k)) extra[i * (t - 1) + k] = 1;
    return flower_graph(t, extra);
}

inline FlowerGraph flower_graph_uniform(int t, int extra_per_strand) {
    auto f = flower_graph(t);  // start from the odd-parity default
    if (extra_per_strand == 0) return f;
    std::vector<int> extra(t * (t - 1), 0);
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < t - 1; ++k) {
            int s = i * (t - 1) + k;
            extra[s] = (i < flower_partner(i, k) ? 1 : 0) + extra_per_strand;
        }
    return flower_graph(t, extra);
}

}  // namespace oddimm
