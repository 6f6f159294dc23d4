#pragma once

#include "multigraph.hpp"

namespace oddimm {

// B_m(G): vertex x becomes copies m*x+0 .. m*x+m-1, edge (u,v) becomes the
// m*m edges between the copy groups. Edge ids: host edge e, copy pair
// (i,j) lands at id m*m*e + m*i + j.
struct BlowupMap {
    Multigraph graph;
    int m = 1;
    int host_n = 0;

    int copy(int x, int k) const { return m * x + k; }
    int host_vertex(int blown) const { return blown / m; }
    int copy_index(int blown) const { return blown % m; }
};

inline BlowupMap blow_up(const Multigraph& g, int m) {
    if (m < 1) throw invariant_error("blow_up: multiplicity must be positive");
    if (!g.is_simple()) throw precondition_error("blow_up: input must be simple");
    BlowupMap b;
    b.m = m;
    b.host_n = g.n;
    b.graph = Multigraph(m * g.n);
    for (const Edge& e : g.edges)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b.graph.add_edge(m * e.u + i, m * e.v + j);
    return b;
}

// mH: each edge of H becomes m parallel copies. Copy k of edge e has id
// m*e + k, so edge ids of H embed as e -> m*e.
inline Multigraph multiply_edges(const Multigraph& h, int m) {
    if (m < 1) throw invariant_error("multiply_edges: multiplicity must be positive");
    Multigraph out(h.n);
    for (const Edge& e : h.edges)
        for (int k = 0; k < m; ++k) out.add_edge(e.u, e.v);
    return out;
}

}  // namespace oddimm
