#pragma once

#include "multigraph.hpp"

namespace oddimm {

// L(H): one vertex per edge of H (same id), one edge per unordered pair of
// distinct H-edges sharing an endpoint. Parallel H-edges share both
// endpoints but still yield a single L-edge. L(H) is always simple.
struct LineGraphMap {
    Multigraph graph;
    std::vector<int> edge_to_vertex;  // host edge id -> L vertex id (identity, kept explicit)
    std::vector<int> vertex_to_edge;
};

inline LineGraphMap line_graph(const Multigraph& h) {
    LineGraphMap lg;
    lg.graph = Multigraph(h.m());
    lg.edge_to_vertex.resize(h.m());
    lg.vertex_to_edge.resize(h.m());
    for (int e = 0; e < h.m(); ++e) lg.edge_to_vertex[e] = lg.vertex_to_edge[e] = e;
    for (int e = 0; e < h.m(); ++e)
        for (int f = e + 1; f < h.m(); ++f)
            if (h.edges[e].meets(h.edges[f].u) || h.edges[e].meets(h.edges[f].v))
                lg.graph.add_edge(e, f);
    return lg;
}

}  // namespace oddimm
