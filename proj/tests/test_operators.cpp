#include <catch2/catch_amalgamated.hpp>

#include "oddimm/blowup.hpp"
#include "oddimm/generators.hpp"
#include "oddimm/line_graph.hpp"

using namespace oddimm;

namespace {

Multigraph paw_graph() {
    Multigraph g(4);  // triangle with a pendant
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    return g;
}

}  // namespace

TEST_CASE("line graph of a cycle is the cycle itself") {
    for (int k : {3, 5, 8}) {
        auto lg = line_graph(cycle_graph(k));
        CHECK(lg.graph.n == k);
        CHECK(lg.graph.m() == k);
        CHECK(lg.graph.max_degree() == 2);
        CHECK(is_connected(lg.graph));
    }
}

TEST_CASE("line graph of a star is a complete graph") {
    auto lg = line_graph(star_graph(4));
    CHECK(same_graph(lg.graph, complete_graph(4)));
}

TEST_CASE("line graph vertex ids equal host edge ids") {
    auto lg = line_graph(petersen_graph());
    for (int e = 0; e < 15; ++e) {
        CHECK(lg.edge_to_vertex[e] == e);
        CHECK(lg.vertex_to_edge[e] == e);
    }
}

TEST_CASE("line graph degree identity") {
    // deg_L(e) = deg(u) + deg(v) - mult(u,v) - 1 for e = uv, also with
    // parallel edges present.
    std::vector<Multigraph> hosts{petersen_graph(), complete_bipartite(2, 3), paw_graph(),
                                  multiply_edges(cycle_graph(4), 2)};
    for (uint64_t seed = 1; seed <= 5; ++seed) hosts.push_back(random_graph(7, 0.5, seed));
    for (const auto& h : hosts) {
        auto deg_h = h.degrees();
        auto deg_l = line_graph(h).graph.degrees();
        for (int e = 0; e < h.m(); ++e) {
            const Edge& uv = h.edges[e];
            CHECK(deg_l[e] == deg_h[uv.u] + deg_h[uv.v] - h.multiplicity(uv.u, uv.v) - 1);
        }
    }
}

TEST_CASE("line graph of parallel edges stays simple") {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    auto lg = line_graph(g);
    CHECK(same_graph(lg.graph, complete_graph(3)));
    CHECK(lg.graph.is_simple());
}

TEST_CASE("blow up of an edge is a complete bipartite graph") {
    auto b = blow_up(complete_graph(2), 2);
    CHECK(same_graph(b.graph, complete_bipartite(2, 2)));
    auto b3 = blow_up(complete_graph(2), 3);
    CHECK(same_graph(b3.graph, complete_bipartite(3, 3)));
}

TEST_CASE("blow up with m = 1 is the identity") {
    auto g = petersen_graph();
    CHECK(same_graph(blow_up(g, 1).graph, g));
}

TEST_CASE("blow up sizes and id scheme") {
    auto b = blow_up(cycle_graph(5), 3);
    CHECK(b.graph.n == 15);
    CHECK(b.graph.m() == 45);
    CHECK(b.copy(4, 2) == 14);
    CHECK(b.host_vertex(14) == 4);
    CHECK(b.copy_index(14) == 2);
    // Host edge e, copy pair (i,j) sits at id 9e + 3i + j and joins the
    // matching copy groups.
    const Multigraph host = cycle_graph(5);
    for (int e = 0; e < host.m(); ++e)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const Edge& blown = b.graph.edges[9 * e + 3 * i + j];
                CHECK(blown.u == b.copy(host.edges[e].u, i));
                CHECK(blown.v == b.copy(host.edges[e].v, j));
            }
}

TEST_CASE("blow up rejects bad input") {
    CHECK_THROWS_AS(blow_up(cycle_graph(3), 0), invariant_error);
    CHECK_THROWS_AS(blow_up(multiply_edges(cycle_graph(3), 2), 2), precondition_error);
}

TEST_CASE("multiply_edges id scheme and counts") {
    auto h = paw_graph();
    auto mh = multiply_edges(h, 3);
    CHECK(mh.n == h.n);
    CHECK(mh.m() == 3 * h.m());
    for (int e = 0; e < h.m(); ++e)
        for (int k = 0; k < 3; ++k) CHECK(mh.edges[3 * e + k].same_pair(h.edges[e]));
    CHECK_THROWS_AS(multiply_edges(h, 0), invariant_error);
}

TEST_CASE("line graph of mH decomposes into a blown-up L(H) plus copy cliques") {
    // L(mH) contains B_m(L(H)) (adjacency across different host edges) and,
    // on top, one K_m inside each host edge's copy class. The id schemes
    // line up: copy k of host edge e is vertex m*e+k on both sides.
    std::vector<Multigraph> hosts{cycle_graph(5), path_graph(4), complete_graph(4), paw_graph()};
    for (const auto& h : hosts)
        for (int m = 1; m <= 3; ++m) {
            auto left = line_graph(multiply_edges(h, m)).graph;
            auto right = blow_up(line_graph(h).graph, m).graph;
            for (int e = 0; e < h.m(); ++e)
                for (int i = 0; i < m; ++i)
                    for (int j = i + 1; j < m; ++j) right.add_edge(m * e + i, m * e + j);
            CHECK(same_graph(left, right));
        }
}
