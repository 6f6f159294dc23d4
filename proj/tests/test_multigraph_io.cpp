#include <catch2/catch_amalgamated.hpp>

#include "oddimm/generators.hpp"
#include "oddimm/io.hpp"
#include "oddimm/multigraph.hpp"

using namespace oddimm;

TEST_CASE("multigraph stores parallel edges and reports degrees") {
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(1, 2);
    CHECK(g.m() == 3);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 2) == 1);
    CHECK(g.multiplicity(0, 2) == 0);
    CHECK(g.degrees() == std::vector<int>{2, 3, 1, 0});
    CHECK(g.max_degree() == 3);
    CHECK_FALSE(g.is_simple());
    CHECK(cycle_graph(5).is_simple());
}

TEST_CASE("multigraph rejects loops and bad endpoints") {
    Multigraph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), invariant_error);
    CHECK_THROWS_AS(g.add_edge(0, 3), invariant_error);
    CHECK_THROWS_AS(g.add_edge(-1, 0), invariant_error);
    CHECK_THROWS_AS(Multigraph(-2), invariant_error);
}

TEST_CASE("same_graph ignores edge order and endpoint order") {
    Multigraph a(3), b(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(2, 1);
    b.add_edge(1, 0);
    CHECK(same_graph(a, b));
    b.add_edge(1, 0);
    CHECK_FALSE(same_graph(a, b));  // multiplicity differs
    CHECK_FALSE(same_graph(a, Multigraph(4)));
}

TEST_CASE("incidence lists are ordered by edge id") {
    Multigraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 1);
    auto inc = incidence_lists(g);
    REQUIRE(inc[0].size() == 3);
    CHECK(inc[0][0].edge == 0);
    CHECK(inc[0][1].edge == 1);
    CHECK(inc[0][2].edge == 2);
    CHECK(inc[0][1].to == 2);
    CHECK(inc[1].size() == 2);
}

TEST_CASE("component ids and connectivity") {
    auto g = disjoint_union(cycle_graph(3), path_graph(2));
    auto ids = component_ids(g);
    CHECK(ids[0] == ids[1]);
    CHECK(ids[1] == ids[2]);
    CHECK(ids[3] == ids[4]);
    CHECK(ids[0] != ids[3]);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(petersen_graph()));
    CHECK(is_connected(Multigraph(1)));
}

TEST_CASE("parse accepts comments, blanks and multiplicity expansion") {
    auto g = parse_graph(
        "c a triangle with one doubled side\n"
        "\n"
        "p mg 3 3\n"
        "e 1 2 2\n"
        "c interior comment\n"
        "e 2 3 1\n"
        "e 3 1 1\n");
    CHECK(g.n == 3);
    CHECK(g.m() == 4);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 2) == 1);
}

TEST_CASE("serialize emits the normal form and round-trips") {
    Multigraph g(4);
    g.add_edge(2, 0);
    g.add_edge(0, 2);
    g.add_edge(3, 1);
    CHECK(serialize_graph(g) ==
          "p mg 4 2\n"
          "e 1 3 2\n"
          "e 2 4 1\n");
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto r = random_graph(7, 0.5, seed);
        CHECK(same_graph(parse_graph(serialize_graph(r)), r));
    }
}

TEST_CASE("parse errors carry the kind and line number") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const parse_error& e) {
            return e.kind;
        }
        throw std::logic_error("expected parse_error");
    };
    CHECK(kind_of("") == parse_error::Kind::malformed_header);
    CHECK(kind_of("p gm 3 1\ne 1 2 1\n") == parse_error::Kind::malformed_header);
    CHECK(kind_of("p mg 3 1 junk\ne 1 2 1\n") == parse_error::Kind::malformed_header);
    CHECK(kind_of("p mg 3 1\nv 1 2 1\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 1\ne 1 2\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 1\ne 1 2 0\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 1\ne 1 2 1 junk\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 2\ne 1 2 1\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 1\ne 1 2 1\ne 2 3 1\n") == parse_error::Kind::malformed_edge);
    CHECK(kind_of("p mg 3 1\ne 1 4 1\n") == parse_error::Kind::vertex_out_of_range);
    CHECK(kind_of("p mg 3 1\ne 0 2 1\n") == parse_error::Kind::vertex_out_of_range);
    CHECK(kind_of("p mg 3 1\ne 2 2 1\n") == parse_error::Kind::loop_edge);

    try {
        parse_graph("c one\np mg 3 1\ne 1 4 1\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("header counts edge lines, not expanded edges") {
    // One line of multiplicity 3 satisfies a header announcing one line.
    auto g = parse_graph("p mg 2 1\ne 1 2 3\n");
    CHECK(g.m() == 3);
    CHECK_THROWS_AS(parse_graph("p mg 2 3\ne 1 2 3\n"), parse_error);
}

TEST_CASE("graph6 encodes known small graphs") {
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(Multigraph(0)) == "?");
    CHECK(same_graph(from_graph6("A_"), complete_graph(2)));
    CHECK(same_graph(from_graph6("Bg"), path_graph(3)));
}

TEST_CASE("graph6 round-trips simple graphs") {
    std::vector<Multigraph> gs{cycle_graph(7), petersen_graph(), complete_graph(5),
                               complete_bipartite(3, 4), Multigraph(3)};
    for (uint64_t seed = 1; seed <= 6; ++seed) gs.push_back(random_graph(9, 0.4, seed));
    for (const auto& g : gs) CHECK(same_graph(from_graph6(to_graph6(g)), g));
}

TEST_CASE("graph6 rejects multigraphs and truncated input") {
    Multigraph g(2);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(to_graph6(g), invariant_error);
    CHECK_THROWS_AS(from_graph6(""), parse_error);
    CHECK_THROWS_AS(from_graph6("D"), parse_error);  // size byte says 5, no bits follow
    CHECK_THROWS_AS(from_graph6(std::string(1, char(62))), parse_error);
}
