#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oddimm/blowup.hpp"
#include "oddimm/coloring.hpp"
#include "oddimm/generators.hpp"
#include "oddimm/oracle.hpp"
#include "support/brute.hpp"

using namespace oddimm;

TEST_CASE("oracle finds the complete graph in itself") {
    auto res = find_immersion(complete_graph(4), 4, OracleFlags{true, true});
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.cert.t == 4);
    CHECK(brute::check_certificate(res.cert.host, res.cert, true, true) == "");
}

TEST_CASE("oracle trivial orders and bad input") {
    auto res0 = find_immersion(cycle_graph(4), 0);
    CHECK(res0.status == SearchStatus::found);
    CHECK(res0.cert.paths.empty());
    auto res1 = find_immersion(cycle_graph(4), 1);
    CHECK(res1.status == SearchStatus::found);
    CHECK(res1.cert.terminals == std::vector<int>{0});
    CHECK(find_immersion(cycle_graph(4), 5).status == SearchStatus::exhausted_no);
    CHECK_THROWS_AS(find_immersion(cycle_graph(4), -1), precondition_error);
    CHECK_THROWS_AS(find_immersion(multiply_edges(cycle_graph(3), 2), 2), precondition_error);
}

TEST_CASE("a plain triangle fits in C_4 but no totally odd one does") {
    // 0-1, 1-2 and 2-3-0 form a K_3 immersion, so the plain search works;
    // the bipartite host kills every odd-parity attempt exhaustively.
    auto plain = find_immersion(cycle_graph(4), 3);
    CHECK(plain.status == SearchStatus::found);
    auto odd = find_immersion(cycle_graph(4), 3, OracleFlags{true, true});
    CHECK(odd.status == SearchStatus::exhausted_no);
    auto odd_only = find_immersion(cycle_graph(4), 3, OracleFlags{false, true});
    CHECK(odd_only.status == SearchStatus::exhausted_no);
}

TEST_CASE("odd cycles carry a strong totally odd triangle") {
    for (int k : {5, 7, 9}) {
        auto res = find_immersion(cycle_graph(k), 3, OracleFlags{true, true});
        REQUIRE(res.status == SearchStatus::found);
        CHECK(brute::check_certificate(res.cert.host, res.cert, true, true) == "");
    }
}

TEST_CASE("terminal-pinned search lets paths share interior vertices") {
    // Flower host: every leaf pair is joined only through the center, so
    // all three pair-paths of the K_3 must pass through it. Only edges
    // need to be private to a path; meeting at a vertex is legal.
    auto f = flower_graph(3);
    auto res = find_immersion_with_terminals(f.graph, f.leaves, OracleFlags{false, true});
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.cert.terminals == f.leaves);
    CHECK(brute::check_certificate(res.cert.host, res.cert, false, true) == "");
    int through_center = 0;
    for (const PairPath& p : res.cert.paths)
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i)
            if (p.vertices[i] == f.center) ++through_center;
    CHECK(through_center == 3);
}

TEST_CASE("uniformly padded flowers keep the parity") {
    for (int extra : {1, 2}) {
        auto f = flower_graph_uniform(3, extra);
        auto res = find_immersion_with_terminals(f.graph, f.leaves, OracleFlags{false, true});
        CHECK(res.status == SearchStatus::found);
    }
}

TEST_CASE("terminal-pinned search validates its input") {
    CHECK_THROWS_AS(find_immersion_with_terminals(cycle_graph(4), {0, 0}), precondition_error);
    CHECK_THROWS_AS(find_immersion_with_terminals(cycle_graph(4), {0, 4}), precondition_error);
    auto res = find_immersion_with_terminals(cycle_graph(4), {2});
    CHECK(res.status == SearchStatus::found);
    CHECK(res.cert.terminals == std::vector<int>{2});
}

TEST_CASE("search budget cuts off honestly") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    auto res = find_immersion(petersen_graph(), 4, OracleFlags{true, true}, tiny);
    CHECK(res.status == SearchStatus::budget_out);
}

TEST_CASE("oracle agrees with the constructed certificates' orders") {
    for (const auto& g : {cycle_graph(5), petersen_graph()}) {
        Multigraph l = line_graph(g).graph;
        int chi = chromatic_number(l).first;
        auto res = find_immersion(l, chi, OracleFlags{true, true});
        CHECK(res.status == SearchStatus::found);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(7);
    for (const auto& g : {petersen_graph(), cycle_graph(7), random_graph(8, 0.4, 5)}) {
        std::string want = canonical_graph6(g);
        std::vector<int> perm(g.n);
        for (int i = 0; i < g.n; ++i) perm[i] = i;
        for (int round = 0; round < 5; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Multigraph shuffled(g.n);
            for (const Edge& e : g.edges) shuffled.add_edge(perm[e.u], perm[e.v]);
            CHECK(canonical_graph6(shuffled) == want);
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_graph6(path_graph(4)) != canonical_graph6(star_graph(3)));
    CHECK(canonical_graph6(cycle_graph(6)) != canonical_graph6(disjoint_union(
                                                  cycle_graph(3), cycle_graph(3))));
    // Idempotence: the canonical line decodes to a graph whose canonical
    // line is itself.
    auto g = petersen_graph();
    std::string key = canonical_graph6(g);
    CHECK(canonical_graph6(from_graph6(key)) == key);
}

TEST_CASE("twin classes feed the subset prefix rule") {
    auto prev = detail::twin_prefix_rule(complete_bipartite(2, 3));
    CHECK(prev == std::vector<int>{-1, 0, -1, 2, 3});
    auto clique = detail::twin_prefix_rule(complete_graph(3));
    CHECK(clique == std::vector<int>{-1, 0, 1});
    auto lone = detail::twin_prefix_rule(path_graph(4));
    CHECK(lone == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("graph generation counts match the catalog") {
    CHECK(generate_graphs(4, true).size() == 10);   // 1 + 1 + 2 + 6
    CHECK(generate_graphs(5, true).size() == 31);   // ... + 21
    CHECK(generate_graphs(4, false).size() == 18);  // 1 + 2 + 4 + 11
    auto gs = generate_graphs(5, true);
    std::set<std::string> keys;
    for (const auto& g : gs) {
        CHECK(is_connected(g));
        keys.insert(canonical_graph6(g));
    }
    CHECK(keys.size() == gs.size());
    CHECK_THROWS_AS(generate_graphs(8, true), precondition_error);
}

TEST_CASE("scan finds the conjectured immersion on small connected graphs") {
    auto ledger = scan_conjecture(generate_graphs(4, true), OracleFlags{true, true}, {}, {});
    CHECK(ledger.entries.size() == 10);
    CHECK(ledger.counterexample == -1);
    CHECK_FALSE(ledger.budget_hit);
    for (const auto& e : ledger.entries) CHECK(e.status == SearchStatus::found);
    CHECK(ledger.to_text().find("no counterexample") != std::string::npos);
}

TEST_CASE("scan output does not depend on the worker count") {
    auto graphs = generate_graphs(4, true);
    auto a = scan_conjecture(graphs, OracleFlags{true, true}, {}, {}, 1);
    auto b = scan_conjecture(graphs, OracleFlags{true, true}, {}, {}, 4);
    CHECK(a.to_text() == b.to_text());
}

TEST_CASE("scan reports blown budgets instead of deciding") {
    SolverBudget tiny;
    tiny.max_nodes = 1;
    auto ledger = scan_conjecture({petersen_graph()}, OracleFlags{true, true}, {}, tiny);
    REQUIRE(ledger.entries.size() == 1);
    CHECK(ledger.entries[0].chi == -1);
    CHECK(ledger.entries[0].status == SearchStatus::budget_out);
    CHECK(ledger.budget_hit);
    CHECK(ledger.counterexample == -1);
    CHECK(ledger.to_text().find("budget exhausted") != std::string::npos);
}
