#include <catch2/catch_amalgamated.hpp>

#include "oddimm/blowup_lift.hpp"
#include "oddimm/construction.hpp"
#include "oddimm/generators.hpp"
#include "support/brute.hpp"

using namespace oddimm;

TEST_CASE("routing rows start at (1,0) and end at (0,1)") {
    auto r = route(3, 4);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows[0] == std::pair<int, int>{1, 0});
    CHECK(r.rows[1] == std::pair<int, int>{1, 1});
    CHECK(r.rows[2] == std::pair<int, int>{1, 0});
    CHECK(r.rows[3] == std::pair<int, int>{1, 1});
    CHECK(r.rows[4] == std::pair<int, int>{0, 1});
    CHECK_THROWS_AS(route(0, 1), invariant_error);
    CHECK_THROWS_AS(route(2, 0), invariant_error);
}

TEST_CASE("copy sequences pin the endpoints to the terminal copies") {
    for (int m = 1; m <= 4; ++m)
        for (int len = 1; len <= 6; ++len) {
            auto r = route(m, len);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    auto seq = r.copy_sequence(i, j);
                    REQUIRE(static_cast<int>(seq.size()) == len + 1);
                    CHECK(seq.front() == i);
                    CHECK(seq.back() == j);
                }
        }
}

TEST_CASE("every routing transition is a bijection") {
    for (int m = 1; m <= 4; ++m)
        for (int len = 1; len <= 6; ++len) CHECK(routing_transitions_bijective(m, len));
}

TEST_CASE("the m=2 length-2 routing table") {
    auto r = route(2, 2);
    CHECK(r.copy_sequence(0, 0) == std::vector<int>{0, 0, 0});
    CHECK(r.copy_sequence(0, 1) == std::vector<int>{0, 1, 1});
    CHECK(r.copy_sequence(1, 0) == std::vector<int>{1, 1, 0});
    CHECK(r.copy_sequence(1, 1) == std::vector<int>{1, 0, 1});
}

TEST_CASE("lifting the odd-cycle certificate") {
    auto host = cycle_graph(5);
    auto base = construct_immersion(host).cert;
    for (int m : {1, 2, 3}) {
        auto lifted = lift_certificate(base, host, m);
        CHECK(lifted.t == 3 * m);
        CHECK(lifted.strong);
        CHECK(lifted.totally_odd);
        CHECK(lifted.case_tag == "blowup(m=" + std::to_string(m) + ")");
        CHECK(brute::check_certificate(lifted.host, lifted, true, true) == "");
    }
}

TEST_CASE("lifted terminals are the copy fan of the original terminals") {
    auto host = cycle_graph(5);
    auto base = construct_immersion(host).cert;
    auto lifted = lift_certificate(base, host, 2);
    std::vector<int> want;
    for (int v : base.terminals) {
        want.push_back(2 * v);
        want.push_back(2 * v + 1);
    }
    CHECK(lifted.terminals == want);
}

TEST_CASE("lifting a star certificate from a class 1 host") {
    auto host = complete_graph(4);
    auto base = construct_immersion(host).cert;
    auto lifted = lift_certificate(base, host, 2);
    CHECK(lifted.t == 6);
    CHECK(verify(lifted.host, lifted, CheckFlags{true, true, true, true}).overall);
}

TEST_CASE("lift preconditions") {
    auto host = cycle_graph(5);
    auto base = construct_immersion(host).cert;
    CHECK_THROWS_AS(lift_certificate(base, host, 0), precondition_error);
    CHECK_THROWS_AS(lift_certificate(base, cycle_graph(7), 2), precondition_error);
    CHECK_THROWS_AS(lift_certificate(base, multiply_edges(cycle_graph(5), 2), 2),
                    precondition_error);
    auto broken = base;
    broken.terminals[0] = broken.terminals[1];
    CHECK_THROWS_AS(lift_certificate(broken, host, 2), precondition_error);
}

TEST_CASE("chromatic bound check on edge-multiplied cycles") {
    auto rep2 = chi_bound_check(cycle_graph(5), 2);
    CHECK(rep2.chi_l == 3);
    CHECK(rep2.chi_lm == 5);
    CHECK(rep2.bound == 6);
    CHECK(rep2.exact);
    CHECK(rep2.pass);
    auto rep3 = chi_bound_check(cycle_graph(5), 3);
    CHECK(rep3.chi_lm == 8);
    CHECK(rep3.bound == 9);
    CHECK(rep3.exact);
    CHECK(rep3.pass);
    CHECK_THROWS_AS(chi_bound_check(cycle_graph(5), 0), precondition_error);
}

TEST_CASE("the lifted order can exceed the blown-up chromatic number") {
    // The lift turns K_3 into K_{3m} while chi(L(mC_5)) is ceil(5m/2): at
    // m = 3 that is a verified K_9 immersion in a graph of chromatic
    // number 8. The certificate is valid; it is just not tight.
    auto host = cycle_graph(5);
    auto base = construct_immersion(host).cert;
    auto lifted = lift_certificate(base, host, 3);
    int chi = chromatic_number(lifted.host).first;
    CHECK(lifted.t == 9);
    CHECK(chi == 8);
}
