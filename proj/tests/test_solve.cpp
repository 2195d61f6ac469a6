#include "fixtures.hpp"

#include "mcut/crosscheck.hpp"
#include "mcut/generator.hpp"
#include "mcut/io.hpp"
#include "mcut/solve.hpp"

#include <doctest.h>

using namespace mcut;

TEST_CASE("solve: worked examples under every algorithm") {
    for (Algo a : {Algo::Auto, Algo::FourChordal, Algo::Oracle}) {
        CAPTURE(to_string(a));
        auto right = solve(fixtures::fig5_right(), Problem::PMC, a);
        REQUIRE(right.yes);
        auto x = right.cut->members(right.cut->side[0]);
        CHECK(x == std::vector<Vertex>{0, 1, 4});
        CHECK_FALSE(solve(fixtures::fig5_left(), Problem::PMC, a).yes);
        CHECK_FALSE(solve(fixtures::fig1_ab(), Problem::DPM, a).yes);
        CHECK(solve(fixtures::fig1_ab(), Problem::MC, a).yes);
        auto cd = solve(fixtures::fig1_cd(), Problem::DPM, a);
        REQUIRE(cd.yes);
        CHECK(is_disconnected_perfect_matching(fixtures::fig1_cd(), *cd.matching));
    }
    CHECK(solve(fixtures::fig5_right(), Problem::PMC, Algo::Auto).used == Algo::FourChordal);
    CHECK(solve(fixtures::fig5_right(), Problem::PMC, Algo::FourChordal).formula);
}

TEST_CASE("solve: conventions") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    Graph split = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    Graph k3_k1 = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}});
    for (Algo a : {Algo::Auto, Algo::FourChordal, Algo::Oracle}) {
        CAPTURE(to_string(a));
        auto mc = solve(k3_k1, Problem::MC, a);
        REQUIRE(mc.yes);
        CHECK(mc.cut->crossing.empty());
        CHECK(solve(two_k2, Problem::DPM, a).yes);
        CHECK_FALSE(solve(k3_k1, Problem::DPM, a).yes);
        CHECK(solve(two_k2, Problem::PMC, a).yes);
        CHECK_FALSE(solve(fixtures::path(3), Problem::PMC, a).yes);
        CHECK_FALSE(solve(fixtures::path(3), Problem::DPM, a).yes);
        CHECK_FALSE(solve(Graph::from_edges(1, {}), Problem::MC, a).yes);
        CHECK_FALSE(solve(split, Problem::PMC, a).yes);
    }
}

TEST_CASE("solve: inputs outside the class") {
    // C5: the forcing solver cannot certify a cut and says so.
    auto fast = solve(fixtures::cycle(5), Problem::MC, Algo::FourChordal);
    CHECK_FALSE(fast.notes.empty());
    auto automatic = solve(fixtures::cycle(5), Problem::MC, Algo::Auto);
    CHECK(automatic.used == Algo::Oracle);
    CHECK(automatic.yes);
    CHECK_THROWS_AS(solve(fixtures::cycle(40), Problem::MC, Algo::Oracle), oracle::BoundExceeded);
    // Large 4-chordal inputs stay on the polynomial path.
    CHECK(solve(fixtures::path(40), Problem::MC, Algo::FourChordal).yes);
}

TEST_CASE("generator: deterministic, connected, 4-chordal, in range") {
    gen::Params p{4, 14};
    auto a = gen::generate(77, 60, p);
    auto b = gen::generate(77, 30, p);
    REQUIRE(a.size() == 60);
    std::array<int, 4> seen{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Graph& g = a[i].graph;
        CHECK(is_connected(g));
        CHECK(g.order() >= 4);
        CHECK(g.order() <= 14);
        CHECK(gen::is_four_chordal(g));
        if (i < b.size()) CHECK(b[i].graph == g);
        ++seen[static_cast<int>(a[i].family)];
    }
    for (int s : seen) CHECK(s > 0);
    CHECK_FALSE(gen::generate(78, 1, p)[0].graph == a[0].graph);
    CHECK(gen::is_four_chordal(fixtures::cycle(4)));
    CHECK_FALSE(gen::is_four_chordal(fixtures::cycle(5)));
    CHECK(gen::to_string(gen::Family::Tree) == "tree");
}

TEST_CASE("crosscheck: reports") {
    auto empty = crosscheck::run(1, 0, {});
    CHECK(empty.count == 0);
    CHECK(empty.disagreements.empty());
    CHECK(crosscheck::to_text(empty) ==
          "crosscheck seed=1 instances=0\noracle yes: mc=0 pmc=0 dpm=0\ndisagreements: 0\n");

    auto r = crosscheck::run(1, 100, {2, 16});
    CHECK(r.disagreements.empty());
    CHECK(r.yes[0] >= r.yes[2]);
    CHECK(r.yes[2] >= r.yes[1]);
    CHECK(crosscheck::to_json(r) == crosscheck::to_json(crosscheck::run(1, 100, {2, 16})));

    // A graph outside the class can disagree; the report carries it.
    crosscheck::Report bad;
    crosscheck::check_instance(fixtures::cycle(5), 0, {}, bad);
    REQUIRE_FALSE(bad.disagreements.empty());
    CHECK(bad.disagreements[0].problem == Problem::MC);
    CHECK(bad.disagreements[0].graph == io::graph_to_string(fixtures::cycle(5)));
}
