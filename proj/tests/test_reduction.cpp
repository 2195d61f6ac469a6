#include "fixtures.hpp"

#include "mcut/oracle.hpp"
#include "mcut/reduction.hpp"

#include <doctest.h>

using namespace mcut;
using namespace mcut::reduction;

namespace {

const oracle::Config kBig{60, std::chrono::seconds(120)};

Formula13 formula(std::size_t vars, std::vector<std::array<Variable, 3>> clauses) {
    Formula13 f;
    f.var_count = vars;
    f.clauses = std::move(clauses);
    return f;
}

bool same_side(const Cut& c, const std::vector<Vertex>& vs) {
    for (Vertex v : vs)
        if (c.side[v] != c.side[vs.front()]) return false;
    return true;
}

std::vector<bool> only_occurring(const Formula13& f, std::vector<bool> a) {
    auto occ = f.occurring();
    for (std::size_t x = 0; x < a.size(); ++x)
        if (!occ[x]) a[x] = false;
    return a;
}

}  // namespace

TEST_CASE("G(H;v) hosts") {
    auto cube = build_g_h_v(cube_graph(), 0);
    CHECK(cube.graph.order() == 14);
    CHECK(cube.graph.size() == 21);
    auto pet = build_g_h_v(petersen_graph(), 3);
    CHECK(pet.graph.order() == 16);
    CHECK(pet.graph.size() == 24);
    auto k4 = build_g_h_v(fixtures::k(4), 2);
    CHECK(k4.graph.order() == 10);
    CHECK(k4.graph.size() == 15);
    for (const auto* h : {&cube, &pet, &k4}) {
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(h->graph.adjacent(h->c, h->ck[k]));
            CHECK(h->graph.adjacent(h->ck[k], h->a[k]));
            CHECK(h->graph.adjacent(h->a[k], h->b[k]));
            CHECK(h->graph.adjacent(h->a[k], h->a[(k + 1) % 3]));
            CHECK(h->graph.degree(h->ck[k]) == 2);
        }
        CHECK(h->graph.degree(h->c) == 3);
    }
    CHECK_THROWS_AS(build_g_h_v(fixtures::path(3), 1), GraphError);
    CHECK_THROWS_AS(build_g_h_v(fixtures::k(5), 0), GraphError);
}

TEST_CASE("a clause block is G(cube; v)") {
    auto layout = build_reduction(fixtures::single_clause());
    auto cube = build_g_h_v(cube_graph(), 0);
    // Same order and size, so an induced embedding is an isomorphism.
    Graph block = layout.graph.without_edges(std::vector<Edge>{Edge(0, 13)});
    CHECK(block.size() == cube.graph.size());
    CHECK(oracle::contains_induced(block, cube.graph));
}

TEST_CASE("reduction counts and cliques") {
    std::vector<Formula13> fs{fixtures::single_clause(),
                              formula(4, {{0, 1, 2}, {3, 2, 1}}),
                              fixtures::fig4_formula()};
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::size_t m = i + 1;
        auto layout = build_reduction(fs[i]);
        CHECK(layout.graph.order() == 14 * m);
        CHECK(layout.f_clique.size() == 2 * m);
        CHECK(layout.t_clique.size() == 3 * m);
        for (Vertex f : layout.f_clique)
            for (Vertex t : layout.t_clique) CHECK_FALSE(layout.graph.adjacent(f, t));
        auto clique = [&](const std::vector<Vertex>& vs) {
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b)
                    if (!layout.graph.adjacent(vs[a], vs[b])) return false;
            return true;
        };
        CHECK(clique(layout.f_clique));
        CHECK(clique(layout.t_clique));
        for (const auto& q : layout.q_cliques) CHECK(clique(q));
        auto report = verify_reduction(fs[i], layout, {kBig, kBig, 0});
        for (const auto& check : report.checks) {
            CAPTURE(check.name);
            if (m == 1 && check.name == "every matching cut is perfect") continue;
            CHECK((check.passed || check.skipped));
        }
    }
    CHECK(build_reduction(fixtures::single_clause()).graph.size() == 22);
    CHECK(build_reduction(fixtures::fig4_formula()).graph.size() == 109);
}

TEST_CASE("Fig. 4 layout") {
    auto layout = build_reduction(fixtures::fig4_formula());
    const auto& cl = layout.clauses;
    CHECK(cl[1].c == 14);
    CHECK(cl[2].c_prime == 41);
    CHECK(layout.q_cliques[2] == std::vector<Vertex>{cl[0].var[2], cl[1].var[1], cl[2].var[0]});
    CHECK(layout.q_cliques[2] == std::vector<Vertex>{3, 16, 29});
    CHECK(layout.q_cliques[1] == std::vector<Vertex>{2, 17});
    CHECK(layout.q_cliques[0] == std::vector<Vertex>{1});
    CHECK(layout.graph.adjacent(3, 29));
    CHECK_FALSE(layout.graph.adjacent(1, 15));
}

TEST_CASE("malformed formulas are rejected") {
    CHECK_THROWS_AS(build_reduction(formula(3, {})), FormulaError);
    CHECK_THROWS_AS(build_reduction(formula(3, {{0, 0, 1}})), FormulaError);
    CHECK_THROWS_AS(build_reduction(formula(3, {{0, 1, 3}})), FormulaError);
}

TEST_CASE("Fig. 6: y = v = True") {
    auto layout = build_reduction(fixtures::fig4_formula());
    std::vector<bool> a{false, true, false, false, true, false};
    Cut cut = assignment_to_pmc(layout, a);
    CHECK(is_perfect_matching_cut(layout.graph, cut.side));
    CHECK(cut.members(Side::X) == std::vector<Vertex>{0,  1,  3,  8,  10, 12, 13, 14, 15, 16, 23, 25,
                                                      26, 27, 28, 29, 31, 36, 38, 40, 41});
    CHECK(cut_to_assignment(layout, cut) == a);
    CHECK(cut_to_assignment(layout, cut.flipped()) == a);
    CHECK_THROWS_AS(assignment_to_pmc(layout, std::vector<bool>(6, false)), FormulaError);
    CHECK_THROWS_AS(assignment_to_pmc(layout, {true, true, false, false, true, false}), FormulaError);
}

TEST_CASE("single clause: x = True gives a perfect matching cut") {
    auto layout = build_reduction(fixtures::single_clause());
    Cut cut = assignment_to_pmc(layout, {true, false, false});
    CHECK(is_perfect_matching_cut(layout.graph, cut.side));
    CHECK(cut_to_assignment(layout, cut) == std::vector<bool>{true, false, false});
    CHECK_THROWS_AS(assignment_to_pmc(layout, {false, false, false}), FormulaError);
    CHECK_THROWS_AS(cut_to_assignment(layout, Cut::from_sides(layout.graph, Partition(14, Side::X))),
                    GraphError);
}

TEST_CASE("single clause: two of the five matching cuts are not perfect") {
    auto layout = build_reduction(fixtures::single_clause());
    auto cuts = oracle::enumerate_matching_cuts(layout.graph, oracle::CutMode::MatchingOnly);
    CHECK(cuts.size() == 5);
    std::size_t perfect = 0;
    for (const Cut& c : cuts) {
        if (is_perfect_matching_cut(layout.graph, c.side)) {
            ++perfect;
            auto a = cut_to_assignment(layout, c);
            CHECK(layout.formula.is_one_in_three(a));
        } else {
            // These separate c from c', so F is split.
            CHECK_FALSE(same_side(c, layout.f_clique));
            CHECK_THROWS_AS(cut_to_assignment(layout, c), GraphError);
            auto x = c.members(c.side[0]);
            bool small = x == std::vector<Vertex>{0, 1, 2, 3};
            bool big = x == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6};
            CHECK((small || big));
        }
    }
    CHECK(perfect == 3);
    auto report = verify_reduction(layout.formula, layout, {kBig, kBig, 14});
    for (const auto& check : report.checks) {
        CAPTURE(check.name);
        if (check.name == "every matching cut is perfect") {
            CHECK_FALSE(check.passed);
        } else {
            CHECK(check.passed);
        }
    }
}

TEST_CASE("single clause: induced paths and cycles") {
    auto layout = build_reduction(fixtures::single_clause());
    CHECK(oracle::longest_induced_path(layout.graph) == 9);
    CHECK(oracle::longest_induced_cycle(layout.graph) == 7u);
}

TEST_CASE("two clauses: every matching cut is perfect and consistent") {
    for (const auto& f : {formula(4, {{0, 1, 2}, {3, 2, 1}}), formula(6, {{0, 1, 2}, {3, 4, 5}}),
                          formula(3, {{0, 1, 2}, {2, 1, 0}})}) {
        auto layout = build_reduction(f);
        auto cuts = oracle::enumerate_matching_cuts(layout.graph, oracle::CutMode::MatchingOnly, kBig);
        CHECK_FALSE(cuts.empty());
        for (Cut c : cuts) {
            CHECK(is_perfect_matching_cut(layout.graph, c.side));
            CHECK(same_side(c, layout.f_clique));
            CHECK(same_side(c, layout.t_clique));
            CHECK(c.side[layout.f_clique[0]] != c.side[layout.t_clique[0]]);
            if (c.side[layout.f_clique[0]] != Side::X) c = c.flipped();
            for (const auto& ids : layout.clauses) {
                int in_y = 0;
                for (Vertex v : ids.var) in_y += c.side[v] == Side::Y;
                CHECK(in_y == 1);
            }
            for (const auto& q : layout.q_cliques) CHECK(same_side(c, q));
        }
    }
}

TEST_CASE("has_pmc iff 1-in-3 satisfiable, and the converters invert each other") {
    std::vector<Formula13> fs{
        fixtures::single_clause(),
        formula(4, {{0, 1, 2}, {0, 1, 3}}),
        formula(5, {{0, 1, 2}, {2, 3, 4}}),
        fixtures::fig4_formula(),
        // Every triple of four variables: each variable sits in three clauses,
        // so 3 * (#true) = 4 has no solution.
        formula(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
    };
    for (const auto& f : fs) {
        auto layout = build_reduction(f);
        auto sat = oracle::enumerate_one_in_three(f);
        CHECK(oracle::has_pmc(layout.graph, kBig) == !sat.empty());
        for (const auto& a : sat) {
            Cut c = assignment_to_pmc(layout, a);
            CHECK(is_perfect_matching_cut(layout.graph, c.side));
            CHECK(cut_to_assignment(layout, c) == only_occurring(f, a));
        }
    }
}

TEST_CASE("Fig. 4 witnesses") {
    auto layout = build_reduction(fixtures::fig4_formula());
    const auto& cl = layout.clauses;
    auto b = [&](int j, int k) { return cl[j - 1].b[k - 1]; };
    auto a = [&](int j, int k) { return cl[j - 1].a[k - 1]; };
    auto cp = [&](int j, int k) { return cl[j - 1].cp[k - 1]; };
    auto cv = [&](int j, int k) { return cl[j - 1].var[k - 1]; };
    auto c = [&](int j) { return cl[j - 1].c; };
    auto cq = [&](int j) { return cl[j - 1].c_prime; };

    std::vector<std::vector<Vertex>> paths{
        {b(1, 1), cp(1, 1), b(1, 2), cp(1, 3), b(1, 3), a(1, 3), a(2, 2), cv(2, 2), cv(3, 1), c(3), c(1),
         cv(1, 2), cv(2, 3)},
        {b(1, 1), cp(1, 1), b(1, 2), cp(1, 3), b(1, 3), a(1, 3), a(2, 1), b(2, 1), cp(2, 1), cq(2), cq(3),
         cp(3, 3), b(3, 3)},
        {b(1, 1), cp(1, 1), b(1, 2), cp(1, 3), b(1, 3), a(1, 3), a(2, 1), b(2, 1), cp(2, 1), cq(2), c(2),
         cv(2, 3), cv(1, 2)},
    };
    for (const auto& p : paths) CHECK(oracle::is_induced_path(layout.graph, p));

    // Second cycle: the printed c_3 is not adjacent to c_13 = z; c_1 is the
    // F vertex that closes it. Third cycle: the printed "c_" is c_2.
    std::vector<std::vector<Vertex>> cycles{
        {a(1, 3), a(2, 1), b(2, 1), cp(2, 1), cq(2), cq(1), cp(1, 3), b(1, 3)},
        {a(2, 2), a(3, 2), b(3, 2), cp(3, 3), cq(3), c(1), cv(1, 3), cv(2, 2)},
        {a(1, 2), cv(1, 2), cv(2, 3), c(2), c(3), cv(3, 1), cv(1, 3), a(1, 3)},
    };
    for (const auto& z : cycles) CHECK(oracle::is_induced_cycle(layout.graph, z));
    CHECK_FALSE(layout.graph.adjacent(c(3), cv(1, 3)));
}
