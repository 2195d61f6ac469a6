#include "fixtures.hpp"

#include "mcut/graph.hpp"

#include <doctest.h>

using namespace mcut;
using fixtures::sorted;

namespace {

Partition sides_from_x(std::size_t n, std::initializer_list<Vertex> x) {
    Partition side(n, Side::Y);
    for (Vertex v : x) side[v] = Side::X;
    return side;
}

}  // namespace

TEST_CASE("build_graph") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.adjacent(1, 0));

    Graph g = fixtures::fig1_ab();
    CHECK(g.order() == 6);
    CHECK(g.size() == 8);
    std::size_t deg_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) deg_sum += g.degree(v);
    CHECK(deg_sum == 2 * g.size());

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
}

TEST_CASE("neighbors are sorted and edges normalized") {
    Graph g = Graph::from_edges(4, {{3, 0}, {2, 0}, {1, 0}});
    auto nb = g.neighbors(0);
    CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2, 3});
    auto es = g.edges();
    CHECK(es.front() == Edge(0, 1));
    CHECK(Edge(5, 2).u == 2);
}

TEST_CASE("induced subgraph keeps the id map") {
    Graph g = fixtures::fig5_right();
    std::vector<Vertex> keep{5, 3, 1};
    auto sub = g.induced(keep);
    CHECK(sub.graph().order() == 3);
    CHECK(sub.to_parent(0) == 1);
    CHECK(sub.to_parent(2) == 5);
    CHECK(sub.graph().size() == 2);  // v1v3, v3v5
}

TEST_CASE("bfs_levels on Fig. 5 right") {
    Graph g = fixtures::fig5_right();
    auto l0 = bfs_levels(g, 0);
    REQUIRE(l0.height() == 3);
    CHECK(l0.levels[0] == std::vector<Vertex>{0});
    CHECK(l0.levels[1] == std::vector<Vertex>{1, 2});
    CHECK(l0.levels[2] == std::vector<Vertex>{3, 4});
    CHECK(l0.levels[3] == std::vector<Vertex>{5});

    auto l1 = bfs_levels(g, 1);
    REQUIRE(l1.height() == 2);
    CHECK(l1.levels[1] == std::vector<Vertex>{0, 3, 4});
    CHECK(l1.levels[2] == std::vector<Vertex>{2, 5});

    for (const Edge& e : g.edges()) {
        auto a = l0.level_of[e.u], b = l0.level_of[e.v];
        CHECK((a > b ? a - b : b - a) <= 1);
    }
}

TEST_CASE("bfs_levels on K2 and disconnected input") {
    auto l = bfs_levels(Graph::from_edges(2, {{0, 1}}), 0);
    CHECK(l.levels.size() == 2);
    CHECK(l.levels[1] == std::vector<Vertex>{1});
    CHECK_THROWS_AS(bfs_levels(Graph::from_edges(3, {{0, 1}}), 0), GraphError);
}

TEST_CASE("connected components of a subset") {
    Graph p3 = fixtures::path(3);
    std::vector<Vertex> ends{0, 2};
    auto comps = connected_components(p3, ends);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<Vertex>{0});
    CHECK(comps[1] == std::vector<Vertex>{2});
    CHECK(connected_components(p3, std::vector<Vertex>{}).empty());
    CHECK(connected_components(p3).size() == 1);
    CHECK(is_connected(p3));
    CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
}

TEST_CASE("is_matching_cut") {
    Graph g = fixtures::fig1_ab();
    auto ok = is_matching_cut(g, sides_from_x(6, {0, 1, 4}));
    REQUIRE(ok);
    CHECK(ok.cut->crossing == std::vector<Edge>{Edge(0, 3), Edge(4, 5)});

    Graph k3 = fixtures::k(3);
    for (Vertex v = 0; v < 3; ++v) {
        auto bad = is_matching_cut(k3, sides_from_x(3, {v}));
        CHECK_FALSE(bad);
        CHECK(bad.defect == CutDefect::TooManyCrossNeighbors);
        CHECK(bad.witness.has_value());
    }
    auto empty = is_matching_cut(k3, Partition(3, Side::X));
    CHECK_FALSE(empty);
    CHECK(empty.defect == CutDefect::EmptySide);
    CHECK(is_matching_cut(k3, Partition(2, Side::X)).defect == CutDefect::WrongLength);
}

TEST_CASE("is_perfect_matching_cut") {
    CHECK(is_perfect_matching_cut(fixtures::fig5_right(), sides_from_x(6, {0, 1, 4})));
    auto fig1a = is_perfect_matching_cut(fixtures::fig1_ab(), sides_from_x(6, {0, 1, 4}));
    CHECK_FALSE(fig1a);
    CHECK(fig1a.defect == CutDefect::NoCrossNeighbor);
    CHECK(*fig1a.witness == 1);  // b
    CHECK(is_perfect_matching_cut(Graph::from_edges(2, {{0, 1}}), sides_from_x(2, {0})));
}

TEST_CASE("is_disconnected_perfect_matching") {
    Matching d{{Edge(0, 1), Edge(3, 4), Edge(2, 5)}};
    auto yes = is_disconnected_perfect_matching(fixtures::fig1_cd(), d);
    REQUIRE(yes);
    CHECK(is_matching_cut(fixtures::fig1_cd(), yes.cut->side));

    Matching b{{Edge(0, 1), Edge(4, 5), Edge(3, 2)}};
    auto no = is_disconnected_perfect_matching(fixtures::fig1_ab(), b);
    CHECK_FALSE(no);
    CHECK(no.defect == DpmDefect::RemainsConnected);

    Matching partial{{Edge(0, 1)}};
    CHECK(is_disconnected_perfect_matching(fixtures::fig1_ab(), partial).defect ==
          DpmDefect::NotPerfect);
    Matching overlap{{Edge(0, 1), Edge(1, 4), Edge(2, 3)}};
    CHECK(is_disconnected_perfect_matching(fixtures::fig1_ab(), overlap).defect ==
          DpmDefect::NotAMatching);
    Matching foreign{{Edge(0, 2), Edge(1, 4), Edge(3, 5)}};
    CHECK(is_disconnected_perfect_matching(fixtures::fig1_ab(), foreign).defect ==
          DpmDefect::EdgeNotInGraph);
}

TEST_CASE("cut predicates on random partitions") {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.5);
    for (int iter = 0; iter < 2000; ++iter) {
        std::size_t n = 2 + iter % 9;
        Graph g = fixtures::random_graph(rng, n, 0.35);
        Partition side(n);
        for (auto& s : side) s = coin(rng) ? Side::X : Side::Y;
        auto mc = is_matching_cut(g, side);
        auto pmc = is_perfect_matching_cut(g, side);
        if (pmc) {
            CHECK(mc);
            Matching m{pmc.cut->crossing};
            CHECK(is_disconnected_perfect_matching(g, m));
        }
        if (mc) {
            Matching m{mc.cut->crossing};
            CHECK(m.is_valid_in(g));
            CHECK(mc.cut->crossing == Cut::from_sides(g, side).crossing);
        }
    }
}

TEST_CASE("cut helpers") {
    Graph g = fixtures::fig5_right();
    Cut c = Cut::from_sides(g, sides_from_x(6, {0, 1, 4}));
    CHECK(c.members(Side::X) == std::vector<Vertex>{0, 1, 4});
    CHECK(c.flipped().members(Side::X) == std::vector<Vertex>{2, 3, 5});
    CHECK(c.flipped().crossing == c.crossing);
    CHECK(sorted({3, 1, 2}) == std::vector<Vertex>{1, 2, 3});
}
