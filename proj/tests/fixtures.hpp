#pragma once

#include "mcut/formula.hpp"
#include "mcut/graph.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace fixtures {

using mcut::Graph;
using mcut::Vertex;

// Fig. 1 (a) and (b) show the same graph; a..f are 0..5.
inline Graph fig1_ab() {
    return Graph::from_edges(6, {{0, 1}, {1, 4}, {4, 5}, {5, 2}, {2, 3}, {3, 0}, {0, 4}, {5, 3}});
}

// Fig. 1 (c) and (d): squares abcd and cdef sharing the edge cd.
inline Graph fig1_cd() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {2, 5}});
}

// Fig. 5: v_i is vertex i.
inline Graph fig5_right() {
    return Graph::from_edges(6, {{0, 2}, {0, 1}, {1, 3}, {2, 3}, {3, 5}, {4, 5}, {1, 4}});
}

inline Graph fig5_left() {
    return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {3, 5}});
}

// Fig. 4 formula: x y z u v w are 0..5.
inline mcut::Formula13 fig4_formula() {
    mcut::Formula13 f;
    f.var_count = 6;
    f.clauses = {{0, 1, 2}, {3, 2, 1}, {2, 4, 5}};
    return f;
}

inline mcut::Formula13 single_clause() {
    mcut::Formula13 f;
    f.var_count = 3;
    f.clauses = {{0, 1, 2}};
    return f;
}

inline Graph k(std::size_t n) {
    std::vector<mcut::Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline Graph cycle(std::size_t n) {
    std::vector<mcut::Edge> es;
    for (Vertex u = 0; u < n; ++u) es.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return Graph::from_edges(n, es);
}

inline Graph path(std::size_t n) {
    std::vector<mcut::Edge> es;
    for (Vertex u = 0; u + 1 < n; ++u) es.emplace_back(u, u + 1);
    return Graph::from_edges(n, es);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<mcut::Edge> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

inline std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace fixtures
