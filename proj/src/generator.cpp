#include "mcut/generator.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mcut::gen {

bool is_four_chordal(const Graph& g, const oracle::Config& cfg) {
    return !oracle::find_induced_cycle_at_least(g, 5, cfg);
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random labelled tree by attaching each vertex to an earlier one.
std::vector<Edge> random_tree(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(pick(rng, 0, v - 1)), v);
    return edges;
}

Graph relabel(std::mt19937_64& rng, const Graph& g) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph::from_edges(g.order(), edges);
}

Graph subtree_chordal(std::mt19937_64& rng, std::size_t n) {
    const std::size_t t = pick(rng, 2, n);
    Graph host = Graph::from_edges(t, random_tree(rng, t));
    std::vector<std::set<Vertex>> sub(n);
    for (auto& s : sub) {
        std::vector<Vertex> frontier{static_cast<Vertex>(pick(rng, 0, t - 1))};
        s.insert(frontier.front());
        const std::size_t size = pick(rng, 1, std::max<std::size_t>(1, t / 2));
        while (s.size() < size) {
            std::vector<Vertex> grow;
            for (Vertex x : s) {
                for (Vertex y : host.neighbors(x)) {
                    if (!s.count(y)) grow.push_back(y);
                }
            }
            if (grow.empty()) break;
            s.insert(grow[pick(rng, 0, grow.size() - 1)]);
        }
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool meet = std::any_of(sub[u].begin(), sub[u].end(),
                                    [&](Vertex x) { return sub[v].count(x) > 0; });
            if (meet) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

// Adds vertices one by one. Each new vertex picks an anchor and some of the
// anchor's neighbors (sometimes a vertex two steps away, closing a C4).
Graph growth(std::mt19937_64& rng, std::size_t n) {
    std::vector<Edge> edges;
    Graph g = Graph::from_edges(1, edges);
    const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    for (Vertex v = 1; v < n; ++v) {
        for (int attempt = 0;; ++attempt) {
            Vertex anchor = static_cast<Vertex>(pick(rng, 0, v - 1));
            std::vector<Vertex> nb{anchor};
            if (attempt < 20) {
                for (Vertex w : g.neighbors(anchor)) {
                    if (coin(rng, density)) nb.push_back(w);
                    if (attempt < 10 && coin(rng, 0.15)) {
                        for (Vertex z : g.neighbors(w)) {
                            if (z != anchor && !g.adjacent(z, anchor) && coin(rng, 0.5)) {
                                nb.push_back(z);
                                break;
                            }
                        }
                    }
                }
            }
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            auto trial = edges;
            for (Vertex w : nb) trial.emplace_back(w, v);
            Graph next = Graph::from_edges(v + 1, trial);
            if (nb.size() == 1 || is_four_chordal(next)) {
                edges = std::move(trial);
                g = std::move(next);
                break;
            }
        }
    }
    return g;
}

Graph planted_pmc(std::mt19937_64& rng, std::size_t n) {
    const std::size_t k = std::max<std::size_t>(1, n / 2);
    Graph h = growth(rng, k);
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        edges.push_back(e);
        edges.emplace_back(e.u + k, e.v + k);
    }
    for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, v + k);
    Graph g = Graph::from_edges(2 * k, edges);
    // A few extra edges inside one side keep the planted cut intact.
    const std::size_t extra = pick(rng, 0, 2);
    for (std::size_t i = 0; i < extra && k >= 3; ++i) {
        Vertex side = coin(rng, 0.5) ? 0 : static_cast<Vertex>(k);
        Vertex a = side + static_cast<Vertex>(pick(rng, 0, k - 1));
        Vertex b = side + static_cast<Vertex>(pick(rng, 0, k - 1));
        if (a == b || g.adjacent(a, b)) continue;
        auto trial = edges;
        trial.emplace_back(a, b);
        Graph next = Graph::from_edges(2 * k, trial);
        if (is_four_chordal(next)) {
            edges = std::move(trial);
            g = std::move(next);
        }
    }
    return g;
}

}  // namespace

Sample random_four_chordal(std::mt19937_64& rng, const Params& p) {
    if (p.min_n < 1 || p.min_n > p.max_n) throw std::invalid_argument("bad size range");
    while (true) {
        const std::size_t n = pick(rng, p.min_n, p.max_n);
        const auto family = static_cast<Family>(pick(rng, 0, 3));
        Graph g;
        switch (family) {
            case Family::SubtreeChordal: g = subtree_chordal(rng, n); break;
            case Family::Tree: g = Graph::from_edges(n, random_tree(rng, n)); break;
            case Family::PlantedPmc: g = planted_pmc(rng, n); break;
            case Family::Growth: g = growth(rng, n); break;
        }
        if (g.order() < p.min_n || g.order() > p.max_n || !is_connected(g)) continue;
        if (!is_four_chordal(g)) continue;
        return {relabel(rng, g), family};
    }
}

std::vector<Sample> generate(std::uint64_t seed, std::size_t count, const Params& p) {
    std::vector<Sample> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        out.push_back(random_four_chordal(rng, p));
    }
    return out;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::SubtreeChordal: return "subtree-chordal";
        case Family::Tree: return "tree";
        case Family::PlantedPmc: return "planted-pmc";
        case Family::Growth: return "growth";
    }
    return "?";
}

}  // namespace mcut::gen
