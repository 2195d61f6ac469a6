#include "mcut/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mcut {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.resize(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                             std::to_string(e.v) + " (n=" + std::to_string(n) + ")");
        }
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) {
            throw GraphError("duplicate edge " + std::to_string(v) + " " + std::to_string(*dup));
        }
    }
    g.m_ = edges.size();
    return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> list;
    list.reserve(edges.size());
    for (auto [u, v] : edges) list.emplace_back(u, v);
    return from_edges(n, list);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

InducedSubgraph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> ids(vertices.begin(), vertices.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> local(order(), absent);
    for (Vertex i = 0; i < ids.size(); ++i) local[ids[i]] = i;

    std::vector<Edge> sub;
    for (Vertex i = 0; i < ids.size(); ++i) {
        for (Vertex w : adj_[ids[i]]) {
            if (local[w] != absent && i < local[w]) sub.emplace_back(i, local[w]);
        }
    }
    Graph g = from_edges(ids.size(), sub);
    return InducedSubgraph(std::move(g), std::move(ids));
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> keep;
    for (const Edge& e : edges()) {
        if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
    }
    return from_edges(order(), keep);
}

Cut Cut::from_sides(const Graph& g, Partition side) {
    Cut c;
    for (const Edge& e : g.edges()) {
        if (side[e.u] != side[e.v]) c.crossing.push_back(e);
    }
    c.side = std::move(side);
    return c;
}

std::vector<Vertex> Cut::members(Side s) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < side.size(); ++v) {
        if (side[v] == s) out.push_back(v);
    }
    return out;
}

Cut Cut::flipped() const {
    Cut c = *this;
    for (Side& s : c.side) s = opposite(s);
    return c;
}

bool Matching::is_valid_in(const Graph& g) const {
    std::vector<bool> used(g.order(), false);
    for (const Edge& e : edges) {
        if (e.u >= g.order() || e.v >= g.order() || e.u == e.v) return false;
        if (!g.adjacent(e.u, e.v)) return false;
        if (used[e.u] || used[e.v]) return false;
        used[e.u] = used[e.v] = true;
    }
    return true;
}

bool Matching::covers_all(const Graph& g) const {
    return is_valid_in(g) && 2 * edges.size() == g.order();
}

BfsLevels bfs_levels(const Graph& g, Vertex r) {
    if (r >= g.order()) throw GraphError("root out of range");
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    BfsLevels out;
    out.root = r;
    out.level_of.assign(g.order(), unseen);
    out.level_of[r] = 0;
    out.levels.push_back({r});
    std::deque<Vertex> queue{r};
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (out.level_of[w] != unseen) continue;
            std::size_t lvl = out.level_of[u] + 1;
            out.level_of[w] = lvl;
            if (out.levels.size() <= lvl) out.levels.emplace_back();
            out.levels[lvl].push_back(w);
            queue.push_back(w);
            ++reached;
        }
    }
    if (reached != g.order()) throw GraphError("graph is disconnected; BFS levels undefined");
    for (auto& level : out.levels) std::sort(level.begin(), level.end());
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g,
                                                      std::span<const Vertex> subset) {
    std::vector<char> in(g.order(), 0), seen(g.order(), 0);
    for (Vertex v : subset) in[v] = 1;
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s : sorted) {
        if (seen[s]) continue;
        auto& comp = comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    return connected_components(g, all);
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

CutCheck check_cut(const Graph& g, const Partition& side, bool perfect) {
    CutCheck out;
    if (side.size() != g.order()) {
        out.defect = CutDefect::WrongLength;
        return out;
    }
    bool has_x = std::find(side.begin(), side.end(), Side::X) != side.end();
    bool has_y = std::find(side.begin(), side.end(), Side::Y) != side.end();
    if (!has_x || !has_y) {
        out.defect = CutDefect::EmptySide;
        return out;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t across = 0;
        for (Vertex w : g.neighbors(v)) across += side[w] != side[v];
        if (across >= 2) {
            out.defect = CutDefect::TooManyCrossNeighbors;
            out.witness = v;
            return out;
        }
        if (perfect && across == 0) {
            out.defect = CutDefect::NoCrossNeighbor;
            out.witness = v;
            return out;
        }
    }
    out.cut = Cut::from_sides(g, side);
    return out;
}

}  // namespace

CutCheck is_matching_cut(const Graph& g, const Partition& side) {
    return check_cut(g, side, false);
}

CutCheck is_perfect_matching_cut(const Graph& g, const Partition& side) {
    return check_cut(g, side, true);
}

DpmCheck is_disconnected_perfect_matching(const Graph& g, const Matching& m) {
    DpmCheck out;
    std::vector<bool> used(g.order(), false);
    for (const Edge& e : m.edges) {
        if (e.u >= g.order() || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v)) {
            out.defect = DpmDefect::EdgeNotInGraph;
            return out;
        }
        if (used[e.u] || used[e.v]) {
            out.defect = DpmDefect::NotAMatching;
            return out;
        }
        used[e.u] = used[e.v] = true;
    }
    if (2 * m.edges.size() != g.order()) {
        out.defect = DpmDefect::NotPerfect;
        return out;
    }
    auto comps = connected_components(g.without_edges(m.edges));
    if (comps.size() < 2) {
        out.defect = DpmDefect::RemainsConnected;
        return out;
    }
    Partition side(g.order(), Side::Y);
    for (Vertex v : comps.front()) side[v] = Side::X;
    out.cut = Cut::from_sides(g, std::move(side));
    return out;
}

std::string to_string(CutDefect d) {
    switch (d) {
        case CutDefect::None: return "none";
        case CutDefect::WrongLength: return "side vector length differs from vertex count";
        case CutDefect::EmptySide: return "one side is empty";
        case CutDefect::TooManyCrossNeighbors: return "vertex with two or more neighbors across";
        case CutDefect::NoCrossNeighbor: return "vertex without a neighbor across";
    }
    return "unknown";
}

std::string to_string(DpmDefect d) {
    switch (d) {
        case DpmDefect::None: return "none";
        case DpmDefect::NotAMatching: return "edges share an endpoint";
        case DpmDefect::EdgeNotInGraph: return "edge not in graph";
        case DpmDefect::NotPerfect: return "matching is not perfect";
        case DpmDefect::RemainsConnected: return "graph minus the matching stays connected";
    }
    return "unknown";
}

}  // namespace mcut
