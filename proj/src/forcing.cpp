#include "mcut/forcing.hpp"

#include "mcut/matching.hpp"

#include <algorithm>
#include <string>

namespace mcut::forcing {

std::vector<Vertex> ForcingState::members(Zone z) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < zone.size(); ++v) {
        if (zone[v] == z) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> ForcingState::a_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_a.size(); ++v) {
        if (in_a[v]) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> ForcingState::b_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < in_b.size(); ++v) {
        if (in_b[v]) out.push_back(v);
    }
    return out;
}

namespace {

struct Counts {
    std::size_t a = 0, b = 0, x_only = 0, y_only = 0;  // x_only: X \ A, y_only: Y \ B
};

Counts count(const Graph& g, const ForcingState& s, Vertex v) {
    Counts c;
    for (Vertex w : g.neighbors(v)) {
        switch (s.zone[w]) {
            case Zone::X: (s.in_a[w] ? c.a : c.x_only)++; break;
            case Zone::Y: (s.in_b[w] ? c.b : c.y_only)++; break;
            case Zone::Free: break;
        }
    }
    return c;
}

std::optional<Rule> refuting_rule(const Counts& c) {
    if (c.a >= 1 && (c.b >= 1 || c.y_only >= 2)) return Rule::R1;
    if (c.b >= 1 && (c.a >= 1 || c.x_only >= 2)) return Rule::R2;
    if (c.x_only >= 2 && c.y_only >= 2) return Rule::R3;
    return std::nullopt;
}

std::optional<Rule> moving_rule(const Counts& c) {
    if (c.a >= 1 || c.x_only >= 2) return Rule::R4;
    if (c.b >= 1 || c.y_only >= 2) return Rule::R5;
    return std::nullopt;
}

}  // namespace

std::optional<Rule> applicable_rule(const Graph& g, const ForcingState& s, Vertex v) {
    if (s.zone[v] != Zone::Free) return std::nullopt;
    Counts c = count(g, s, v);
    if (auto r = refuting_rule(c)) return r;
    return moving_rule(c);
}

Propagation propagate(const Graph& g, Vertex a, Vertex b) {
    if (a >= g.order() || b >= g.order() || a == b || !g.adjacent(a, b)) {
        throw GraphError("propagate needs an edge ab");
    }
    const std::size_t n = g.order();
    ForcingState s;
    s.zone.assign(n, Zone::Free);
    s.in_a.assign(n, false);
    s.in_b.assign(n, false);
    s.zone[a] = Zone::X;
    s.zone[b] = Zone::Y;
    s.in_a[a] = true;
    s.in_b[b] = true;
    s.pairs.emplace_back(a, b);

    std::vector<Counts> counts(n);
    while (true) {
        for (Vertex v = 0; v < n; ++v) {
            if (s.zone[v] != Zone::Free) continue;
            counts[v] = count(g, s, v);
            if (auto r = refuting_rule(counts[v])) return Refutation{*r, v};
        }
        bool moved = false;
        for (Vertex v = 0; v < n && !moved; ++v) {
            if (s.zone[v] != Zone::Free) continue;
            auto r = moving_rule(counts[v]);
            if (!r) continue;
            const bool to_x = *r == Rule::R4;
            s.zone[v] = to_x ? Zone::X : Zone::Y;
            // A unique neighbor on the far side, outside B (resp. A), becomes
            // v's partner.
            const std::size_t far_free = to_x ? counts[v].y_only : counts[v].x_only;
            if (far_free == 1) {
                for (Vertex w : g.neighbors(v)) {
                    bool far = to_x ? (s.zone[w] == Zone::Y && !s.in_b[w])
                                    : (s.zone[w] == Zone::X && !s.in_a[w]);
                    if (!far) continue;
                    if (to_x) {
                        s.in_a[v] = true;
                        s.in_b[w] = true;
                        s.pairs.emplace_back(v, w);
                    } else {
                        s.in_b[v] = true;
                        s.in_a[w] = true;
                        s.pairs.emplace_back(w, v);
                    }
                    break;
                }
            }
            moved = true;
        }
        if (!moved) return s;
    }
}

std::variant<FreeSplit, MixedComponent> split_free_vertices(const Graph& g,
                                                           const ForcingState& s) {
    FreeSplit split;
    for (auto& comp : connected_components(g, s.members(Zone::Free))) {
        bool sees_x = false, sees_y = false;
        for (Vertex v : comp) {
            for (Vertex w : g.neighbors(v)) {
                sees_x |= s.zone[w] == Zone::X;
                sees_y |= s.zone[w] == Zone::Y;
            }
        }
        if (sees_x && sees_y) return MixedComponent{std::move(comp)};
        auto& dst = sees_y ? split.toward_y : split.toward_x;
        dst.insert(dst.end(), comp.begin(), comp.end());
    }
    std::sort(split.toward_x.begin(), split.toward_x.end());
    std::sort(split.toward_y.begin(), split.toward_y.end());
    return split;
}

Cut extend_to_cut(const Graph& g, const ForcingState& s, const FreeSplit& split) {
    Partition side(g.order(), Side::X);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (s.zone[v] == Zone::Y) side[v] = Side::Y;
    }
    for (Vertex v : split.toward_y) side[v] = Side::Y;
    return Cut::from_sides(g, std::move(side));
}

namespace {

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw GraphError("4-chordal solvers need a connected graph");
}

}  // namespace

McResult solve_mc_4chordal(const Graph& g) {
    require_connected(g);
    McResult out;
    for (const Edge& e : g.edges()) {
        auto p = propagate(g, e.u, e.v);
        auto* state = std::get_if<ForcingState>(&p);
        if (!state) continue;
        auto split = split_free_vertices(g, *state);
        auto* ok = std::get_if<FreeSplit>(&split);
        if (!ok) {
            ++out.mixed_edges;
            continue;
        }
        out.cut = extend_to_cut(g, *state, *ok);
        out.seed = e;
        return out;
    }
    return out;
}

DpmResult solve_dpm_4chordal(const Graph& g) {
    require_connected(g);
    DpmResult out;
    for (const Edge& e : g.edges()) {
        auto p = propagate(g, e.u, e.v);
        auto* state = std::get_if<ForcingState>(&p);
        if (!state) continue;
        auto split = split_free_vertices(g, *state);
        auto* ok = std::get_if<FreeSplit>(&split);
        if (!ok) {
            ++out.mixed_edges;
            continue;
        }
        std::vector<Vertex> rest;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (!state->in_a[v] && !state->in_b[v]) rest.push_back(v);
        }
        auto sub = g.induced(rest);
        Matching inner = maximum_matching(sub.graph());
        if (2 * inner.size() != rest.size()) continue;

        Matching m;
        for (const Edge& f : inner.edges) m.edges.emplace_back(sub.to_parent(f.u), sub.to_parent(f.v));
        for (auto [a, b] : state->pairs) m.edges.emplace_back(a, b);
        std::sort(m.edges.begin(), m.edges.end());
        out.matching = std::move(m);
        out.cut = extend_to_cut(g, *state, *ok);
        out.seed = e;
        return out;
    }
    return out;
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R4: return "R4";
        case Rule::R5: return "R5";
    }
    return "?";
}

}  // namespace mcut::forcing
