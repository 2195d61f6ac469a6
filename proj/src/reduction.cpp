#include "mcut/reduction.hpp"

#include <algorithm>
#include <set>

namespace mcut::reduction {

HostGadget build_g_h_v(const Graph& h, Vertex v) {
    if (v >= h.order()) throw GraphError("vertex out of range");
    if (h.degree(v) != 3) throw GraphError("G(H;v) needs deg(v) = 3");
    const std::size_t base = h.order() - 1;
    auto shift = [v](Vertex x) { return x < v ? x : x - 1; };

    HostGadget out;
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
        if (e.u != v && e.v != v) edges.emplace_back(shift(e.u), shift(e.v));
    }
    for (std::size_t k = 0; k < 3; ++k) {
        out.b[k] = shift(h.neighbors(v)[k]);
        out.a[k] = static_cast<Vertex>(base + k);
        out.ck[k] = static_cast<Vertex>(base + 3 + k);
    }
    out.c = static_cast<Vertex>(base + 6);
    for (std::size_t k = 0; k < 3; ++k) {
        edges.emplace_back(out.c, out.ck[k]);
        edges.emplace_back(out.ck[k], out.a[k]);
        edges.emplace_back(out.a[k], out.b[k]);
        edges.emplace_back(out.a[k], out.a[(k + 1) % 3]);
    }
    out.graph = Graph::from_edges(base + 7, edges);
    return out;
}

Graph cube_graph() {
    std::vector<Edge> edges;
    for (Vertex x = 0; x < 8; ++x) {
        for (Vertex bit = 1; bit < 8; bit <<= 1) {
            if (x < (x ^ bit)) edges.emplace_back(x, x ^ bit);
        }
    }
    return Graph::from_edges(8, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

namespace {

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
    }
}

// b_k's two neighbors among c'_1..c'_3 (0-based).
constexpr std::array<std::array<std::size_t, 2>, 3> kBToCp{{{0, 1}, {0, 2}, {1, 2}}};

std::vector<Edge> clause_edges(const ClauseIds& ids) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < 3; ++k) {
        edges.emplace_back(ids.c, ids.var[k]);
        edges.emplace_back(ids.var[k], ids.a[k]);
        edges.emplace_back(ids.a[k], ids.b[k]);
        edges.emplace_back(ids.a[k], ids.a[(k + 1) % 3]);
        for (std::size_t t : kBToCp[k]) edges.emplace_back(ids.b[k], ids.cp[t]);
        edges.emplace_back(ids.cp[k], ids.c_prime);
    }
    return edges;
}

ClauseIds block(std::size_t j) {
    const auto base = static_cast<Vertex>(j * kBlock);
    ClauseIds ids;
    ids.c = base;
    for (Vertex k = 0; k < 3; ++k) {
        ids.var[k] = base + 1 + k;
        ids.a[k] = base + 4 + k;
        ids.b[k] = base + 7 + k;
        ids.cp[k] = base + 10 + k;
    }
    ids.c_prime = base + 13;
    return ids;
}

}  // namespace

GadgetLayout build_reduction(const Formula13& f) {
    f.validate();
    GadgetLayout out;
    out.formula = f;
    out.q_cliques.assign(f.var_count, {});
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        ClauseIds ids = block(j);
        auto inner = clause_edges(ids);
        edges.insert(edges.end(), inner.begin(), inner.end());
        for (std::size_t k = 0; k < 3; ++k) {
            out.q_cliques[f.clauses[j][k]].push_back(ids.var[k]);
            out.t_clique.push_back(ids.a[k]);
        }
        out.f_clique.push_back(ids.c);
        out.f_clique.push_back(ids.c_prime);
        out.clauses.push_back(ids);
    }
    for (auto& q : out.q_cliques) add_clique(edges, q);
    add_clique(edges, out.f_clique);
    add_clique(edges, out.t_clique);
    // The triangles on a_j1..a_j3 were already added by the clause gadgets.
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = Graph::from_edges(f.clauses.size() * kBlock, edges);
    return out;
}

Cut assignment_to_pmc(const GadgetLayout& layout, const std::vector<bool>& assignment) {
    const Formula13& f = layout.formula;
    if (assignment.size() != f.var_count) throw FormulaError("assignment length mismatch");
    if (!f.is_one_in_three(assignment)) throw FormulaError("assignment is not 1-in-3");

    Partition side(layout.graph.order(), Side::Y);
    for (Vertex v : layout.f_clique) side[v] = Side::X;
    for (std::size_t x = 0; x < f.var_count; ++x) {
        if (assignment[x]) continue;
        for (Vertex v : layout.q_cliques[x]) side[v] = Side::X;
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const ClauseIds& ids = layout.clauses[j];
        for (std::size_t k = 0; k < 3; ++k) {
            if (!assignment[f.clauses[j][k]]) continue;
            side[ids.b[k]] = Side::X;
            for (std::size_t t : kBToCp[k]) side[ids.cp[t]] = Side::X;
        }
    }
    return Cut::from_sides(layout.graph, std::move(side));
}

std::vector<bool> cut_to_assignment(const GadgetLayout& layout, const Cut& cut) {
    if (!is_matching_cut(layout.graph, cut.side)) throw GraphError("not a matching cut");
    auto monochromatic = [&](const std::vector<Vertex>& vs) {
        return std::all_of(vs.begin(), vs.end(),
                           [&](Vertex v) { return cut.side[v] == cut.side[vs.front()]; });
    };
    if (!monochromatic(layout.f_clique)) throw GraphError("F is split by the cut");
    const Side f_side = cut.side[layout.f_clique.front()];

    std::vector<bool> out(layout.formula.var_count, false);
    for (std::size_t x = 0; x < out.size(); ++x) {
        const auto& q = layout.q_cliques[x];
        if (q.empty()) continue;
        if (!monochromatic(q)) throw GraphError("Q(" + std::to_string(x) + ") is split by the cut");
        out[x] = cut.side[q.front()] != f_side;
    }
    return out;
}

bool ReductionReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ReductionCheck& c) { return c.passed || c.skipped; });
}

bool ReductionReport::any_skipped() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const ReductionCheck& c) { return c.skipped; });
}

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

template <class Fn>
ReductionCheck guarded(std::string name, Fn&& fn) {
    ReductionCheck c{std::move(name), false, false, {}};
    try {
        fn(c);
    } catch (const oracle::BoundExceeded& e) {
        c.skipped = true;
        c.detail = e.what();
    } catch (const oracle::BudgetExhausted& e) {
        c.skipped = true;
        c.detail = e.what();
    }
    return c;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

}  // namespace

ReductionReport verify_reduction(const Formula13& f, const GadgetLayout& layout,
                                 const VerifyOptions& opts) {
    ReductionReport report;
    const Graph& g = layout.graph;
    const std::size_t m = f.clauses.size();
    auto& checks = report.checks;

    {
        ReductionCheck c{"counts", false, false, {}};
        c.passed = g.order() == kBlock * m && layout.f_clique.size() == 2 * m &&
                   layout.t_clique.size() == 3 * m;
        c.detail = "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) +
                   " |F|=" + std::to_string(layout.f_clique.size()) +
                   " |T|=" + std::to_string(layout.t_clique.size());
        checks.push_back(c);
    }
    {
        ReductionCheck c{"cliques", true, false, {}};
        if (!is_clique(g, layout.f_clique)) c.passed = false, c.detail = "F";
        if (!is_clique(g, layout.t_clique)) c.passed = false, c.detail = "T";
        for (std::size_t x = 0; x < layout.q_cliques.size(); ++x) {
            if (!is_clique(g, layout.q_cliques[x])) {
                c.passed = false;
                c.detail = "Q(" + std::to_string(x) + ")";
            }
        }
        checks.push_back(c);
    }
    {
        ReductionCheck c{"F-T non-adjacent", true, false, {}};
        for (Vertex a : layout.f_clique) {
            for (Vertex b : layout.t_clique) {
                if (g.adjacent(a, b)) {
                    c.passed = false;
                    c.detail = std::to_string(a) + "-" + std::to_string(b);
                }
            }
        }
        checks.push_back(c);
    }
    {
        // Inside a block only the gadget's own edges may appear, apart from
        // the F edge c c'.
        ReductionCheck c{"clause gadgets", true, false, {}};
        for (std::size_t j = 0; j < m; ++j) {
            const ClauseIds& ids = layout.clauses[j];
            std::set<Edge> expected;
            for (const Edge& e : clause_edges(ids)) expected.insert(e);
            const auto lo = static_cast<Vertex>(j * kBlock);
            const auto hi = static_cast<Vertex>(lo + kBlock);
            std::set<Edge> actual;
            for (Vertex u = lo; u < hi; ++u) {
                for (Vertex w : g.neighbors(u)) {
                    if (w <= u || w >= hi) continue;
                    if (Edge(u, w) != Edge(ids.c, ids.c_prime)) actual.insert(Edge(u, w));
                }
            }
            if (actual != expected) {
                c.passed = false;
                c.detail = "block " + std::to_string(j);
            }
        }
        checks.push_back(c);
    }

    std::optional<std::vector<Cut>> cuts;
    checks.push_back(guarded("every matching cut is perfect", [&](ReductionCheck& c) {
        cuts = oracle::enumerate_matching_cuts(g, oracle::CutMode::MatchingOnly, opts.cut_oracle);
        std::size_t perfect = 0;
        for (const Cut& cut : *cuts) perfect += static_cast<bool>(is_perfect_matching_cut(g, cut.side));
        c.passed = perfect == cuts->size();
        c.detail = std::to_string(cuts->size()) + " matching cuts, " + std::to_string(perfect) +
                   " perfect";
    }));
    {
        ReductionCheck c{"has PMC iff 1-in-3 satisfiable", false, false, {}};
        if (!cuts) {
            c.skipped = true;
            c.detail = "cut enumeration did not finish";
        } else {
            bool has_pmc = std::any_of(cuts->begin(), cuts->end(), [&](const Cut& cut) {
                return static_cast<bool>(is_perfect_matching_cut(g, cut.side));
            });
            bool sat = !oracle::enumerate_one_in_three(f).empty();
            c.passed = has_pmc == sat;
            c.detail = std::string("pmc=") + (has_pmc ? "yes" : "no") +
                       " sat=" + (sat ? "yes" : "no");
        }
        checks.push_back(c);
    }

    const bool small = g.order() <= opts.class_max_vertices;
    auto class_check = [&](std::string name, auto&& fn) {
        if (!small) {
            checks.push_back({std::move(name), false, true, "graph above class-check size"});
            return;
        }
        checks.push_back(guarded(std::move(name), fn));
    };
    class_check("P14-free", [&](ReductionCheck& c) {
        auto p = oracle::find_induced_path(g, 14, opts.class_oracle);
        c.passed = !p;
        if (p) c.detail = "induced P14: " + join(*p);
    });
    class_check("8-chordal", [&](ReductionCheck& c) {
        auto z = oracle::find_induced_cycle_at_least(g, 9, opts.class_oracle);
        c.passed = !z;
        if (z) c.detail = "induced C" + std::to_string(z->size()) + ": " + join(*z);
    });
    class_check("3P6-free", [&](ReductionCheck& c) {
        auto e = oracle::find_induced_embedding(g, oracle::disjoint_copies(oracle::path_graph(6), 3),
                                                opts.class_oracle);
        c.passed = !e;
        if (e) c.detail = join(*e);
    });
    class_check("2P7-free", [&](ReductionCheck& c) {
        auto e = oracle::find_induced_embedding(g, oracle::disjoint_copies(oracle::path_graph(7), 2),
                                                opts.class_oracle);
        c.passed = !e;
        if (e) c.detail = join(*e);
    });
    return report;
}

}  // namespace mcut::reduction
