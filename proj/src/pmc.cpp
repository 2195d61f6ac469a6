#include "mcut/pmc.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcut::pmc {

void DeterminedSet::add(Vertex v) {
    if (member_[v]) throw std::logic_error("vertex " + std::to_string(v) + " determined twice");
    member_[v] = true;
    ++count_;
}

LeafClassification classify_leaf(const Graph& g, const BfsLevels& levels, const DeterminedSet& q,
                                 Vertex v) {
    LeafClassification out;
    const std::size_t i = levels.level_of[v];
    if (i == 0) return out;
    const std::size_t below = i - 1;
    auto open_below = [&](Vertex x) { return levels.level_of[x] == below && !q.contains(x); };

    std::vector<Vertex> lower;
    for (Vertex x : g.neighbors(v)) {
        if (open_below(x)) lower.push_back(x);
    }
    if (lower.empty()) return out;

    // Label the components of G[L[i-1] \ Q] that contain v's lower neighbors.
    std::vector<std::size_t> comp_of(g.order(), 0);  // 0 = unlabelled
    std::size_t comps = 0;
    std::vector<Vertex> stack;
    for (Vertex s : lower) {
        if (comp_of[s]) continue;
        comp_of[s] = ++comps;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (open_below(y) && !comp_of[y]) {
                    comp_of[y] = comps;
                    stack.push_back(y);
                }
            }
        }
    }
    if (comps > 2) return out;

    std::vector<Vertex> first, second;
    for (Vertex x : lower) (comp_of[x] == 1 ? first : second).push_back(x);

    if (comps == 1) {
        if (first.size() == 1) {
            out.kind = LeafKind::C1;
            out.u = first.front();
        }
        return out;
    }
    if (first.size() == 1 && second.size() == 1) {
        if (i < 2) return out;
        Vertex u1 = std::min(first.front(), second.front());
        Vertex u2 = std::max(first.front(), second.front());
        for (Vertex w : g.neighbors(u1)) {  // ascending, so the smallest w wins
            if (levels.level_of[w] == i - 2 && !q.contains(w) && g.adjacent(w, u2)) {
                out.kind = LeafKind::C2;
                out.u1 = u1;
                out.u2 = u2;
                out.w = w;
                return out;
            }
        }
        return out;
    }
    if (first.size() == 1 || second.size() == 1) {
        out.kind = LeafKind::C3;
        out.u = first.size() == 1 ? first.front() : second.front();
    }
    return out;
}

namespace {

using twosat::neg;
using twosat::pos;

void differ(twosat::Instance& f, Vertex a, Vertex b) {
    f.add(pos(a), pos(b));
    f.add(neg(a), neg(b));
}

void agree(twosat::Instance& f, Vertex a, Vertex b) {
    f.add(pos(a), neg(b));
    f.add(neg(a), pos(b));
}

// Every still-undetermined neighbor of x stays on x's side.
void tie_neighbors(const Graph& g, const DeterminedSet& q, twosat::Instance& f, Vertex x) {
    for (Vertex y : g.neighbors(x)) {
        if (!q.contains(y)) agree(f, x, y);
    }
}

}  // namespace

std::variant<PmcFormula, NoPmc> build_pmc_formula(const Graph& g, const Options& opts) {
    if (g.order() < 2) throw GraphError("perfect matching cut sweep needs at least two vertices");
    BfsLevels levels = bfs_levels(g, opts.root);
    twosat::Instance phi(g.order());
    DeterminedSet q(g.order());

    auto stop = [&](Vertex witness, NoPmcReason reason) {
        return NoPmc{witness, reason, std::move(phi), std::move(q)};
    };

    for (std::size_t i = levels.height(); i >= 1; --i) {
        std::vector<Vertex> scan = levels.levels[i];
        if (opts.order == ScanOrder::Descending) std::reverse(scan.begin(), scan.end());
        for (Vertex v : scan) {
            if (q.contains(v)) continue;
            LeafClassification c = classify_leaf(g, levels, q, v);
            TraceEntry entry{v, c, {}, phi.clauses().size(), 0};
            switch (c.kind) {
                case LeafKind::None:
                    return stop(v, NoPmcReason::Unclassifiable);
                case LeafKind::C1:
                case LeafKind::C3:
                    differ(phi, v, c.u);
                    q.add(v);
                    q.add(c.u);
                    entry.determined = {v, c.u};
                    tie_neighbors(g, q, phi, v);
                    tie_neighbors(g, q, phi, c.u);
                    break;
                case LeafKind::C2:
                    differ(phi, v, c.w);
                    differ(phi, c.u1, c.u2);
                    for (Vertex x : {v, c.u1, c.u2, c.w}) q.add(x);
                    entry.determined = {v, c.u1, c.u2, c.w};
                    for (Vertex x : {v, c.w, c.u1, c.u2}) tie_neighbors(g, q, phi, x);
                    break;
            }
            entry.clause_count = phi.clauses().size() - entry.first_clause;
            q.trace().push_back(std::move(entry));
        }
    }
    // Every vertex of L[1..h] is determined now; the root still needs a
    // partner, and all candidates are taken.
    if (!q.contains(levels.root)) return stop(levels.root, NoPmcReason::RootUndetermined);
    return PmcFormula{std::move(phi), std::move(q), std::move(levels)};
}

PmcResult solve_pmc_4chordal(const Graph& g, const Options& opts) {
    PmcResult out;
    out.formula = twosat::Instance(g.order());
    if (g.order() == 0) {
        out.reason = "empty graph";
        return out;
    }
    Partition side(g.order(), Side::X);

    for (const auto& comp : connected_components(g)) {
        Vertex root = comp.front();
        if (std::binary_search(comp.begin(), comp.end(), opts.root)) root = opts.root;
        if (comp.size() == 1) {
            out.witness = root;
            out.reason = "isolated vertex has no neighbor across";
            return out;
        }
        auto sub = g.induced(comp);
        const Graph& h = sub.graph();
        Vertex local_root = static_cast<Vertex>(
            std::lower_bound(comp.begin(), comp.end(), root) - comp.begin());

        // Root adjacent to everything: only K2 has a perfect matching cut.
        BfsLevels lv = bfs_levels(h, local_root);
        if (lv.height() <= 1 && h.order() != 2) {
            out.witness = root;
            out.reason = "component of radius 1 around the root with more than two vertices";
            return out;
        }

        auto built = build_pmc_formula(h, Options{local_root, opts.order});
        auto lift = [&](const twosat::Instance& f) {
            for (auto [a, b] : f.clauses()) {
                out.formula.add({sub.to_parent(a.var), a.positive},
                                {sub.to_parent(b.var), b.positive});
            }
        };
        if (auto* no = std::get_if<NoPmc>(&built)) {
            lift(no->partial);
            out.witness = sub.to_parent(no->witness);
            out.reason = no->reason == NoPmcReason::Unclassifiable
                             ? "vertex matches none of the private-neighbor cases"
                             : "root left without a private neighbor";
            return out;
        }
        auto& formula = std::get<PmcFormula>(built);
        lift(formula.formula);
        auto solved = twosat::solve(formula.formula);
        if (!solved.satisfiable()) {
            out.witness = sub.to_parent(*solved.conflict);
            out.reason = "2-CNF formula unsatisfiable";
            return out;
        }
        for (Vertex x = 0; x < h.order(); ++x) {
            side[sub.to_parent(x)] = (*solved.model)[x] ? Side::X : Side::Y;
        }
    }

    auto check = is_perfect_matching_cut(g, side);
    if (!check) {
        throw std::logic_error("2-CNF model is not a perfect matching cut: " +
                               to_string(check.defect));
    }
    out.cut = std::move(check.cut);
    return out;
}

std::string to_string(LeafKind k) {
    switch (k) {
        case LeafKind::C1: return "c1";
        case LeafKind::C2: return "c2";
        case LeafKind::C3: return "c3";
        case LeafKind::None: return "none";
    }
    return "?";
}

}  // namespace mcut::pmc
