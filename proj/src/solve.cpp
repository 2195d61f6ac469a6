#include "mcut/solve.hpp"

#include "mcut/forcing.hpp"
#include "mcut/generator.hpp"
#include "mcut/matching.hpp"

namespace mcut {

namespace {

Verdict oracle_verdict(const Graph& g, Problem p, const oracle::Config& cfg) {
    Verdict v;
    v.used = Algo::Oracle;
    switch (p) {
        case Problem::MC:
        case Problem::PMC: {
            // Enumerating everything is wasteful; stop at the first witness.
            auto mode = p == Problem::MC ? oracle::CutMode::MatchingOnly : oracle::CutMode::PerfectOnly;
            auto cut = oracle::first_matching_cut(g, mode, cfg);
            v.yes = cut.has_value();
            v.cut = std::move(cut);
            break;
        }
        case Problem::DPM: {
            oracle::for_each_perfect_matching(g, cfg, [&](const Matching& m) {
                auto check = is_disconnected_perfect_matching(g, m);
                if (!check) return true;
                v.yes = true;
                v.matching = m;
                v.cut = check.cut;
                return false;
            });
            break;
        }
    }
    return v;
}

Verdict four_chordal_verdict(const Graph& g, Problem p, const pmc::Options& opts) {
    Verdict v;
    v.used = Algo::FourChordal;
    auto warn_mixed = [&](std::size_t mixed) {
        if (mixed) {
            v.notes.push_back(std::to_string(mixed) +
                              " edge(s) skipped: free component attached to both sides "
                              "(input is not 4-chordal)");
        }
    };
    switch (p) {
        case Problem::MC: {
            auto r = forcing::solve_mc_4chordal(g);
            warn_mixed(r.mixed_edges);
            v.yes = r.cut.has_value();
            v.cut = std::move(r.cut);
            break;
        }
        case Problem::DPM: {
            auto r = forcing::solve_dpm_4chordal(g);
            warn_mixed(r.mixed_edges);
            v.yes = r.matching.has_value();
            v.matching = std::move(r.matching);
            v.cut = std::move(r.cut);
            break;
        }
        case Problem::PMC: {
            auto r = pmc::solve_pmc_4chordal(g, opts);
            v.yes = r.cut.has_value();
            v.cut = std::move(r.cut);
            v.formula = std::move(r.formula);
            if (!v.yes && !r.reason.empty()) {
                v.notes.push_back(r.reason + (r.witness ? " (vertex " + std::to_string(*r.witness) + ")" : ""));
            }
            break;
        }
    }
    return v;
}

}  // namespace

Verdict solve(const Graph& g, Problem p, Algo a, const oracle::Config& cfg,
              const pmc::Options& pmc_opts) {
    const std::size_t n = g.order();
    Verdict v;
    v.used = a;
    if (n < 2) {
        v.notes.push_back("fewer than two vertices");
        return v;
    }
    if (p != Problem::MC && n % 2 != 0) {
        v.notes.push_back("odd number of vertices");
        return v;
    }
    if (p != Problem::PMC && !is_connected(g)) {
        v.notes.push_back("disconnected input");
        if (p == Problem::MC) {
            auto comps = connected_components(g);
            Partition side(n, Side::Y);
            for (Vertex x : comps.front()) side[x] = Side::X;
            v.yes = true;
            v.cut = Cut::from_sides(g, std::move(side));
            return v;
        }
        Matching m = maximum_matching(g);
        if (2 * m.size() == n) {
            auto check = is_disconnected_perfect_matching(g, m);
            v.yes = true;
            v.matching = std::move(m);
            v.cut = std::move(check.cut);
        }
        return v;
    }

    Algo chosen = a;
    if (a == Algo::Auto) {
        try {
            chosen = gen::is_four_chordal(g, cfg) ? Algo::FourChordal : Algo::Oracle;
            if (chosen == Algo::Oracle) v.notes.push_back("input is not 4-chordal; using the oracle");
        } catch (const oracle::BoundExceeded&) {
            chosen = Algo::Oracle;
        } catch (const oracle::BudgetExhausted&) {
            chosen = Algo::Oracle;
        }
    }
    auto notes = std::move(v.notes);
    v = chosen == Algo::Oracle ? oracle_verdict(g, p, cfg) : four_chordal_verdict(g, p, pmc_opts);
    notes.insert(notes.end(), v.notes.begin(), v.notes.end());
    v.notes = std::move(notes);
    return v;
}

std::string to_string(Problem p) {
    switch (p) {
        case Problem::MC: return "mc";
        case Problem::PMC: return "pmc";
        case Problem::DPM: return "dpm";
    }
    return "?";
}

std::string to_string(Algo a) {
    switch (a) {
        case Algo::Auto: return "auto";
        case Algo::FourChordal: return "fourchordal";
        case Algo::Oracle: return "oracle";
    }
    return "?";
}

}  // namespace mcut
