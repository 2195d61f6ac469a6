#pragma once

#include "mcut/graph.hpp"
#include "mcut/oracle.hpp"
#include "mcut/pmc.hpp"

#include <optional>
#include <string>
#include <vector>

/// Problem dispatch shared by the command-line tool and the cross-checks.
namespace mcut {

enum class Problem : std::uint8_t { MC, PMC, DPM };
enum class Algo : std::uint8_t { Auto, FourChordal, Oracle };

struct Verdict {
    bool yes = false;
    std::optional<Cut> cut;
    std::optional<Matching> matching;  // dpm only
    Algo used = Algo::Oracle;
    /// Warnings, e.g. a free component attached to both sides on an input
    /// that is not 4-chordal.
    std::vector<std::string> notes;
    /// The level-sweep 2-CNF over vertex ids (pmc with the polynomial path).
    std::optional<twosat::Instance> formula;
};

/// Disconnected inputs: mc is YES through the empty cut, dpm is YES iff a
/// perfect matching exists, pmc is decided per component. Odd order is an
/// immediate NO for pmc and dpm. Auto picks the polynomial solvers when the
/// oracle confirms 4-chordality within cfg, else the oracle itself.
/// Throws oracle::BoundExceeded / BudgetExhausted when the oracle gives up.
Verdict solve(const Graph& g, Problem p, Algo a, const oracle::Config& cfg = {},
              const pmc::Options& pmc_opts = {});

std::string to_string(Problem p);
std::string to_string(Algo a);

}  // namespace mcut
