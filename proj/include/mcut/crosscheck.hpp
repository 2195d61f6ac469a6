#pragma once

#include "mcut/generator.hpp"
#include "mcut/oracle.hpp"
#include "mcut/solve.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

/// Polynomial solvers against the oracle on generated 4-chordal graphs.
namespace mcut::crosscheck {

struct Disagreement {
    std::size_t index = 0;
    Problem problem = Problem::MC;
    bool fast = false;
    bool oracle = false;
    std::string reason;  // verdict mismatch or invalid certificate
    std::string graph;   // edge-list serialization
};

struct Report {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::array<std::size_t, 3> yes{};  // oracle YES per problem (mc, pmc, dpm)
    std::vector<Disagreement> disagreements;
};

Report run(std::uint64_t seed, std::size_t count, const gen::Params& params,
           const oracle::Config& cfg = {});

/// Compares one graph; appends to out.disagreements.
void check_instance(const Graph& g, std::size_t index, const oracle::Config& cfg, Report& out);

std::string to_text(const Report& r);
std::string to_json(const Report& r);

}  // namespace mcut::crosscheck
