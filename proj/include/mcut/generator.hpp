#pragma once

#include "mcut/graph.hpp"
#include "mcut/oracle.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

/// Seeded random connected 4-chordal graphs for the cross-checking suites.
namespace mcut::gen {

enum class Family : std::uint8_t {
    SubtreeChordal,  // intersection graph of random subtrees of a random tree
    Tree,
    PlantedPmc,      // H x K2 with H a random growth graph, plus a few extra edges
    Growth,          // vertices attached one at a time, rejecting long holes
};

struct Params {
    std::size_t min_n = 2;
    std::size_t max_n = 16;
};

struct Sample {
    Graph graph;
    Family family = Family::Tree;
};

/// No induced cycle on 5 or more vertices (oracle check).
bool is_four_chordal(const Graph& g, const oracle::Config& cfg = {});

/// One connected 4-chordal graph with min_n <= n <= max_n.
Sample random_four_chordal(std::mt19937_64& rng, const Params& p);

/// Instance i uses its own generator seeded from (seed, i), so prefixes of
/// the sequence do not depend on count.
std::vector<Sample> generate(std::uint64_t seed, std::size_t count, const Params& p);

std::string to_string(Family f);

}  // namespace mcut::gen
