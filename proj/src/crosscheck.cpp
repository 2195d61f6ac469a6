#include "mcut/crosscheck.hpp"

#include "mcut/io.hpp"

#include <json.hpp>

#include <sstream>

namespace mcut::crosscheck {

namespace {

// Empty string when the certificate is fine.
std::string certificate_problem(const Graph& g, Problem p, const Verdict& v) {
    if (!v.yes) return {};
    if (!v.cut) return "YES without a cut";
    switch (p) {
        case Problem::MC:
            if (!is_matching_cut(g, v.cut->side)) return "returned cut is not a matching cut";
            break;
        case Problem::PMC:
            if (!is_perfect_matching_cut(g, v.cut->side)) return "returned cut is not perfect";
            break;
        case Problem::DPM:
            if (!v.matching) return "YES without a matching";
            if (!is_disconnected_perfect_matching(g, *v.matching)) {
                return "returned matching is not a disconnected perfect matching";
            }
            break;
    }
    return {};
}

}  // namespace

void check_instance(const Graph& g, std::size_t index, const oracle::Config& cfg, Report& out) {
    for (Problem p : {Problem::MC, Problem::PMC, Problem::DPM}) {
        Verdict fast = solve(g, p, Algo::FourChordal, cfg);
        Verdict slow = solve(g, p, Algo::Oracle, cfg);
        out.yes[static_cast<std::size_t>(p)] += slow.yes;
        std::string reason;
        if (fast.yes != slow.yes) {
            reason = "verdicts differ";
        } else {
            reason = certificate_problem(g, p, fast);
        }
        if (!reason.empty()) {
            out.disagreements.push_back({index, p, fast.yes, slow.yes, reason, io::graph_to_string(g)});
        }
    }
}

Report run(std::uint64_t seed, std::size_t count, const gen::Params& params,
           const oracle::Config& cfg) {
    Report r;
    r.seed = seed;
    r.count = count;
    auto samples = gen::generate(seed, count, params);
    for (std::size_t i = 0; i < samples.size(); ++i) check_instance(samples[i].graph, i, cfg, r);
    return r;
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << "crosscheck seed=" << r.seed << " instances=" << r.count << '\n';
    out << "oracle yes: mc=" << r.yes[0] << " pmc=" << r.yes[1] << " dpm=" << r.yes[2] << '\n';
    out << "disagreements: " << r.disagreements.size() << '\n';
    for (const auto& d : r.disagreements) {
        out << "instance " << d.index << ' ' << to_string(d.problem) << ": " << d.reason
            << " (fourchordal=" << (d.fast ? "YES" : "NO") << ", oracle=" << (d.oracle ? "YES" : "NO")
            << ")\n"
            << d.graph;
    }
    return out.str();
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["seed"] = r.seed;
    j["instances"] = r.count;
    j["oracle_yes"] = {{"mc", r.yes[0]}, {"pmc", r.yes[1]}, {"dpm", r.yes[2]}};
    j["disagreements"] = nlohmann::ordered_json::array();
    for (const auto& d : r.disagreements) {
        j["disagreements"].push_back({{"instance", d.index},
                                      {"problem", to_string(d.problem)},
                                      {"reason", d.reason},
                                      {"fourchordal", d.fast},
                                      {"oracle", d.oracle},
                                      {"graph", d.graph}});
    }
    return j.dump(2) + "\n";
}

}  // namespace mcut::crosscheck
