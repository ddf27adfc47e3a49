#ifndef PERVADE_EXPERIMENT_HPP
#define PERVADE_EXPERIMENT_HPP

#include <cstdint>
#include <string>

#include "pervade/graph.hpp"

namespace pervade {

// named corpus generators shared by the CLI and the experiment runner
// kinds: mycielski (param = target chi), cycle (param = length),
// complete, complete_bipartite (param = m), gnp (param = n, probability p),
// burling (param = level), petersen
Graph corpus_graph(const std::string& kind, int param, double p, std::uint64_t seed);

// Executes a JSON experiment plan and returns the CSV report. One row per
// (instance, measurement); identical plan and seed give identical CSV up to
// the wall-time column. Per-instance errors land in the verdict column and
// the run continues.
std::string run_experiment(const std::string& plan_text);

// CSV with the timing column blanked, for byte-identity comparisons.
std::string strip_timing(const std::string& csv);

} // namespace pervade

#endif
