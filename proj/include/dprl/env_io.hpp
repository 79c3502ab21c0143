#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dprl/environments.hpp"

namespace dprl {

// A parsed environment config: the spec plus the experiment-facing layout
// (which classes are learning targets, how much historical data each
// non-target group contributes, and the behavior policy that generated it).
struct EnvironmentConfig {
    enum class Kind { Readmission, Synthetic } kind = Kind::Readmission;
    std::string name;

    ReadmissionSpec readmission;
    std::vector<bool> readm_is_target;        // parallel to readmission.classes
    std::vector<long long> readm_hist_sizes;  // parallel; used when historical

    SyntheticSpec synthetic;
    std::vector<long long> synth_hist_sizes;  // parallel to historical classes

    BehaviorPolicy behavior;
    bool historical_exact = false;  // aggregates from true probabilities, no sampling

    std::vector<std::string> warnings;
};

// Key-value / tabular text format ('#' comments). Readmission example:
//
//   type readmission
//   horizon 2
//   cost_intervention 1
//   cost_readmission 10
//   class high target arrivals 1
//   risk high 1 0.9 0.5
//   risk high 2 0.55 0.5
//
// Synthetic example:
//
//   type synthetic
//   horizon 4
//   arrivals 1
//   class target0 target -0.055 0.5 0.1 0.18 0.03 0.5
//   alpha target0 0.15 0.15 0.35 0.35
//   avg target0 0.192 0.137
//   class history0 historical -0.055 -0.5 0.3 0.18 0.03 0.5
//   ...
//   hist_size history0 2000
//   behavior uniform
//
// The loader validates every spec invariant and reports offending lines.
EnvironmentConfig load_environment(std::istream& in, const std::string& name = "<stream>");
EnvironmentConfig load_environment_file(const std::string& path);
void save_environment(const EnvironmentConfig& config, std::ostream& out);

// Idealized aggregates for historical groups: every live-state cell of
// group k carries n_per_cell samples whose means equal the true model
// quantities. Used by tests and the exact-historical mode.
AggregateStats exact_aggregates(const std::vector<FiniteHorizonMdp>& group_mdps,
                                long long n_per_cell);

}  // namespace dprl
