#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dprl/tensor.hpp"

namespace dprl {

// One per-sample historical record. `group` indexes the historical source
// (0-based). Feature is optional (contextual agents only).
struct SampleRecord {
    int group = 0;
    int h = 0;
    int state = 0;
    int action = 0;
    double reward = 0.0;
    int next_state = 0;
    double feature = 0.0;
    bool has_feature = false;
};

// Per-group summaries per (h,s,a): sample size N, mean reward, empirical
// transition row. All-zero row convention when N == 0. This is the complete
// privacy-preserving historical interface the pooling agent needs.
struct GroupStats {
    Grid3<long long> n;          // N_k(h,s,a)
    Grid3<double> mean_reward;   // rbar_0k
    Grid4<double> transition;    // Pbar_0k rows

    long long n_ha(int h, int a) const;  // summed over states
};

struct AggregateStats {
    int horizon = 0;
    int num_states = 0;
    int num_actions = 0;
    std::vector<GroupStats> groups;

    int num_groups() const { return static_cast<int>(groups.size()); }
    long long total_n(int h, int s, int a) const;

    // Sample-size-weighted merge of all groups into one (the single mixed
    // historical source view of Remark 1). Cells with no samples anywhere
    // keep the all-zero convention.
    GroupStats merged() const;

    void validate() const;  // transition rows sum to 1 where N > 0
};

// Exact integer-count aggregation of per-sample records.
AggregateStats aggregate_samples(const std::vector<SampleRecord>& samples, int num_groups,
                                 int horizon, int num_states, int num_actions);

// Tabular text format, one row per (group, h, s, a) with N > 0:
//   group h s a N rbar P(0) ... P(S-1)
// plus a "dims H S A G" header line. Epochs 1-based, groups 1-based.
void save_aggregates(const AggregateStats& stats, std::ostream& out);
void save_aggregates_file(const AggregateStats& stats, const std::string& path);
AggregateStats load_aggregates(std::istream& in, const std::string& name = "<stream>");
AggregateStats load_aggregates_file(const std::string& path);

}  // namespace dprl
