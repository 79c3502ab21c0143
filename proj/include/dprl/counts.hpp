#pragma once

#include <vector>

#include "dprl/mdp.hpp"
#include "dprl/tensor.hpp"

namespace dprl {

// Maximum-likelihood estimate for one (h,s,a) cell. When the cell has no
// samples the sentinel is returned: zero reward, uniform transition row,
// informative == false.
struct CellEstimate {
    double mean_reward = 0.0;
    std::vector<double> transition;
    bool informative = false;
};

// Sufficient statistics of the target data per (h,s,a): visit counts,
// reward sums, transition counts. Counts only grow.
class TrajectoryCounts {
public:
    TrajectoryCounts() = default;
    TrajectoryCounts(int horizon, int num_states, int num_actions);

    void record(const TrajectoryStep& step);
    void absorb(const Trajectory& traj);

    long long visits(int h, int s, int a) const { return visits_(h, s, a); }
    double reward_sum(int h, int s, int a) const { return reward_sum_(h, s, a); }
    long long transition_count(int h, int s, int a, int sp) const {
        return transition_(h, s, a, sp);
    }

    // Visits at (h, a) summed over states; the per-(h,a) count used by the
    // case-study noise and clustering radius.
    long long visits_ha(int h, int a) const;

    CellEstimate mle(int h, int s, int a) const;

    int horizon() const { return visits_.dim0(); }
    int num_states() const { return visits_.dim1(); }
    int num_actions() const { return visits_.dim2(); }

private:
    Grid3<long long> visits_;
    Grid3<double> reward_sum_;
    Grid4<long long> transition_;
};

}  // namespace dprl
