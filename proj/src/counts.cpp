#include "dprl/counts.hpp"

#include <stdexcept>

namespace dprl {

TrajectoryCounts::TrajectoryCounts(int horizon, int num_states, int num_actions)
    : visits_(horizon, num_states, num_actions, 0),
      reward_sum_(horizon, num_states, num_actions, 0.0),
      transition_(horizon, num_states, num_actions, num_states, 0) {}

void TrajectoryCounts::record(const TrajectoryStep& step) {
    visits_(step.h, step.state, step.action) += 1;
    reward_sum_(step.h, step.state, step.action) += step.reward;
    transition_(step.h, step.state, step.action, step.next_state) += 1;
}

void TrajectoryCounts::absorb(const Trajectory& traj) {
    int prev_h = -1;
    for (const auto& step : traj.steps) {
        if (step.h <= prev_h) throw std::invalid_argument("trajectory epochs not increasing");
        prev_h = step.h;
        record(step);
    }
}

long long TrajectoryCounts::visits_ha(int h, int a) const {
    long long n = 0;
    for (int s = 0; s < num_states(); ++s) n += visits_(h, s, a);
    return n;
}

CellEstimate TrajectoryCounts::mle(int h, int s, int a) const {
    CellEstimate est;
    const long long n = visits_(h, s, a);
    const int S = num_states();
    est.transition.resize(S);
    if (n == 0) {
        est.mean_reward = 0.0;
        for (int sp = 0; sp < S; ++sp) est.transition[sp] = 1.0 / S;
        est.informative = false;
        return est;
    }
    est.mean_reward = reward_sum_(h, s, a) / static_cast<double>(n);
    for (int sp = 0; sp < S; ++sp)
        est.transition[sp] = static_cast<double>(transition_(h, s, a, sp)) / static_cast<double>(n);
    est.informative = true;
    return est;
}

}  // namespace dprl
