#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dprl/tensor.hpp"

namespace dprl {

inline constexpr double kRowSumTol = 1e-9;

enum class Objective { MaximizeReward, MinimizeCost };

// How realized per-step payoffs are produced when simulating episodes.
//   DeterministicMean  - realized payoff equals the cell mean.
//   BernoulliMean      - payoff ~ Bernoulli(mean), for [0,1]-bounded rewards.
//   TransitionEvent    - payoff is a deterministic function of (h,s,a,s'),
//                        taken from event_payoff; the cell mean equals the
//                        transition-weighted average by construction.
enum class RewardModel { DeterministicMean, BernoulliMean, TransitionEvent };

// Exact finite-horizon tabular model. Decision epochs are 0-based
// internally (0..H-1); file formats and printed policies use the 1-based
// convention. `reward` holds the per-epoch mean reward, or the per-epoch
// mean cost when objective is MinimizeCost (solvers then minimize).
struct FiniteHorizonMdp {
    int horizon = 0;
    int num_states = 0;
    int num_actions = 0;
    Grid3<double> reward;        // (h, s, a)
    Grid4<double> transition;    // (h, s, a, s')
    int initial_state = 0;
    Objective objective = Objective::MaximizeReward;
    std::optional<int> absorbing_state;  // self-transition 1 at every (h, a)
    RewardModel reward_model = RewardModel::DeterministicMean;
    Grid4<double> event_payoff;  // used only with RewardModel::TransitionEvent

    bool maximize() const { return objective == Objective::MaximizeReward; }

    // Throws std::invalid_argument on any violated invariant: dimensions,
    // row sums within kRowSumTol, finite rewards, absorbing-row structure.
    void validate() const;
};

// Builds an empty model with zero rewards and unset (all-zero) transitions;
// caller fills rows and then validates.
FiniteHorizonMdp make_mdp(int horizon, int num_states, int num_actions,
                          Objective objective = Objective::MaximizeReward);

// Markov deterministic policy: one action per (h, s).
struct DeterministicPolicy {
    int horizon = 0;
    int num_states = 0;
    std::vector<int> action;  // h * num_states + s

    DeterministicPolicy() = default;
    DeterministicPolicy(int h, int s, int fill = 0)
        : horizon(h), num_states(s),
          action(static_cast<std::size_t>(h) * s, fill) {}

    int& at(int h, int s) { return action[static_cast<std::size_t>(h) * num_states + s]; }
    int at(int h, int s) const { return action[static_cast<std::size_t>(h) * num_states + s]; }

    bool operator==(const DeterministicPolicy& other) const = default;

    // Action string over epochs at one state, e.g. "1100"; used for the
    // 2-state readmission policies.
    std::string row_string(int state) const;
};

// State-action value table over (h, s, a); the terminal layer h = H is an
// implicit zero boundary and is not stored.
struct QTable {
    Grid3<double> q;  // (h, s, a)

    double best_value(int h, int s, bool maximize) const;
    int best_action(int h, int s, bool maximize) const;  // ties -> lowest index
};

struct TrajectoryStep {
    int h = 0;
    int state = 0;
    int action = 0;
    double reward = 0.0;  // realized payoff (cost under MinimizeCost)
    int next_state = 0;
};

// One simulated episode, truncated after entering the absorbing state.
struct Trajectory {
    std::vector<TrajectoryStep> steps;
    bool absorbed = false;          // entered the absorbing state within horizon
    double feature = 0.0;           // per-patient covariate, when the environment has one
    bool has_feature = false;

    double total_reward() const;
};

}  // namespace dprl
