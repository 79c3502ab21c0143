#pragma once

#include <utility>
#include <vector>

#include "dprl/mdp.hpp"
#include "dprl/rng.hpp"

namespace dprl {

struct SolveResult {
    QTable q;
    DeterministicPolicy policy;
    double start_value = 0.0;  // V_1(initial_state)
};

// One backward-induction layer: q(h,s,a) = r(h,s,a) + P(.;h,s,a) . next_values.
// `next_values` is V_{h+1} over states. Throws on dimension mismatch.
std::vector<double> bellman_backup(const FiniteHorizonMdp& mdp,
                                   const std::vector<double>& next_values, int h);

// Exact backward recursion h = H..1 with per-cell argmax (argmin under a
// minimize-cost objective); ties break toward the lowest action index.
SolveResult value_iteration(const FiniteHorizonMdp& mdp);

// Policy evaluation / improvement sweeps until the policy is stable.
// Throws std::runtime_error if `max_sweeps` is exceeded.
DeterministicPolicy policy_iteration(const FiniteHorizonMdp& mdp, int max_sweeps = 1000);

// V_h(s) for all (h, s) under the fixed policy; row h = H is the zero
// boundary, so the result has horizon+1 rows of num_states values.
std::vector<std::vector<double>> policy_evaluation(const FiniteHorizonMdp& mdp,
                                                   const DeterministicPolicy& policy);

// Start value V_1(s1) of a fixed policy.
double policy_value(const FiniteHorizonMdp& mdp, const DeterministicPolicy& policy);

struct EnumerationResult {
    double best_value = 0.0;
    std::vector<DeterministicPolicy> optimal;  // within 1e-9 of best
    double worst_value = 0.0;
    DeterministicPolicy worst;
};

// Test oracle: evaluates every deterministic Markov policy. Throws if
// num_actions^(num_states * horizon) exceeds `cap` (default 1e6).
EnumerationResult enumerate_policies_oracle(const FiniteHorizonMdp& mdp,
                                            double cap = 1e6);

// Samples one episode from the initial state under `policy`. Realized
// rewards follow mdp.reward_model. The trajectory is truncated once the
// absorbing state is entered (absorbing steps carry no data).
Trajectory simulate_episode(const FiniteHorizonMdp& mdp, const DeterministicPolicy& policy,
                            Rng& rng);

}  // namespace dprl
