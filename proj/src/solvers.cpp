#include "dprl/solvers.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace dprl {

std::vector<double> bellman_backup(const FiniteHorizonMdp& mdp,
                                   const std::vector<double>& next_values, int h) {
    if (static_cast<int>(next_values.size()) != mdp.num_states)
        throw std::invalid_argument("bellman_backup: next_values length mismatch");
    if (h < 0 || h >= mdp.horizon)
        throw std::invalid_argument("bellman_backup: epoch out of range");
    for (double v : next_values)
        if (!std::isfinite(v)) throw std::invalid_argument("bellman_backup: non-finite value");

    std::vector<double> layer(static_cast<std::size_t>(mdp.num_states) * mdp.num_actions);
    for (int s = 0; s < mdp.num_states; ++s) {
        for (int a = 0; a < mdp.num_actions; ++a) {
            double acc = mdp.reward(h, s, a);
            for (int sp = 0; sp < mdp.num_states; ++sp)
                acc += mdp.transition(h, s, a, sp) * next_values[sp];
            layer[static_cast<std::size_t>(s) * mdp.num_actions + a] = acc;
        }
    }
    return layer;
}

SolveResult value_iteration(const FiniteHorizonMdp& mdp) {
    const bool maximize = mdp.maximize();
    SolveResult out;
    out.q.q = Grid3<double>(mdp.horizon, mdp.num_states, mdp.num_actions, 0.0);
    out.policy = DeterministicPolicy(mdp.horizon, mdp.num_states);

    std::vector<double> next(mdp.num_states, 0.0);
    for (int h = mdp.horizon - 1; h >= 0; --h) {
        auto layer = bellman_backup(mdp, next, h);
        for (int s = 0; s < mdp.num_states; ++s) {
            int best_a = 0;
            double best = layer[static_cast<std::size_t>(s) * mdp.num_actions];
            out.q.q(h, s, 0) = best;
            for (int a = 1; a < mdp.num_actions; ++a) {
                double v = layer[static_cast<std::size_t>(s) * mdp.num_actions + a];
                out.q.q(h, s, a) = v;
                if (maximize ? v > best : v < best) {
                    best = v;
                    best_a = a;
                }
            }
            out.policy.at(h, s) = best_a;
        }
        for (int s = 0; s < mdp.num_states; ++s)
            next[s] = out.q.best_value(h, s, maximize);
    }
    out.start_value = next[mdp.initial_state];
    return out;
}

std::vector<std::vector<double>> policy_evaluation(const FiniteHorizonMdp& mdp,
                                                   const DeterministicPolicy& policy) {
    if (policy.horizon != mdp.horizon || policy.num_states != mdp.num_states)
        throw std::invalid_argument("policy_evaluation: policy dimensions mismatch");
    std::vector<std::vector<double>> values(mdp.horizon + 1,
                                            std::vector<double>(mdp.num_states, 0.0));
    for (int h = mdp.horizon - 1; h >= 0; --h) {
        for (int s = 0; s < mdp.num_states; ++s) {
            int a = policy.at(h, s);
            if (a < 0 || a >= mdp.num_actions)
                throw std::invalid_argument("policy_evaluation: action index out of range");
            double acc = mdp.reward(h, s, a);
            for (int sp = 0; sp < mdp.num_states; ++sp)
                acc += mdp.transition(h, s, a, sp) * values[h + 1][sp];
            values[h][s] = acc;
        }
    }
    return values;
}

double policy_value(const FiniteHorizonMdp& mdp, const DeterministicPolicy& policy) {
    return policy_evaluation(mdp, policy)[0][mdp.initial_state];
}

DeterministicPolicy policy_iteration(const FiniteHorizonMdp& mdp, int max_sweeps) {
    const bool maximize = mdp.maximize();
    DeterministicPolicy policy(mdp.horizon, mdp.num_states, 0);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        // Policy evaluation: Q under the current policy's continuation.
        Grid3<double> q(mdp.horizon, mdp.num_states, mdp.num_actions, 0.0);
        std::vector<double> next(mdp.num_states, 0.0);
        for (int h = mdp.horizon - 1; h >= 0; --h) {
            auto layer = bellman_backup(mdp, next, h);
            for (int s = 0; s < mdp.num_states; ++s)
                for (int a = 0; a < mdp.num_actions; ++a)
                    q(h, s, a) = layer[static_cast<std::size_t>(s) * mdp.num_actions + a];
            for (int s = 0; s < mdp.num_states; ++s)
                next[s] = q(h, s, policy.at(h, s));
        }
        // Policy improvement.
        bool changed = false;
        for (int h = 0; h < mdp.horizon; ++h) {
            for (int s = 0; s < mdp.num_states; ++s) {
                int best_a = 0;
                double best = q(h, s, 0);
                for (int a = 1; a < mdp.num_actions; ++a) {
                    double v = q(h, s, a);
                    if (maximize ? v > best : v < best) {
                        best = v;
                        best_a = a;
                    }
                }
                if (best_a != policy.at(h, s)) {
                    policy.at(h, s) = best_a;
                    changed = true;
                }
            }
        }
        if (!changed) return policy;
    }
    throw std::runtime_error("policy_iteration: sweep cap exceeded");
}

EnumerationResult enumerate_policies_oracle(const FiniteHorizonMdp& mdp, double cap) {
    const int cells = mdp.horizon * mdp.num_states;
    double space = std::pow(static_cast<double>(mdp.num_actions), cells);
    if (space > cap)
        throw std::invalid_argument("enumerate_policies_oracle: search space " +
                                    std::to_string(space) + " exceeds cap");
    const bool maximize = mdp.maximize();
    const std::size_t total = static_cast<std::size_t>(space);

    EnumerationResult out;
    DeterministicPolicy policy(mdp.horizon, mdp.num_states, 0);
    bool first = true;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rem = code;
        for (int c = 0; c < cells; ++c) {
            policy.action[c] = static_cast<int>(rem % mdp.num_actions);
            rem /= mdp.num_actions;
        }
        double v = policy_value(mdp, policy);
        bool better = first || (maximize ? v > out.best_value + 1e-9 : v < out.best_value - 1e-9);
        if (better) {
            out.best_value = v;
            out.optimal.clear();
            out.optimal.push_back(policy);
        } else if (std::abs(v - out.best_value) <= 1e-9) {
            out.optimal.push_back(policy);
        }
        bool worse = first || (maximize ? v < out.worst_value : v > out.worst_value);
        if (worse) {
            out.worst_value = v;
            out.worst = policy;
        }
        first = false;
    }
    return out;
}

Trajectory simulate_episode(const FiniteHorizonMdp& mdp, const DeterministicPolicy& policy,
                            Rng& rng) {
    Trajectory traj;
    int s = mdp.initial_state;
    if (mdp.absorbing_state && s == *mdp.absorbing_state) {
        traj.absorbed = true;
        return traj;
    }
    for (int h = 0; h < mdp.horizon; ++h) {
        int a = policy.at(h, s);
        std::span<const double> row(mdp.transition.row(h, s, a),
                                    static_cast<std::size_t>(mdp.num_states));
        int sp = rng.categorical(row);
        double reward;
        switch (mdp.reward_model) {
            case RewardModel::BernoulliMean:
                reward = rng.bernoulli(mdp.reward(h, s, a)) ? 1.0 : 0.0;
                break;
            case RewardModel::TransitionEvent:
                reward = mdp.event_payoff(h, s, a, sp);
                break;
            default:
                reward = mdp.reward(h, s, a);
        }
        traj.steps.push_back({h, s, a, reward, sp});
        s = sp;
        if (mdp.absorbing_state && s == *mdp.absorbing_state) {
            traj.absorbed = true;
            break;
        }
    }
    return traj;
}

}  // namespace dprl
