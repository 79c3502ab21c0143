#include "dprl/mdp.hpp"

#include <cmath>
#include <stdexcept>

namespace dprl {

void FiniteHorizonMdp::validate() const {
    if (horizon < 1) throw std::invalid_argument("mdp: horizon must be positive");
    if (num_states < 1) throw std::invalid_argument("mdp: num_states must be positive");
    if (num_actions < 1) throw std::invalid_argument("mdp: num_actions must be positive");
    if (initial_state < 0 || initial_state >= num_states)
        throw std::invalid_argument("mdp: initial_state out of range");
    if (reward.dim0() != horizon || reward.dim1() != num_states || reward.dim2() != num_actions)
        throw std::invalid_argument("mdp: reward tensor dimensions mismatch");
    if (transition.dim0() != horizon || transition.dim1() != num_states ||
        transition.dim2() != num_actions || transition.dim3() != num_states)
        throw std::invalid_argument("mdp: transition tensor dimensions mismatch");
    if (absorbing_state && (*absorbing_state < 0 || *absorbing_state >= num_states))
        throw std::invalid_argument("mdp: absorbing_state out of range");
    if (reward_model == RewardModel::TransitionEvent &&
        (event_payoff.dim0() != horizon || event_payoff.dim1() != num_states ||
         event_payoff.dim2() != num_actions || event_payoff.dim3() != num_states))
        throw std::invalid_argument("mdp: event_payoff dimensions mismatch");

    for (int h = 0; h < horizon; ++h) {
        for (int s = 0; s < num_states; ++s) {
            for (int a = 0; a < num_actions; ++a) {
                if (!std::isfinite(reward(h, s, a)))
                    throw std::invalid_argument("mdp: non-finite reward at (" +
                                                std::to_string(h + 1) + "," + std::to_string(s) +
                                                "," + std::to_string(a) + ")");
                double sum = 0.0;
                for (int sp = 0; sp < num_states; ++sp) {
                    double p = transition(h, s, a, sp);
                    if (!(p >= 0.0))
                        throw std::invalid_argument("mdp: negative transition probability at (" +
                                                    std::to_string(h + 1) + "," + std::to_string(s) +
                                                    "," + std::to_string(a) + ")");
                    sum += p;
                }
                if (std::abs(sum - 1.0) > kRowSumTol)
                    throw std::invalid_argument("mdp: transition row at (" + std::to_string(h + 1) +
                                                "," + std::to_string(s) + "," + std::to_string(a) +
                                                ") sums to " + std::to_string(sum));
            }
        }
    }
    if (absorbing_state) {
        int abs_s = *absorbing_state;
        for (int h = 0; h < horizon; ++h)
            for (int a = 0; a < num_actions; ++a)
                if (std::abs(transition(h, abs_s, a, abs_s) - 1.0) > kRowSumTol)
                    throw std::invalid_argument(
                        "mdp: absorbing state lacks unit self-transition at epoch " +
                        std::to_string(h + 1));
    }
}

FiniteHorizonMdp make_mdp(int horizon, int num_states, int num_actions, Objective objective) {
    FiniteHorizonMdp m;
    m.horizon = horizon;
    m.num_states = num_states;
    m.num_actions = num_actions;
    m.objective = objective;
    m.reward = Grid3<double>(horizon, num_states, num_actions, 0.0);
    m.transition = Grid4<double>(horizon, num_states, num_actions, num_states, 0.0);
    return m;
}

std::string DeterministicPolicy::row_string(int state) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(horizon));
    for (int h = 0; h < horizon; ++h) out += static_cast<char>('0' + at(h, state));
    return out;
}

double QTable::best_value(int h, int s, bool maximize) const {
    double best = q(h, s, 0);
    for (int a = 1; a < q.dim2(); ++a) {
        double v = q(h, s, a);
        if (maximize ? v > best : v < best) best = v;
    }
    return best;
}

int QTable::best_action(int h, int s, bool maximize) const {
    int best_a = 0;
    double best = q(h, s, 0);
    for (int a = 1; a < q.dim2(); ++a) {
        double v = q(h, s, a);
        if (maximize ? v > best : v < best) {
            best = v;
            best_a = a;
        }
    }
    return best_a;
}

double Trajectory::total_reward() const {
    double sum = 0.0;
    for (const auto& step : steps) sum += step.reward;
    return sum;
}

}  // namespace dprl
