#include "dprl/environments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dprl/solvers.hpp"

namespace dprl {

int ReadmissionSpec::peak_epoch(int cls) const {
    const auto& table = classes[cls].p;
    int best = 0;
    for (int h = 1; h < static_cast<int>(table.size()); ++h)
        if (table[h][0] > table[best][0]) best = h;
    return best;
}

void ReadmissionSpec::validate(std::vector<std::string>* warnings) const {
    if (horizon < 1) throw std::invalid_argument("readmission spec: horizon must be positive");
    if (cost_intervention < 0.0 || cost_readmission < 0.0)
        throw std::invalid_argument("readmission spec: costs must be nonnegative");
    if (classes.empty()) throw std::invalid_argument("readmission spec: no classes");
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (classes[c].horizon() != horizon)
            throw std::invalid_argument("readmission spec: class " + std::to_string(c) +
                                        " risk table length != horizon");
        for (int h = 0; h < horizon; ++h) {
            for (int a = 0; a < 2; ++a) {
                double p = classes[c].p[h][a];
                if (!(p >= 0.0 && p <= 1.0))
                    throw std::invalid_argument("readmission spec: probability out of [0,1]");
            }
            if (warnings && classes[c].p[h][0] < classes[c].p[h][1])
                warnings->push_back("class " + std::to_string(c) + " week " + std::to_string(h + 1) +
                                    ": treated risk exceeds untreated risk");
        }
    }
    if (!weekly_arrivals.empty() && weekly_arrivals.size() != classes.size())
        throw std::invalid_argument("readmission spec: arrivals length != classes");
}

void SyntheticSpec::validate() const {
    if (horizon < 1) throw std::invalid_argument("synthetic spec: horizon must be positive");
    if (classes.empty()) throw std::invalid_argument("synthetic spec: no classes");
    for (const auto& cls : classes) {
        if (static_cast<int>(cls.alpha.size()) != horizon)
            throw std::invalid_argument("synthetic spec: alpha length != horizon for " + cls.name);
        double sum = 0.0;
        for (double a : cls.alpha) {
            if (a < 0.0) throw std::invalid_argument("synthetic spec: negative alpha in " + cls.name);
            sum += a;
        }
        if (std::abs(sum - 1.0) > kRowSumTol)
            throw std::invalid_argument("synthetic spec: alpha for " + cls.name + " sums to " +
                                        std::to_string(sum));
        if (!(cls.feature_std > 0.0))
            throw std::invalid_argument("synthetic spec: feature std must be positive");
        // Risks must stay inside (0,1) over a 4-std feature range.
        for (double x : {cls.feature_mean - 4.0 * cls.feature_std,
                         cls.feature_mean + 4.0 * cls.feature_std})
            for (int a = 0; a < 2; ++a) {
                double p = cls.c1 * a + cls.c2 * x + cls.c3;
                if (!(p > 0.0 && p < 1.0))
                    throw std::invalid_argument("synthetic spec: risk leaves (0,1) for " +
                                                cls.name + " at x=" + std::to_string(x));
            }
    }
}

std::vector<int> SyntheticSpec::target_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].is_target) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> SyntheticSpec::historical_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (!classes[i].is_target) out.push_back(static_cast<int>(i));
    return out;
}

namespace {
double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }
}  // namespace

RiskTable synthetic_weekly_probs(const SyntheticSpec& spec, int class_index, double x) {
    const auto& cls = spec.classes.at(class_index);
    RiskTable table;
    table.p.resize(spec.horizon);
    for (int h = 0; h < spec.horizon; ++h)
        for (int a = 0; a < 2; ++a)
            table.p[h][a] = clamp01(cls.alpha[h] * clamp01(cls.c1 * a + cls.c2 * x + cls.c3));
    return table;
}

RiskTable synthetic_weekly_probs(const SyntheticSpec& spec, int class_index) {
    return synthetic_weekly_probs(spec, class_index, spec.classes.at(class_index).feature_mean);
}

RiskTable synthetic_weekly_probs_class_average(const SyntheticSpec& spec, int class_index) {
    const auto& cls = spec.classes.at(class_index);
    double base0 = cls.avg_prob_untreated
                       ? *cls.avg_prob_untreated
                       : clamp01(cls.c2 * cls.feature_mean + cls.c3);
    double base1 = cls.avg_prob_treated
                       ? *cls.avg_prob_treated
                       : clamp01(cls.c1 + cls.c2 * cls.feature_mean + cls.c3);
    RiskTable table;
    table.p.resize(spec.horizon);
    for (int h = 0; h < spec.horizon; ++h) {
        table.p[h][0] = clamp01(cls.alpha[h] * base0);
        table.p[h][1] = clamp01(cls.alpha[h] * base1);
    }
    return table;
}

FiniteHorizonMdp build_readmission_mdp(const RiskTable& risks, double cost_intervention,
                                       double cost_readmission) {
    const int H = risks.horizon();
    FiniteHorizonMdp mdp = make_mdp(H, 2, 2, Objective::MinimizeCost);
    mdp.initial_state = 0;
    mdp.absorbing_state = 1;
    mdp.reward_model = RewardModel::TransitionEvent;
    mdp.event_payoff = Grid4<double>(H, 2, 2, 2, 0.0);
    for (int h = 0; h < H; ++h) {
        for (int a = 0; a < 2; ++a) {
            double p = risks.p[h][a];
            double action_cost = a == 1 ? cost_intervention : 0.0;
            mdp.reward(h, 0, a) = action_cost + cost_readmission * p;
            mdp.transition(h, 0, a, 0) = 1.0 - p;
            mdp.transition(h, 0, a, 1) = p;
            mdp.event_payoff(h, 0, a, 0) = action_cost;
            mdp.event_payoff(h, 0, a, 1) = action_cost + cost_readmission;
            // Absorbing state: free self-loop.
            mdp.reward(h, 1, a) = 0.0;
            mdp.transition(h, 1, a, 1) = 1.0;
        }
    }
    mdp.validate();
    return mdp;
}

FiniteHorizonMdp build_readmission_mdp(const ReadmissionSpec& spec, int class_index) {
    return build_readmission_mdp(spec.classes.at(class_index), spec.cost_intervention,
                                 spec.cost_readmission);
}

namespace {

DeterministicPolicy behavior_to_policy(const BehaviorPolicy& behavior,
                                       const FiniteHorizonMdp& mdp, Rng& rng) {
    switch (behavior.kind) {
        case BehaviorPolicy::Kind::AllZero:
            return DeterministicPolicy(mdp.horizon, mdp.num_states, 0);
        case BehaviorPolicy::Kind::Fixed:
            return behavior.fixed;
        case BehaviorPolicy::Kind::UniformRandom: {
            DeterministicPolicy p(mdp.horizon, mdp.num_states, 0);
            for (auto& a : p.action) a = rng.uniform_int(mdp.num_actions);
            return p;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

HistoricalDataset generate_historical_dataset(const std::vector<FiniteHorizonMdp>& group_mdps,
                                              const BehaviorPolicy& behavior,
                                              const std::vector<long long>& sizes, Rng& rng,
                                              PrivacyMode privacy) {
    if (group_mdps.empty()) throw std::invalid_argument("historical generation: no groups");
    if (sizes.size() != group_mdps.size())
        throw std::invalid_argument("historical generation: sizes length != groups");
    const auto& first = group_mdps.front();
    HistoricalDataset out;
    for (std::size_t k = 0; k < group_mdps.size(); ++k) {
        const auto& mdp = group_mdps[k];
        if (mdp.horizon != first.horizon || mdp.num_states != first.num_states ||
            mdp.num_actions != first.num_actions)
            throw std::invalid_argument("historical generation: group dimensions differ");
        for (long long i = 0; i < sizes[k]; ++i) {
            DeterministicPolicy pol = behavior_to_policy(behavior, mdp, rng);
            Trajectory traj = simulate_episode(mdp, pol, rng);
            for (const auto& step : traj.steps)
                out.samples.push_back({static_cast<int>(k), step.h, step.state, step.action,
                                       step.reward, step.next_state, 0.0, false});
        }
    }
    out.aggregates = aggregate_samples(out.samples, static_cast<int>(group_mdps.size()),
                                       first.horizon, first.num_states, first.num_actions);
    if (privacy == PrivacyMode::AggregatesOnly) {
        out.samples.clear();
        out.samples_available = false;
    }
    return out;
}

double draw_feature(const SyntheticClass& cls, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        double x = rng.normal(cls.feature_mean, cls.feature_std);
        bool ok = true;
        for (int a = 0; a < 2 && ok; ++a) {
            double p = cls.c1 * a + cls.c2 * x + cls.c3;
            ok = p > 0.0 && p < 1.0;
        }
        if (ok) return x;
    }
    return cls.feature_mean;
}

HistoricalDataset generate_synthetic_historical(const SyntheticSpec& spec,
                                                const std::vector<long long>& sizes_per_class,
                                                const BehaviorPolicy& behavior, Rng& rng,
                                                PrivacyMode privacy) {
    auto hist = spec.historical_indices();
    if (sizes_per_class.size() != hist.size())
        throw std::invalid_argument("synthetic historical: sizes length != historical classes");
    HistoricalDataset out;
    for (std::size_t k = 0; k < hist.size(); ++k) {
        const auto& cls = spec.classes[hist[k]];
        for (long long i = 0; i < sizes_per_class[k]; ++i) {
            double x = draw_feature(cls, rng);
            FiniteHorizonMdp mdp = build_readmission_mdp(
                synthetic_weekly_probs(spec, hist[k], x), spec.cost_intervention,
                spec.cost_readmission);
            DeterministicPolicy pol = behavior_to_policy(behavior, mdp, rng);
            Trajectory traj = simulate_episode(mdp, pol, rng);
            for (const auto& step : traj.steps)
                out.samples.push_back({static_cast<int>(k), step.h, step.state, step.action,
                                       step.reward, step.next_state, x, true});
        }
    }
    out.aggregates = aggregate_samples(out.samples, static_cast<int>(hist.size()), spec.horizon,
                                       2, 2);
    if (privacy == PrivacyMode::AggregatesOnly) {
        out.samples.clear();
        out.samples_available = false;
    }
    return out;
}

}  // namespace dprl
