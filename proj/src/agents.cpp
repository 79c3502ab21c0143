#include "dprl/agents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dprl/shrinkage.hpp"

namespace dprl {

Agent::Agent(const AgentConfig& config) : config_(config) {
    config_.radius.validate();
    counts_ = TrajectoryCounts(horizon(), num_states(), num_actions());
    last_policy_ = DeterministicPolicy(horizon(), num_states(), 0);
}

DeterministicPolicy Agent::policy_for_patient(double, Rng&) { return last_policy_; }

void Agent::absorb(const std::vector<Trajectory>& trajectories) {
    for (const auto& traj : trajectories) counts_.absorb(traj);
    ++iteration_;
}

double Agent::draw_cell_noise(double eps_v, Rng& rng) {
    const auto& spec = config_.perturbation;
    double var = spec.ts_variance > 0.0
                     ? spec.ts_variance
                     : static_cast<double>(num_states()) * horizon();
    double xi = rng.normal() * std::sqrt(var);
    if (spec.clip) xi = std::clamp(xi, -*spec.clip, *spec.clip);
    return eps_v * xi;
}

template <typename EstimateFn, typename EpsVFn>
DeterministicPolicy Agent::perturbed_recursion(EstimateFn&& estimate, EpsVFn&& eps_v, Rng& rng) {
    const int H = horizon(), S = num_states(), A = num_actions();
    const auto& spec = config_.perturbation;
    const bool max_sense = maximize();
    std::vector<double> next(S, 0.0), cur(S, 0.0);
    DeterministicPolicy policy(H, S, 0);

    for (int h = H - 1; h >= 0; --h) {
        std::vector<double> w_ha;
        if (spec.kind == PerturbationSpec::Kind::CaseStudyGaussian) {
            w_ha.resize(A);
            for (int a = 0; a < A; ++a) {
                long long n_ha = counts_.visits_ha(h, a);
                double sd = spec.explore_sigma /
                            std::sqrt(static_cast<double>(std::max<long long>(1, n_ha)));
                double z = rng.normal();
                if (spec.clip) z = std::clamp(z, -*spec.clip, *spec.clip);
                w_ha[a] = sd * z;
            }
        }
        for (int s = 0; s < S; ++s) {
            if (is_absorbing(s)) {
                policy.at(h, s) = 0;
                cur[s] = 0.0;
                continue;
            }
            int best_a = 0;
            double best = 0.0;
            for (int a = 0; a < A; ++a) {
                CellEstimate est = estimate(h, s, a, next);
                double w = 0.0;
                switch (spec.kind) {
                    case PerturbationSpec::Kind::CaseStudyGaussian:
                        w = w_ha[a];
                        break;
                    case PerturbationSpec::Kind::UcbConstant: {
                        double mag = std::min(static_cast<double>(H - h),
                                              spec.ucb_multiplier * eps_v(h, s, a));
                        w = max_sense ? mag : -mag;
                        break;
                    }
                    case PerturbationSpec::Kind::GaussianTs:
                        w = draw_cell_noise(eps_v(h, s, a), rng);
                        break;
                }
                double val = est.mean_reward + w;
                for (int sp = 0; sp < S; ++sp) val += est.transition[sp] * next[sp];
                if (a == 0 || (max_sense ? val > best : val < best)) {
                    best = val;
                    best_a = a;
                }
            }
            policy.at(h, s) = best_a;
            cur[s] = best;
        }
        next = cur;
    }
    last_policy_ = policy;
    return policy;
}

namespace {

// Perturbed LSVI on the target MLEs only (the personalized baseline; also
// the base recursion every other tabular agent specializes).
class PersonalizedAgent : public Agent {
public:
    using Agent::Agent;

    DeterministicPolicy policy_for_iteration(int, Rng& rng) override {
        return perturbed_recursion(
            [this](int h, int s, int a, const std::vector<double>&) {
                return counts_.mle(h, s, a);
            },
            [this](int h, int s, int a) {
                return hoeffding_radii(counts_.visits(h, s, a), config_.radius).eps_v;
            },
            rng);
    }
};

CellEstimate copy_group_cell(const GroupStats& g, int h, int s, int a, int S) {
    CellEstimate est;
    est.mean_reward = g.mean_reward(h, s, a);
    est.transition.resize(S);
    for (int sp = 0; sp < S; ++sp) est.transition[sp] = g.transition(h, s, a, sp);
    est.informative = g.n(h, s, a) > 0;
    return est;
}

// Data-pooling perturbed LSVI: pooled estimates with radius-minimizing
// weights and data-pooling noise scales.
class DataPoolingAgent : public Agent {
public:
    DataPoolingAgent(const AgentConfig& config, const HistoricalDataset* historical)
        : Agent(config), historical_(historical) {
        if (historical_) {
            const auto& agg = historical_->aggregates;
            if (agg.num_groups() > 0 &&
                (agg.horizon != horizon() || agg.num_states != num_states() ||
                 agg.num_actions != num_actions()))
                throw std::invalid_argument("data-pooling agent: aggregate dimensions mismatch");
        }
    }

    DeterministicPolicy policy_for_iteration(int, Rng& rng) override {
        const auto* agg = aggregates();
        if (agg == nullptr || agg->num_groups() == 0 || total_historical(*agg) == 0) {
            // No historical data anywhere: bitwise the personalized path.
            return perturbed_recursion(
                [this](int h, int s, int a, const std::vector<double>&) {
                    return counts_.mle(h, s, a);
                },
                [this](int h, int s, int a) {
                    return hoeffding_radii(counts_.visits(h, s, a), config_.radius).eps_v;
                },
                rng);
        }
        if (config_.mode == AgentMode::CaseStudy) return case_study_policy(*agg, rng);
        return theoretical_policy(*agg, rng);
    }

private:
    const AggregateStats* aggregates() const {
        return historical_ ? &historical_->aggregates : nullptr;
    }

    static long long total_historical(const AggregateStats& agg) {
        long long total = 0;
        for (const auto& g : agg.groups)
            for (long long n : g.n.raw()) total += n;
        return total;
    }

    // Fixed global Delta, per-cell sample counts, closed-form weight for a
    // single group and the convex solver for several.
    DeterministicPolicy theoretical_policy(const AggregateStats& agg, Rng& rng) {
        const int S = num_states();
        const int K = agg.num_groups();
        auto estimate = [&](int h, int s, int a, const std::vector<double>&) {
            CellEstimate target = counts_.mle(h, s, a);
            long long n = counts_.visits(h, s, a);
            if (K == 1) {
                long long N = agg.groups[0].n(h, s, a);
                double lambda = single_lambda(n, N);
                if (lambda >= 1.0) return target;
                CellEstimate hist = copy_group_cell(agg.groups[0], h, s, a, S);
                return mix(target, lambda, {{&hist, 1.0 - lambda}});
            }
            std::vector<long long> sizes(K);
            for (int k = 0; k < K; ++k) sizes[k] = agg.groups[k].n(h, s, a);
            std::vector<double> weights = group_weights(n, sizes, h);
            double target_weight = 1.0;
            std::vector<std::pair<const CellEstimate*, double>> parts;
            std::vector<CellEstimate> storage;
            storage.reserve(K);
            for (int k = 0; k < K; ++k) {
                target_weight -= weights[k];
                if (weights[k] > 0.0)
                    storage.push_back(copy_group_cell(agg.groups[k], h, s, a, S));
            }
            std::size_t idx = 0;
            for (int k = 0; k < K; ++k)
                if (weights[k] > 0.0) parts.push_back({&storage[idx++], weights[k]});
            if (parts.empty()) return target;
            return mix(target, target_weight, parts);
        };
        auto eps_v = [&](int h, int s, int a) {
            long long n = counts_.visits(h, s, a);
            if (n == 0) return static_cast<double>(horizon());
            if (K == 1) {
                long long N = agg.groups[0].n(h, s, a);
                if (N == 0) return hoeffding_radii(n, config_.radius).eps_v;
                PoolingWeight w = pooling_weight(n, N, config_.radius);
                return pooling_radii(w.lambda, n, N, config_.radius).eps_v;
            }
            std::vector<long long> sizes(K);
            bool any = false;
            for (int k = 0; k < K; ++k) {
                sizes[k] = agg.groups[k].n(h, s, a);
                any = any || sizes[k] > 0;
            }
            if (!any) return hoeffding_radii(n, config_.radius).eps_v;
            std::vector<double> deltas(K, config_.radius.difference_gap);
            MultiGroupResult res = multi_group_weights(n, sizes, deltas, config_.radius,
                                                       {WeightMode::Theoretical, 1});
            return static_cast<double>(horizon()) * res.objective;
        };
        return perturbed_recursion(estimate, eps_v, rng);
    }

    // Per-(h,a) estimated gaps and weights, refreshed every iteration
    // (remark-2 regime); exploration noise comes from the shared
    // case-study Gaussian in the recursion.
    DeterministicPolicy case_study_policy(const AggregateStats& agg, Rng& rng) {
        const int H = horizon(), S = num_states(), A = num_actions();
        const int K = agg.num_groups();
        const double gamma = config_.radius.gap_scale;

        // weights[h][a] = (target_weight, lambda_1..K)
        std::vector<std::vector<std::pair<double, std::vector<double>>>> weights(
            H, std::vector<std::pair<double, std::vector<double>>>(
                   A, {1.0, std::vector<double>(K, 0.0)}));
        for (int h = 0; h < H; ++h) {
            for (int a = 0; a < A; ++a) {
                std::vector<long long> sizes(K);
                bool any = false;
                for (int k = 0; k < K; ++k) {
                    sizes[k] = agg.groups[k].n_ha(h, a);
                    any = any || sizes[k] > 0;
                }
                if (!any) continue;
                long long n_ha = counts_.visits_ha(h, a);
                std::vector<double> target_p = marginal_target_transition(h, a);
                std::vector<double> deltas(K, delta_trivial_cap(gamma));
                for (int k = 0; k < K; ++k) {
                    if (sizes[k] == 0) continue;
                    if (n_ha > 0)
                        deltas[k] = estimate_delta(target_p, marginal_group_transition(agg, k, h, a),
                                                   gamma);
                }
                if (n_ha == 0) {
                    // Limit of the objective as n -> 0: all weight on the
                    // historical groups, split by sample size.
                    long long total = 0;
                    for (long long v : sizes) total += v;
                    auto& slot = weights[h][a];
                    slot.first = 0.0;
                    for (int k = 0; k < K; ++k)
                        slot.second[k] = static_cast<double>(sizes[k]) / static_cast<double>(total);
                    continue;
                }
                MultiGroupResult res = multi_group_weights(n_ha, sizes, deltas, config_.radius,
                                                           {WeightMode::CaseStudy, h + 1});
                weights[h][a] = {res.target_weight, res.group_weights};
            }
        }

        auto estimate = [&](int h, int s, int a, const std::vector<double>&) {
            CellEstimate target = counts_.mle(h, s, a);
            const auto& slot = weights[h][a];
            if (slot.first >= 1.0) return target;
            std::vector<std::pair<const CellEstimate*, double>> parts;
            std::vector<CellEstimate> storage;
            storage.reserve(K);
            for (int k = 0; k < K; ++k)
                if (slot.second[k] > 0.0)
                    storage.push_back(copy_group_cell(agg.groups[k], h, s, a, S));
            std::size_t idx = 0;
            for (int k = 0; k < K; ++k)
                if (slot.second[k] > 0.0) parts.push_back({&storage[idx++], slot.second[k]});
            if (parts.empty()) return target;
            return mix(target, slot.first, parts);
        };
        auto eps_v = [&](int, int, int) { return 0.0; };  // unused by case-study noise
        return perturbed_recursion(estimate, eps_v, rng);
    }

    double single_lambda(long long n, long long N) {
        if (N == 0) return 1.0;
        if (n == 0) return 0.0;  // no target data: lean on history entirely
        return pooling_weight(n, N, config_.radius).lambda;
    }

    std::vector<double> group_weights(long long n, const std::vector<long long>& sizes, int) {
        const int K = static_cast<int>(sizes.size());
        long long total = 0;
        for (long long v : sizes) total += v;
        if (total == 0) return std::vector<double>(K, 0.0);
        std::vector<double> out(K, 0.0);
        if (n == 0) {
            for (int k = 0; k < K; ++k)
                out[k] = static_cast<double>(sizes[k]) / static_cast<double>(total);
            return out;
        }
        std::vector<double> deltas(K, config_.radius.difference_gap);
        MultiGroupResult res =
            multi_group_weights(n, sizes, deltas, config_.radius, {WeightMode::Theoretical, 1});
        return res.group_weights;
    }

    // Convex combination of target and group estimates; weights sum to 1.
    static CellEstimate mix(const CellEstimate& target, double target_weight,
                            const std::vector<std::pair<const CellEstimate*, double>>& parts) {
        CellEstimate out;
        const std::size_t S = target.transition.size();
        out.transition.assign(S, 0.0);
        out.mean_reward = target_weight * target.mean_reward;
        for (std::size_t sp = 0; sp < S; ++sp)
            out.transition[sp] = target_weight * target.transition[sp];
        for (const auto& [est, w] : parts) {
            out.mean_reward += w * est->mean_reward;
            for (std::size_t sp = 0; sp < S; ++sp) out.transition[sp] += w * est->transition[sp];
        }
        out.informative = true;
        return out;
    }

    std::vector<double> marginal_target_transition(int h, int a) const {
        const int S = num_states();
        std::vector<double> row(S, 0.0);
        long long n = 0;
        for (int s = 0; s < S; ++s) {
            if (is_absorbing(s)) continue;
            n += counts_.visits(h, s, a);
            for (int sp = 0; sp < S; ++sp)
                row[sp] += static_cast<double>(counts_.transition_count(h, s, a, sp));
        }
        if (n == 0) {
            for (int sp = 0; sp < S; ++sp) row[sp] = 1.0 / S;
            return row;
        }
        for (double& v : row) v /= static_cast<double>(n);
        return row;
    }

    static std::vector<double> marginal_group_transition(const AggregateStats& agg, int k, int h,
                                                         int a) {
        const int S = agg.num_states;
        const auto& g = agg.groups[k];
        std::vector<double> row(S, 0.0);
        long long n = 0;
        for (int s = 0; s < S; ++s) {
            long long ns = g.n(h, s, a);
            if (ns == 0) continue;
            n += ns;
            for (int sp = 0; sp < S; ++sp)
                row[sp] += static_cast<double>(ns) * g.transition(h, s, a, sp);
        }
        if (n == 0) return std::vector<double>(S, 1.0 / S);
        for (double& v : row) v /= static_cast<double>(n);
        return row;
    }

    const HistoricalDataset* historical_;
};

// RLSVI on the plain union of target and historical data.
class CompleteAgent : public Agent {
public:
    CompleteAgent(const AgentConfig& config, const HistoricalDataset* historical)
        : Agent(config), historical_(historical) {}

    DeterministicPolicy policy_for_iteration(int, Rng& rng) override {
        const AggregateStats* agg =
            historical_ && historical_->aggregates.num_groups() > 0 ? &historical_->aggregates
                                                                    : nullptr;
        auto merged_cell = [&](int h, int s, int a, long long& n_out) {
            const int S = num_states();
            long long n = counts_.visits(h, s, a);
            double reward_sum = counts_.reward_sum(h, s, a);
            std::vector<double> trans(S, 0.0);
            for (int sp = 0; sp < S; ++sp)
                trans[sp] = static_cast<double>(counts_.transition_count(h, s, a, sp));
            if (agg) {
                for (const auto& g : agg->groups) {
                    long long N = g.n(h, s, a);
                    if (N == 0) continue;
                    n += N;
                    reward_sum += g.mean_reward(h, s, a) * static_cast<double>(N);
                    for (int sp = 0; sp < S; ++sp)
                        trans[sp] += g.transition(h, s, a, sp) * static_cast<double>(N);
                }
            }
            n_out = n;
            CellEstimate est;
            est.transition.resize(S);
            if (n == 0) {
                for (int sp = 0; sp < S; ++sp) est.transition[sp] = 1.0 / S;
                return est;
            }
            est.mean_reward = reward_sum / static_cast<double>(n);
            for (int sp = 0; sp < S; ++sp) est.transition[sp] = trans[sp] / static_cast<double>(n);
            est.informative = true;
            return est;
        };
        return perturbed_recursion(
            [&](int h, int s, int a, const std::vector<double>&) {
                long long n;
                return merged_cell(h, s, a, n);
            },
            [&](int h, int s, int a) {
                long long n;
                merged_cell(h, s, a, n);
                return hoeffding_radii(n, config_.radius).eps_v;
            },
            rng);
    }

private:
    const HistoricalDataset* historical_;
};

// ETO with James-Stein shrinkage across target and historical classes.
class JsAgent : public Agent {
public:
    JsAgent(const AgentConfig& config, const HistoricalDataset* historical)
        : Agent(config), historical_(historical) {
        if (!historical_ || !historical_->samples_available)
            throw std::invalid_argument("js agent: per-sample historical data required");
    }

    DeterministicPolicy policy_for_iteration(int, Rng& rng) override {
        const auto& agg = historical_->aggregates;
        const int K = agg.num_groups();
        const int S = num_states();
        auto estimate = [&](int h, int s, int a, const std::vector<double>& next) {
            CellEstimate target = counts_.mle(h, s, a);
            if (!target.informative || K == 0) return target;

            // Per-class moments of q = rbar_class + V(next): means and
            // within-class sums of squares from transition counts.
            std::vector<double> means(K + 1, 0.0), within(K + 1, 0.0);
            std::vector<long long> sizes(K + 1, 0);
            sizes[0] = counts_.visits(h, s, a);
            {
                double vbar = 0.0;
                for (int sp = 0; sp < S; ++sp) vbar += target.transition[sp] * next[sp];
                means[0] = target.mean_reward + vbar;
                for (int sp = 0; sp < S; ++sp) {
                    double d = target.mean_reward + next[sp] - means[0];
                    within[0] += static_cast<double>(counts_.transition_count(h, s, a, sp)) * d * d;
                }
            }
            for (int k = 0; k < K; ++k) {
                const auto& g = agg.groups[k];
                sizes[k + 1] = g.n(h, s, a);
                if (sizes[k + 1] == 0) continue;
                double vbar = 0.0;
                for (int sp = 0; sp < S; ++sp) vbar += g.transition(h, s, a, sp) * next[sp];
                means[k + 1] = g.mean_reward(h, s, a) + vbar;
                for (int sp = 0; sp < S; ++sp) {
                    double d = g.mean_reward(h, s, a) + next[sp] - means[k + 1];
                    within[k + 1] +=
                        static_cast<double>(sizes[k + 1]) * g.transition(h, s, a, sp) * d * d;
                }
            }
            JsWeights w = js_weights_from_moments(means, within, sizes);
            CellEstimate out;
            out.transition.assign(S, 0.0);
            out.mean_reward = w.lambda[0] * target.mean_reward;
            for (int sp = 0; sp < S; ++sp)
                out.transition[sp] = w.lambda[0] * target.transition[sp];
            for (int k = 0; k < K; ++k) {
                if (w.lambda[k + 1] == 0.0) continue;
                const auto& g = agg.groups[k];
                out.mean_reward += w.lambda[k + 1] * g.mean_reward(h, s, a);
                for (int sp = 0; sp < S; ++sp)
                    out.transition[sp] += w.lambda[k + 1] * g.transition(h, s, a, sp);
            }
            out.informative = true;
            return out;
        };
        return perturbed_recursion(
            estimate,
            [this](int h, int s, int a) {
                return hoeffding_radii(counts_.visits(h, s, a), config_.radius).eps_v;
            },
            rng);
    }

private:
    const HistoricalDataset* historical_;
};

// Hard pooling: per (h,a), merge the historical groups whose empirical
// transition row sits within C/sqrt(n_t) of the target's.
class ClusteringAgent : public Agent {
public:
    ClusteringAgent(const AgentConfig& config, const HistoricalDataset* historical)
        : Agent(config), historical_(historical) {}

    DeterministicPolicy policy_for_iteration(int, Rng& rng) override {
        const AggregateStats* agg =
            historical_ && historical_->aggregates.num_groups() > 0 ? &historical_->aggregates
                                                                    : nullptr;
        const int H = horizon(), S = num_states(), A = num_actions();
        const int K = agg ? agg->num_groups() : 0;

        members_.assign(static_cast<std::size_t>(H) * A * std::max(K, 1), false);
        if (agg) {
            for (int h = 0; h < H; ++h)
                for (int a = 0; a < A; ++a) {
                    long long n_ha = counts_.visits_ha(h, a);
                    std::vector<double> target_p = marginal_target(h, a);
                    for (int k = 0; k < K; ++k) {
                        if (agg->groups[k].n_ha(h, a) == 0) continue;
                        std::vector<double> group_p = marginal_group(*agg, k, h, a);
                        members_[(static_cast<std::size_t>(h) * A + a) * K + k] =
                            cluster_membership(group_p, target_p, n_ha, config_.cluster_c);
                    }
                }
        }

        auto merged_cell = [&](int h, int s, int a, long long& n_out) {
            long long n = counts_.visits(h, s, a);
            double reward_sum = counts_.reward_sum(h, s, a);
            std::vector<double> trans(S, 0.0);
            for (int sp = 0; sp < S; ++sp)
                trans[sp] = static_cast<double>(counts_.transition_count(h, s, a, sp));
            if (agg) {
                for (int k = 0; k < K; ++k) {
                    if (!members_[(static_cast<std::size_t>(h) * A + a) * K + k]) continue;
                    const auto& g = agg->groups[k];
                    long long N = g.n(h, s, a);
                    if (N == 0) continue;
                    n += N;
                    reward_sum += g.mean_reward(h, s, a) * static_cast<double>(N);
                    for (int sp = 0; sp < S; ++sp)
                        trans[sp] += g.transition(h, s, a, sp) * static_cast<double>(N);
                }
            }
            n_out = n;
            CellEstimate est;
            est.transition.resize(S);
            if (n == 0) {
                for (int sp = 0; sp < S; ++sp) est.transition[sp] = 1.0 / S;
                return est;
            }
            est.mean_reward = reward_sum / static_cast<double>(n);
            for (int sp = 0; sp < S; ++sp) est.transition[sp] = trans[sp] / static_cast<double>(n);
            est.informative = true;
            return est;
        };
        return perturbed_recursion(
            [&](int h, int s, int a, const std::vector<double>&) {
                long long n;
                return merged_cell(h, s, a, n);
            },
            [&](int h, int s, int a) {
                long long n;
                merged_cell(h, s, a, n);
                return hoeffding_radii(n, config_.radius).eps_v;
            },
            rng);
    }

    // Membership matrix from the latest policy computation (tests).
    bool member(int h, int a, int k) const {
        return members_[(static_cast<std::size_t>(h) * num_actions() + a) *
                            historical_->aggregates.num_groups() +
                        k];
    }

private:
    std::vector<double> marginal_target(int h, int a) const {
        const int S = num_states();
        std::vector<double> row(S, 0.0);
        long long n = 0;
        for (int s = 0; s < S; ++s) {
            if (is_absorbing(s)) continue;
            n += counts_.visits(h, s, a);
            for (int sp = 0; sp < S; ++sp)
                row[sp] += static_cast<double>(counts_.transition_count(h, s, a, sp));
        }
        if (n == 0) return std::vector<double>(S, 1.0 / S);
        for (double& v : row) v /= static_cast<double>(n);
        return row;
    }

    static std::vector<double> marginal_group(const AggregateStats& agg, int k, int h, int a) {
        const int S = agg.num_states;
        const auto& g = agg.groups[k];
        std::vector<double> row(S, 0.0);
        long long n = 0;
        for (int s = 0; s < S; ++s) {
            long long ns = g.n(h, s, a);
            if (ns == 0) continue;
            n += ns;
            for (int sp = 0; sp < S; ++sp)
                row[sp] += static_cast<double>(ns) * g.transition(h, s, a, sp);
        }
        if (n == 0) return std::vector<double>(S, 1.0 / S);
        for (double& v : row) v /= static_cast<double>(n);
        return row;
    }

    const HistoricalDataset* historical_;
    std::vector<bool> members_;
};

}  // namespace

double data_pooling_eps_v(const AgentConfig& config, long long n, long long historical_n) {
    if (n == 0) return static_cast<double>(config.radius.horizon);
    if (historical_n == 0) return hoeffding_radii(n, config.radius).eps_v;
    PoolingWeight w = pooling_weight(n, historical_n, config.radius);
    return pooling_radii(w.lambda, n, historical_n, config.radius).eps_v;
}

std::unique_ptr<Agent> make_contextual_agent(const AgentConfig& config,
                                             const HistoricalDataset* historical);

std::unique_ptr<Agent> make_agent(const AgentConfig& config, const HistoricalDataset* historical) {
    const std::string& tag = config.algorithm;
    if (tag == "personalized") return std::make_unique<PersonalizedAgent>(config);
    if (tag == "data-pooling") return std::make_unique<DataPoolingAgent>(config, historical);
    if (tag == "complete") return std::make_unique<CompleteAgent>(config, historical);
    if (tag == "js") return std::make_unique<JsAgent>(config, historical);
    if (tag == "clustering") return std::make_unique<ClusteringAgent>(config, historical);
    if (tag == "contextual-p" || tag == "contextual-q")
        return make_contextual_agent(config, historical);
    throw std::invalid_argument("unknown agent tag: " + tag);
}

}  // namespace dprl
