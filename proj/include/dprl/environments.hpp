#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dprl/aggregates.hpp"
#include "dprl/mdp.hpp"
#include "dprl/rng.hpp"

namespace dprl {

// Weekly risk table for one patient class of the 2-state post-discharge
// model: p[h][a] is the probability of entering the absorbing (readmitted)
// state in week h (0-based) under action a.
struct RiskTable {
    std::vector<std::array<double, 2>> p;  // horizon rows

    int horizon() const { return static_cast<int>(p.size()); }
};

// 2-state absorbing intervention environment: one or more patient classes
// over a shared horizon with intervention cost c_a and adverse-event
// penalty c_R.
struct ReadmissionSpec {
    int horizon = 4;
    double cost_intervention = 0.13;  // c_a
    double cost_readmission = 10.0;   // c_R
    std::vector<RiskTable> classes;
    std::vector<int> weekly_arrivals;          // per class, default 1
    std::vector<std::string> class_names;

    double beta() const { return cost_intervention / cost_readmission; }
    // Treatment effect p_{h,0} - p_{h,1} for one class.
    double effect(int cls, int h) const { return classes[cls].p[h][0] - classes[cls].p[h][1]; }
    // Peak epoch h_c (0-based): argmax over h of the untreated risk,
    // earliest on ties.
    int peak_epoch(int cls) const;

    // Validates ranges; emits a warning line per violated treatment
    // ordering p_{h,0} >= p_{h,1} into `warnings` if given.
    void validate(std::vector<std::string>* warnings = nullptr) const;
};

// Synthetic generator of the two-target/two-historical construction: the
// 30-day risk is linear, p_i(a,x) = c1 a + c2 x + c3 with x ~ N(mu_i,
// sigma_i^2), and week h receives the share alpha_i^h of that risk.
struct SyntheticClass {
    std::string name;
    bool is_target = false;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double feature_mean = 0.0;
    double feature_std = 1.0;
    std::vector<double> alpha;      // temporal split, sums to 1
    double mixture_prob = 0.0;      // q_i within its role
    // Published class-average 30-day probabilities (without / with
    // intervention); fall back to the analytic value at the feature mean
    // when absent.
    std::optional<double> avg_prob_untreated;
    std::optional<double> avg_prob_treated;
};

struct SyntheticSpec {
    int horizon = 4;
    double cost_intervention = 0.13;
    double cost_readmission = 10.0;
    std::vector<SyntheticClass> classes;
    int arrivals_per_iteration = 1;   // per target class

    void validate() const;
    std::vector<int> target_indices() const;
    std::vector<int> historical_indices() const;
};

// Weekly table p_{h,a} = alpha_i^h * clamp(c1 a + c2 x + c3, 0, 1) for one
// class at feature value x.
RiskTable synthetic_weekly_probs(const SyntheticSpec& spec, int class_index, double x);
// Same at the class feature mean.
RiskTable synthetic_weekly_probs(const SyntheticSpec& spec, int class_index);
// Weekly table from the class-average 30-day probabilities (published
// column when present, analytic mean otherwise). This is the route that
// reproduces the paper's weekly table within rounding.
RiskTable synthetic_weekly_probs_class_average(const SyntheticSpec& spec, int class_index);

// Builds the 2-state cost-framed MDP for one risk table: state 0 alive,
// state 1 absorbing; cost(h,0,a) = c_a 1(a=1) + c_R p_{h,a}; realized costs
// are transition events (c_a on treat, plus c_R on absorption).
FiniteHorizonMdp build_readmission_mdp(const RiskTable& risks, double cost_intervention,
                                       double cost_readmission);
FiniteHorizonMdp build_readmission_mdp(const ReadmissionSpec& spec, int class_index);

enum class PrivacyMode { Samples, AggregatesOnly };

// Historical data: per-sample records and/or the derived aggregate view.
// In AggregatesOnly mode the per-sample records are dropped after
// aggregation.
struct HistoricalDataset {
    std::vector<SampleRecord> samples;
    AggregateStats aggregates;
    bool samples_available = true;
};

struct BehaviorPolicy {
    enum class Kind { AllZero, UniformRandom, Fixed } kind = Kind::AllZero;
    DeterministicPolicy fixed;
};

// Simulates `sizes[k]` episodes from each group MDP under the behavior
// policy and aggregates them. Features, when supplied per group, are drawn
// per episode (readmission groups built per-patient are handled by the
// synthetic generator below instead).
HistoricalDataset generate_historical_dataset(const std::vector<FiniteHorizonMdp>& group_mdps,
                                              const BehaviorPolicy& behavior,
                                              const std::vector<long long>& sizes, Rng& rng,
                                              PrivacyMode privacy = PrivacyMode::Samples);

// Synthetic-spec version: draws per-patient features, builds the
// per-patient weekly MDP, simulates, and tags records with the feature.
HistoricalDataset generate_synthetic_historical(const SyntheticSpec& spec,
                                                const std::vector<long long>& sizes_per_class,
                                                const BehaviorPolicy& behavior, Rng& rng,
                                                PrivacyMode privacy = PrivacyMode::Samples);

// Truncated feature draw keeping the class risk inside (0,1) over the
// linear model (resamples up to a cap, then clamps).
double draw_feature(const SyntheticClass& cls, Rng& rng);

}  // namespace dprl
