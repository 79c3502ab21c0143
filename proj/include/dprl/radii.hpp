#pragma once

#include <functional>
#include <span>

namespace dprl {

// Parameters entering the confidence-radius formulas. `delta` is the
// confidence level, `difference_gap` the known (or estimated) bound on the
// per-cell reward and L1 transition discrepancy between target and
// historical models, and `gap_scale` the hyper-parameter gamma applied when
// the gap is estimated from data.
struct RadiusParams {
    double delta = 0.1;
    int horizon = 1;
    int num_states = 1;
    int num_actions = 1;
    long long total_iterations = 1;  // T
    double difference_gap = 0.0;     // Delta >= 0
    double gap_scale = 1.0;          // gamma > 0

    void validate() const;

    // log(2 H S A T / delta), the deviation budget shared by all radii.
    double log_term() const;
};

struct ConfidenceRadii {
    double eps_r = 0.0;
    double eps_p = 0.0;
    double eps_v = 0.0;
};

// Hoeffding radii for plain target-data MLEs:
//   eps_R(n) = sqrt(log(2HSAT/delta) / 2n)
//   eps_P(n) = sqrt(2 (S log 2 + log(2HSAT/delta)) / n)
//   eps_V(n) = H eps_R(n)
// with the trivial caps (1, 2, H) at n = 0.
ConfidenceRadii hoeffding_radii(long long n, const RadiusParams& params);

struct PoolingWeight {
    double lambda = 1.0;
    bool guard_triggered = false;  // radicand lost positivity; fell back to 1
};

// Closed-form weight minimizing the pooled reward radius over [0,1]:
// lambda = 1 once n >= log(2HSAT/delta) / (2 Delta^2) (or with no historical
// data), otherwise (n + N n Delta / sqrt((N+n) log(2HSAT/delta)/2
// - Delta^2 N n)) / (N + n). A radicand that loses positivity outside the
// guaranteed regime falls back to lambda = 1 with a diagnostic flag.
PoolingWeight pooling_weight(long long n, long long N, const RadiusParams& params);

// Pooled radii at an arbitrary weight:
//   eps_R(l) = sqrt(log(2HSAT/d) (l^2/2n + (1-l)^2/2N)) + Delta (1-l)
//   eps_P(l) = sqrt(2 (S log2 + log(2HSAT/d)) (l^2/n + (1-l)^2/N)) + (1-l) Delta
//   eps_V(l) = H eps_R(l)
// At lambda == 1 this returns hoeffding_radii(n) exactly (same code path),
// so the no-pooling collapse is bitwise. lambda < 1 with N = 0 throws.
ConfidenceRadii pooling_radii(double lambda, long long n, long long N,
                              const RadiusParams& params);

// Difference-gap estimate: gamma * ||P_target - P_group||_1. An
// uninformative target estimate should instead use the trivial cap
// 2 * gamma (the maximal L1 distance between distributions).
double estimate_delta(std::span<const double> target_transition,
                      std::span<const double> group_transition, double gamma);
double delta_trivial_cap(double gamma);

// Diagnostic evaluation of the regret-bound expression
//   (1 + 2/p0) H S A sum_{n=1..ceil(T/SA)} (eps_R(n) + H (W+1) eps_P(n)
//    + W eps_V(n)) + 4 H T delta
// for a caller-supplied radius schedule. p0 and w_bar depend on the
// perturbation distribution (UCB: p0 = 1; Gaussian: p0 = Phi(-1)); w_bar
// has no closed form for the Gaussian case and is supplied by the caller.
double regret_bound_diagnostic(const RadiusParams& params, double p0, double w_bar,
                               const std::function<ConfidenceRadii(long long)>& radii_at);
double regret_bound_diagnostic_hoeffding(const RadiusParams& params, double p0, double w_bar);
double regret_bound_diagnostic_pooling(const RadiusParams& params, double p0, double w_bar,
                                       long long historical_n);

inline constexpr double kUcbP0 = 1.0;
// Phi(-1) for the Gaussian perturbation family.
inline constexpr double kGaussianP0 = 0.15865525393145705;

}  // namespace dprl
