#pragma once

#include <span>
#include <vector>

namespace dprl {

struct JsWeights {
    std::vector<double> lambda;  // index 0 = target class, 1..K historical
    bool degenerate = false;     // K < 3 or zero between-class spread
};

// James-Stein-style class weights from per-class observed-Q samples.
// `samples[k]` holds the q_{k,i} draws for class k, with class 0 the
// target. For k >= 1:
//   lambda_k = clamp(1 - (K-2) sum_i (q_{k,i}-qbar_k)^2
//                        / (N_k sum_{l=0..K} (qbar_l - qbar)^2), 0, 1)
// and lambda_0 = 1 - sum lambda_k. Each lambda_k is clamped to [0,1] first;
// if the historical weights then sum past 1 they are renormalized to sum 1
// (lambda_0 = 0). A zero denominator or K < 3 collapses to target-only
// weights with the degenerate flag set.
JsWeights js_weights(std::span<const std::vector<double>> samples);

// Same weights from per-class sufficient statistics: sample means, within-
// class sums of squares sum_i (q_{k,i} - qbar_k)^2, and sample sizes.
// Equivalent to js_weights on the underlying samples; classes with size 0
// are excluded from the between-class spread and get weight 0.
JsWeights js_weights_from_moments(std::span<const double> means,
                                  std::span<const double> within_ss,
                                  std::span<const long long> sizes);

// Hard-clustering membership test: the group joins the pool when
// ||group_estimate - target_estimate||_2 <= C / sqrt(n_t). With n_t = 0 the
// radius is infinite and every group is included.
bool cluster_membership(std::span<const double> group_estimate,
                        std::span<const double> target_estimate, long long n_t, double c);

}  // namespace dprl
