#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "dprl/radii.hpp"

namespace dprl {

// Which pooled-radius objective the weight optimizer minimizes. The
// theoretical form is
//   sqrt(log(2HSAT/d) (L^2/2n + sum_k l_k^2/2N_k)) + sum_k D_k l_k
// with L = 1 - sum_k l_k. The case-study form replaces the budget with
// log(2HSA n^2), scales the variance term by (1+(H-h)^2), and the bias term
// by (1+H-h), where h is the 1-based decision epoch.
enum class WeightMode { Theoretical, CaseStudy };

struct MultiGroupObjective {
    WeightMode mode = WeightMode::Theoretical;
    int epoch = 1;  // 1-based h, case-study mode only
};

struct MultiGroupResult {
    std::vector<double> group_weights;  // lambda_k, k = 1..K
    double target_weight = 1.0;         // 1 - sum lambda_k
    double objective = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Thrown when the projected-gradient solve hits the iteration cap; carries
// the best iterate found.
class MultiGroupSolveError : public std::runtime_error {
public:
    MultiGroupSolveError(std::string msg, MultiGroupResult best)
        : std::runtime_error(std::move(msg)), best_iterate(std::move(best)) {}
    MultiGroupResult best_iterate;
};

double multi_group_objective(std::span<const double> weights, long long n,
                             std::span<const long long> group_sizes,
                             std::span<const double> group_deltas, const RadiusParams& params,
                             const MultiGroupObjective& objective);

// Minimizes the selected objective over B = {l_k >= 0, sum l_k <= 1} by
// accelerated projected gradient with backtracking. Groups with N_k = 0 are
// pinned at weight 0. Requires n >= 1. Throws MultiGroupSolveError past
// `max_iterations` without convergence.
MultiGroupResult multi_group_weights(long long n, std::span<const long long> group_sizes,
                                     std::span<const double> group_deltas,
                                     const RadiusParams& params,
                                     const MultiGroupObjective& objective = {},
                                     int max_iterations = 10000);

// Euclidean projection onto {x >= 0, sum x <= 1}; exposed for testing.
void project_simplex_box(std::vector<double>& x);

}  // namespace dprl
