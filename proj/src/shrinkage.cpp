#include "dprl/shrinkage.hpp"

#include <cmath>
#include <stdexcept>

namespace dprl {

JsWeights js_weights_from_moments(std::span<const double> means,
                                  std::span<const double> within_ss,
                                  std::span<const long long> sizes) {
    if (means.empty() || means.size() != within_ss.size() || means.size() != sizes.size())
        throw std::invalid_argument("js_weights: inconsistent class moments");
    const int K = static_cast<int>(means.size()) - 1;  // historical classes
    JsWeights out;
    out.lambda.assign(means.size(), 0.0);
    out.lambda[0] = 1.0;
    if (K < 3) {
        out.degenerate = true;
        return out;
    }

    double grand = 0.0;
    int populated = 0;
    for (std::size_t k = 0; k < means.size(); ++k) {
        if (sizes[k] <= 0) continue;
        grand += means[k];
        ++populated;
    }
    if (populated == 0) {
        out.degenerate = true;
        return out;
    }
    grand /= static_cast<double>(populated);

    double spread = 0.0;
    for (std::size_t k = 0; k < means.size(); ++k)
        if (sizes[k] > 0) spread += (means[k] - grand) * (means[k] - grand);
    if (spread <= 0.0) {
        out.degenerate = true;
        return out;  // all class means equal: shrinkage target undefined
    }

    double hist_sum = 0.0;
    for (std::size_t k = 1; k < means.size(); ++k) {
        if (sizes[k] <= 0) continue;
        double raw = 1.0 - static_cast<double>(K - 2) * within_ss[k] /
                               (static_cast<double>(sizes[k]) * spread);
        double clamped = std::min(std::max(raw, 0.0), 1.0);
        out.lambda[k] = clamped;
        hist_sum += clamped;
    }
    if (hist_sum > 1.0) {
        for (std::size_t k = 1; k < means.size(); ++k) out.lambda[k] /= hist_sum;
        out.lambda[0] = 0.0;
    } else {
        out.lambda[0] = 1.0 - hist_sum;
    }
    return out;
}

JsWeights js_weights(std::span<const std::vector<double>> samples) {
    if (samples.empty()) throw std::invalid_argument("js_weights: no classes");
    std::vector<double> means(samples.size(), 0.0), within(samples.size(), 0.0);
    std::vector<long long> sizes(samples.size(), 0);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        sizes[k] = static_cast<long long>(samples[k].size());
        if (samples[k].empty()) continue;
        for (double q : samples[k]) means[k] += q;
        means[k] /= static_cast<double>(samples[k].size());
        for (double q : samples[k]) within[k] += (q - means[k]) * (q - means[k]);
    }
    return js_weights_from_moments(means, within, sizes);
}

bool cluster_membership(std::span<const double> group_estimate,
                        std::span<const double> target_estimate, long long n_t, double c) {
    if (group_estimate.size() != target_estimate.size())
        throw std::invalid_argument("cluster_membership: estimate lengths differ");
    if (n_t < 0) throw std::invalid_argument("cluster_membership: negative sample count");
    if (n_t == 0) return true;
    double sq = 0.0;
    for (std::size_t i = 0; i < group_estimate.size(); ++i) {
        double d = group_estimate[i] - target_estimate[i];
        sq += d * d;
    }
    return std::sqrt(sq) <= c / std::sqrt(static_cast<double>(n_t));
}

}  // namespace dprl
