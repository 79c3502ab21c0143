#include "dprl/radii.hpp"

#include <cmath>
#include <stdexcept>

namespace dprl {

void RadiusParams::validate() const {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("radius params: delta must lie in (0,1)");
    if (horizon < 1 || num_states < 1 || num_actions < 1 || total_iterations < 1)
        throw std::invalid_argument("radius params: dimensions must be positive");
    if (!(difference_gap >= 0.0) || !std::isfinite(difference_gap))
        throw std::invalid_argument("radius params: difference gap must be finite nonnegative");
    if (!(gap_scale > 0.0) || !std::isfinite(gap_scale))
        throw std::invalid_argument("radius params: gap scale must be finite positive");
}

double RadiusParams::log_term() const {
    return std::log(2.0 * horizon * num_states * num_actions *
                    static_cast<double>(total_iterations) / delta);
}

ConfidenceRadii hoeffding_radii(long long n, const RadiusParams& params) {
    if (n < 0) throw std::invalid_argument("hoeffding_radii: negative sample count");
    ConfidenceRadii out;
    if (n == 0) {
        out.eps_r = 1.0;
        out.eps_p = 2.0;
        out.eps_v = static_cast<double>(params.horizon);
        return out;
    }
    const double log_term = params.log_term();
    out.eps_r = std::sqrt(log_term / (2.0 * static_cast<double>(n)));
    out.eps_p = std::sqrt(2.0 * (params.num_states * std::log(2.0) + log_term) /
                          static_cast<double>(n));
    out.eps_v = params.horizon * out.eps_r;
    return out;
}

PoolingWeight pooling_weight(long long n, long long N, const RadiusParams& params) {
    if (n < 1) throw std::invalid_argument("pooling_weight: requires n >= 1");
    if (N < 0) throw std::invalid_argument("pooling_weight: negative historical count");
    const double gap = params.difference_gap;
    if (N == 0) return {1.0, false};
    if (gap > 0.0) {
        const double threshold = params.log_term() / (2.0 * gap * gap);
        if (static_cast<double>(n) >= threshold) return {1.0, false};
    }
    const double nn = static_cast<double>(n);
    const double NN = static_cast<double>(N);
    const double radicand = (NN + nn) * params.log_term() / 2.0 - gap * gap * NN * nn;
    if (!(radicand > 0.0)) return {1.0, true};
    double lambda = (nn + NN * nn * gap / std::sqrt(radicand)) / (NN + nn);
    if (!std::isfinite(lambda)) return {1.0, true};
    if (lambda < 0.0) lambda = 0.0;
    if (lambda > 1.0) lambda = 1.0;
    return {lambda, false};
}

ConfidenceRadii pooling_radii(double lambda, long long n, long long N,
                              const RadiusParams& params) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("pooling_radii: lambda outside [0,1]");
    if (n < 1) throw std::invalid_argument("pooling_radii: requires n >= 1");
    if (lambda == 1.0) return hoeffding_radii(n, params);
    if (N < 1) throw std::invalid_argument("pooling_radii: lambda < 1 needs historical samples");

    const double log_term = params.log_term();
    const double gap = params.difference_gap;
    const double nn = static_cast<double>(n);
    const double NN = static_cast<double>(N);
    const double var_half = lambda * lambda / (2.0 * nn) + (1.0 - lambda) * (1.0 - lambda) / (2.0 * NN);
    const double bias = gap * (1.0 - lambda);

    ConfidenceRadii out;
    out.eps_r = std::sqrt(log_term * var_half) + bias;
    out.eps_p = std::sqrt(2.0 * (params.num_states * std::log(2.0) + log_term) * 2.0 * var_half) +
                bias;
    out.eps_v = params.horizon * out.eps_r;
    return out;
}

double estimate_delta(std::span<const double> target_transition,
                      std::span<const double> group_transition, double gamma) {
    if (target_transition.size() != group_transition.size())
        throw std::invalid_argument("estimate_delta: transition lengths differ");
    double l1 = 0.0;
    for (std::size_t i = 0; i < target_transition.size(); ++i)
        l1 += std::abs(target_transition[i] - group_transition[i]);
    return l1 * gamma;
}

double delta_trivial_cap(double gamma) { return 2.0 * gamma; }

double regret_bound_diagnostic(const RadiusParams& params, double p0, double w_bar,
                               const std::function<ConfidenceRadii(long long)>& radii_at) {
    if (!(p0 > 0.0 && p0 <= 1.0))
        throw std::invalid_argument("regret bound: p0 must lie in (0,1]");
    const double H = params.horizon;
    const double SA = static_cast<double>(params.num_states) * params.num_actions;
    const long long upper = static_cast<long long>(
        std::ceil(static_cast<double>(params.total_iterations) / SA));
    double sum = 0.0;
    for (long long n = 1; n <= upper; ++n) {
        ConfidenceRadii r = radii_at(n);
        sum += r.eps_r + H * (w_bar + 1.0) * r.eps_p + w_bar * r.eps_v;
    }
    return (1.0 + 2.0 / p0) * H * SA * sum +
           4.0 * H * static_cast<double>(params.total_iterations) * params.delta;
}

double regret_bound_diagnostic_hoeffding(const RadiusParams& params, double p0, double w_bar) {
    return regret_bound_diagnostic(params, p0, w_bar,
                                   [&](long long n) { return hoeffding_radii(n, params); });
}

double regret_bound_diagnostic_pooling(const RadiusParams& params, double p0, double w_bar,
                                       long long historical_n) {
    return regret_bound_diagnostic(params, p0, w_bar, [&](long long n) {
        PoolingWeight w = pooling_weight(n, historical_n, params);
        return pooling_radii(w.lambda, n, historical_n, params);
    });
}

}  // namespace dprl
