#include "dprl/multigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dprl {

namespace {

// Coefficients of the unified objective sqrt(c0 (L^2 wt + sum l_k^2 w_k))
// + bias sum d_k l_k over the active (N_k > 0) groups.
struct Coeffs {
    double c0 = 0.0;
    double wt = 0.0;                // weight on (1 - sum)^2
    std::vector<double> wk;         // weight on l_k^2
    std::vector<double> dk;         // bias slope
};

Coeffs make_coeffs(long long n, std::span<const long long> sizes, std::span<const double> deltas,
                   const RadiusParams& params, const MultiGroupObjective& objective) {
    Coeffs c;
    const double nn = static_cast<double>(n);
    if (objective.mode == WeightMode::Theoretical) {
        c.c0 = params.log_term();
        c.wt = 1.0 / (2.0 * nn);
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            c.wk.push_back(1.0 / (2.0 * static_cast<double>(sizes[k])));
            c.dk.push_back(deltas[k]);
        }
    } else {
        const int h = objective.epoch;
        if (h < 1 || h > params.horizon)
            throw std::invalid_argument("multi_group_weights: case-study epoch out of range");
        const double horizon_factor = 1.0 + static_cast<double>((params.horizon - h)) *
                                                (params.horizon - h);
        c.c0 = std::log(2.0 * params.horizon * params.num_states * params.num_actions * nn * nn) *
               horizon_factor;
        c.wt = 1.0 / nn;
        const double bias_scale = 1.0 + (params.horizon - h);
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            c.wk.push_back(1.0 / static_cast<double>(sizes[k]));
            c.dk.push_back(bias_scale * deltas[k]);
        }
    }
    return c;
}

double eval(const Coeffs& c, std::span<const double> l) {
    double sum = 0.0, quad = 0.0, bias = 0.0;
    for (std::size_t k = 0; k < l.size(); ++k) {
        sum += l[k];
        quad += l[k] * l[k] * c.wk[k];
        bias += l[k] * c.dk[k];
    }
    const double rest = 1.0 - sum;
    return std::sqrt(c.c0 * (rest * rest * c.wt + quad)) + bias;
}

void grad(const Coeffs& c, std::span<const double> l, std::vector<double>& g) {
    double sum = 0.0, quad = 0.0;
    for (std::size_t k = 0; k < l.size(); ++k) {
        sum += l[k];
        quad += l[k] * l[k] * c.wk[k];
    }
    const double rest = 1.0 - sum;
    const double root = std::sqrt(c.c0 * (rest * rest * c.wt + quad));
    g.assign(l.size(), 0.0);
    for (std::size_t k = 0; k < l.size(); ++k) {
        double dq = c.c0 * (-2.0 * rest * c.wt + 2.0 * l[k] * c.wk[k]);
        g[k] = (root > 0.0 ? dq / (2.0 * root) : 0.0) + c.dk[k];
    }
}

}  // namespace

void project_simplex_box(std::vector<double>& x) {
    double clipped_sum = 0.0;
    for (double& v : x) {
        if (v < 0.0) v = 0.0;
        clipped_sum += v;
    }
    if (clipped_sum <= 1.0) return;  // nonnegativity clip is the projection
    // Project onto the full simplex {x >= 0, sum = 1} (sorted threshold).
    std::vector<double> sorted(x);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cumulative = 0.0, theta = 0.0;
    int support = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cumulative += sorted[i];
        double t = (cumulative - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - t > 0.0) {
            theta = t;
            support = static_cast<int>(i + 1);
        }
    }
    (void)support;
    for (double& v : x) v = std::max(0.0, v - theta);
}

double multi_group_objective(std::span<const double> weights, long long n,
                             std::span<const long long> group_sizes,
                             std::span<const double> group_deltas, const RadiusParams& params,
                             const MultiGroupObjective& objective) {
    if (weights.size() != group_sizes.size() || weights.size() != group_deltas.size())
        throw std::invalid_argument("multi_group_objective: length mismatch");
    // Zero-size groups contribute only through their (zero) weight.
    std::vector<double> l;
    std::vector<long long> sizes;
    std::vector<double> deltas;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (group_sizes[k] == 0) {
            if (weights[k] != 0.0)
                throw std::invalid_argument("multi_group_objective: weight on empty group");
            continue;
        }
        l.push_back(weights[k]);
        sizes.push_back(group_sizes[k]);
        deltas.push_back(group_deltas[k]);
    }
    Coeffs c = make_coeffs(n, sizes, deltas, params, objective);
    return eval(c, l);
}

MultiGroupResult multi_group_weights(long long n, std::span<const long long> group_sizes,
                                     std::span<const double> group_deltas,
                                     const RadiusParams& params,
                                     const MultiGroupObjective& objective, int max_iterations) {
    if (n < 1) throw std::invalid_argument("multi_group_weights: requires n >= 1");
    if (group_sizes.size() != group_deltas.size())
        throw std::invalid_argument("multi_group_weights: length mismatch");
    if (group_sizes.empty()) throw std::invalid_argument("multi_group_weights: no groups");

    // Active set: groups with samples.
    std::vector<int> active;
    std::vector<long long> sizes;
    std::vector<double> deltas;
    for (std::size_t k = 0; k < group_sizes.size(); ++k) {
        if (group_sizes[k] > 0) {
            active.push_back(static_cast<int>(k));
            sizes.push_back(group_sizes[k]);
            deltas.push_back(group_deltas[k]);
        }
    }
    MultiGroupResult out;
    out.group_weights.assign(group_sizes.size(), 0.0);
    if (active.empty()) {
        out.target_weight = 1.0;
        out.objective = hoeffding_radii(n, params).eps_r;
        out.converged = true;
        return out;
    }

    Coeffs c = make_coeffs(n, sizes, deltas, params, objective);
    const std::size_t K = sizes.size();

    // Warm start from the merged-single-group solution mapped back through
    // l_k = N_k lambda_hist / sum N (exact when all deltas are equal).
    std::vector<double> l(K, 0.0);
    {
        long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
        double weighted_delta = 0.0;
        for (std::size_t k = 0; k < K; ++k)
            weighted_delta += deltas[k] * static_cast<double>(sizes[k]);
        weighted_delta /= static_cast<double>(total);
        RadiusParams merged = params;
        merged.difference_gap = weighted_delta;
        double lambda_hist = 1.0 - pooling_weight(n, total, merged).lambda;
        for (std::size_t k = 0; k < K; ++k)
            l[k] = lambda_hist * static_cast<double>(sizes[k]) / static_cast<double>(total);
    }
    project_simplex_box(l);

    // FISTA with backtracking; objective is convex on the compact set B.
    std::vector<double> y = l, l_prev = l, g(K), trial(K), best = l;
    double t_momentum = 1.0;
    double step = 1.0;
    double f_best = eval(c, l);
    const double tol = 1e-12;
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        grad(c, y, g);
        double f_y = eval(c, y);
        // Backtracking on the proximal step from y.
        double f_trial = 0.0;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t k = 0; k < K; ++k) trial[k] = y[k] - step * g[k];
            project_simplex_box(trial);
            f_trial = eval(c, trial);
            double quad = f_y;
            for (std::size_t k = 0; k < K; ++k) {
                double d = trial[k] - y[k];
                quad += g[k] * d + d * d / (2.0 * step);
            }
            if (f_trial <= quad + 1e-16) break;
            step *= 0.5;
        }
        double move = 0.0;
        for (std::size_t k = 0; k < K; ++k) move = std::max(move, std::abs(trial[k] - l[k]));
        l_prev = l;
        l = trial;
        if (f_trial < f_best) {
            f_best = f_trial;
            best = l;
        }
        // Momentum with restart when the objective backslides.
        double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
        if (f_trial > f_best + 1e-15) {
            y = l;
            t_momentum = 1.0;
        } else {
            for (std::size_t k = 0; k < K; ++k)
                y[k] = l[k] + (t_momentum - 1.0) / t_next * (l[k] - l_prev[k]);
            project_simplex_box(y);
            t_momentum = t_next;
        }
        step = std::min(step * 2.0, 1e6);
        if (move < tol) {
            ++iter;
            break;
        }
    }

    out.objective = f_best;
    for (std::size_t k = 0; k < K; ++k) out.group_weights[active[k]] = best[k];
    out.target_weight = 1.0 - std::accumulate(best.begin(), best.end(), 0.0);
    out.iterations = iter;
    out.converged = iter < max_iterations;
    if (!out.converged)
        throw MultiGroupSolveError("multi_group_weights: iteration cap reached", out);
    return out;
}

}  // namespace dprl
