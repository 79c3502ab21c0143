#pragma once

#include <span>
#include <vector>

namespace dprl {

// Ridge least squares: minimizes ||X b - y||^2 + ridge ||b||^2 via the
// normal equations. `rows` are the design rows (all the same length).
// ridge > 0 guarantees solvability on rank-deficient designs.
std::vector<double> linear_least_squares(std::span<const std::vector<double>> rows,
                                         std::span<const double> targets, double ridge);

// Condition diagnostic of the (ridged) normal matrix from its Cholesky-like
// factorization; large values flag near-singular fits.
double normal_equations_condition(std::span<const std::vector<double>> rows, double ridge);

}  // namespace dprl
