#include "dprl/linreg.hpp"

#include <Eigen/Dense>
#include <limits>
#include <stdexcept>

namespace dprl {

namespace {

Eigen::MatrixXd normal_matrix(std::span<const std::vector<double>> rows, double ridge) {
    if (rows.empty()) throw std::invalid_argument("linear_least_squares: empty design");
    const int p = static_cast<int>(rows.front().size());
    Eigen::MatrixXd xtx = Eigen::MatrixXd::Zero(p, p);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != p)
            throw std::invalid_argument("linear_least_squares: ragged design rows");
        Eigen::Map<const Eigen::VectorXd> x(row.data(), p);
        xtx.noalias() += x * x.transpose();
    }
    xtx.diagonal().array() += ridge;
    return xtx;
}

}  // namespace

std::vector<double> linear_least_squares(std::span<const std::vector<double>> rows,
                                         std::span<const double> targets, double ridge) {
    if (rows.size() != targets.size())
        throw std::invalid_argument("linear_least_squares: rows/targets size mismatch");
    if (ridge < 0.0) throw std::invalid_argument("linear_least_squares: negative ridge");
    Eigen::MatrixXd xtx = normal_matrix(rows, ridge);
    const int p = static_cast<int>(rows.front().size());
    Eigen::VectorXd xty = Eigen::VectorXd::Zero(p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Eigen::Map<const Eigen::VectorXd> x(rows[i].data(), p);
        xty.noalias() += x * targets[i];
    }
    Eigen::VectorXd beta = xtx.ldlt().solve(xty);
    return {beta.data(), beta.data() + p};
}

double normal_equations_condition(std::span<const std::vector<double>> rows, double ridge) {
    Eigen::MatrixXd xtx = normal_matrix(rows, ridge);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(xtx);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

}  // namespace dprl
