#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "ecdloco/redundancy.hpp"

namespace ecdloco {

ModelFit fit_quadratic(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_quadratic needs at least 3 points");
  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double m = points[static_cast<std::size_t>(k)].first;
    A(k, 0) = m * m;
    A(k, 1) = m;
    A(k, 2) = 1.0;
    y(k) = points[static_cast<std::size_t>(k)].second;
  }
  const Eigen::Vector3d c = A.colPivHouseholderQr().solve(y);
  ModelFit fit{c(0), c(1), c(2), 0.0};
  const Eigen::VectorXd resid = y - A * c;
  const double rmse = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  const double mean = y.mean();
  fit.nrmse = mean != 0.0 ? rmse / std::abs(mean) : rmse;
  return fit;
}

}  // namespace ecdloco
