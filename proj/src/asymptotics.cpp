#include "rpq/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>

#include "rpq/error.hpp"

namespace rpq {

namespace {

constexpr int kMinWindow = 3;

// Returns {n^2, n, 1} coefficients. Columns are equilibrated before the QR
// solve; raw n^2 and 1 columns differ by three orders of magnitude at n = 60.
std::array<double, 3> quadratic_least_squares(KWindow window, std::span<const double> values) {
  const int rows = window.size();
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (int i = 0; i < rows; ++i) {
    const double n = window.first + i;
    design(i, 0) = n * n;
    design(i, 1) = n;
    design(i, 2) = 1.0;
    rhs(i) = values[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d scale = design.colwise().lpNorm<Eigen::Infinity>().transpose();
  for (int j = 0; j < 3; ++j) {
    design.col(j) /= scale(j);
  }
  const Eigen::Vector3d solution = design.colPivHouseholderQr().solve(rhs);
  return {solution(0) / scale(0), solution(1) / scale(1), solution(2) / scale(2)};
}

}  // namespace

std::string_view to_string(GrowthRegime regime) {
  switch (regime) {
    case GrowthRegime::Bounded: return "bounded";
    case GrowthRegime::G1Exponential: return "G1-exponential";
    case GrowthRegime::G2Superexponential: return "G2-superexponential";
    case GrowthRegime::Unclassified: return "unclassified";
  }
  return "unclassified";
}

GrowthRegime classify_growth(double alpha_hat, double beta_hat) {
  const bool flat_quadratic = std::abs(alpha_hat) <= kRegimeAlphaThreshold;
  if (flat_quadratic && std::abs(beta_hat) <= kRegimeBetaThreshold) {
    return GrowthRegime::Bounded;
  }
  if (flat_quadratic && beta_hat > kRegimeBetaThreshold) {
    return GrowthRegime::G1Exponential;
  }
  if (alpha_hat > kRegimeAlphaThreshold) {
    return GrowthRegime::G2Superexponential;
  }
  return GrowthRegime::Unclassified;
}

AsymptoticFit fit_log_growth(const DeformedContext& ctx, KWindow window) {
  if (window.size() < kMinWindow) {
    throw Error(ErrorCode::WindowTooSmall,
                "fit window needs at least 3 points, got " + std::to_string(std::max(window.size(), 0)));
  }
  if (window.first < 1 || window.last > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "fit window [" + std::to_string(window.first) + ", " +
                                           std::to_string(window.last) + "] outside cache");
  }

  const auto first = static_cast<std::size_t>(window.first);
  const auto count = static_cast<std::size_t>(window.size());
  const auto numbers = ctx.log_numbers().subspan(first - 1, count);
  const auto factorials = ctx.log_factorials().subspan(first, count);

  const auto [a, b, c] = quadratic_least_squares(window, numbers);
  const auto factorial_fit = quadratic_least_squares(window, factorials);

  AsymptoticFit fit;
  fit.alpha_hat = a;
  fit.beta_hat = b;
  fit.intercept_hat = c;
  fit.window = window;
  fit.residuals.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double n = static_cast<double>(window.first) + static_cast<double>(i);
    const double r = numbers[i] - (a * n * n + b * n + c);
    fit.residuals.push_back(r);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(r));
  }
  fit.regime = classify_growth(a, b);
  fit.lambda_hat = factorial_fit[0];
  return fit;
}

double sum_asymptotics_check(const DeformedContext& ctx, const AsymptoticFit& fit, int n) {
  const double nn = n;
  return ctx.log_factorial(n) - (fit.alpha_hat / 3.0 * nn * nn * nn + fit.beta_hat / 2.0 * nn * nn);
}

KWindow default_fit_window(const DeformedContext& ctx) {
  const int cap = ctx.order_cap();
  return KWindow{(cap + 1) / 2, cap};
}

}  // namespace rpq
