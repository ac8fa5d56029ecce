#pragma once

#include <string_view>
#include <vector>

#include "rpq/gamma.hpp"
#include "rpq/kernel.hpp"

namespace rpq {

enum class GrowthRegime { Bounded, G1Exponential, G2Superexponential, Unclassified };

std::string_view to_string(GrowthRegime regime);

inline constexpr double kRegimeAlphaThreshold = 1e-6;
inline constexpr double kRegimeBetaThreshold = 1e-4;

struct AsymptoticFit {
  double alpha_hat = 0.0;      // coefficient of n^2 in log [n]
  double beta_hat = 0.0;       // coefficient of n
  double intercept_hat = 0.0;
  KWindow window;
  std::vector<double> residuals;
  double max_abs_residual = 0.0;
  GrowthRegime regime = GrowthRegime::Unclassified;
  double lambda_hat = 0.0;     // coefficient of n^2 in log [n]!
};

/// Ordinary least squares of log [n] on {n^2, n, 1} over the window, plus
/// the same fit of log [n]! whose quadratic coefficient is lambda_hat.
///
/// Regime: bounded when |alpha| and |beta| are below their thresholds,
/// G1 when alpha is negligible and beta positive, G2 when alpha is positive.
GrowthRegime classify_growth(double alpha_hat, double beta_hat);
AsymptoticFit fit_log_growth(const DeformedContext& ctx, KWindow window);

/// log [n]! - (alpha_hat/3 n^3 + beta_hat/2 n^2).
double sum_asymptotics_check(const DeformedContext& ctx, const AsymptoticFit& fit, int n);

/// Window used when a caller needs "the" tail growth rate: the upper half
/// of the cache, [ceil(N/2), N].
KWindow default_fit_window(const DeformedContext& ctx);

}  // namespace rpq
