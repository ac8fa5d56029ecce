#pragma once

#include <cstdint>
#include <vector>

#include "rpq/kernel.hpp"
#include "rpq/report.hpp"
#include "rpq/series.hpp"

namespace rpq {

/// sum_{n>=0} |a_n| R(p^n, q^n) r^n, accumulated by log-sum-exp. The n = 0
/// weight is R(1,1) = 0, so this is a seminorm whose kernel is the constants.
double weighted_norm(const DeformedContext& ctx, const TruncatedSeries& f, double r);

/// Max of |f| over `samples` equispaced points of the circle |z| = radius.
double sampled_circle_sup(const TruncatedSeries& f, double radius, int samples);

inline constexpr double kCoefficientBoundRelTol = 1e-12;
inline constexpr double kSupDiskBoundAbsTol = 1e-10;
inline constexpr double kOperatorNormRelTol = 1e-9;
inline constexpr int kDefaultCircleSamples = 256;
inline constexpr int kDefaultTailWindow = 32;

/// |a_n| <= ||f||_{R,r} / (R(p^n,q^n) r^n) for 1 <= n <= N. Index 0 is
/// skipped: its weight is zero.
BoundCheckReport coefficient_bound_check(const DeformedContext& ctx, const TruncatedSeries& f, double r);

/// Sampled sup of |f| on |z| = rho_eval against
///   |a_0| + ||f||_{R,r} * sum_{n=1}^{N_cap} (rho_eval/r)^n / R(p^n,q^n).
/// The constant term is bounded separately because the weighted norm does
/// not see it.
BoundCheckReport sup_disk_bound_check(const DeformedContext& ctx, const TruncatedSeries& f, double r,
                                      double rho_eval, int samples = kDefaultCircleSamples);

enum class RadiusMode {
  Paper,      // limsup (|a_k| / [k]!)^{1/k}
  Classical,  // limsup |a_k|^{1/k}
};

/// Reciprocal of the max over the last tail_window indices of the mode's
/// root test. +inf when every tail coefficient vanishes.
double cauchy_hadamard_radius(const DeformedContext& ctx, const TruncatedSeries& f, RadiusMode mode,
                              int tail_window = kDefaultTailWindow);

/// Weights w_m(k) = C_m exp(lambda_m k^2), m = 1..M.
struct SeminormFamily {
  std::vector<double> c;
  std::vector<double> lambda;

  int size() const noexcept { return static_cast<int>(c.size()); }
};

/// p_m(f) = max_k |a_k| / w_m(k), with m 1-based.
double seminorm(const SeminormFamily& family, int m, const TruncatedSeries& f);

/// 1 / (rho (1 - p r / rho)): operator-norm constant of the composite
/// derivative for R(u,v) = u - v between sup norms on |z| = rho and |z| = r.
double difference_kernel_operator_bound(double p, double r, double rho);

/// One polynomial: sampled ||d f||_r <= bound * sampled ||f||_rho.
BoundCheckReport operator_norm_inequality_single(const DeformedContext& ctx, const TruncatedSeries& f, double r,
                                                 double rho, int samples = kDefaultCircleSamples);

/// `trials` random polynomials of the given order drawn from `seed`.
BoundCheckReport operator_norm_inequality_check(const DeformedContext& ctx, double r, double rho, int trials,
                                                int order, std::uint64_t seed,
                                                int samples = kDefaultCircleSamples);

}  // namespace rpq
