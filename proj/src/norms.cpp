#include "rpq/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rpq/error.hpp"
#include "rpq/format.hpp"
#include "rpq/random.hpp"

namespace rpq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_within_cache(const DeformedContext& ctx, const TruncatedSeries& f) {
  if (f.order() > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "series order " + std::to_string(f.order()) +
                                           " exceeds cache " + std::to_string(ctx.order_cap()));
  }
}

double log_sum_exp(const std::vector<double>& logs) {
  if (logs.empty()) {
    return -kInf;
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (const double l : logs) {
    acc += std::exp(l - top);
  }
  return top + std::log(acc);
}

// log ||f||_{R,r}; -inf for a series with no nonconstant terms.
double log_weighted_norm(const DeformedContext& ctx, const TruncatedSeries& f, double r) {
  if (!(r > 0.0)) {
    throw Error(ErrorCode::DomainError, "weight radius must be positive");
  }
  require_within_cache(ctx, f);
  const double log_r = std::log(r);
  std::vector<double> logs;
  for (int n = 1; n <= f.order(); ++n) {
    const double modulus = std::abs(f[n]);
    if (modulus > 0.0) {
      logs.push_back(std::log(modulus) + ctx.log_number(n) + n * log_r);
    }
  }
  return log_sum_exp(logs);
}

}  // namespace

double weighted_norm(const DeformedContext& ctx, const TruncatedSeries& f, double r) {
  return std::exp(log_weighted_norm(ctx, f, r));
}

double sampled_circle_sup(const TruncatedSeries& f, double radius, int samples) {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / samples;
    best = std::max(best, std::abs(eval_series(f, std::polar(radius, angle))));
  }
  return best;
}

BoundCheckReport coefficient_bound_check(const DeformedContext& ctx, const TruncatedSeries& f, double r) {
  const double log_norm = log_weighted_norm(ctx, f, r);
  const double log_r = std::log(r);

  BoundCheckReport report;
  report.trials = 1;
  report.worst_margin = kInf;
  for (int n = 1; n <= f.order(); ++n) {
    const double bound = std::exp(log_norm - ctx.log_number(n) - n * log_r);
    const double observed = std::abs(f[n]);
    const double margin = bound - observed;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.witness = "n=" + std::to_string(n) + " |a_n|=" + format_double(observed) +
                       " bound=" + format_double(bound);
    }
    if (observed > bound * (1.0 + kCoefficientBoundRelTol)) {
      report.verdict = Verdict::Failed;
    }
  }
  if (report.worst_margin == kInf) {
    report.worst_margin = 0.0;
    report.witness = "no nonconstant coefficients";
  }
  return report;
}

BoundCheckReport sup_disk_bound_check(const DeformedContext& ctx, const TruncatedSeries& f, double r,
                                      double rho_eval, int samples) {
  if (!(rho_eval > 0.0 && rho_eval < r)) {
    throw Error(ErrorCode::PreconditionViolated, "need 0 < rho_eval < r");
  }
  if (samples < 8) {
    throw Error(ErrorCode::PreconditionViolated, "need at least 8 circle samples");
  }
  const double norm = weighted_norm(ctx, f, r);
  const double log_ratio = std::log(rho_eval / r);
  double series = 0.0;
  for (int n = 1; n <= ctx.order_cap(); ++n) {
    series += std::exp(n * log_ratio - ctx.log_number(n));
  }
  const double bound = std::abs(f[0]) + norm * series;
  const double observed = sampled_circle_sup(f, rho_eval, samples);

  BoundCheckReport report;
  report.trials = 1;
  report.worst_margin = bound - observed;
  report.witness = "sampled sup=" + format_double(observed) + " bound=" + format_double(bound);
  report.verdict = report.worst_margin >= -kSupDiskBoundAbsTol ? Verdict::Passed : Verdict::Failed;
  return report;
}

double cauchy_hadamard_radius(const DeformedContext& ctx, const TruncatedSeries& f, RadiusMode mode,
                              int tail_window) {
  if (tail_window < 4 || f.order() < tail_window) {
    throw Error(ErrorCode::WindowTooSmall, "need order >= tail_window >= 4, got order " +
                                               std::to_string(f.order()) + ", window " +
                                               std::to_string(tail_window));
  }
  if (mode == RadiusMode::Paper) {
    require_within_cache(ctx, f);
  }
  double best = -kInf;
  for (int k = std::max(1, f.order() - tail_window + 1); k <= f.order(); ++k) {
    const double modulus = std::abs(f[k]);
    if (modulus == 0.0) {
      continue;
    }
    double log_root = std::log(modulus);
    if (mode == RadiusMode::Paper) {
      log_root -= ctx.log_factorial(k);
    }
    best = std::max(best, log_root / k);
  }
  return best == -kInf ? kInf : std::exp(-best);
}

double seminorm(const SeminormFamily& family, int m, const TruncatedSeries& f) {
  if (family.c.size() != family.lambda.size()) {
    throw Error(ErrorCode::DomainError, "seminorm family arrays differ in length");
  }
  if (m < 1 || m > family.size()) {
    throw Error(ErrorCode::OutOfRange, "seminorm index " + std::to_string(m));
  }
  const double c = family.c[static_cast<std::size_t>(m - 1)];
  const double lambda = family.lambda[static_cast<std::size_t>(m - 1)];
  if (!(c > 0.0) || !(lambda > 0.0)) {
    throw Error(ErrorCode::DomainError, "seminorm weights need C_m > 0 and lambda_m > 0");
  }
  double best = 0.0;
  for (int k = 0; k <= f.order(); ++k) {
    const double modulus = std::abs(f[k]);
    if (modulus > 0.0) {
      const double kk = k;
      best = std::max(best, std::exp(std::log(modulus) - std::log(c) - lambda * kk * kk));
    }
  }
  return best;
}

double difference_kernel_operator_bound(double p, double r, double rho) {
  return 1.0 / (rho * (1.0 - p * r / rho));
}

namespace {

void require_operator_norm_preconditions(const DeformedContext& ctx, double r, double rho) {
  if (ctx.spec().kind != KernelKind::Difference) {
    throw Error(ErrorCode::PreconditionViolated, "explicit bound is derived for R(u,v) = u - v only");
  }
  if (!(r > 0.0 && rho > r)) {
    throw Error(ErrorCode::PreconditionViolated, "need 0 < r < rho");
  }
  if (!(ctx.spec().p * r / rho < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "need p r / rho < 1");
  }
}

}  // namespace

BoundCheckReport operator_norm_inequality_single(const DeformedContext& ctx, const TruncatedSeries& f, double r,
                                                 double rho, int samples) {
  require_operator_norm_preconditions(ctx, r, rho);
  const double constant = difference_kernel_operator_bound(ctx.spec().p, r, rho);
  const double source = sampled_circle_sup(f, rho, samples);
  const double image = sampled_circle_sup(r_derivative(ctx, f, DerivativeMode::Composite), r, samples);
  const double allowed = constant * source;

  BoundCheckReport report;
  report.trials = 1;
  report.worst_margin = allowed - image;
  report.witness = "||Df||_r=" + format_double(image) + " C||f||_rho=" + format_double(allowed);
  report.verdict = image <= allowed * (1.0 + kOperatorNormRelTol) ? Verdict::Passed : Verdict::Failed;
  return report;
}

BoundCheckReport operator_norm_inequality_check(const DeformedContext& ctx, double r, double rho, int trials,
                                                int order, std::uint64_t seed, int samples) {
  require_operator_norm_preconditions(ctx, r, rho);
  if (trials < 1) {
    throw Error(ErrorCode::PreconditionViolated, "need at least one trial");
  }
  SeededRng rng(seed);
  BoundCheckReport total;
  for (int t = 0; t < trials; ++t) {
    BoundCheckReport one = operator_norm_inequality_single(ctx, random_polynomial(rng, order), r, rho, samples);
    one.witness = "trial " + std::to_string(t) + ": " + one.witness;
    merge_into(total, one);
  }
  return total;
}

}  // namespace rpq
