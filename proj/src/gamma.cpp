#include "rpq/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rpq/error.hpp"

namespace rpq {

namespace {

double log_shifted_lattice(const KernelSpec& spec, double x) {
  const double value = spec.lattice(x);
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorCode::NonPositiveShiftedLattice,
                "R(p^x, q^x) = " + std::to_string(value) + " at x=" + std::to_string(x));
  }
  return std::log(value);
}

}  // namespace

double gamma_log(const GammaConfig& cfg, double x) {
  const DeformedContext& ctx = cfg.context;
  if (!std::isfinite(x) || x <= 0.0) {
    throw Error(ErrorCode::DomainError, "Gamma_R needs x > 0, got " + std::to_string(x));
  }
  if (x > ctx.order_cap() + 1.0) {
    throw Error(ErrorCode::OutOfRange, "argument " + std::to_string(x) + " beyond cache");
  }

  const double whole = std::floor(x);
  if (whole == x) {
    return ctx.log_factorial(static_cast<int>(whole) - 1);
  }
  if (cfg.base_mode == GammaBaseMode::IntegerOnly) {
    throw Error(ErrorCode::NonIntegerUnsupported, "integer-only mode, x=" + std::to_string(x));
  }
  if (ctx.synthetic()) {
    throw Error(ErrorCode::NonIntegerUnsupported, "synthetic context has no kernel to shift");
  }

  if (x < 1.0) {
    return gamma_log(cfg, x + 1.0) - log_shifted_lattice(ctx.spec(), x);
  }

  const double frac = x - whole;
  double acc = frac * ctx.log_number(1);
  const int steps = static_cast<int>(whole) - 1;
  for (int j = 0; j < steps; ++j) {
    acc += log_shifted_lattice(ctx.spec(), 1.0 + frac + j);
  }
  return acc;
}

double recurrence_check(const GammaConfig& cfg, double x) {
  const double upper = gamma_log(cfg, x + 1.0);
  const double lower = gamma_log(cfg, x);
  return std::abs(upper - lower - log_shifted_lattice(cfg.context.spec(), x));
}

StirlingDiagnostic stirling_diagnostic(const GammaConfig& cfg, double alpha_i, double beta_i, KWindow window) {
  if (!(alpha_i > 0.0) || !(beta_i > 0.0)) {
    throw Error(ErrorCode::DomainError, "drift parameters must be positive");
  }
  if (window.first < 1 || window.size() < 1 || window.last > cfg.context.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "k window [" + std::to_string(window.first) + ", " +
                                           std::to_string(window.last) + "] outside cache");
  }

  StirlingDiagnostic out;
  out.alpha_i = alpha_i;
  out.beta_i = beta_i;
  out.k_window = window;
  for (int k = window.first; k <= window.last; ++k) {
    const double z = alpha_i * k + beta_i;
    const double g = gamma_log(cfg, z);
    const double log_r = cfg.context.log_number(k);
    out.z.push_back(z);
    out.gamma_logs.push_back(g);
    out.log_lattice.push_back(log_r);
    out.residuals.push_back(g - ((z - 0.5) * log_r - z));
  }

  const auto upper_begin = out.residuals.begin() + static_cast<std::ptrdiff_t>(out.residuals.size() / 2);
  const auto [lo, hi] = std::minmax_element(upper_begin, out.residuals.end());
  double max_abs = 0.0;
  for (auto it = upper_begin; it != out.residuals.end(); ++it) {
    max_abs = std::max(max_abs, std::abs(*it));
  }
  out.stabilized = (*hi - *lo) <= 0.05 * (max_abs + 1.0);
  const double count = static_cast<double>(out.residuals.end() - upper_begin);
  out.c_estimate = std::exp(std::accumulate(upper_begin, out.residuals.end(), 0.0) / count);
  return out;
}

}  // namespace rpq
