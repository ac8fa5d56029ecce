#include "rpq/sectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rpq/asymptotics.hpp"
#include "rpq/error.hpp"
#include "rpq/format.hpp"

namespace rpq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double tail_limit_of(const DeformedContext& ctx) {
  if (ctx.order_cap() < 5) {
    throw Error(ErrorCode::OutOfRange, "pseudo-norm tail fit needs order_cap >= 5");
  }
  const AsymptoticFit fit = fit_log_growth(ctx, default_fit_window(ctx));
  if (fit.alpha_hat > kRegimeAlphaThreshold) {
    return 0.0;
  }
  if (fit.alpha_hat < -kRegimeAlphaThreshold) {
    return kInf;
  }
  return std::exp(-fit.beta_hat);
}

std::string point_text(Complex z) {
  return "z=(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
}

}  // namespace

DeformedPseudonorm::DeformedPseudonorm(const DeformedContext& ctx)
    : ctx_(&ctx), tail_limit_(tail_limit_of(ctx)) {}

double DeformedPseudonorm::operator()(Complex z) const {
  const double modulus = std::abs(z);
  if (modulus == 0.0) {
    return 0.0;
  }
  const double log_modulus = std::log(modulus);
  double best = tail_limit_;
  for (int n = 1; n <= ctx_->order_cap(); ++n) {
    best = std::max(best, std::exp((log_modulus - ctx_->log_number(n)) / n));
  }
  return best;
}

double DeformedPseudonorm::disc_euclidean_radius(double radius) const {
  if (!(radius > tail_limit_)) {
    return 0.0;
  }
  const double log_radius = std::log(radius);
  double best = kInf;
  for (int n = 1; n <= ctx_->order_cap(); ++n) {
    best = std::min(best, std::exp(ctx_->log_number(n) + n * log_radius));
  }
  return best;
}

double deformed_pseudonorm(const DeformedContext& ctx, Complex z) {
  return DeformedPseudonorm(ctx)(z);
}

bool in_deformed_disc(const DeformedContext& ctx, Complex z, double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorCode::DomainError, "disc radius must be positive");
  }
  return deformed_pseudonorm(ctx, z) < radius;
}

BoundCheckReport borel_caratheodory_check(const DeformedContext& ctx, const TruncatedSeries& f, double big_r,
                                          double r, PolarGrid grid) {
  if (std::abs(f[0].imag()) > 1e-14) {
    throw Error(ErrorCode::NonRealConstantTerm, "f(0) must be real");
  }
  if (!(r > 0.0 && r < big_r)) {
    throw Error(ErrorCode::PreconditionViolated, "need 0 < r < R");
  }
  if (grid.radial < 1 || grid.angular < 1) {
    throw Error(ErrorCode::PreconditionViolated, "grid counts must be positive");
  }
  const DeformedPseudonorm norm(ctx);
  if (!(r > norm.tail_limit())) {
    throw Error(ErrorCode::EmptyDisc, "deformed disc of radius " + format_double(r) +
                                          " is {0}; tail limit " + format_double(norm.tail_limit()));
  }

  const double extent = norm.disc_euclidean_radius(big_r);
  std::vector<Complex> region;
  region.reserve(static_cast<std::size_t>(grid.radial * grid.angular));
  for (int i = 0; i < grid.radial; ++i) {
    for (int j = 0; j < grid.angular; ++j) {
      const Complex z = std::polar(extent * i / grid.radial, 2.0 * kPi * j / grid.angular);
      if (norm(z) < big_r) {
        region.push_back(z);
      }
    }
  }

  double sup_re = -kInf;
  for (const Complex z : region) {
    sup_re = std::max(sup_re, eval_series(f, z).real());
  }
  const double f0 = std::abs(f[0]);
  const double bound = 2.0 * r / (big_r - r) * sup_re + (big_r + r) / (big_r - r) * f0;

  BoundCheckReport report;
  report.trials = 0;
  report.worst_margin = kInf;
  for (const Complex z : region) {
    if (!(norm(z) < r)) {
      continue;
    }
    ++report.trials;
    const double observed = std::abs(eval_series(f, z));
    const double margin = bound - observed;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.witness = point_text(z) + " |f|=" + format_double(observed) + " bound=" + format_double(bound);
    }
  }
  report.note = "M_R=" + format_double(sup_re);

  const double excess = -report.worst_margin;
  if (excess <= kBorelAbsTol) {
    report.verdict = Verdict::Passed;
  } else if (excess <= kBorelInconclusiveBand * std::abs(sup_re)) {
    report.verdict = Verdict::Inconclusive;
  } else {
    report.verdict = Verdict::Failed;
  }
  return report;
}

double log_rate(const DeformedContext& ctx, int k) {
  return ctx.log_number(k) / k;
}

double sup_log_rate(const DeformedContext& ctx) {
  double best = -kInf;
  for (int k = 1; k <= ctx.order_cap(); ++k) {
    best = std::max(best, log_rate(ctx, k));
  }
  return best;
}

namespace {

// Half-opening of the sector at the given radius; <= 0 means empty there.
double half_opening(const DeformedContext& ctx, const SectorSpec& spec, double radius) {
  switch (spec.rho_mode) {
    case RhoMode::FixedOmega:
      if (!(spec.omega > 0.0)) {
        throw Error(ErrorCode::DomainError, "omega must be positive");
      }
      return kPi / (2.0 * spec.omega);
    case RhoMode::Sup:
      return std::min(kPi, spec.theta * sup_log_rate(ctx));
    case RhoMode::PerIndex: {
      const int k = std::max(1, static_cast<int>(std::ceil(radius)));
      if (k > ctx.order_cap()) {
        throw Error(ErrorCode::OutOfRange, "per-index rate needs k=" + std::to_string(k));
      }
      return std::min(kPi, spec.theta * log_rate(ctx, k));
    }
  }
  return 0.0;
}

void require_theta(const SectorSpec& spec) {
  if (!(spec.theta > 0.0)) {
    throw Error(ErrorCode::DomainError, "theta must be positive");
  }
}

}  // namespace

SectorMembership sector_membership(const DeformedContext& ctx, const SectorSpec& spec, Complex z) {
  require_theta(spec);
  SectorMembership out;
  out.half_opening = half_opening(ctx, spec, std::abs(z));
  out.rate_positive = out.half_opening > 0.0;
  out.inside = out.rate_positive && std::abs(std::arg(z)) < out.half_opening;
  return out;
}

namespace {

std::vector<double> arc_fractions(int angular) {
  std::vector<double> t;
  const int count = std::max(angular, 3);
  for (int j = 0; j < count; ++j) {
    t.push_back(-1.0 + 2.0 * j / (count - 1));
  }
  t.push_back(0.0);
  return t;
}

std::vector<double> interior_fractions(int angular) {
  std::vector<double> t;
  const int count = std::max(angular, 3);
  for (int j = 1; j + 1 < count; ++j) {
    t.push_back(-1.0 + 2.0 * j / (count - 1));
  }
  t.push_back(0.0);
  return t;
}

void require_grid(const PolarGrid& grid) {
  if (grid.radial < 2 || grid.angular < 3 || !(grid.max_radius > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "sector grid needs radial >= 2, angular >= 3, max_radius > 0");
  }
}

struct SectorSamples {
  std::vector<Complex> boundary;
  std::vector<Complex> interior;
};

SectorSamples sector_samples(const DeformedContext& ctx, const SectorSpec& spec, PolarGrid grid) {
  require_theta(spec);
  require_grid(grid);
  SectorSamples out;
  for (int i = 1; i <= grid.radial; ++i) {
    const double radius = grid.max_radius * i / grid.radial;
    const double opening = half_opening(ctx, spec, radius);
    if (opening <= 0.0) {
      continue;
    }
    out.boundary.push_back(std::polar(radius, opening));
    out.boundary.push_back(std::polar(radius, -opening));
    if (i == grid.radial) {
      for (const double t : arc_fractions(grid.angular)) {
        out.boundary.push_back(std::polar(radius, t * opening));
      }
    } else {
      for (const double t : interior_fractions(grid.angular)) {
        out.interior.push_back(std::polar(radius, t * opening));
      }
    }
  }
  return out;
}

}  // namespace

double sampled_sector_boundary_max(const DeformedContext& ctx, const SectorSpec& spec, const TruncatedSeries& f,
                                   PolarGrid grid) {
  double best = 0.0;
  for (const Complex z : sector_samples(ctx, spec, grid).boundary) {
    best = std::max(best, std::abs(eval_series(f, z)));
  }
  return best;
}

BoundCheckReport pl_interior_check(const DeformedContext& ctx, const SectorSpec& spec, const TruncatedSeries& f,
                                   const GrowthEnvelope& envelope, double bound_m, PolarGrid grid) {
  if (!(envelope.c > 0.0 && envelope.a > 0.0 && envelope.exponent > 0.0)) {
    throw Error(ErrorCode::DomainError, "growth envelope constants must be positive");
  }

  GateDiagnostics gate;
  gate.lhs = envelope.exponent;
  if (spec.rho_mode == RhoMode::FixedOmega) {
    gate.rhs = spec.omega;
  } else {
    require_theta(spec);
    const double rate = sup_log_rate(ctx);
    if (!(rate > 0.0)) {
      throw Error(ErrorCode::GateUnevaluable, "no positive log rate rho(k) in the cache");
    }
    gate.rhs = kPi / (2.0 * spec.theta * rate);
  }
  gate.passed = gate.lhs < gate.rhs;

  const SectorSamples samples = sector_samples(ctx, spec, grid);

  double boundary_max = 0.0;
  Complex boundary_arg{};
  double envelope_excess = -kInf;
  Complex envelope_arg{};
  auto track_envelope = [&](Complex z, double modulus) {
    const double allowed = envelope.c * std::exp(envelope.a * std::pow(std::abs(z), envelope.exponent));
    if (modulus - allowed > envelope_excess) {
      envelope_excess = modulus - allowed;
      envelope_arg = z;
    }
  };
  for (const Complex z : samples.boundary) {
    const double modulus = std::abs(eval_series(f, z));
    if (modulus > boundary_max) {
      boundary_max = modulus;
      boundary_arg = z;
    }
    track_envelope(z, modulus);
  }

  BoundCheckReport report;
  report.gate = gate;
  report.worst_margin = kInf;
  for (const Complex z : samples.interior) {
    ++report.trials;
    const double modulus = std::abs(eval_series(f, z));
    track_envelope(z, modulus);
    const double margin = bound_m - modulus;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.witness = point_text(z) + " |f|=" + format_double(modulus) + " M=" + format_double(bound_m);
    }
  }
  if (report.trials == 0) {
    report.worst_margin = 0.0;
    report.witness = "sector has no interior samples";
  }

  const bool premise_ok = boundary_max <= bound_m * (1.0 + 1e-12);
  const bool envelope_ok = envelope_excess <= 0.0;
  if (!gate.passed) {
    report.verdict = Verdict::Inconclusive;
    report.note = "growth gate failed: exponent " + format_double(gate.lhs) + " >= " + format_double(gate.rhs);
  } else if (!premise_ok) {
    report.verdict = Verdict::Inconclusive;
    report.note = "premise_failed: boundary " + point_text(boundary_arg) + " |f|=" + format_double(boundary_max) +
                  " exceeds M=" + format_double(bound_m);
    report.witness = report.note;
  } else if (!envelope_ok) {
    report.verdict = Verdict::Inconclusive;
    report.note = "growth envelope exceeded at " + point_text(envelope_arg);
  } else {
    const bool interior_ok = report.trials == 0 || report.worst_margin >= -kPhragmenLindelofRelTol * bound_m;
    report.verdict = interior_ok ? Verdict::Passed : Verdict::Failed;
    report.note = "boundary max=" + format_double(boundary_max);
  }
  return report;
}

double anisotropic_order(std::span<const double> alphas, double lambda) {
  if (alphas.empty()) {
    throw Error(ErrorCode::EmptyList, "no drift parameters given");
  }
  if (!(lambda >= 0.0)) {
    throw Error(ErrorCode::DomainError, "lambda must be nonnegative");
  }
  double best = -kInf;
  for (const double alpha : alphas) {
    if (!(alpha > 0.0)) {
      throw Error(ErrorCode::DomainError, "drift parameters must be positive");
    }
    best = std::max(best, 1.0 / alpha + lambda);
  }
  return best;
}

}  // namespace rpq
