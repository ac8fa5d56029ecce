#include "rpq/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "rpq/error.hpp"

namespace rpq {

KernelSpec KernelSpec::difference(double p, double q) {
  return KernelSpec{p, q, KernelKind::Difference, {}};
}

KernelSpec KernelSpec::jagannathan_srinivasa(double p, double q) {
  return KernelSpec{p, q, KernelKind::JagannathanSrinivasa, {}};
}

KernelSpec KernelSpec::q_number(double q) {
  return KernelSpec{1.0, q, KernelKind::QNumber, {}};
}

KernelSpec KernelSpec::laurent(double p, double q, std::vector<LaurentTerm> terms) {
  return KernelSpec{p, q, KernelKind::CustomLaurent, std::move(terms)};
}

int KernelSpec::ell() const {
  int ell = 0;
  for (const auto& term : laurent_terms) {
    ell = std::max({ell, -term.s, -term.t});
  }
  return ell;
}

double KernelSpec::evaluate(double u, double v) const {
  switch (kind) {
    case KernelKind::Difference:
      return u - v;
    case KernelKind::JagannathanSrinivasa:
    case KernelKind::QNumber:
      return (u - v) / (p - q);
    case KernelKind::CustomLaurent: {
      double sum = 0.0;
      for (const auto& term : laurent_terms) {
        sum += term.c * std::pow(u, term.s) * std::pow(v, term.t);
      }
      return sum;
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double KernelSpec::lattice(double x) const {
  return evaluate(std::pow(p, x), std::pow(q, x));
}

void validate_parameters(const KernelSpec& spec) {
  const bool ordered = spec.q > 0.0 && spec.q < spec.p && spec.p <= 1.0;
  if (!std::isfinite(spec.p) || !std::isfinite(spec.q) || !ordered) {
    throw Error(ErrorCode::ParameterDomain,
                "require 0 < q < p <= 1, got p=" + std::to_string(spec.p) +
                    " q=" + std::to_string(spec.q));
  }
  if (spec.kind == KernelKind::QNumber && spec.p != 1.0) {
    throw Error(ErrorCode::ParameterDomain, "the q kernel requires p = 1");
  }
  if (spec.kind == KernelKind::CustomLaurent && spec.laurent_terms.empty()) {
    throw Error(ErrorCode::EmptyKernel, "custom kernel has no Laurent terms");
  }
}

DeformedContext::DeformedContext(KernelSpec spec, std::vector<double> log_numbers, bool synthetic)
    : spec_(std::move(spec)),
      order_cap_(static_cast<int>(log_numbers.size())),
      synthetic_(synthetic),
      log_numbers_(std::move(log_numbers)),
      log_factorials_(log_numbers_.size() + 1, 0.0) {
  // Ascending accumulation; other modules rely on this exact order.
  for (std::size_t n = 1; n < log_factorials_.size(); ++n) {
    log_factorials_[n] = log_factorials_[n - 1] + log_numbers_[n - 1];
  }
}

double DeformedContext::log_number(int n) const {
  if (n < 1 || n > order_cap_) {
    throw Error(ErrorCode::OutOfRange, "log [n] requested for n=" + std::to_string(n) +
                                           ", cache holds 1.." + std::to_string(order_cap_));
  }
  return log_numbers_[static_cast<std::size_t>(n - 1)];
}

double DeformedContext::log_factorial(int n) const {
  if (n < 0 || n > order_cap_) {
    throw Error(ErrorCode::OutOfRange, "log [n]! requested for n=" + std::to_string(n) +
                                           ", cache holds 0.." + std::to_string(order_cap_));
  }
  return log_factorials_[static_cast<std::size_t>(n)];
}

DeformedContext DeformedContext::from_log_numbers(KernelSpec spec, std::vector<double> log_numbers) {
  if (log_numbers.empty()) {
    throw Error(ErrorCode::OutOfRange, "synthetic context needs at least one value");
  }
  for (std::size_t i = 0; i < log_numbers.size(); ++i) {
    if (!std::isfinite(log_numbers[i])) {
      throw Error(ErrorCode::NonPositiveLattice,
                  "synthetic log value not finite at n=" + std::to_string(i + 1));
    }
  }
  return DeformedContext(std::move(spec), std::move(log_numbers), true);
}

DeformedContext build_context(const KernelSpec& spec, int order_cap) {
  if (order_cap < 1) {
    throw Error(ErrorCode::OutOfRange, "order_cap must be at least 1");
  }
  validate_parameters(spec);

  const double origin = spec.evaluate(1.0, 1.0);
  if (!(std::abs(origin) <= kKernelOriginTolerance)) {
    throw Error(ErrorCode::InvalidKernel, "R(1,1) = " + std::to_string(origin) + " is not zero");
  }

  std::vector<double> logs(static_cast<std::size_t>(order_cap));
  for (int n = 1; n <= order_cap; ++n) {
    const double value = spec.lattice(n);
    if (!std::isfinite(value) || value <= 0.0) {
      throw Error(ErrorCode::NonPositiveLattice,
                  "R(p^n, q^n) = " + std::to_string(value) + " at n=" + std::to_string(n));
    }
    logs[static_cast<std::size_t>(n - 1)] = std::log(value);
  }
  return DeformedContext(spec, std::move(logs), false);
}

double lattice_log_value(const DeformedContext& ctx, int n) {
  return ctx.log_number(n);
}

std::pair<double, double> bidisk_radius_estimate(const KernelSpec& spec) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (spec.kind != KernelKind::CustomLaurent) {
    return {inf, inf};
  }

  std::map<std::pair<int, int>, double> merged;
  for (const auto& term : spec.laurent_terms) {
    merged[{term.s, term.t}] += term.c;
  }

  bool any_nonzero = false;
  double radius = inf;
  for (const auto& [degrees, c] : merged) {
    if (c == 0.0) {
      continue;
    }
    any_nonzero = true;
    const int total = degrees.first + degrees.second;
    if (total >= 1) {
      radius = std::min(radius, std::pow(std::abs(c), -1.0 / total));
    }
  }
  if (!any_nonzero) {
    throw Error(ErrorCode::EmptyKernel, "all Laurent coefficients vanish");
  }
  return {radius, radius};
}

}  // namespace rpq
