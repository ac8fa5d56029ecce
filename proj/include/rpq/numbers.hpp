#pragma once

#include <cmath>
#include <limits>

#include "rpq/kernel.hpp"

namespace rpq {

/// A nonnegative quantity carried as its natural log. Exact zero is a flag,
/// not a -inf log, so [0] = R(1,1) = 0 never leaks into arithmetic.
class LogQuantity {
 public:
  static LogQuantity zero() noexcept { return LogQuantity(-std::numeric_limits<double>::infinity(), true); }
  static LogQuantity one() noexcept { return LogQuantity(0.0, false); }
  static LogQuantity from_log(double log_value) noexcept { return LogQuantity(log_value, false); }

  bool is_zero() const noexcept { return zero_flag_; }
  double log_value() const noexcept { return log_value_; }
  double value() const noexcept { return zero_flag_ ? 0.0 : std::exp(log_value_); }

  friend LogQuantity operator*(LogQuantity a, LogQuantity b) noexcept {
    if (a.zero_flag_ || b.zero_flag_) {
      return zero();
    }
    return from_log(a.log_value_ + b.log_value_);
  }

 private:
  LogQuantity(double log_value, bool zero_flag) noexcept : log_value_(log_value), zero_flag_(zero_flag) {}

  double log_value_;
  bool zero_flag_;
};

LogQuantity deformed_number(const DeformedContext& ctx, int n);
LogQuantity deformed_factorial(const DeformedContext& ctx, int n);

/// [m choose n] = [m]! / ([n]! [m-n]!) from the cached log factorials.
/// The two denominator terms are summed in a canonical order so that
/// (m, n) and (m, m-n) produce bit-identical results.
LogQuantity deformed_binomial(const DeformedContext& ctx, int m, int n);

}  // namespace rpq
