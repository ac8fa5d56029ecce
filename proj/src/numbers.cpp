#include "rpq/numbers.hpp"

#include <algorithm>
#include <string>

#include "rpq/error.hpp"

namespace rpq {

LogQuantity deformed_number(const DeformedContext& ctx, int n) {
  if (n < 0 || n > ctx.order_cap()) {
    throw Error(ErrorCode::OutOfRange, "deformed number index " + std::to_string(n));
  }
  if (n == 0) {
    return LogQuantity::zero();
  }
  return LogQuantity::from_log(ctx.log_number(n));
}

LogQuantity deformed_factorial(const DeformedContext& ctx, int n) {
  return LogQuantity::from_log(ctx.log_factorial(n));
}

LogQuantity deformed_binomial(const DeformedContext& ctx, int m, int n) {
  if (m < 0 || m > ctx.order_cap() || n < 0) {
    throw Error(ErrorCode::OutOfRange,
                "binomial (" + std::to_string(m) + ", " + std::to_string(n) + ") outside cache");
  }
  if (n > m) {
    throw Error(ErrorCode::DomainError,
                "binomial lower index " + std::to_string(n) + " exceeds " + std::to_string(m));
  }
  if (n == 0 || n == m) {
    return LogQuantity::one();
  }
  const int lo = std::min(n, m - n);
  const int hi = std::max(n, m - n);
  const double denominator = ctx.log_factorial(lo) + ctx.log_factorial(hi);
  return LogQuantity::from_log(ctx.log_factorial(m) - denominator);
}

}  // namespace rpq
