#pragma once

#include <string>

namespace rpq {

/// 17 significant digits, '.' separator, independent of the C locale.
/// Non-finite values print as inf, -inf, nan.
std::string format_double(double value);

}  // namespace rpq
