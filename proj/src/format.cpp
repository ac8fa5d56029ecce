#include "rpq/format.hpp"

#include <array>
#include <charconv>

namespace rpq {

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                    std::chars_format::general, 17);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace rpq
