#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "partbij/partition.hpp"

namespace partbij {

struct NotationError : std::runtime_error {
  std::size_t position;  // byte offset into the source text
  NotationError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

/// Multiset notation part("^"mult)? ("," part("^"mult)?)*, exponent 1
/// omitted on output, e.g. "13^4,11^2,9,5^5,3^3,1^4". Input order is free;
/// the result is canonical. The empty string is the empty partition.
Partition parse_notation(std::string_view text);
std::string to_notation(const Partition& p);

}  // namespace partbij
