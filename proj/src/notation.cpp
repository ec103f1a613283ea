#include "partbij/notation.hpp"

#include <cctype>
#include <sstream>

namespace partbij {

namespace {

constexpr long long kMaxTotalParts = 1'000'000;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  long long number(const char* what) {
    skip_ws();
    const std::size_t start = pos;
    if (!done() && peek() == '-')
      throw NotationError(std::string(what) + " must be positive", pos);
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxTotalParts * 1000)
        throw NotationError(std::string(what) + " is out of range", start);
      ++pos;
    }
    if (pos == start) throw NotationError(std::string("expected ") + what, pos);
    if (v <= 0) throw NotationError(std::string(what) + " must be positive", start);
    return v;
  }
};

}  // namespace

Partition parse_notation(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done()) return {};
  std::vector<Part> parts;
  for (;;) {
    const long long value = cur.number("part");
    long long mult = 1;
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      mult = cur.number("multiplicity");
    }
    if (static_cast<long long>(parts.size()) + mult > kMaxTotalParts)
      throw NotationError("too many parts", cur.pos);
    parts.insert(parts.end(), static_cast<std::size_t>(mult), value);
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() != ',') throw NotationError("expected ','", cur.pos);
    ++cur.pos;
  }
  return Partition(std::move(parts));
}

std::string to_notation(const Partition& p) {
  std::ostringstream out;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) out << ',';
    out << parts[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

}  // namespace partbij
