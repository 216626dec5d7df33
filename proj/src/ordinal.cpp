#include "ordline/ordinal.hpp"

#include <cctype>

#include "ordline/errors.hpp"

namespace ordline {

OrdCode OrdCode::fundamental(std::uint64_t n) const {
  if (!is_limit())
    throw DomainError(Err::invalid_ordinal,
                      "fundamental sequence of non-limit " + ord_to_string(*this));
  return {omegas - 1, n + 1};
}

std::string ord_to_string(const OrdCode& o) {
  if (o.omegas == 0) return std::to_string(o.finite);
  std::string s = "w." + std::to_string(o.omegas);
  if (o.finite > 0) s += "+" + std::to_string(o.finite);
  return s;
}

OrdCode parse_ord(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw DomainError(Err::parse_error, "ordinal '" + std::string(text) + "': " + msg);
  };
  auto read_nat = [&]() -> std::uint64_t {
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > 1'000'000'000'000'000ULL) fail("number too large");
      ++i;
    }
    if (i == start) fail("expected digits");
    return value;
  };
  OrdCode out;
  if (i < text.size() && (text[i] == 'w' || text[i] == 'W')) {
    ++i;
    if (i >= text.size() || text[i] != '.') fail("expected '.' after w");
    ++i;
    out.omegas = read_nat();
    if (out.omegas == 0) fail("w.0 is not a valid code; write 0");
    if (i < text.size() && text[i] == '+') {
      ++i;
      out.finite = read_nat();
      if (out.finite == 0) fail("'+0' is redundant; drop the suffix");
    }
  } else {
    out.finite = read_nat();
  }
  if (i != text.size()) fail("trailing characters");
  return out;
}

bool in_fundamental_range(const OrdCode& delta, const OrdCode& alpha) {
  return delta.is_limit() && alpha.omegas == delta.omegas - 1 && alpha.finite >= 1;
}

std::uint64_t fundamental_index_at_or_above(const OrdCode& delta, const OrdCode& alpha) {
  if (!delta.is_limit())
    throw DomainError(Err::invalid_ordinal, ord_to_string(delta) + " is not a limit");
  if (!(alpha < delta))
    throw DomainError(Err::precondition_violated,
                      ord_to_string(alpha) + " is not below " + ord_to_string(delta));
  if (alpha.omegas < delta.omegas - 1) return 0;  // every fs element already >= alpha
  // alpha = (delta.omegas - 1, e): fs(n) = (delta.omegas - 1, n + 1) >= alpha iff n >= e - 1.
  return alpha.finite <= 1 ? 0 : alpha.finite - 1;
}

}  // namespace ordline
