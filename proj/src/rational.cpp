#include "ordline/rational.hpp"

#include <cctype>

#include "ordline/errors.hpp"

namespace ordline {

using boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& r) {
  // cpp_rational streams as "p/q" or "p" already; rely on that but keep the
  // choice behind one function so the format stays a single decision.
  return r.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw DomainError(Err::parse_error, "rational '" + std::string(text) + "': " + msg);
  };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto read_int = [&]() -> cpp_int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected digits");
    return cpp_int(std::string(text.substr(start, i - start)));
  };
  cpp_int num = read_int();
  cpp_int den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = read_int();
    if (den == 0) fail("zero denominator");
  }
  if (i != text.size()) fail("trailing characters");
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

namespace {

// Value at 1-based position k of the breadth-first Calkin-Wilf traversal.
// Walk the bits of k below the leading one: 0 descends left (a/(a+b)),
// 1 descends right ((a+b)/b).
Rational calkin_wilf(std::uint64_t k) {
  int msb = 63;
  while (msb > 0 && !(k >> msb)) --msb;
  cpp_int a = 1, b = 1;
  for (int bit = msb - 1; bit >= 0; --bit) {
    if ((k >> bit) & 1)
      a += b;
    else
      b += a;
  }
  return Rational(a, b);
}

}  // namespace

Rational nth_rational(std::uint64_t index) {
  if (index == 0) return Rational(0);
  std::uint64_t k = (index + 1) / 2;
  Rational q = calkin_wilf(k);
  return (index % 2 == 1) ? q : Rational(-q);
}

Rational nth_nonzero_rational(std::uint64_t index) {
  return nth_rational(index + 1);
}

}  // namespace ordline
