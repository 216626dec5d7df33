#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ordline {

// Exact arbitrary-precision rationals; no floating point anywhere in the
// library. boost normalizes on construction, so p/q comparisons and equality
// are canonical.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p/q" in lowest terms, or just "p" when q == 1.
std::string rational_to_string(const Rational& r);

// Accepts an optional sign, then "p" or "p/q" with q > 0 after normalization.
// Throws DomainError(parse_error) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Deterministic enumeration of all rationals without repetition:
//   0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, ...
// Positive part follows the breadth-first traversal of the Calkin-Wilf tree,
// computed from the bits of the index (root 1/1, children a/(a+b), (a+b)/b).
Rational nth_rational(std::uint64_t index);

// index 0 -> 1, 1 -> -1, 2 -> 1/2, ... (nth_rational with the zero dropped).
Rational nth_nonzero_rational(std::uint64_t index);

}  // namespace ordline
