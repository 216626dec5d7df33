#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ordline {

// Ordinal codes below omega^2: value omega*omegas + finite. This range is
// enough to exercise every limit/successor phenomenon the library needs
// while keeping all arithmetic exact and total.
struct OrdCode {
  std::uint64_t omegas = 0;
  std::uint64_t finite = 0;

  // Declaration order gives the ordinal (lexicographic) comparison.
  friend auto operator<=>(const OrdCode&, const OrdCode&) = default;

  bool is_zero() const { return omegas == 0 && finite == 0; }
  bool is_limit() const { return finite == 0 && omegas > 0; }
  bool is_successor() const { return finite > 0; }

  OrdCode successor() const { return {omegas, finite + 1}; }

  // n-th element of the fundamental sequence of a limit code:
  //   fs(omega*a, n) = omega*(a-1) + (n+1).
  // Ranges of distinct limits are pairwise disjoint, which is what makes
  // comparisons between filler points terminate in one step.
  OrdCode fundamental(std::uint64_t n) const;
};

std::string ord_to_string(const OrdCode& o);

// "w.A+B", "w.A" or a plain natural; lowercase or uppercase W.
// Throws DomainError(parse_error) on malformed input.
OrdCode parse_ord(std::string_view text);

// True when alpha lies in the fundamental-sequence range of limit delta.
bool in_fundamental_range(const OrdCode& delta, const OrdCode& alpha);

// Least n with delta.fundamental(n) >= alpha; requires alpha < delta and
// delta a limit. Used by the gap-witness constructions.
std::uint64_t fundamental_index_at_or_above(const OrdCode& delta, const OrdCode& alpha);

}  // namespace ordline
