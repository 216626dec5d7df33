#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ordline/duality.hpp"
#include "ordline/finite_order.hpp"

namespace ordline {

// One failed case of an exhaustive run, with enough context to re-run it.
struct CaseFailure {
  std::string instance;
  std::string detail;
  std::string replay;
};

struct OracleReport {
  std::string suite;
  std::string instance;
  std::string property;
  std::uint64_t cases = 0;
  std::vector<CaseFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Every final segment of x (as an ascending position list), ordered as the
// dual line is: whole chain first, empty segment last. Brute force over all
// subsets; refuses |x| > bound.
std::vector<Subset> all_final_segments(const FiniteOrder& x, std::size_t bound = 12);

// Every increasing (order-preserving) total map x -> y, enumerated
// lexicographically by assignment. Refuses |x|*|y| > product_bound.
std::vector<IncreasingMap> all_increasing_maps(const FiniteOrder& x,
                                               const FiniteOrder& y,
                                               std::size_t product_bound = 144);

struct IsoResult {
  bool iso = false;
  std::string detail;
};

// Checks that the two chains have the same size; finite chains of equal
// size are uniquely isomorphic, the labels just name the matching.
IsoResult check_iso(const FiniteOrder& a, const FiniteOrder& b);

// For every chain size up to n_max and every subset: build the dual
// inclusion, its canonical right inverse, and the induced projection, then
// verify the section/retraction identities case by case.
OracleReport exhaustive_lemma33(std::size_t n_max);

// Round-trips the finite duality in both directions up to n_max points and
// checks contravariant functoriality on all nested subsets.
OracleReport exhaustive_duality(std::size_t n_max);

// Mutation hook: compares a claimed final-segment family against the
// canonical one and reports every discrepancy (used to prove the oracle
// can actually fail).
std::vector<std::string> duality_roundtrip_defects(const FiniteOrder& x,
                                                   const std::vector<Subset>& claimed);

}  // namespace ordline
