#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordline/finite_order.hpp"
#include "ordline/order_expr.hpp"

namespace ordline {

// The dual compact line of a finite chain: one point per final segment,
// ordered by inverse inclusion. Point k stands for the segment [k, n) of the
// source, so k = 0 is the full set (the bottom) and k = n the empty set
// (the top). Segments are derived on demand, never stored.
struct FiniteCompactLine {
  FiniteOrder source;

  std::size_t size() const { return source.size() + 1; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return source.size(); }

  Subset segment(std::size_t k) const;
  std::string segment_label(std::size_t k) const;  // "{a,b,c}", "{}" at the top
  FiniteOrder as_order() const;
};

FiniteCompactLine k_finite(const FiniteOrder& x);

// The inverse construction on an abstract chain: its clopen final segments
// omitting the bottom and containing the top, again by inverse inclusion.
// A chain of m points yields m-1 of them. Throws EmptyOrder for m = 0.
FiniteOrder x_finite(const FiniteOrder& k);

// Dual map of the inclusion Y ⊆ X: segment F ↦ F ∩ Y, an increasing
// surjection k_finite(X) → k_finite(restrict_order(X, Y)).
IncreasingMap dual_inclusion(const FiniteOrder& x, const Subset& y);

// The fiber recipe behind the right-inverse construction, exposed for direct
// testing: a fiber [lo, hi] resolves to itself when a singleton, to lo when
// the top of the fiber is isolated from the right, else to hi when the
// bottom is isolated from the left; nullopt is the obstruction case.
std::optional<std::size_t> resolve_fiber(std::size_t lo, std::size_t hi,
                                         bool hi_right_isolated,
                                         bool lo_left_isolated);

// Right inverse g (f ∘ g = id) of a dual-inclusion map, chosen per fiber by
// resolve_fiber. Every point of a finite chain is isolated on both sides, so
// the obstruction is unreachable here; GapObstruction is thrown if the
// recipe ever reports it. PreconditionViolated when f is not an increasing
// surjection with contiguous fibers.
IncreasingMap right_inverse_from_gaps(const IncreasingMap& f);

// The projection conv(Y) → Y read off from a right inverse g: the image of
// y is determined by where g's segments first clear y. Increasing and the
// identity on Y. Throws NotRightInverse unless f ∘ g = id for
// f = dual_inclusion(x, y).
IncreasingMap projection_from_right_inverse(const FiniteOrder& x, const Subset& y,
                                            const IncreasingMap& g);

// A suborder Y of an effectively-presented ambient order, given by a
// membership test, a deterministic sampler (nullopt once exhausted), and two
// partial witness functions: left_witness(x, a) returns a member strictly
// between a and x when it can, right_witness(x, b) one strictly between x
// and b. Witness results are re-verified, never trusted.
struct SubOrderPresentation {
  ExprPtr ambient;
  std::function<bool(const Element&)> contains;
  std::function<std::optional<Element>(std::uint64_t)> sample;
  std::function<std::optional<Element>(const Element&, const Element&)> left_witness;
  std::function<std::optional<Element>(const Element&, const Element&)> right_witness;
  std::uint64_t scan_budget = 256;
};

enum class NotGapReason { member, no_left, no_right, max_below, min_above };

const char* to_string(NotGapReason r);

struct GapVerdict {
  bool fills = false;
  std::uint64_t depth = 0;                 // the probed depth when fills
  std::optional<NotGapReason> reason;      // engaged exactly when !fills
  std::vector<Element> left_chain;         // seed first, strictly increasing, all < x
  std::vector<Element> right_chain;        // seed first, strictly decreasing, all > x

  std::string describe() const;  // "FillsToDepth(100)" / "NotGap(maxBelow)"
};

// Semi-decision that x fills a proper gap of Y: x must avoid Y, both sides
// of x must be inhabited in Y, and both witness chains must advance `depth`
// times, every step re-verified strictly monotone, on the correct side of
// x, and a member of Y. A witness returning a value that fails those checks
// raises PreconditionViolated; a witness returning Absent yields
// NotGap(maxBelow/minAbove). ForeignElement when x is not in the ambient
// order.
GapVerdict fills_proper_gap(const Element& x, const SubOrderPresentation& y,
                            std::uint64_t depth);

// Presentation of an explicit finite suborder; witnesses scan the list.
SubOrderPresentation present_finite_subset(ExprPtr ambient, std::vector<Element> members);

// Presentation from membership + sampler alone; witnesses scan the sampler
// for an element strictly between the bounds (budget-capped).
SubOrderPresentation present_by_scan(ExprPtr ambient,
                                     std::function<bool(const Element&)> contains,
                                     std::function<std::optional<Element>(std::uint64_t)> sample,
                                     std::uint64_t scan_budget = 256);

// Increasing family of stage presentations indexed by codes below `length`,
// with union the ambient order and continuity at limit indices.
struct Filtration {
  ExprPtr ambient;
  OrdCode length;
  std::function<SubOrderPresentation(const OrdCode&)> stage;
};

struct FiltrationCheckReport {
  std::uint64_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// Spot checks on samples and probe indices: stages grow with the index,
// membership at a probed limit is witnessed along its fundamental sequence
// (budget-capped), and every sample lands in some probed stage.
FiltrationCheckReport spot_check_filtration(const Filtration& f,
                                            const std::vector<Element>& samples,
                                            const std::vector<OrdCode>& indices,
                                            std::uint64_t limit_probe_budget = 64);

// The stage X_delta of the lexicographic space KurepaX(kappa, fillers),
// packaged as a presentation: membership is support-boundedness below delta,
// witnesses around the filler of delta are the constructive gap witnesses,
// anything else falls back to sampler scans. Total in delta <= kappa
// (successor stages included so the family forms a filtration).
SubOrderPresentation build_filtration_presentation(const OrdCode& kappa,
                                                   const std::vector<OrdCode>& fillers,
                                                   const OrdCode& delta);

// The full stage family of KurepaX(kappa, fillers).
Filtration build_kurepa_filtration(const OrdCode& kappa, std::vector<OrdCode> fillers);

}  // namespace ordline
