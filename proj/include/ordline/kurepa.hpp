#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordline/ordering.hpp"
#include "ordline/ordinal.hpp"
#include "ordline/rational.hpp"

namespace ordline {

// Finitely supported rational vector indexed by ordinal codes.
// Entries are sorted by coordinate and never hold a zero value, so the
// support is exactly the stored keys and equality is structural.
struct FinSuppVec {
  std::vector<std::pair<OrdCode, Rational>> entries;

  // Sorts, rejects duplicate coordinates, drops zero values.
  static FinSuppVec make(std::vector<std::pair<OrdCode, Rational>> raw);

  const Rational* find(const OrdCode& coord) const;
  bool is_zero() const { return entries.empty(); }
  std::optional<OrdCode> max_coord() const;

  friend bool operator==(const FinSuppVec&, const FinSuppVec&) = default;
};

// A point of the lexicographic space over ordinal codes: either an explicit
// vector, or the canonical filler for a limit code delta — the characteristic
// function of delta's fundamental-sequence range. Fillers have infinite
// support and are never materialized; their coordinates are computed on
// demand.
class KurepaPoint {
 public:
  KurepaPoint() : repr_(FinSuppVec{}) {}

  static KurepaPoint vec(FinSuppVec v) { return KurepaPoint(std::move(v)); }
  static KurepaPoint zero() { return KurepaPoint(); }
  static KurepaPoint filler(const OrdCode& delta);  // delta must be a limit

  bool is_filler() const { return repr_.index() == 1; }
  const OrdCode& filler_code() const { return std::get<OrdCode>(repr_); }
  const FinSuppVec& vec_part() const { return std::get<FinSuppVec>(repr_); }

  friend bool operator==(const KurepaPoint&, const KurepaPoint&) = default;

 private:
  explicit KurepaPoint(FinSuppVec v) : repr_(std::move(v)) {}
  explicit KurepaPoint(const OrdCode& d) : repr_(d) {}

  std::variant<FinSuppVec, OrdCode> repr_;
};

Rational coord_at(const KurepaPoint& p, const OrdCode& alpha);

struct Difference {
  OrdCode coord;  // least coordinate where the points differ
  Ordering order; // direction of the difference there
};

// Merged increasing scan over both candidate-coordinate streams. Terminates:
// vector supports are finite, and fundamental-sequence ranges of distinct
// limits are pairwise disjoint, so two distinct fillers already differ at the
// first merged candidate. A hard iteration cap guards any future coordinate
// stream without that property (DomainError comparison_divergence).
std::optional<Difference> first_difference(const KurepaPoint& p, const KurepaPoint& q);

Ordering lex_compare(const KurepaPoint& p, const KurepaPoint& q);

// Membership in the stage X_delta: some code gamma < delta strictly bounds
// the support. Vectors: successor of the max support coordinate is < delta;
// fillers for lambda: lambda < delta.
bool in_filtration(const KurepaPoint& p, const OrdCode& delta);

// A point with -inf/+inf adjoined; the value a truncation projection takes.
struct SignedPoint {
  enum class Kind { neg_inf, point, pos_inf };

  Kind kind = Kind::point;
  std::optional<KurepaPoint> value;  // engaged iff kind == point

  static SignedPoint neg_inf() { return {Kind::neg_inf, std::nullopt}; }
  static SignedPoint pos_inf() { return {Kind::pos_inf, std::nullopt}; }
  static SignedPoint at(KurepaPoint p) { return {Kind::point, std::move(p)}; }

  friend bool operator==(const SignedPoint&, const SignedPoint&) = default;
};

Ordering signed_compare(const SignedPoint& a, const SignedPoint& b);

// Restriction of a filler at its own code has infinite support; that failure
// mode is a value, not an exception — it is the gap-filling obstruction.
struct InfiniteTruncation {
  friend bool operator==(const InfiniteTruncation&, const InfiniteTruncation&) = default;
};

using TruncationResult = std::variant<SignedPoint, InfiniteTruncation>;

// Coordinate restriction to [0, delta). Identity on members of X_delta,
// increasing overall, InfiniteTruncation exactly for the filler of delta.
TruncationResult truncate_projection(const KurepaPoint& p, const OrdCode& delta);

// Constructive certificates that the filler of delta fills a proper gap of
// X_delta: given a member a < y_delta, return a member strictly between them
// (so the lower set has no maximum); symmetrically on the right.
// Throw PreconditionViolated when the argument is not in X_delta or sits on
// the wrong side, InvalidOrdinal when delta is not a limit.
KurepaPoint gap_witness_left(const OrdCode& delta, const KurepaPoint& a);
KurepaPoint gap_witness_right(const OrdCode& delta, const KurepaPoint& b);

// Density helpers for the ambient space (every open interval is inhabited,
// and there are no extremes): used by the order-expression layer.
KurepaPoint strictly_between(const KurepaPoint& p, const KurepaPoint& q);  // pre: p < q
KurepaPoint point_above(const KurepaPoint& p);
KurepaPoint point_below(const KurepaPoint& p);

struct SupStreamOptions {
  // Trip wire for assembling a supremum with implausibly large support;
  // any filler term exceeds it by construction.
  std::size_t support_bound = 4096;
  // Claimed upper bounds; the assembled value must sit below each of them.
  std::vector<KurepaPoint> upper_probes;
};

struct SupFailure {
  enum class Kind { not_increasing, stabilization_violation, infinite_support_suspected };

  Kind kind;
  std::string detail;

  friend bool operator==(const SupFailure&, const SupFailure&) = default;
};

using SupResult = std::variant<FinSuppVec, SupFailure>;

// Assemble the supremum of an increasing stream from an explicit
// stabilization certificate: stab(gamma) is an index past which every
// coordinate below gamma is claimed constant. The claim is verified on the
// probed prefix, coordinate by coordinate; the assembled vector is then
// verified to be an upper bound of every probed term and below every
// supplied upper probe. Any verification failure is reported as a value.
// stab claims outside the probed prefix are rejected (nothing to verify).
SupResult sup_stable_stream(const std::function<KurepaPoint(std::size_t)>& stream,
                            const std::function<std::size_t(const OrdCode&)>& stab,
                            std::size_t probe_n,
                            const SupStreamOptions& opts = {});

// Text form: "{coord:value, ...}" with entries sorted and exact rationals,
// "{}" for the zero vector, "y(<ord>)" for fillers.
std::string point_to_string(const KurepaPoint& p);
KurepaPoint parse_point(std::string_view text);

}  // namespace ordline
