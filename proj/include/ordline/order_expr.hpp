#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordline/finite_order.hpp"
#include "ordline/kurepa.hpp"
#include "ordline/ordering.hpp"

namespace ordline {

class OrderExpr;
using ExprPtr = std::shared_ptr<const OrderExpr>;

enum class Side { left, right };
enum class Half { minus, plus };

// Desk-scale character classes. Genuine uncountable character cannot occur
// in these orders; the surrogate class exists only through explicit
// overrides attached to an expression.
enum class CharClass { isolated, countable_limit, uncountable_surrogate };

const char* to_string(Side s);
const char* to_string(CharClass c);

// An element is a tagged value whose shape mirrors the expression variant
// that produced it. Elements are only meaningful inside that expression;
// using one against another order raises ForeignElement.
class Element {
 public:
  struct Wrapped {  // element of a reversal
    std::shared_ptr<const Element> inner;
  };
  struct Tagged {  // element of a sum
    Side side;
    std::shared_ptr<const Element> inner;
  };
  struct Split {  // element of a duplication; half engaged iff the point is split
    std::optional<Half> half;
    std::shared_ptr<const Element> inner;
  };

  using Repr = std::variant<std::uint64_t, Rational, KurepaPoint, Wrapped, Tagged, Split>;

  static Element nat(std::uint64_t n) { return Element(Repr(n)); }
  static Element rat(Rational r) { return Element(Repr(std::move(r))); }
  static Element point(KurepaPoint p) { return Element(Repr(std::move(p))); }
  static Element wrapped(Element inner);
  static Element tagged(Side side, Element inner);
  static Element split(std::optional<Half> half, Element inner);

  const Repr& repr() const { return repr_; }

 private:
  explicit Element(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

// Deep structural equality.
bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

// Manual character reclassification for one point, one side.
struct CharOverride {
  Element at;
  Side side;
  CharClass klass;
};

// Immutable expression describing an effectively-presented linear order.
// Equality of expressions is structural on the node tree; character
// overrides are an attachment and do not take part in it.
class OrderExpr {
 public:
  struct Fin { std::uint64_t size = 0; };
  struct Omega {};
  struct Rationals {};
  struct Rev { ExprPtr inner; };
  struct Sum { ExprPtr lower; ExprPtr upper; };
  struct LexQ { OrdCode kappa; };
  struct KurepaX {
    OrdCode kappa;
    std::vector<OrdCode> fillers;  // sorted distinct limit codes < kappa
  };
  struct Dup {
    ExprPtr inner;
    std::vector<Element> split;  // distinct, sorted in the inner order
  };

  using Node = std::variant<Fin, Omega, Rationals, Rev, Sum, LexQ, KurepaX, Dup>;

  explicit OrderExpr(Node node, std::vector<CharOverride> overrides = {})
      : node_(std::move(node)), overrides_(std::move(overrides)) {}

  const Node& node() const { return node_; }
  const std::vector<CharOverride>& overrides() const { return overrides_; }

 private:
  Node node_;
  std::vector<CharOverride> overrides_;
};

bool equal_expr(const OrderExpr& a, const OrderExpr& b);

ExprPtr make_fin(std::uint64_t n);
ExprPtr make_omega();
ExprPtr make_rationals();
ExprPtr make_rev(ExprPtr inner);
ExprPtr make_sum(ExprPtr lower, ExprPtr upper);
ExprPtr make_lexq(const OrdCode& kappa);
// Validates that every filler code is a limit strictly below kappa;
// stores them sorted without repetition.
ExprPtr make_kurepa(const OrdCode& kappa, std::vector<OrdCode> fillers);

// Returns a copy of e carrying one more override; the named point must
// inhabit e.
ExprPtr with_override(const ExprPtr& e, Element at, Side side, CharClass klass);

bool inhabits(const OrderExpr& e, const Element& x);

// Total-order comparison of two inhabitants. ForeignElement otherwise.
Ordering compare(const OrderExpr& e, const Element& a, const Element& b);

std::optional<Element> successor(const OrderExpr& e, const Element& a);
std::optional<Element> predecessor(const OrderExpr& e, const Element& a);

// Some element strictly between a and b, if any; any witness is valid.
// PreconditionViolated unless a < b.
std::optional<Element> between(const OrderExpr& e, const Element& a, const Element& b);

// Nullopt exactly when a is the extreme point on that side.
std::optional<Element> some_above(const OrderExpr& e, const Element& a);
std::optional<Element> some_below(const OrderExpr& e, const Element& a);

std::optional<Element> minimum(const OrderExpr& e);
std::optional<Element> maximum(const OrderExpr& e);

// Nullopt when infinite.
std::optional<std::uint64_t> cardinality(const OrderExpr& e);

// Isolated iff a has an immediate neighbor on that side or is extreme
// there; overrides take precedence.
CharClass character(const OrderExpr& e, const Element& a, Side side);

// Order surgery: each split point p becomes an adjacent pair p- < p+.
// The split list may name any inhabitants; duplicates collapse.
ExprPtr duplicate(const ExprPtr& e, const std::vector<Element>& split);
// Inverse surgery: the inner expression of a duplication. NotADuplication
// otherwise.
ExprPtr collate(const ExprPtr& e);

// Ascending element list / labeled chain when the order is finite.
std::optional<std::vector<Element>> materialize_elements(const OrderExpr& e);
std::optional<FiniteOrder> materialize(const OrderExpr& e);

// Deterministic sampler: first n elements of a documented per-variant
// enumeration (prefix-stable, not sorted). Exhausted when the order is
// too small. Orders: Fin/Omega count up; Rationals follow nth_rational;
// Rev/Dup walk the inner enumeration; Sum alternates lower/upper starting
// at the lower, skipping an exhausted side; LexQ lists the zero vector and
// then single-entry vectors at coordinate 0; KurepaX lists fillers by code
// first, then the LexQ scheme.
std::vector<Element> enumerate(const OrderExpr& e, std::uint64_t n);

// Canonical text forms; parsing lives in the dsl header and inverts these.
std::string print_expr(const OrderExpr& e);
std::string print_element(const OrderExpr& e, const Element& x);

}  // namespace ordline
