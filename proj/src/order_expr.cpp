#include "ordline/order_expr.hpp"

#include <algorithm>

#include "ordline/errors.hpp"

namespace ordline {

namespace {

template <class... Ts>
struct overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overload(Ts...) -> overload<Ts...>;

using Fin = OrderExpr::Fin;
using Omega = OrderExpr::Omega;
using Rationals = OrderExpr::Rationals;
using Rev = OrderExpr::Rev;
using Sum = OrderExpr::Sum;
using LexQ = OrderExpr::LexQ;
using KurepaX = OrderExpr::KurepaX;
using Dup = OrderExpr::Dup;

[[noreturn]] void foreign(const std::string& what) {
  throw DomainError(Err::foreign_element, what);
}

}  // namespace

const char* to_string(Side s) { return s == Side::left ? "Left" : "Right"; }

const char* to_string(CharClass c) {
  switch (c) {
    case CharClass::isolated: return "Isolated";
    case CharClass::countable_limit: return "CountableLimit";
    default: return "UncountableSurrogate";
  }
}

Element Element::wrapped(Element inner) {
  return Element(Repr(Wrapped{std::make_shared<const Element>(std::move(inner))}));
}

Element Element::tagged(Side side, Element inner) {
  return Element(Repr(Tagged{side, std::make_shared<const Element>(std::move(inner))}));
}

Element Element::split(std::optional<Half> half, Element inner) {
  return Element(Repr(Split{half, std::make_shared<const Element>(std::move(inner))}));
}

bool operator==(const Element& a, const Element& b) {
  if (a.repr().index() != b.repr().index()) return false;
  return std::visit(
      overload{
          [&](std::uint64_t n) { return n == std::get<std::uint64_t>(b.repr()); },
          [&](const Rational& r) { return r == std::get<Rational>(b.repr()); },
          [&](const KurepaPoint& p) { return p == std::get<KurepaPoint>(b.repr()); },
          [&](const Element::Wrapped& w) {
            return *w.inner == *std::get<Element::Wrapped>(b.repr()).inner;
          },
          [&](const Element::Tagged& t) {
            const auto& u = std::get<Element::Tagged>(b.repr());
            return t.side == u.side && *t.inner == *u.inner;
          },
          [&](const Element::Split& s) {
            const auto& u = std::get<Element::Split>(b.repr());
            return s.half == u.half && *s.inner == *u.inner;
          },
      },
      a.repr());
}

bool equal_expr(const OrderExpr& a, const OrderExpr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overload{
          [&](const Fin& f) { return f.size == std::get<Fin>(b.node()).size; },
          [&](const Omega&) { return true; },
          [&](const Rationals&) { return true; },
          [&](const Rev& r) { return equal_expr(*r.inner, *std::get<Rev>(b.node()).inner); },
          [&](const Sum& s) {
            const auto& t = std::get<Sum>(b.node());
            return equal_expr(*s.lower, *t.lower) && equal_expr(*s.upper, *t.upper);
          },
          [&](const LexQ& l) { return l.kappa == std::get<LexQ>(b.node()).kappa; },
          [&](const KurepaX& k) {
            const auto& l = std::get<KurepaX>(b.node());
            return k.kappa == l.kappa && k.fillers == l.fillers;
          },
          [&](const Dup& d) {
            const auto& e = std::get<Dup>(b.node());
            return equal_expr(*d.inner, *e.inner) && d.split == e.split;
          },
      },
      a.node());
}

ExprPtr make_fin(std::uint64_t n) {
  return std::make_shared<OrderExpr>(OrderExpr::Node(Fin{n}));
}

ExprPtr make_omega() { return std::make_shared<OrderExpr>(OrderExpr::Node(Omega{})); }

ExprPtr make_rationals() {
  return std::make_shared<OrderExpr>(OrderExpr::Node(Rationals{}));
}

ExprPtr make_rev(ExprPtr inner) {
  return std::make_shared<OrderExpr>(OrderExpr::Node(Rev{std::move(inner)}));
}

ExprPtr make_sum(ExprPtr lower, ExprPtr upper) {
  return std::make_shared<OrderExpr>(OrderExpr::Node(Sum{std::move(lower), std::move(upper)}));
}

ExprPtr make_lexq(const OrdCode& kappa) {
  return std::make_shared<OrderExpr>(OrderExpr::Node(LexQ{kappa}));
}

ExprPtr make_kurepa(const OrdCode& kappa, std::vector<OrdCode> fillers) {
  std::sort(fillers.begin(), fillers.end());
  fillers.erase(std::unique(fillers.begin(), fillers.end()), fillers.end());
  for (const OrdCode& d : fillers) {
    if (!d.is_limit())
      throw DomainError(Err::invalid_ordinal,
                        "filler code " + ord_to_string(d) + " is not a limit");
    if (!(d < kappa))
      throw DomainError(Err::invalid_ordinal, "filler code " + ord_to_string(d) +
                                                  " is not strictly below " +
                                                  ord_to_string(kappa));
  }
  return std::make_shared<OrderExpr>(OrderExpr::Node(KurepaX{kappa, std::move(fillers)}));
}

ExprPtr with_override(const ExprPtr& e, Element at, Side side, CharClass klass) {
  if (!inhabits(*e, at)) foreign("override point does not inhabit the order");
  std::vector<CharOverride> ov = e->overrides();
  ov.push_back(CharOverride{std::move(at), side, klass});
  return std::make_shared<OrderExpr>(e->node(), std::move(ov));
}

namespace {

bool coords_below(const KurepaPoint& p, const OrdCode& kappa) {
  for (const auto& entry : p.vec_part().entries)
    if (!(entry.first < kappa)) return false;
  return true;
}

bool split_member(const std::vector<Element>& split, const Element& inner_elem) {
  // Structural equality coincides with order equality for inhabitants of
  // one expression, so a scan suffices.
  return std::any_of(split.begin(), split.end(),
                     [&](const Element& p) { return p == inner_elem; });
}

void require_inhabits(const OrderExpr& e, const Element& x) {
  if (!inhabits(e, x)) foreign("element does not inhabit " + print_expr(e));
}

// Unchecked internals; the public wrappers validate shapes once at entry.
Ordering cmp(const OrderExpr& e, const Element& a, const Element& b);
std::optional<Element> suc(const OrderExpr& e, const Element& a);
std::optional<Element> pred_(const OrderExpr& e, const Element& a);
std::optional<Element> abv(const OrderExpr& e, const Element& a);
std::optional<Element> blw(const OrderExpr& e, const Element& a);
std::optional<Element> mini(const OrderExpr& e);
std::optional<Element> maxi(const OrderExpr& e);
std::optional<Element> btw(const OrderExpr& e, const Element& a, const Element& b);
std::optional<std::uint64_t> card(const OrderExpr& e);
std::optional<Element> some_elem(const OrderExpr& e);
std::vector<Element> enum_prefix(const OrderExpr& e, std::uint64_t n);

const Element& inner_of(const Element& x) {
  return std::visit(
      overload{
          [](const Element::Wrapped& w) -> const Element& { return *w.inner; },
          [](const Element::Tagged& t) -> const Element& { return *t.inner; },
          [](const Element::Split& s) -> const Element& { return *s.inner; },
          [](const auto&) -> const Element& { foreign("element has no inner part"); },
      },
      x.repr());
}

std::uint64_t nat_of(const Element& x) {
  if (const auto* n = std::get_if<std::uint64_t>(&x.repr())) return *n;
  foreign("expected a natural-number element");
}

const Rational& rat_of(const Element& x) {
  if (const auto* r = std::get_if<Rational>(&x.repr())) return *r;
  foreign("expected a rational element");
}

const KurepaPoint& point_of(const Element& x) {
  if (const auto* p = std::get_if<KurepaPoint>(&x.repr())) return *p;
  foreign("expected a point element");
}

Side side_of(const Element& x) { return std::get<Element::Tagged>(x.repr()).side; }

std::optional<Half> half_of(const Element& x) {
  return std::get<Element::Split>(x.repr()).half;
}

// Tag an inner element of a duplication with the half its membership demands
// (the lower half for split points, no tag otherwise).
Element entering(const Dup& d, Element inner, Half preferred = Half::minus) {
  bool is_split = split_member(d.split, inner);
  return Element::split(is_split ? std::optional<Half>(preferred) : std::nullopt,
                        std::move(inner));
}

Ordering cmp(const OrderExpr& e, const Element& a, const Element& b) {
  return std::visit(
      overload{
          [&](const Fin&) { return ordering_of(nat_of(a), nat_of(b)); },
          [&](const Omega&) { return ordering_of(nat_of(a), nat_of(b)); },
          [&](const Rationals&) { return ordering_of(rat_of(a), rat_of(b)); },
          [&](const Rev& r) { return flip(cmp(*r.inner, inner_of(a), inner_of(b))); },
          [&](const Sum& s) {
            Side sa = side_of(a), sb = side_of(b);
            if (sa != sb) return sa == Side::left ? Ordering::lt : Ordering::gt;
            return cmp(sa == Side::left ? *s.lower : *s.upper, inner_of(a), inner_of(b));
          },
          [&](const LexQ&) { return lex_compare(point_of(a), point_of(b)); },
          [&](const KurepaX&) { return lex_compare(point_of(a), point_of(b)); },
          [&](const Dup& d) {
            Ordering c = cmp(*d.inner, inner_of(a), inner_of(b));
            if (c != Ordering::eq) return c;
            auto ha = half_of(a), hb = half_of(b);
            if (ha == hb) return Ordering::eq;
            if (!ha || !hb) foreign("inconsistent duplication tags on equal points");
            return *ha == Half::minus ? Ordering::lt : Ordering::gt;
          },
      },
      e.node());
}

std::optional<std::uint64_t> card(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<std::uint64_t> { return f.size; },
          [&](const Omega&) -> std::optional<std::uint64_t> { return std::nullopt; },
          [&](const Rationals&) -> std::optional<std::uint64_t> { return std::nullopt; },
          [&](const Rev& r) { return card(*r.inner); },
          [&](const Sum& s) -> std::optional<std::uint64_t> {
            auto lo = card(*s.lower), hi = card(*s.upper);
            if (lo && hi) return *lo + *hi;
            return std::nullopt;
          },
          [&](const LexQ& l) -> std::optional<std::uint64_t> {
            if (l.kappa.is_zero()) return 1;  // just the zero vector
            return std::nullopt;
          },
          [&](const KurepaX& k) -> std::optional<std::uint64_t> {
            if (k.kappa.is_zero()) return 1;
            return std::nullopt;
          },
          [&](const Dup& d) -> std::optional<std::uint64_t> {
            auto c = card(*d.inner);
            if (c) return *c + d.split.size();
            return std::nullopt;
          },
      },
      e.node());
}

std::optional<Element> mini(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<Element> {
            if (f.size == 0) return std::nullopt;
            return Element::nat(0);
          },
          [&](const Omega&) -> std::optional<Element> { return Element::nat(0); },
          [&](const Rationals&) -> std::optional<Element> { return std::nullopt; },
          [&](const Rev& r) -> std::optional<Element> {
            auto m = maxi(*r.inner);
            if (!m) return std::nullopt;
            return Element::wrapped(std::move(*m));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (auto m = mini(*s.lower)) return Element::tagged(Side::left, std::move(*m));
            if (auto m = mini(*s.upper)) return Element::tagged(Side::right, std::move(*m));
            return std::nullopt;
          },
          [&](const LexQ& l) -> std::optional<Element> {
            if (l.kappa.is_zero()) return Element::point(KurepaPoint::zero());
            return std::nullopt;
          },
          [&](const KurepaX& k) -> std::optional<Element> {
            if (k.kappa.is_zero()) return Element::point(KurepaPoint::zero());
            return std::nullopt;
          },
          [&](const Dup& d) -> std::optional<Element> {
            auto m = mini(*d.inner);
            if (!m) return std::nullopt;
            return entering(d, std::move(*m));
          },
      },
      e.node());
}

std::optional<Element> maxi(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<Element> {
            if (f.size == 0) return std::nullopt;
            return Element::nat(f.size - 1);
          },
          [&](const Omega&) -> std::optional<Element> { return std::nullopt; },
          [&](const Rationals&) -> std::optional<Element> { return std::nullopt; },
          [&](const Rev& r) -> std::optional<Element> {
            auto m = mini(*r.inner);
            if (!m) return std::nullopt;
            return Element::wrapped(std::move(*m));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (auto m = maxi(*s.upper)) return Element::tagged(Side::right, std::move(*m));
            if (auto m = maxi(*s.lower)) return Element::tagged(Side::left, std::move(*m));
            return std::nullopt;
          },
          [&](const LexQ& l) -> std::optional<Element> {
            if (l.kappa.is_zero()) return Element::point(KurepaPoint::zero());
            return std::nullopt;
          },
          [&](const KurepaX& k) -> std::optional<Element> {
            if (k.kappa.is_zero()) return Element::point(KurepaPoint::zero());
            return std::nullopt;
          },
          [&](const Dup& d) -> std::optional<Element> {
            auto m = maxi(*d.inner);
            if (!m) return std::nullopt;
            return entering(d, std::move(*m), Half::plus);
          },
      },
      e.node());
}

std::optional<Element> some_elem(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<Element> {
            if (f.size == 0) return std::nullopt;
            return Element::nat(0);
          },
          [&](const Omega&) -> std::optional<Element> { return Element::nat(0); },
          [&](const Rationals&) -> std::optional<Element> { return Element::rat(Rational(0)); },
          [&](const Rev& r) -> std::optional<Element> {
            auto m = some_elem(*r.inner);
            if (!m) return std::nullopt;
            return Element::wrapped(std::move(*m));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (auto m = some_elem(*s.lower)) return Element::tagged(Side::left, std::move(*m));
            if (auto m = some_elem(*s.upper)) return Element::tagged(Side::right, std::move(*m));
            return std::nullopt;
          },
          [&](const LexQ&) -> std::optional<Element> {
            return Element::point(KurepaPoint::zero());
          },
          [&](const KurepaX&) -> std::optional<Element> {
            return Element::point(KurepaPoint::zero());
          },
          [&](const Dup& d) -> std::optional<Element> {
            auto m = some_elem(*d.inner);
            if (!m) return std::nullopt;
            return entering(d, std::move(*m));
          },
      },
      e.node());
}

std::optional<Element> suc(const OrderExpr& e, const Element& a) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n + 1 < f.size) return Element::nat(n + 1);
            return std::nullopt;
          },
          [&](const Omega&) -> std::optional<Element> { return Element::nat(nat_of(a) + 1); },
          [&](const Rationals&) -> std::optional<Element> { return std::nullopt; },
          [&](const Rev& r) -> std::optional<Element> {
            auto p = pred_(*r.inner, inner_of(a));
            if (!p) return std::nullopt;
            return Element::wrapped(std::move(*p));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (side_of(a) == Side::left) {
              if (auto n = suc(*s.lower, inner_of(a)))
                return Element::tagged(Side::left, std::move(*n));
              if (auto m = mini(*s.upper)) return Element::tagged(Side::right, std::move(*m));
              return std::nullopt;
            }
            if (auto n = suc(*s.upper, inner_of(a)))
              return Element::tagged(Side::right, std::move(*n));
            return std::nullopt;
          },
          [&](const LexQ&) -> std::optional<Element> { return std::nullopt; },
          [&](const KurepaX&) -> std::optional<Element> { return std::nullopt; },
          [&](const Dup& d) -> std::optional<Element> {
            if (half_of(a) == Half::minus)
              return Element::split(Half::plus, inner_of(a));
            auto n = suc(*d.inner, inner_of(a));
            if (!n) return std::nullopt;
            return entering(d, std::move(*n));
          },
      },
      e.node());
}

std::optional<Element> pred_(const OrderExpr& e, const Element& a) {
  return std::visit(
      overload{
          [&](const Fin&) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n > 0) return Element::nat(n - 1);
            return std::nullopt;
          },
          [&](const Omega&) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n > 0) return Element::nat(n - 1);
            return std::nullopt;
          },
          [&](const Rationals&) -> std::optional<Element> { return std::nullopt; },
          [&](const Rev& r) -> std::optional<Element> {
            auto n = suc(*r.inner, inner_of(a));
            if (!n) return std::nullopt;
            return Element::wrapped(std::move(*n));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (side_of(a) == Side::right) {
              if (auto p = pred_(*s.upper, inner_of(a)))
                return Element::tagged(Side::right, std::move(*p));
              if (auto m = maxi(*s.lower)) return Element::tagged(Side::left, std::move(*m));
              return std::nullopt;
            }
            if (auto p = pred_(*s.lower, inner_of(a)))
              return Element::tagged(Side::left, std::move(*p));
            return std::nullopt;
          },
          [&](const LexQ&) -> std::optional<Element> { return std::nullopt; },
          [&](const KurepaX&) -> std::optional<Element> { return std::nullopt; },
          [&](const Dup& d) -> std::optional<Element> {
            if (half_of(a) == Half::plus)
              return Element::split(Half::minus, inner_of(a));
            auto p = pred_(*d.inner, inner_of(a));
            if (!p) return std::nullopt;
            return entering(d, std::move(*p), Half::plus);
          },
      },
      e.node());
}

std::optional<Element> abv(const OrderExpr& e, const Element& a) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n + 1 < f.size) return Element::nat(n + 1);
            return std::nullopt;
          },
          [&](const Omega&) -> std::optional<Element> { return Element::nat(nat_of(a) + 1); },
          [&](const Rationals&) -> std::optional<Element> {
            return Element::rat(rat_of(a) + 1);
          },
          [&](const Rev& r) -> std::optional<Element> {
            auto b = blw(*r.inner, inner_of(a));
            if (!b) return std::nullopt;
            return Element::wrapped(std::move(*b));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (side_of(a) == Side::left) {
              if (auto n = abv(*s.lower, inner_of(a)))
                return Element::tagged(Side::left, std::move(*n));
              if (auto m = some_elem(*s.upper))
                return Element::tagged(Side::right, std::move(*m));
              return std::nullopt;
            }
            if (auto n = abv(*s.upper, inner_of(a)))
              return Element::tagged(Side::right, std::move(*n));
            return std::nullopt;
          },
          [&](const LexQ& l) -> std::optional<Element> {
            if (l.kappa.is_zero()) return std::nullopt;
            return Element::point(point_above(point_of(a)));
          },
          [&](const KurepaX& k) -> std::optional<Element> {
            if (k.kappa.is_zero()) return std::nullopt;
            return Element::point(point_above(point_of(a)));
          },
          [&](const Dup& d) -> std::optional<Element> {
            if (half_of(a) == Half::minus)
              return Element::split(Half::plus, inner_of(a));
            auto n = abv(*d.inner, inner_of(a));
            if (!n) return std::nullopt;
            return entering(d, std::move(*n));
          },
      },
      e.node());
}

std::optional<Element> blw(const OrderExpr& e, const Element& a) {
  return std::visit(
      overload{
          [&](const Fin&) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n > 0) return Element::nat(n - 1);
            return std::nullopt;
          },
          [&](const Omega&) -> std::optional<Element> {
            std::uint64_t n = nat_of(a);
            if (n > 0) return Element::nat(n - 1);
            return std::nullopt;
          },
          [&](const Rationals&) -> std::optional<Element> {
            return Element::rat(rat_of(a) - 1);
          },
          [&](const Rev& r) -> std::optional<Element> {
            auto b = abv(*r.inner, inner_of(a));
            if (!b) return std::nullopt;
            return Element::wrapped(std::move(*b));
          },
          [&](const Sum& s) -> std::optional<Element> {
            if (side_of(a) == Side::right) {
              if (auto p = blw(*s.upper, inner_of(a)))
                return Element::tagged(Side::right, std::move(*p));
              if (auto m = some_elem(*s.lower))
                return Element::tagged(Side::left, std::move(*m));
              return std::nullopt;
            }
            if (auto p = blw(*s.lower, inner_of(a)))
              return Element::tagged(Side::left, std::move(*p));
            return std::nullopt;
          },
          [&](const LexQ& l) -> std::optional<Element> {
            if (l.kappa.is_zero()) return std::nullopt;
            return Element::point(point_below(point_of(a)));
          },
          [&](const KurepaX& k) -> std::optional<Element> {
            if (k.kappa.is_zero()) return std::nullopt;
            return Element::point(point_below(point_of(a)));
          },
          [&](const Dup& d) -> std::optional<Element> {
            if (half_of(a) == Half::plus)
              return Element::split(Half::minus, inner_of(a));
            auto p = blw(*d.inner, inner_of(a));
            if (!p) return std::nullopt;
            return entering(d, std::move(*p), Half::plus);
          },
      },
      e.node());
}

std::optional<Element> btw(const OrderExpr& e, const Element& a, const Element& b) {
  return std::visit(
      overload{
          [&](const Fin&) -> std::optional<Element> {
            std::uint64_t lo = nat_of(a), hi = nat_of(b);
            if (lo + 1 < hi) return Element::nat(lo + 1);
            return std::nullopt;
          },
          [&](const Omega&) -> std::optional<Element> {
            std::uint64_t lo = nat_of(a), hi = nat_of(b);
            if (lo + 1 < hi) return Element::nat(lo + 1);
            return std::nullopt;
          },
          [&](const Rationals&) -> std::optional<Element> {
            return Element::rat((rat_of(a) + rat_of(b)) / 2);
          },
          [&](const Rev& r) -> std::optional<Element> {
            auto w = btw(*r.inner, inner_of(b), inner_of(a));
            if (!w) return std::nullopt;
            return Element::wrapped(std::move(*w));
          },
          [&](const Sum& s) -> std::optional<Element> {
            Side sa = side_of(a), sb = side_of(b);
            if (sa == sb) {
              const OrderExpr& part = sa == Side::left ? *s.lower : *s.upper;
              auto w = btw(part, inner_of(a), inner_of(b));
              if (!w) return std::nullopt;
              return Element::tagged(sa, std::move(*w));
            }
            // a in the lower summand, b in the upper: anything above a on
            // the left or below b on the right fits.
            if (auto w = abv(*s.lower, inner_of(a)))
              return Element::tagged(Side::left, std::move(*w));
            if (auto w = blw(*s.upper, inner_of(b)))
              return Element::tagged(Side::right, std::move(*w));
            return std::nullopt;
          },
          [&](const LexQ&) -> std::optional<Element> {
            return Element::point(strictly_between(point_of(a), point_of(b)));
          },
          [&](const KurepaX&) -> std::optional<Element> {
            return Element::point(strictly_between(point_of(a), point_of(b)));
          },
          [&](const Dup& d) -> std::optional<Element> {
            const Element& xa = inner_of(a);
            const Element& xb = inner_of(b);
            if (cmp(*d.inner, xa, xb) == Ordering::eq)
              return std::nullopt;  // the adjacent pair p- < p+
            if (auto w = btw(*d.inner, xa, xb)) return entering(d, std::move(*w));
            if (half_of(a) == Half::minus) return Element::split(Half::plus, xa);
            if (half_of(b) == Half::plus) return Element::split(Half::minus, xb);
            return std::nullopt;
          },
      },
      e.node());
}

}  // namespace

bool inhabits(const OrderExpr& e, const Element& x) {
  return std::visit(
      overload{
          [&](const Fin& f) {
            const auto* n = std::get_if<std::uint64_t>(&x.repr());
            return n && *n < f.size;
          },
          [&](const Omega&) { return std::holds_alternative<std::uint64_t>(x.repr()); },
          [&](const Rationals&) { return std::holds_alternative<Rational>(x.repr()); },
          [&](const Rev& r) {
            const auto* w = std::get_if<Element::Wrapped>(&x.repr());
            return w && inhabits(*r.inner, *w->inner);
          },
          [&](const Sum& s) {
            const auto* t = std::get_if<Element::Tagged>(&x.repr());
            if (!t) return false;
            return inhabits(t->side == Side::left ? *s.lower : *s.upper, *t->inner);
          },
          [&](const LexQ& l) {
            const auto* p = std::get_if<KurepaPoint>(&x.repr());
            return p && !p->is_filler() && coords_below(*p, l.kappa);
          },
          [&](const KurepaX& k) {
            const auto* p = std::get_if<KurepaPoint>(&x.repr());
            if (!p) return false;
            if (p->is_filler())
              return std::binary_search(k.fillers.begin(), k.fillers.end(),
                                        p->filler_code());
            return coords_below(*p, k.kappa);
          },
          [&](const Dup& d) {
            const auto* s = std::get_if<Element::Split>(&x.repr());
            if (!s || !inhabits(*d.inner, *s->inner)) return false;
            return split_member(d.split, *s->inner) == s->half.has_value();
          },
      },
      e.node());
}

Ordering compare(const OrderExpr& e, const Element& a, const Element& b) {
  require_inhabits(e, a);
  require_inhabits(e, b);
  return cmp(e, a, b);
}

std::optional<Element> successor(const OrderExpr& e, const Element& a) {
  require_inhabits(e, a);
  return suc(e, a);
}

std::optional<Element> predecessor(const OrderExpr& e, const Element& a) {
  require_inhabits(e, a);
  return pred_(e, a);
}

std::optional<Element> between(const OrderExpr& e, const Element& a, const Element& b) {
  require_inhabits(e, a);
  require_inhabits(e, b);
  if (cmp(e, a, b) != Ordering::lt)
    throw DomainError(Err::precondition_violated, "between needs a < b");
  return btw(e, a, b);
}

std::optional<Element> some_above(const OrderExpr& e, const Element& a) {
  require_inhabits(e, a);
  return abv(e, a);
}

std::optional<Element> some_below(const OrderExpr& e, const Element& a) {
  require_inhabits(e, a);
  return blw(e, a);
}

std::optional<Element> minimum(const OrderExpr& e) { return mini(e); }
std::optional<Element> maximum(const OrderExpr& e) { return maxi(e); }
std::optional<std::uint64_t> cardinality(const OrderExpr& e) { return card(e); }

CharClass character(const OrderExpr& e, const Element& a, Side side) {
  require_inhabits(e, a);
  for (const CharOverride& o : e.overrides())
    if (o.side == side && o.at == a) return o.klass;
  bool isolated = side == Side::left
                      ? (pred_(e, a).has_value() || !blw(e, a).has_value())
                      : (suc(e, a).has_value() || !abv(e, a).has_value());
  return isolated ? CharClass::isolated : CharClass::countable_limit;
}

ExprPtr duplicate(const ExprPtr& e, const std::vector<Element>& split) {
  for (const Element& p : split)
    if (!inhabits(*e, p)) foreign("split point does not inhabit the order");
  std::vector<Element> sorted = split;
  std::sort(sorted.begin(), sorted.end(), [&](const Element& a, const Element& b) {
    return cmp(*e, a, b) == Ordering::lt;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return std::make_shared<OrderExpr>(OrderExpr::Node(Dup{e, std::move(sorted)}));
}

ExprPtr collate(const ExprPtr& e) {
  if (const auto* d = std::get_if<Dup>(&e->node())) return d->inner;
  throw DomainError(Err::not_a_duplication, "collate needs a duplication expression");
}

std::optional<std::vector<Element>> materialize_elements(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) -> std::optional<std::vector<Element>> {
            std::vector<Element> out;
            out.reserve(static_cast<std::size_t>(f.size));
            for (std::uint64_t i = 0; i < f.size; ++i) out.push_back(Element::nat(i));
            return out;
          },
          [&](const Omega&) -> std::optional<std::vector<Element>> { return std::nullopt; },
          [&](const Rationals&) -> std::optional<std::vector<Element>> {
            return std::nullopt;
          },
          [&](const Rev& r) -> std::optional<std::vector<Element>> {
            auto inner = materialize_elements(*r.inner);
            if (!inner) return std::nullopt;
            std::vector<Element> out;
            out.reserve(inner->size());
            for (auto it = inner->rbegin(); it != inner->rend(); ++it)
              out.push_back(Element::wrapped(std::move(*it)));
            return out;
          },
          [&](const Sum& s) -> std::optional<std::vector<Element>> {
            auto lo = materialize_elements(*s.lower);
            auto hi = materialize_elements(*s.upper);
            if (!lo || !hi) return std::nullopt;
            std::vector<Element> out;
            out.reserve(lo->size() + hi->size());
            for (Element& x : *lo) out.push_back(Element::tagged(Side::left, std::move(x)));
            for (Element& x : *hi) out.push_back(Element::tagged(Side::right, std::move(x)));
            return out;
          },
          [&](const LexQ& l) -> std::optional<std::vector<Element>> {
            if (!l.kappa.is_zero()) return std::nullopt;
            return std::vector<Element>{Element::point(KurepaPoint::zero())};
          },
          [&](const KurepaX& k) -> std::optional<std::vector<Element>> {
            if (!k.kappa.is_zero()) return std::nullopt;
            return std::vector<Element>{Element::point(KurepaPoint::zero())};
          },
          [&](const Dup& d) -> std::optional<std::vector<Element>> {
            auto inner = materialize_elements(*d.inner);
            if (!inner) return std::nullopt;
            std::vector<Element> out;
            out.reserve(inner->size() + d.split.size());
            for (Element& x : *inner) {
              if (split_member(d.split, x)) {
                out.push_back(Element::split(Half::minus, x));
                out.push_back(Element::split(Half::plus, std::move(x)));
              } else {
                out.push_back(Element::split(std::nullopt, std::move(x)));
              }
            }
            return out;
          },
      },
      e.node());
}

std::optional<FiniteOrder> materialize(const OrderExpr& e) {
  auto elems = materialize_elements(e);
  if (!elems) return std::nullopt;
  FiniteOrder out;
  out.labels.reserve(elems->size());
  for (const Element& x : *elems) out.labels.push_back(print_element(e, x));
  return out;
}

namespace {

std::vector<Element> enum_prefix(const OrderExpr& e, std::uint64_t n) {
  return std::visit(
      overload{
          [&](const Fin&) {
            std::vector<Element> out;
            for (std::uint64_t i = 0; i < n; ++i) out.push_back(Element::nat(i));
            return out;
          },
          [&](const Omega&) {
            std::vector<Element> out;
            for (std::uint64_t i = 0; i < n; ++i) out.push_back(Element::nat(i));
            return out;
          },
          [&](const Rationals&) {
            std::vector<Element> out;
            for (std::uint64_t i = 0; i < n; ++i)
              out.push_back(Element::rat(nth_rational(i)));
            return out;
          },
          [&](const Rev& r) {
            std::vector<Element> out;
            for (Element& x : enum_prefix(*r.inner, n))
              out.push_back(Element::wrapped(std::move(x)));
            return out;
          },
          [&](const Sum& s) {
            auto lo_card = card(*s.lower);
            auto hi_card = card(*s.upper);
            std::vector<bool> take_lower(static_cast<std::size_t>(n));
            std::uint64_t lo_n = 0, hi_n = 0;
            for (std::uint64_t t = 0; t < n; ++t) {
              bool lo_avail = !lo_card || lo_n < *lo_card;
              bool hi_avail = !hi_card || hi_n < *hi_card;
              bool lower = lo_avail && (t % 2 == 0 || !hi_avail);
              take_lower[static_cast<std::size_t>(t)] = lower;
              (lower ? lo_n : hi_n)++;
            }
            auto lows = enum_prefix(*s.lower, lo_n);
            auto his = enum_prefix(*s.upper, hi_n);
            std::vector<Element> out;
            out.reserve(static_cast<std::size_t>(n));
            std::size_t il = 0, ih = 0;
            for (bool lower : take_lower)
              out.push_back(lower
                                ? Element::tagged(Side::left, std::move(lows[il++]))
                                : Element::tagged(Side::right, std::move(his[ih++])));
            return out;
          },
          [&](const LexQ&) {
            std::vector<Element> out;
            if (n == 0) return out;
            out.push_back(Element::point(KurepaPoint::zero()));
            for (std::uint64_t i = 0; i + 1 < n; ++i)
              out.push_back(Element::point(KurepaPoint::vec(
                  FinSuppVec::make({{OrdCode{0, 0}, nth_nonzero_rational(i)}}))));
            return out;
          },
          [&](const KurepaX& k) {
            std::vector<Element> out;
            std::uint64_t i = 0;
            for (const OrdCode& d : k.fillers) {
              if (i >= n) break;
              out.push_back(Element::point(KurepaPoint::filler(d)));
              ++i;
            }
            if (i < n) out.push_back(Element::point(KurepaPoint::zero())), ++i;
            for (std::uint64_t j = 0; i < n; ++i, ++j)
              out.push_back(Element::point(KurepaPoint::vec(
                  FinSuppVec::make({{OrdCode{0, 0}, nth_nonzero_rational(j)}}))));
            return out;
          },
          [&](const Dup& d) {
            std::vector<Element> out;
            auto inner_card = card(*d.inner);
            std::uint64_t pull = inner_card && *inner_card < n ? *inner_card : n;
            for (Element& x : enum_prefix(*d.inner, pull)) {
              if (out.size() >= n) break;
              if (split_member(d.split, x)) {
                out.push_back(Element::split(Half::minus, x));
                if (out.size() < n) out.push_back(Element::split(Half::plus, std::move(x)));
              } else {
                out.push_back(Element::split(std::nullopt, std::move(x)));
              }
            }
            return out;
          },
      },
      e.node());
}

}  // namespace

std::vector<Element> enumerate(const OrderExpr& e, std::uint64_t n) {
  auto c = card(e);
  if (c && *c < n)
    throw DomainError(Err::exhausted, "order has " + std::to_string(*c) +
                                          " elements, asked for " + std::to_string(n));
  return enum_prefix(e, n);
}

std::string print_expr(const OrderExpr& e) {
  return std::visit(
      overload{
          [&](const Fin& f) { return "fin(" + std::to_string(f.size) + ")"; },
          [&](const Omega&) { return std::string("omega"); },
          [&](const Rationals&) { return std::string("rationals"); },
          [&](const Rev& r) { return "rev(" + print_expr(*r.inner) + ")"; },
          [&](const Sum& s) {
            return "sum(" + print_expr(*s.lower) + ", " + print_expr(*s.upper) + ")";
          },
          [&](const LexQ& l) { return "lexq(" + ord_to_string(l.kappa) + ")"; },
          [&](const KurepaX& k) {
            std::string out = "kurepa(" + ord_to_string(k.kappa) + ";";
            for (std::size_t i = 0; i < k.fillers.size(); ++i)
              out += (i ? ", " : " ") + ord_to_string(k.fillers[i]);
            return out + ")";
          },
          [&](const Dup& d) {
            std::string out = "dup(" + print_expr(*d.inner) + ";";
            for (std::size_t i = 0; i < d.split.size(); ++i)
              out += (i ? ", " : " ") + print_element(*d.inner, d.split[i]);
            return out + ")";
          },
      },
      e.node());
}

std::string print_element(const OrderExpr& e, const Element& x) {
  return std::visit(
      overload{
          [&](const Fin&) { return std::to_string(nat_of(x)); },
          [&](const Omega&) { return std::to_string(nat_of(x)); },
          [&](const Rationals&) { return rational_to_string(rat_of(x)); },
          [&](const Rev& r) { return print_element(*r.inner, inner_of(x)); },
          [&](const Sum& s) {
            Side side = side_of(x);
            const OrderExpr& part = side == Side::left ? *s.lower : *s.upper;
            return std::string(side == Side::left ? "left(" : "right(") +
                   print_element(part, inner_of(x)) + ")";
          },
          [&](const LexQ&) { return point_to_string(point_of(x)); },
          [&](const KurepaX&) { return point_to_string(point_of(x)); },
          [&](const Dup& d) {
            auto half = half_of(x);
            std::string inner = print_element(*d.inner, inner_of(x));
            if (!half) return inner;
            return std::string(*half == Half::minus ? "minus(" : "plus(") + inner + ")";
          },
      },
      e.node());
}

}  // namespace ordline
