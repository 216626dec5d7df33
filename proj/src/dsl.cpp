#include "ordline/dsl.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "ordline/errors.hpp"

namespace ordline {

namespace {

template <class... Ts>
struct overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overload(Ts...) -> overload<Ts...>;

constexpr std::uint64_t kNatCap = 1'000'000'000'000'000ULL;  // 10^15

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  std::size_t line = 1, col = 1;

  bool eof() const { return i >= s.size(); }
  char peek() const { return s[i]; }

  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }

  bool try_consume(char c) {
    skip_ws();
    if (eof() || s[i] != c) return false;
    advance();
    return true;
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || s[i] != c) fail(std::string("expected '") + c + "' " + what);
    advance();
  }

  std::string ident() {
    skip_ws();
    if (eof() || !std::isalpha(static_cast<unsigned char>(s[i])))
      fail("expected a name");
    std::string out;
    while (!eof() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
      advance();
    }
    return out;
  }

  std::string digits() {
    skip_ws();
    if (eof() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected a number");
    std::string out;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      out += s[i];
      advance();
    }
    return out;
  }

  std::uint64_t nat() {
    std::string raw = digits();
    std::uint64_t v = 0;
    for (char ch : raw) {
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > kNatCap) fail("number too large");
    }
    return v;
  }
};

OrdCode parse_ord_cur(Cursor& c) {
  c.skip_ws();
  if (!c.eof() && (c.peek() == 'w' || c.peek() == 'W')) {
    c.advance();
    c.expect('.', "after 'w'");
    std::uint64_t a = c.nat();
    if (a == 0) c.fail("'w.0' is not an ordinal code");
    std::uint64_t b = 0;
    if (c.try_consume('+')) {
      b = c.nat();
      if (b == 0) c.fail("'+0' is not allowed in an ordinal code");
    }
    return OrdCode{a, b};
  }
  return OrdCode{0, c.nat()};
}

Rational parse_rat_cur(Cursor& c) {
  c.skip_ws();
  bool neg = false;
  if (!c.eof() && c.peek() == '-') {
    neg = true;
    c.advance();
  }
  boost::multiprecision::cpp_int num(c.digits());
  boost::multiprecision::cpp_int den = 1;
  if (c.try_consume('/')) {
    den = boost::multiprecision::cpp_int(c.digits());
    if (den == 0) c.fail("zero denominator");
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

KurepaPoint parse_point_cur(Cursor& c) {
  c.skip_ws();
  if (c.eof()) c.fail("expected a point");
  if (c.peek() == 'y' || c.peek() == 'Y') {
    c.advance();
    c.expect('(', "after 'y'");
    OrdCode d = parse_ord_cur(c);
    c.expect(')', "to close the filler");
    return KurepaPoint::filler(d);
  }
  c.expect('{', "to open a vector");
  std::vector<std::pair<OrdCode, Rational>> entries;
  if (!c.try_consume('}')) {
    do {
      OrdCode coord = parse_ord_cur(c);
      c.expect(':', "between coordinate and value");
      entries.emplace_back(coord, parse_rat_cur(c));
    } while (c.try_consume(','));
    c.expect('}', "to close the vector");
  }
  return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
}

ExprPtr parse_expr_cur(Cursor& c);
Element parse_elem_cur(Cursor& c, const OrderExpr& ctx);

ExprPtr parse_expr_cur(Cursor& c) {
  std::string kw = c.ident();
  if (kw == "fin") {
    c.expect('(', "after 'fin'");
    std::uint64_t n = c.nat();
    c.expect(')', "to close 'fin'");
    return make_fin(n);
  }
  if (kw == "omega") return make_omega();
  if (kw == "rationals") return make_rationals();
  if (kw == "rev") {
    c.expect('(', "after 'rev'");
    ExprPtr inner = parse_expr_cur(c);
    c.expect(')', "to close 'rev'");
    return make_rev(std::move(inner));
  }
  if (kw == "sum") {
    c.expect('(', "after 'sum'");
    ExprPtr lower = parse_expr_cur(c);
    c.expect(',', "between the summands");
    ExprPtr upper = parse_expr_cur(c);
    c.expect(')', "to close 'sum'");
    return make_sum(std::move(lower), std::move(upper));
  }
  if (kw == "lexq") {
    c.expect('(', "after 'lexq'");
    OrdCode kappa = parse_ord_cur(c);
    c.expect(')', "to close 'lexq'");
    return make_lexq(kappa);
  }
  if (kw == "kurepa") {
    c.expect('(', "after 'kurepa'");
    OrdCode kappa = parse_ord_cur(c);
    c.expect(';', "after the length code");
    std::vector<OrdCode> fillers;
    c.skip_ws();
    if (!c.eof() && c.peek() != ')') {
      do {
        fillers.push_back(parse_ord_cur(c));
      } while (c.try_consume(','));
    }
    c.expect(')', "to close 'kurepa'");
    return make_kurepa(kappa, std::move(fillers));
  }
  if (kw == "dup") {
    c.expect('(', "after 'dup'");
    ExprPtr inner = parse_expr_cur(c);
    c.expect(';', "after the duplicated order");
    std::vector<Element> split;
    c.skip_ws();
    if (!c.eof() && c.peek() != ')') {
      do {
        split.push_back(parse_elem_cur(c, *inner));
      } while (c.try_consume(','));
    }
    c.expect(')', "to close 'dup'");
    return duplicate(inner, split);
  }
  c.fail("unknown order '" + kw + "'");
}

Element parse_elem_cur(Cursor& c, const OrderExpr& ctx) {
  return std::visit(
      overload{
          [&](const OrderExpr::Fin&) { return Element::nat(c.nat()); },
          [&](const OrderExpr::Omega&) { return Element::nat(c.nat()); },
          [&](const OrderExpr::Rationals&) { return Element::rat(parse_rat_cur(c)); },
          [&](const OrderExpr::Rev& r) {
            return Element::wrapped(parse_elem_cur(c, *r.inner));
          },
          [&](const OrderExpr::Sum& s) -> Element {
            std::string kw = c.ident();
            if (kw == "left") {
              c.expect('(', "after 'left'");
              Element e = parse_elem_cur(c, *s.lower);
              c.expect(')', "to close 'left'");
              return Element::tagged(Side::left, std::move(e));
            }
            if (kw == "right") {
              c.expect('(', "after 'right'");
              Element e = parse_elem_cur(c, *s.upper);
              c.expect(')', "to close 'right'");
              return Element::tagged(Side::right, std::move(e));
            }
            c.fail("a sum element is left(...) or right(...)");
          },
          [&](const OrderExpr::LexQ&) { return Element::point(parse_point_cur(c)); },
          [&](const OrderExpr::KurepaX&) {
            return Element::point(parse_point_cur(c));
          },
          [&](const OrderExpr::Dup& d) -> Element {
            c.skip_ws();
            // minus/plus bind to the outermost duplication; anything else
            // reads as an unsplit inner element.
            if (!c.eof() && std::isalpha(static_cast<unsigned char>(c.peek()))) {
              Cursor saved = c;
              std::string kw = c.ident();
              if (kw == "minus" || kw == "plus") {
                c.expect('(', "after the half tag");
                Element e = parse_elem_cur(c, *d.inner);
                c.expect(')', "to close the half tag");
                return Element::split(kw == "minus" ? Half::minus : Half::plus,
                                      std::move(e));
              }
              c = saved;
            }
            return Element::split(std::nullopt, parse_elem_cur(c, *d.inner));
          },
      },
      ctx.node());
}

}  // namespace

ExprPtr parse_expr_text(std::string_view text) {
  Cursor c{text};
  ExprPtr e = parse_expr_cur(c);
  c.skip_ws();
  if (!c.eof()) c.fail("unexpected trailing input");
  return e;
}

Element parse_element_text(const OrderExpr& context, std::string_view text) {
  Cursor c{text};
  Element e = parse_elem_cur(c, context);
  c.skip_ws();
  if (!c.eof()) c.fail("unexpected trailing input");
  if (!inhabits(context, e))
    throw DomainError(Err::foreign_element,
                      "parsed element does not inhabit this order");
  return e;
}

}  // namespace ordline
