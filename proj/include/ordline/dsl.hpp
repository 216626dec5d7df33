#pragma once

#include <string_view>

#include "ordline/order_expr.hpp"

namespace ordline {

// Order descriptions (keywords case-insensitive, whitespace free-form):
//   expr := fin(nat) | omega | rationals | rev(expr) | sum(expr, expr)
//         | lexq(ord) | kurepa(ord; ord, ...) | dup(expr; elem, ...)
//   ord  := nat | "w." nat ["+" nat]
// Inverts print_expr. Syntax errors raise ParseError with 1-based
// line/column; semantic errors (bad filler codes etc.) raise the
// corresponding DomainError.
ExprPtr parse_expr_text(std::string_view text);

// An element in the shape of the given order; inverts print_element.
//   fin/omega: nat       rationals: [-]p[/q]        rev: bare inner element
//   sum: left(e)/right(e)
//   lexq/kurepa points: {ord:rat, ...} or y(ord)
//   dup: minus(e)/plus(e) for a split half, bare inner element otherwise;
//        the tags bind to the outermost duplication first.
// The parsed element must inhabit the order (ForeignElement otherwise).
Element parse_element_text(const OrderExpr& context, std::string_view text);

}  // namespace ordline
