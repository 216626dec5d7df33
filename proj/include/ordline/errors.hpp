#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordline {

// Every usage error the library raises carries one of these codes so callers
// (and the CLI) can map failures to exit codes without string matching.
enum class Err {
  foreign_element,        // element does not inhabit the order it was used with
  precondition_violated,  // documented precondition broken (a >= b, bad fiber, ...)
  not_a_duplication,      // collate applied to a non-duplication expression
  exhausted,              // asked a finite order for more elements than it has
  empty_order,            // construction needs a nonempty order
  not_a_subset,           // positions are not a strictly increasing in-range list
  not_right_inverse,      // claimed right inverse fails f(g(k)) == k
  gap_obstruction,        // fiber admits no canonical retraction value
  bound_exceeded,         // exhaustive suite asked beyond its hard size cap
  invalid_ordinal,        // ordinal argument outside the supported shape
  parse_error,            // DSL / point / ordinal syntax error
  comparison_divergence,  // comparison scan exceeded its iteration guard
};

std::string err_name(Err code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& msg)
      : std::runtime_error(err_name(code) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

// Parse failures additionally carry a 1-based source position.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : DomainError(Err::parse_error,
                    "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ordline
