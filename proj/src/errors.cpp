#include "ordline/errors.hpp"

namespace ordline {

std::string err_name(Err code) {
  switch (code) {
    case Err::foreign_element: return "ForeignElement";
    case Err::precondition_violated: return "PreconditionViolated";
    case Err::not_a_duplication: return "NotADuplication";
    case Err::exhausted: return "Exhausted";
    case Err::empty_order: return "EmptyOrder";
    case Err::not_a_subset: return "NotASubset";
    case Err::not_right_inverse: return "NotRightInverse";
    case Err::gap_obstruction: return "GapObstruction";
    case Err::bound_exceeded: return "BoundExceeded";
    case Err::invalid_ordinal: return "InvalidOrdinal";
    case Err::parse_error: return "ParseError";
    case Err::comparison_divergence: return "ComparisonDivergence";
  }
  return "UnknownError";
}

}  // namespace ordline
