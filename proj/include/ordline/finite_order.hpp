#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ordline/errors.hpp"

namespace ordline {

// A materialized chain: distinct labels, position order is the order.
struct FiniteOrder {
  std::vector<std::string> labels;

  std::size_t size() const { return labels.size(); }
  bool empty() const { return labels.empty(); }

  static FiniteOrder chain(std::size_t n);  // labels "0" .. "n-1"

  friend bool operator==(const FiniteOrder&, const FiniteOrder&) = default;
};

// Subset of a FiniteOrder as strictly increasing positions.
using Subset = std::vector<std::size_t>;

// Throws NotASubset unless positions are strictly increasing and in range.
void check_subset(const FiniteOrder& x, const Subset& y);

// The subchain of x spanned by y, inheriting labels.
FiniteOrder restrict_order(const FiniteOrder& x, const Subset& y);

// Total order-preserving assignment between two chains, by position.
struct IncreasingMap {
  FiniteOrder domain;
  FiniteOrder codomain;
  std::vector<std::size_t> assign;  // one codomain position per domain position

  bool is_increasing() const;
  bool is_valid() const;  // sizes line up, positions in range

  friend bool operator==(const IncreasingMap&, const IncreasingMap&) = default;
};

// g after f (domain of g = codomain of f); throws PreconditionViolated on a
// mismatch.
IncreasingMap compose(const IncreasingMap& g, const IncreasingMap& f);

IncreasingMap identity_map(const FiniteOrder& x);

}  // namespace ordline
