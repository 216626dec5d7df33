#include "ordline/finite_order.hpp"

namespace ordline {

FiniteOrder FiniteOrder::chain(std::size_t n) {
  FiniteOrder out;
  out.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.labels.push_back(std::to_string(i));
  return out;
}

void check_subset(const FiniteOrder& x, const Subset& y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] >= x.size())
      throw DomainError(Err::not_a_subset,
                        "position " + std::to_string(y[i]) + " out of range");
    if (i > 0 && y[i - 1] >= y[i])
      throw DomainError(Err::not_a_subset, "positions not strictly increasing");
  }
}

FiniteOrder restrict_order(const FiniteOrder& x, const Subset& y) {
  check_subset(x, y);
  FiniteOrder out;
  out.labels.reserve(y.size());
  for (std::size_t pos : y) out.labels.push_back(x.labels[pos]);
  return out;
}

bool IncreasingMap::is_valid() const {
  if (assign.size() != domain.size()) return false;
  for (std::size_t v : assign)
    if (v >= codomain.size()) return false;
  return true;
}

bool IncreasingMap::is_increasing() const {
  if (!is_valid()) return false;
  for (std::size_t i = 0; i + 1 < assign.size(); ++i)
    if (assign[i] > assign[i + 1]) return false;
  return true;
}

IncreasingMap compose(const IncreasingMap& g, const IncreasingMap& f) {
  if (f.codomain != g.domain)
    throw DomainError(Err::precondition_violated,
                      "compose: codomain of the inner map differs from the outer domain");
  IncreasingMap out{f.domain, g.codomain, {}};
  out.assign.reserve(f.assign.size());
  for (std::size_t v : f.assign) out.assign.push_back(g.assign.at(v));
  return out;
}

IncreasingMap identity_map(const FiniteOrder& x) {
  IncreasingMap out{x, x, {}};
  out.assign.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.assign[i] = i;
  return out;
}

}  // namespace ordline
