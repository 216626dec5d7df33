#include "ordline/oracle.hpp"

#include <algorithm>

#include "ordline/errors.hpp"

namespace ordline {

namespace {

std::string subset_to_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Subset s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Subset> all_final_segments(const FiniteOrder& x, std::size_t bound) {
  if (x.size() > bound)
    throw DomainError(Err::bound_exceeded,
                      "final-segment enumeration capped at " + std::to_string(bound) +
                          " points");
  std::vector<Subset> out;
  for (Subset& s : all_subsets(x.size())) {
    bool upward = true;
    for (std::size_t pos : s)
      if (pos + 1 < x.size() &&
          !std::binary_search(s.begin(), s.end(), pos + 1)) {
        upward = false;
        break;
      }
    if (upward) out.push_back(std::move(s));
  }
  // inverse inclusion: the whole chain is the bottom of the dual line
  std::sort(out.begin(), out.end(),
            [](const Subset& a, const Subset& b) { return a.size() > b.size(); });
  return out;
}

std::vector<IncreasingMap> all_increasing_maps(const FiniteOrder& x,
                                               const FiniteOrder& y,
                                               std::size_t product_bound) {
  if (x.size() * y.size() > product_bound)
    throw DomainError(Err::bound_exceeded,
                      "map enumeration capped at domain*codomain <= " +
                          std::to_string(product_bound));
  std::vector<IncreasingMap> out;
  if (x.empty()) {
    out.push_back(IncreasingMap{x, y, {}});
    return out;
  }
  if (y.empty()) return out;  // no total map into the empty chain
  std::vector<std::size_t> assign(x.size(), 0);
  while (true) {
    out.push_back(IncreasingMap{x, y, assign});
    // next order-preserving assignment, lexicographically
    std::size_t i = x.size();
    while (i > 0 && assign[i - 1] == y.size() - 1) --i;
    if (i == 0) break;
    std::size_t v = assign[i - 1] + 1;
    for (std::size_t j = i - 1; j < x.size(); ++j) assign[j] = v;
  }
  return out;
}

IsoResult check_iso(const FiniteOrder& a, const FiniteOrder& b) {
  if (a.size() != b.size())
    return {false, "sizes differ: " + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size())};
  return {true, "chains of " + std::to_string(a.size()) +
                    " points are uniquely isomorphic"};
}

OracleReport exhaustive_lemma33(std::size_t n_max) {
  if (n_max > 8)
    throw DomainError(Err::bound_exceeded, "lemma33 oracle capped at n <= 8");
  OracleReport r;
  r.suite = "lemma33";
  r.instance = "all chains |X| <= " + std::to_string(n_max) + ", all subchains";
  r.property =
      "dual inclusion splits: f.g = id, g and p increasing, p fixes the subchain";
  std::string replay = "oracle lemma33 --n " + std::to_string(n_max);

  for (std::size_t n = 0; n <= n_max; ++n) {
    FiniteOrder x = FiniteOrder::chain(n);
    for (const Subset& y : all_subsets(n)) {
      ++r.cases;
      std::string inst = "n=" + std::to_string(n) + " Y=" + subset_to_string(y);
      auto fail = [&](const std::string& what) {
        r.failures.push_back({inst, what, replay});
      };
      try {
        IncreasingMap f = dual_inclusion(x, y);
        IncreasingMap g = right_inverse_from_gaps(f);
        if (!g.is_increasing()) fail("right inverse is not increasing");
        bool section = g.assign.size() == f.codomain.size();
        for (std::size_t k = 0; section && k < g.assign.size(); ++k)
          section = g.assign[k] < f.assign.size() && f.assign[g.assign[k]] == k;
        if (!section) fail("f.g = id fails");
        IncreasingMap p = projection_from_right_inverse(x, y, g);
        if (!p.is_increasing()) fail("projection is not increasing");
        std::size_t yf = y.empty() ? 0 : y.front();
        for (std::size_t j = 0; j < y.size(); ++j)
          if (p.assign[y[j] - yf] != j) {
            fail("projection moves the subchain point at " + std::to_string(y[j]));
            break;
          }
      } catch (const DomainError& e) {
        fail(std::string("unexpected error: ") + e.what());
      }
    }
  }
  return r;
}

OracleReport exhaustive_duality(std::size_t n_max) {
  if (n_max > 8)
    throw DomainError(Err::bound_exceeded, "duality oracle capped at n <= 8");
  OracleReport r;
  r.suite = "duality";
  r.instance = "all chains |X| <= " + std::to_string(n_max) + ", lines to " +
               std::to_string(n_max + 1) + " points";
  r.property =
      "final-segment line round-trips both ways and inclusion dualizes "
      "contravariantly";
  std::string replay = "oracle duality --n " + std::to_string(n_max);
  auto fail = [&](const std::string& inst, const std::string& what) {
    r.failures.push_back({inst, what, replay});
  };

  for (std::size_t n = 0; n <= n_max; ++n) {
    FiniteOrder x = FiniteOrder::chain(n);
    std::string inst = "n=" + std::to_string(n);

    // chain -> line: the canonical segments are exactly the brute-forced ones
    ++r.cases;
    FiniteCompactLine k = k_finite(x);
    std::vector<Subset> segs = all_final_segments(x);
    if (segs.size() != k.size()) {
      fail(inst, "segment count mismatch");
    } else {
      for (std::size_t j = 0; j < segs.size(); ++j)
        if (k.segment(j) != segs[j]) {
          fail(inst, "segment " + std::to_string(j) + " is " +
                         subset_to_string(k.segment(j)) + ", expected " +
                         subset_to_string(segs[j]));
          break;
        }
    }

    // chain -> line -> chain lands back where it started
    ++r.cases;
    IsoResult back = check_iso(x_finite(k.as_order()), x);
    if (!back.iso) fail(inst, "X(K(X)) != X: " + back.detail);
  }

  for (std::size_t m = 1; m <= n_max + 1; ++m) {
    // line -> chain -> line
    ++r.cases;
    FiniteOrder kchain = FiniteOrder::chain(m);
    IsoResult back = check_iso(k_finite(x_finite(kchain)).as_order(), kchain);
    if (!back.iso)
      fail("m=" + std::to_string(m), "K(X(K)) != K: " + back.detail);
  }

  for (std::size_t n = 0; n <= n_max; ++n) {
    FiniteOrder x = FiniteOrder::chain(n);
    for (const Subset& y : all_subsets(n)) {
      FiniteOrder ychain = restrict_order(x, y);
      for (const Subset& z : all_subsets(y.size())) {
        ++r.cases;
        Subset w;
        for (std::size_t zi : z) w.push_back(y[zi]);
        IncreasingMap lhs = compose(dual_inclusion(ychain, z), dual_inclusion(x, y));
        IncreasingMap rhs = dual_inclusion(x, w);
        if (lhs.assign != rhs.assign)
          fail("n=" + std::to_string(n) + " Y=" + subset_to_string(y) +
                   " Z=" + subset_to_string(z),
               "dual of composite differs from composite of duals");
      }
    }
  }
  return r;
}

std::vector<std::string> duality_roundtrip_defects(const FiniteOrder& x,
                                                   const std::vector<Subset>& claimed) {
  std::vector<std::string> defects;
  std::vector<Subset> canonical = all_final_segments(x);
  if (claimed.size() != canonical.size())
    defects.push_back("family has " + std::to_string(claimed.size()) +
                      " segments, expected " + std::to_string(canonical.size()));
  for (std::size_t j = 0; j < std::min(claimed.size(), canonical.size()); ++j)
    if (claimed[j] != canonical[j])
      defects.push_back("segment " + std::to_string(j) + " is " +
                        subset_to_string(claimed[j]) + ", expected " +
                        subset_to_string(canonical[j]));
  return defects;
}

}  // namespace ordline
