#include "ordline/kurepa.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ordline/errors.hpp"

namespace ordline {

namespace {

// Guard for the merged comparison scan; unreachable with the canonical
// fundamental sequences (disjoint ranges), kept as a diagnostic for any
// alternative coordinate-stream family.
constexpr std::size_t kCompareScanCap = 1u << 20;

}  // namespace

FinSuppVec FinSuppVec::make(std::vector<std::pair<OrdCode, Rational>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FinSuppVec out;
  out.entries.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.entries.empty() && out.entries.back().first == e.first)
      throw DomainError(Err::precondition_violated,
                        "duplicate coordinate " + ord_to_string(e.first));
    if (e.second != 0) out.entries.push_back(std::move(e));
  }
  return out;
}

const Rational* FinSuppVec::find(const OrdCode& coord) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), coord,
      [](const auto& entry, const OrdCode& c) { return entry.first < c; });
  if (it != entries.end() && it->first == coord) return &it->second;
  return nullptr;
}

std::optional<OrdCode> FinSuppVec::max_coord() const {
  if (entries.empty()) return std::nullopt;
  return entries.back().first;
}

KurepaPoint KurepaPoint::filler(const OrdCode& delta) {
  if (!delta.is_limit())
    throw DomainError(Err::invalid_ordinal,
                      "filler requires a limit code, got " + ord_to_string(delta));
  return KurepaPoint(delta);
}

Rational coord_at(const KurepaPoint& p, const OrdCode& alpha) {
  if (p.is_filler())
    return in_fundamental_range(p.filler_code(), alpha) ? Rational(1) : Rational(0);
  const Rational* v = p.vec_part().find(alpha);
  return v ? *v : Rational(0);
}

namespace {

// Increasing stream of coordinates where a point may be nonzero.
// Finite for vectors, the fundamental-sequence range for fillers.
class CoordCursor {
 public:
  explicit CoordCursor(const KurepaPoint& p) {
    if (p.is_filler())
      filler_ = p.filler_code();
    else
      vec_ = &p.vec_part();
  }

  bool done() const { return vec_ && i_ >= vec_->entries.size(); }

  OrdCode peek() const {
    return vec_ ? vec_->entries[i_].first : filler_->fundamental(m_);
  }

  void advance_past(const OrdCode& c) {
    if (!done() && peek() == c) {
      if (vec_)
        ++i_;
      else
        ++m_;
    }
  }

 private:
  const FinSuppVec* vec_ = nullptr;
  std::size_t i_ = 0;
  std::optional<OrdCode> filler_;
  std::uint64_t m_ = 0;
};

}  // namespace

std::optional<Difference> first_difference(const KurepaPoint& p, const KurepaPoint& q) {
  if (p == q) return std::nullopt;  // in particular, identical fillers
  CoordCursor cp(p), cq(q);
  std::size_t guard = 0;
  while (!cp.done() || !cq.done()) {
    if (++guard > kCompareScanCap)
      throw DomainError(Err::comparison_divergence,
                        "coordinate scan exceeded " + std::to_string(kCompareScanCap) +
                            " merged candidates");
    OrdCode c;
    if (cp.done())
      c = cq.peek();
    else if (cq.done())
      c = cp.peek();
    else
      c = std::min(cp.peek(), cq.peek());
    cp.advance_past(c);
    cq.advance_past(c);
    Rational vp = coord_at(p, c);
    Rational vq = coord_at(q, c);
    if (vp != vq) return Difference{c, vp < vq ? Ordering::lt : Ordering::gt};
  }
  return std::nullopt;
}

Ordering lex_compare(const KurepaPoint& p, const KurepaPoint& q) {
  auto d = first_difference(p, q);
  return d ? d->order : Ordering::eq;
}

bool in_filtration(const KurepaPoint& p, const OrdCode& delta) {
  if (p.is_filler()) return p.filler_code() < delta;
  auto mx = p.vec_part().max_coord();
  if (!mx) return !delta.is_zero();
  return mx->successor() < delta;
}

Ordering signed_compare(const SignedPoint& a, const SignedPoint& b) {
  auto rank = [](const SignedPoint& s) {
    switch (s.kind) {
      case SignedPoint::Kind::neg_inf: return 0;
      case SignedPoint::Kind::point: return 1;
      default: return 2;
    }
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? Ordering::lt : Ordering::gt;
  if (a.kind != SignedPoint::Kind::point) return Ordering::eq;
  return lex_compare(*a.value, *b.value);
}

TruncationResult truncate_projection(const KurepaPoint& p, const OrdCode& delta) {
  if (!p.is_filler()) {
    std::vector<std::pair<OrdCode, Rational>> kept;
    for (const auto& e : p.vec_part().entries)
      if (e.first < delta) kept.push_back(e);
    return SignedPoint::at(KurepaPoint::vec(FinSuppVec::make(std::move(kept))));
  }
  const OrdCode& lambda = p.filler_code();
  if (lambda == delta) return InfiniteTruncation{};
  if (lambda < delta) return SignedPoint::at(p);  // support already below delta
  // lambda > delta: keep the finitely many fundamental-sequence elements
  // below delta (none at all unless the ranges' block lines up).
  std::vector<std::pair<OrdCode, Rational>> kept;
  for (std::uint64_t m = 0;; ++m) {
    OrdCode c = lambda.fundamental(m);
    if (!(c < delta)) break;
    kept.emplace_back(c, Rational(1));
  }
  return SignedPoint::at(KurepaPoint::vec(FinSuppVec::make(std::move(kept))));
}

namespace {

// Shared setup of the two witness constructions: the position of the first
// difference against the filler, translated into a fundamental-sequence
// prefix length.
std::uint64_t witness_prefix_length(const OrdCode& delta, const KurepaPoint& x,
                                    const KurepaPoint& y) {
  auto d = first_difference(x, y);
  // callers have already established x != y_delta
  return fundamental_index_at_or_above(delta, d->coord);
}

void require_limit(const OrdCode& delta) {
  if (!delta.is_limit())
    throw DomainError(Err::invalid_ordinal,
                      ord_to_string(delta) + " is not a limit code");
}

}  // namespace

KurepaPoint gap_witness_left(const OrdCode& delta, const KurepaPoint& a) {
  require_limit(delta);
  if (!in_filtration(a, delta))
    throw DomainError(Err::precondition_violated,
                      "left bound is not a member of the stage below " + ord_to_string(delta));
  KurepaPoint y = KurepaPoint::filler(delta);
  if (lex_compare(a, y) != Ordering::lt)
    throw DomainError(Err::precondition_violated, "left bound does not sit below the filler");
  std::uint64_t n = witness_prefix_length(delta, a, y);
  // Agreeing with the filler on one more fundamental-sequence element than
  // the first difference reaches jumps strictly above a while staying below y
  // (y keeps the rest of its infinite tail).
  std::vector<std::pair<OrdCode, Rational>> entries;
  for (std::uint64_t m = 0; m <= n; ++m)
    entries.emplace_back(delta.fundamental(m), Rational(1));
  return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
}

KurepaPoint gap_witness_right(const OrdCode& delta, const KurepaPoint& b) {
  require_limit(delta);
  if (!in_filtration(b, delta))
    throw DomainError(Err::precondition_violated,
                      "right bound is not a member of the stage below " + ord_to_string(delta));
  KurepaPoint y = KurepaPoint::filler(delta);
  if (lex_compare(b, y) != Ordering::gt)
    throw DomainError(Err::precondition_violated, "right bound does not sit above the filler");
  std::uint64_t n = witness_prefix_length(delta, b, y);
  // Same prefix as on the left, then overshoot the filler's next tail
  // element: strictly above y, still below b (decided at or before the first
  // difference with b, where the prefix agrees with y).
  std::vector<std::pair<OrdCode, Rational>> entries;
  for (std::uint64_t m = 0; m <= n; ++m)
    entries.emplace_back(delta.fundamental(m), Rational(1));
  entries.emplace_back(delta.fundamental(n + 1), Rational(2));
  return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
}

KurepaPoint strictly_between(const KurepaPoint& p, const KurepaPoint& q) {
  if (lex_compare(p, q) != Ordering::lt)
    throw DomainError(Err::precondition_violated, "strictly_between needs p < q");
  if (p.is_filler()) {
    // Right-style witness from p: prefix of p's tail, then value 2 just past
    // the first difference with q.
    const OrdCode& delta = p.filler_code();
    std::uint64_t n = witness_prefix_length(delta, q, p);
    std::vector<std::pair<OrdCode, Rational>> entries;
    for (std::uint64_t m = 0; m <= n; ++m)
      entries.emplace_back(delta.fundamental(m), Rational(1));
    entries.emplace_back(delta.fundamental(n + 1), Rational(2));
    return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
  }
  if (q.is_filler()) {
    // Left-style witness toward q.
    const OrdCode& delta = q.filler_code();
    std::uint64_t n = witness_prefix_length(delta, p, q);
    std::vector<std::pair<OrdCode, Rational>> entries;
    for (std::uint64_t m = 0; m <= n; ++m)
      entries.emplace_back(delta.fundamental(m), Rational(1));
    return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
  }
  // Two vectors: copy the common prefix, average at the first difference.
  OrdCode alpha = first_difference(p, q)->coord;
  std::vector<std::pair<OrdCode, Rational>> entries;
  for (const auto& e : p.vec_part().entries)
    if (e.first < alpha) entries.push_back(e);
  Rational mid = (coord_at(p, alpha) + coord_at(q, alpha)) / 2;
  entries.emplace_back(alpha, mid);
  return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
}

KurepaPoint point_above(const KurepaPoint& p) {
  // Bumping coordinate 0 decides the comparison immediately.
  Rational v = coord_at(p, OrdCode{0, 0}) + 1;
  return KurepaPoint::vec(FinSuppVec::make({{OrdCode{0, 0}, v}}));
}

KurepaPoint point_below(const KurepaPoint& p) {
  Rational v = coord_at(p, OrdCode{0, 0}) - 1;
  return KurepaPoint::vec(FinSuppVec::make({{OrdCode{0, 0}, v}}));
}

SupResult sup_stable_stream(const std::function<KurepaPoint(std::size_t)>& stream,
                            const std::function<std::size_t(const OrdCode&)>& stab,
                            std::size_t probe_n,
                            const SupStreamOptions& opts) {
  std::vector<KurepaPoint> terms;
  terms.reserve(probe_n);
  for (std::size_t i = 0; i < probe_n; ++i) terms.push_back(stream(i));

  for (std::size_t i = 0; i + 1 < probe_n; ++i)
    if (lex_compare(terms[i], terms[i + 1]) == Ordering::gt)
      return SupFailure{SupFailure::Kind::not_increasing,
                        "term " + std::to_string(i + 1) + " lies below term " +
                            std::to_string(i)};

  // Candidate coordinates: union of probed supports. Any filler term pushes
  // the candidate set past every finite bound, which is exactly the honest
  // outcome — the limit of such a stream cannot have finite support.
  std::set<OrdCode> coords;
  auto add = [&](const OrdCode& c) -> bool {
    coords.insert(c);
    return coords.size() <= opts.support_bound;
  };
  for (const KurepaPoint& t : terms) {
    if (t.is_filler()) {
      for (std::uint64_t m = 0;; ++m)
        if (!add(t.filler_code().fundamental(m)))
          return SupFailure{SupFailure::Kind::infinite_support_suspected,
                            "probed support exceeds bound " +
                                std::to_string(opts.support_bound)};
    } else {
      for (const auto& e : t.vec_part().entries)
        if (!add(e.first))
          return SupFailure{SupFailure::Kind::infinite_support_suspected,
                            "probed support exceeds bound " +
                                std::to_string(opts.support_bound)};
    }
  }

  std::vector<std::pair<OrdCode, Rational>> assembled;
  for (const OrdCode& c : coords) {
    std::size_t idx = stab(c.successor());
    if (probe_n == 0 || idx >= probe_n)
      return SupFailure{SupFailure::Kind::stabilization_violation,
                        "claimed stabilization index " + std::to_string(idx) +
                            " for coordinate " + ord_to_string(c) +
                            " lies outside the probed prefix"};
    Rational v = coord_at(terms[idx], c);
    for (std::size_t j = idx + 1; j < probe_n; ++j)
      if (coord_at(terms[j], c) != v)
        return SupFailure{SupFailure::Kind::stabilization_violation,
                          "coordinate " + ord_to_string(c) + " changes at term " +
                              std::to_string(j) + " after claimed index " +
                              std::to_string(idx)};
    if (v != 0) assembled.emplace_back(c, std::move(v));
  }
  FinSuppVec g = FinSuppVec::make(std::move(assembled));

  KurepaPoint gp = KurepaPoint::vec(g);
  for (std::size_t j = 0; j < probe_n; ++j)
    if (lex_compare(terms[j], gp) == Ordering::gt)
      return SupFailure{SupFailure::Kind::stabilization_violation,
                        "assembled value is not an upper bound of term " +
                            std::to_string(j)};
  for (std::size_t u = 0; u < opts.upper_probes.size(); ++u)
    if (lex_compare(gp, opts.upper_probes[u]) == Ordering::gt)
      return SupFailure{SupFailure::Kind::stabilization_violation,
                        "assembled value exceeds upper probe " + std::to_string(u)};
  return g;
}

std::string point_to_string(const KurepaPoint& p) {
  if (p.is_filler()) return "y(" + ord_to_string(p.filler_code()) + ")";
  std::string out = "{";
  bool first = true;
  for (const auto& e : p.vec_part().entries) {
    if (!first) out += ", ";
    first = false;
    out += ord_to_string(e.first) + ":" + rational_to_string(e.second);
  }
  return out + "}";
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

KurepaPoint parse_point(std::string_view text) {
  std::string_view s = strip(text);
  auto fail = [&](const std::string& msg) -> void {
    throw DomainError(Err::parse_error, "point '" + std::string(text) + "': " + msg);
  };
  if (s.empty()) fail("empty input");
  if (s.front() == 'y' || s.front() == 'Y') {
    std::string_view rest = strip(s.substr(1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
      fail("expected y(<ordinal>)");
    return KurepaPoint::filler(parse_ord(strip(rest.substr(1, rest.size() - 2))));
  }
  if (s.front() != '{' || s.back() != '}') fail("expected '{coord:value, ...}' or 'y(ord)'");
  std::string_view body = strip(s.substr(1, s.size() - 2));
  std::vector<std::pair<OrdCode, Rational>> entries;
  while (!body.empty()) {
    std::size_t comma = body.find(',');
    std::string_view item = strip(body.substr(0, comma));
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) fail("entry missing ':'");
    entries.emplace_back(parse_ord(strip(item.substr(0, colon))),
                         parse_rational(strip(item.substr(colon + 1))));
    if (comma == std::string_view::npos) break;
    body = strip(body.substr(comma + 1));
    if (body.empty()) fail("trailing comma");
  }
  return KurepaPoint::vec(FinSuppVec::make(std::move(entries)));
}

}  // namespace ordline
