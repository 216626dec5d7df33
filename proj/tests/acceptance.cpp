// Acceptance gate: one line per criterion, exit status = number of failures.
// Each criterion re-verifies its claim with independent checks where the
// contract calls for them (naive comparison oracle, by-construction streams,
// raw coordinate arithmetic) rather than trusting library round-trips.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ordline/dsl.hpp"
#include "ordline/duality.hpp"
#include "ordline/errors.hpp"
#include "ordline/kurepa.hpp"
#include "ordline/oracle.hpp"
#include "ordline/order_expr.hpp"
#include "ordline/report.hpp"
#include "test_support.hpp"

using namespace ordline;
using namespace ordline::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

std::uint64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
}

Outcome fail(std::string note) { return {false, std::move(note)}; }

// 1. finite duality round-trips exhaustively through size 8, fast
Outcome duality_roundtrip() {
  auto start = std::chrono::steady_clock::now();
  OracleReport r = exhaustive_duality(8);
  std::uint64_t ms = elapsed_ms(start);
  if (!r.passed())
    return fail(r.failures.front().instance + ": " + r.failures.front().detail);
  if (r.cases == 0) return fail("oracle ran no cases");
  if (ms >= 1000) return fail("took " + std::to_string(ms) + " ms, budget is 1000");
  return {};
}

// 2. retraction recipes hold for every subchain of chains through size 6
Outcome retraction_recipes() {
  auto start = std::chrono::steady_clock::now();
  OracleReport r = exhaustive_lemma33(6);
  std::uint64_t ms = elapsed_ms(start);
  if (!r.passed())
    return fail(r.failures.front().instance + ": " + r.failures.front().detail);
  if (r.cases != 127) return fail("expected 127 cases, ran " + std::to_string(r.cases));
  if (ms >= 30000) return fail("took " + std::to_string(ms) + " ms, budget is 30000");
  return {};
}

// 3. lexicographic comparison is a total order and matches a naive oracle
Outcome lex_soundness() {
  const std::uint64_t blocks = 29;  // instance: length w.30, all limits filled
  make_kurepa(OrdCode{30, 0}, limit_block(1, blocks));  // shape sanity
  auto rng = make_rng(9001);
  for (int i = 0; i < 100000; ++i) {
    KurepaPoint p = random_point(rng, blocks);
    KurepaPoint q = random_point(rng, blocks);
    KurepaPoint r = random_point(rng, blocks);
    Ordering pq = lex_compare(p, q), qp = lex_compare(q, p);
    if (qp != flip(pq))
      return fail("antisymmetry broke at " + point_to_string(p) + " vs " +
                  point_to_string(q));
    if (lex_compare(p, p) != Ordering::eq)
      return fail("reflexivity broke at " + point_to_string(p));
    Ordering qr = lex_compare(q, r), pr = lex_compare(p, r);
    if (pq != Ordering::gt && qr != Ordering::gt && pr == Ordering::gt)
      return fail("transitivity broke at " + point_to_string(p) + ", " +
                  point_to_string(q) + ", " + point_to_string(r));
  }
  for (int i = 0; i < 10000; ++i) {
    KurepaPoint p = random_point(rng, blocks);
    KurepaPoint q = random_point(rng, blocks);
    if (lex_compare(p, q) != naive_lex_compare(p, q))
      return fail("naive oracle disagrees at " + point_to_string(p) + " vs " +
                  point_to_string(q));
  }
  return {};
}

// 4. every stage filler fills a proper gap to depth 100, chains re-verified
Outcome gap_mechanism() {
  const OrdCode kappa{31, 0};
  std::vector<OrdCode> fillers = limit_block(1, 30);
  for (std::uint64_t a = 1; a <= 30; ++a) {
    OrdCode delta{a, 0};
    std::string at = " at stage " + ord_to_string(delta);
    SubOrderPresentation stage = build_filtration_presentation(kappa, fillers, delta);
    KurepaPoint y = KurepaPoint::filler(delta);
    GapVerdict v = fills_proper_gap(Element::point(y), stage, 100);
    if (v.describe() != "FillsToDepth(100)")
      return fail(v.describe() + at);
    if (v.left_chain.size() != 101 || v.right_chain.size() != 101)
      return fail("chain lengths off" + at);
    auto pt = [](const Element& e) { return std::get<KurepaPoint>(e.repr()); };
    for (std::size_t i = 0; i < v.left_chain.size(); ++i) {
      KurepaPoint c = pt(v.left_chain[i]);
      if (!in_filtration(c, delta)) return fail("left chain left the stage" + at);
      if (lex_compare(c, y) != Ordering::lt)
        return fail("left chain crossed the filler" + at);
      if (i && lex_compare(pt(v.left_chain[i - 1]), c) != Ordering::lt)
        return fail("left chain is not strictly increasing" + at);
    }
    for (std::size_t i = 0; i < v.right_chain.size(); ++i) {
      KurepaPoint c = pt(v.right_chain[i]);
      if (!in_filtration(c, delta)) return fail("right chain left the stage" + at);
      if (lex_compare(y, c) != Ordering::lt)
        return fail("right chain crossed the filler" + at);
      if (i && lex_compare(c, pt(v.right_chain[i - 1])) != Ordering::lt)
        return fail("right chain is not strictly decreasing" + at);
    }
    if (!std::holds_alternative<InfiniteTruncation>(truncate_projection(y, delta)))
      return fail("filler truncation is not the obstruction value" + at);
  }
  return {};
}

// 5. stage truncation is increasing everywhere and fixes stage members
Outcome truncation_projection() {
  auto rng = make_rng(424242);
  for (std::uint64_t a = 1; a <= 10; ++a) {
    OrdCode delta{a, 0};
    std::string at = " at stage " + ord_to_string(delta);
    for (int i = 0; i < 10000; ++i) {
      KurepaPoint p = random_point(rng, 10);
      KurepaPoint q = random_point(rng, 10);
      if (lex_compare(p, q) == Ordering::gt) std::swap(p, q);
      TruncationResult tp = truncate_projection(p, delta);
      TruncationResult tq = truncate_projection(q, delta);
      const auto* sp = std::get_if<SignedPoint>(&tp);
      const auto* sq = std::get_if<SignedPoint>(&tq);
      if (!sp || !sq) continue;  // the filler of delta itself
      if (signed_compare(*sp, *sq) == Ordering::gt)
        return fail("truncation inverted " + point_to_string(p) + " <= " +
                    point_to_string(q) + at);
    }
    for (int i = 0; i < 1000; ++i) {
      KurepaPoint m = random_point(rng, a - 1);
      if (!in_filtration(m, delta)) return fail("member sampler escaped" + at);
      TruncationResult tm = truncate_projection(m, delta);
      const auto* sm = std::get_if<SignedPoint>(&tm);
      if (!sm || !(*sm == SignedPoint::at(m)))
        return fail("truncation moved the member " + point_to_string(m) + at);
    }
  }
  return {};
}

// 6. stream suprema are recovered exactly and certified as upper bounds
Outcome stream_supremum() {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    // generator: one positive entry per block below w.k
    std::vector<std::pair<OrdCode, Rational>> entries;
    for (std::uint64_t b = 0; b < k; ++b)
      entries.emplace_back(OrdCode{b, b + 1}, Rational(1, b + 1));
    FinSuppVec g = FinSuppVec::make(entries);
    std::string at = " for the " + std::to_string(k) + "-block stream";

    // terms cut along the top block by construction, not via the library
    auto cut = [g, k](std::size_t i) {
      OrdCode bound{k - 1, static_cast<std::uint64_t>(i) + 1};
      std::vector<std::pair<OrdCode, Rational>> kept;
      for (const auto& e : g.entries)
        if (e.first < bound) kept.push_back(e);
      return KurepaPoint::vec(FinSuppVec::make(std::move(kept)));
    };
    // a top-block coordinate (k-1, f) first appears at term f; lower blocks
    // are present from the start
    auto stab = [g, k](const OrdCode& gamma) {
      std::size_t idx = 0;
      for (const auto& e : g.entries)
        if (e.first < gamma && e.first.omegas == k - 1)
          idx = std::max(idx, static_cast<std::size_t>(e.first.finite));
      return idx;
    };
    SupStreamOptions opts;
    opts.upper_probes = {KurepaPoint::vec(g)};
    SupResult r = sup_stable_stream(cut, stab, 1000, opts);
    const auto* v = std::get_if<FinSuppVec>(&r);
    if (!v) return fail(std::get<SupFailure>(r).detail + at);
    if (!(*v == g)) return fail("assembled the wrong vector" + at);
    KurepaPoint sup = KurepaPoint::vec(*v);
    for (std::size_t i = 0; i < 1000; ++i)
      if (lex_compare(cut(i), sup) == Ordering::gt)
        return fail("term " + std::to_string(i) + " exceeds the supremum" + at);
  }

  // a stream that keeps creeping up under a certificate that swears it stopped
  auto unstable = [](std::size_t i) {
    return KurepaPoint::vec(FinSuppVec::make(
        {{OrdCode{0, 0}, Rational(static_cast<std::uint64_t>(i),
                                  static_cast<std::uint64_t>(i) + 1)}}));
  };
  auto sworn = [](const OrdCode&) -> std::size_t { return 0; };
  SupResult bad = sup_stable_stream(unstable, sworn, 64);
  const auto* f = std::get_if<SupFailure>(&bad);
  if (!f || f->kind != SupFailure::Kind::stabilization_violation)
    return fail("the unstable stream was not rejected as a stabilization violation");
  return {};
}

// 7. collation inverts duplication for every finite order and split set
Outcome surgery_inverse() {
  auto run = [](const ExprPtr& e) -> Outcome {
    auto elems = materialize_elements(*e);
    if (!elems) return fail("expression failed to materialize");
    std::size_t n = elems->size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Element> split;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) split.push_back((*elems)[i]);
      ExprPtr d = duplicate(e, split);
      if (!equal_expr(*collate(d), *e))
        return fail("collate(duplicate) changed " + print_expr(*e));
      if (cardinality(*d) != n + split.size())
        return fail("duplication size off for " + print_expr(*e));
    }
    return {};
  };
  for (std::uint64_t n = 0; n <= 8; ++n)
    if (Outcome o = run(make_fin(n)); !o.ok) return o;
  std::vector<ExprPtr> structured = {
      make_sum(make_fin(2), make_fin(3)),
      make_rev(make_fin(4)),
      duplicate(make_fin(3), {Element::nat(1)}),
      make_sum(make_rev(make_fin(2)), make_fin(2)),
  };
  for (const ExprPtr& e : structured)
    if (Outcome o = run(e); !o.ok) return o;
  return {};
}

// 8. no point ever fills a proper gap of a finite presented suborder
Outcome finite_gaps_never_proper() {
  auto rng = make_rng(777);
  std::vector<ExprPtr> ambients = {make_rationals(), make_omega(), make_fin(12)};
  for (int trial = 0; trial < 1000; ++trial) {
    const ExprPtr& ambient = ambients[rng() % ambients.size()];
    auto c = cardinality(*ambient);
    std::uint64_t pool_n = c ? std::min<std::uint64_t>(*c, 24) : 24;
    std::vector<Element> pool = enumerate(*ambient, pool_n);
    std::vector<Element> members;
    std::size_t m = rng() % 9;
    for (std::size_t i = 0; i < m; ++i)
      members.push_back(pool[rng() % pool.size()]);
    Element x = pool[rng() % pool.size()];
    // depth past the member count: a finite chain cannot keep advancing
    GapVerdict v = fills_proper_gap(x, present_finite_subset(ambient, members),
                                    members.size() + 1);
    if (v.fills)
      return fail("trial " + std::to_string(trial) + " claimed a proper gap over " +
                  print_expr(*ambient));
  }
  return {};
}

// 9. the command-line contract: round-trips, report schema, exit codes
Outcome cli_contract() {
  auto rng = make_rng(31337);
  for (int i = 0; i < 1000; ++i) {
    ExprPtr e = random_expr(rng, 3);
    if (!equal_expr(*e, *parse_expr_text(print_expr(*e))))
      return fail("round-trip broke for " + print_expr(*e));
  }

  struct Expect {
    std::vector<std::string> args;
    int status;
    bool json;  // stdout must validate as a report
  };
  auto stream_file = write_temp(
      "acc_stream", "{0:1}\n{0:1, 1:1/2}\nstab:\n0 0\n1 1\n");
  std::vector<Expect> runs = {
      {{"parse", "fin(3)", "--json"}, 0, true},
      {{"parse", "fin("}, 2, false},
      {{"dual", "k", "fin(3)", "--json"}, 0, true},
      {{"dual", "k", "omega"}, 2, false},
      {{"oracle", "lemma33", "--n", "2"}, 0, true},
      {{"oracle", "duality", "--n", "3"}, 0, true},
      {{"oracle", "lemma33", "--n", "99"}, 2, false},
      {{"gap", "--kappa", "w.3", "--s", "w.1,w.2", "--delta", "w.2", "--depth", "8"},
       0, true},
      {{"gap", "--kappa", "w.3", "--s", "w.1", "--delta", "w.2"}, 1, true},
      {{"gap", "--kappa", "w.3", "--s", "w.1", "--delta", "5"}, 2, false},
      {{"kurepa-cmp", "{0:1}", "y(w.1)", "--json"}, 0, true},
      {{"sup-stream", stream_file.string(), "--json"}, 0, true},
      {{"--help"}, 0, false},
      {{"frobnicate"}, 2, false},
  };
  for (const Expect& r : runs) {
    CmdResult res = run_cli(r.args);
    std::string name = r.args.empty() ? "<none>" : r.args.front();
    if (res.status != r.status)
      return fail("'" + name + "' exited " + std::to_string(res.status) +
                  ", expected " + std::to_string(r.status));
    if (r.json && !validate_report(res.out).empty())
      return fail("'" + name + "' emitted a malformed report: " +
                  validate_report(res.out).front());
  }
  std::filesystem::remove(stream_file);

  // the canonical echo agrees with the library through the binary
  for (int i = 0; i < 5; ++i) {
    std::string text = print_expr(*random_expr(rng, 2));
    CmdResult res = run_cli({"parse", text});
    if (res.status != 0 || res.out != text + "\n")
      return fail("binary echo of '" + text + "' diverged");
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    int num;
    const char* what;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "finite duality round-trips exhaustively through size 8 within a second",
       duality_roundtrip},
      {2, "retraction recipes hold for every subchain of chains through size 6",
       retraction_recipes},
      {3, "lexicographic comparison is a total order agreeing with a naive oracle",
       lex_soundness},
      {4, "every stage filler fills a proper gap to depth 100 with verified chains",
       gap_mechanism},
      {5, "stage truncation is an increasing projection fixing stage members",
       truncation_projection},
      {6, "stream suprema are recovered exactly and certified as upper bounds",
       stream_supremum},
      {7, "collation inverts duplication for every finite order and split set",
       surgery_inverse},
      {8, "no point fills a proper gap of a finite presented suborder",
       finite_gaps_never_proper},
      {9, "the command-line contract holds: round-trips, report schema, exit codes",
       cli_contract},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("unexpected exception: ") + e.what());
    }
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.num << ": "
              << c.what;
    if (!o.ok) std::cout << " -- " << o.note;
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  return failures;
}
