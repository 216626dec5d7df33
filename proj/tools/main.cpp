#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "ordline/dsl.hpp"
#include "ordline/duality.hpp"
#include "ordline/errors.hpp"
#include "ordline/oracle.hpp"
#include "ordline/report.hpp"

using namespace ordline;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::uint64_t ms() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
  }
};

int emit(const std::string& command, const std::string& instance,
         const std::string& property, std::uint64_t cases,
         const std::vector<std::string>& failures, const Timer& t) {
  bool ok = failures.empty();
  std::cout << render_report(make_report(command, instance, property, cases,
                                         failures, ok ? "pass" : "fail", t.ms()));
  return ok ? 0 : 1;
}

int run_parse(const std::string& text, bool json) {
  Timer t;
  ExprPtr e = parse_expr_text(text);
  std::string canon = print_expr(*e);
  bool ok = equal_expr(*e, *parse_expr_text(canon));
  if (!json) {
    std::cout << canon << "\n";
    return ok ? 0 : 1;
  }
  std::vector<std::string> failures;
  if (!ok)
    failures.push_back("canonical form does not reparse to an equal expression");
  return emit("parse", canon, "print/parse round-trip", 1, failures, t);
}

int run_dual(const std::string& dir, const std::string& text, bool json) {
  Timer t;
  ExprPtr e = parse_expr_text(text);
  auto card = cardinality(*e);
  if (!card || *card > 4096) {
    std::cerr << "NotFinite: the order does not materialize to a finite chain"
                 " (cap 4096)\n";
    return 2;
  }
  FiniteOrder base = *materialize(*e);
  FiniteOrder out;
  bool ok;
  if (dir == "k") {
    out = k_finite(base).as_order();
    ok = check_iso(x_finite(out), base).iso;
  } else {
    out = x_finite(base);  // EmptyOrder when the chain has no points
    ok = check_iso(k_finite(out).as_order(), base).iso;
  }
  std::ostream& listing = json ? std::cerr : std::cout;
  for (const std::string& label : out.labels) listing << label << "\n";
  if (!json) {
    std::cout << "points: " << out.size() << "\n";
    std::cout << "roundtrip: " << (ok ? "pass" : "fail") << "\n";
    return ok ? 0 : 1;
  }
  std::vector<std::string> failures;
  if (!ok) failures.push_back("canonical roundtrip broke");
  return emit("dual " + dir,
              print_expr(*e) + " -> " + std::to_string(out.size()) + " points",
              "dual construction round-trips canonically", 1, failures, t);
}

int run_oracle(const std::string& suite, std::uint64_t n) {
  Timer t;
  OracleReport r = suite == "duality"
                       ? exhaustive_duality(static_cast<std::size_t>(n))
                       : exhaustive_lemma33(static_cast<std::size_t>(n));
  std::vector<std::string> failures;
  failures.reserve(r.failures.size());
  for (const CaseFailure& f : r.failures)
    failures.push_back(f.instance + ": " + f.detail + " [replay: " + f.replay + "]");
  return emit("oracle " + suite, r.instance, r.property, r.cases, failures, t);
}

int run_gap(const std::string& kappa_s, const std::string& s_s,
            const std::string& delta_s, std::uint64_t depth) {
  Timer t;
  if (depth < 1) {
    std::cerr << "error: depth must be at least 1\n";
    return 2;
  }
  OrdCode kappa = parse_ord(kappa_s);
  OrdCode delta = parse_ord(delta_s);
  std::vector<OrdCode> fillers;
  std::stringstream ss(s_s);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (tok.find_first_not_of(" \t") != std::string::npos)
      fillers.push_back(parse_ord(tok));
  if (!delta.is_limit())
    throw DomainError(Err::invalid_ordinal,
                      "gap stage " + ord_to_string(delta) + " is not a limit code");
  if (!(delta <= kappa))
    throw DomainError(Err::invalid_ordinal,
                      "gap stage exceeds the order length " + ord_to_string(kappa));

  ExprPtr ambient = make_kurepa(kappa, fillers);  // validates the filler codes
  std::string instance =
      print_expr(*ambient) + ", stage " + ord_to_string(delta);
  const std::string property =
      "the filler fills a proper gap of its stage to the requested depth";

  bool has_filler =
      std::find(fillers.begin(), fillers.end(), delta) != fillers.end();
  if (!has_filler) {
    std::cerr << "verdict: NotGap(noFiller)\n";
    return emit("gap", instance, property, 1,
                {"NotGap(noFiller): " + ord_to_string(delta) +
                 " is not a filler of this order"},
                t);
  }

  SubOrderPresentation stage = build_filtration_presentation(kappa, fillers, delta);
  Element x = Element::point(KurepaPoint::filler(delta));
  GapVerdict v = fills_proper_gap(x, stage, depth);

  auto preview = [&](const char* side, const std::vector<Element>& chain) {
    std::cerr << side << ":";
    std::size_t shown = std::min<std::size_t>(chain.size(), 4);
    for (std::size_t i = 0; i < shown; ++i)
      std::cerr << " " << print_element(*stage.ambient, chain[i]);
    if (chain.size() > shown) std::cerr << " ...";
    std::cerr << "\n";
  };
  preview("left", v.left_chain);
  preview("right", v.right_chain);
  std::cerr << "verdict: " << v.describe() << "\n";

  std::uint64_t cases =
      1 + static_cast<std::uint64_t>(v.left_chain.size() + v.right_chain.size());
  std::vector<std::string> failures;
  if (!v.fills) failures.push_back(v.describe());
  return emit("gap", instance, property, cases, failures, t);
}

int run_cmp(const std::string& p_s, const std::string& q_s, bool json) {
  Timer t;
  KurepaPoint p = parse_point(p_s);
  KurepaPoint q = parse_point(q_s);
  Ordering o = lex_compare(p, q);
  if (!json) {
    std::cout << to_string(o) << "\n";
    return 0;
  }
  return emit("kurepa-cmp",
              point_to_string(p) + " vs " + point_to_string(q) + " -> " +
                  to_string(o),
              "lexicographic comparison of serialized points", 1, {}, t);
}

const char* sup_kind_name(SupFailure::Kind k) {
  switch (k) {
    case SupFailure::Kind::not_increasing: return "NotIncreasing";
    case SupFailure::Kind::stabilization_violation: return "StabilizationViolation";
    default: return "InfiniteSupportSuspected";
  }
}

int run_sup(const std::string& file, std::uint64_t probe, bool json) {
  Timer t;
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read stream file '" << file << "'\n";
    return 2;
  }
  std::vector<KurepaPoint> points;
  std::vector<std::pair<OrdCode, std::size_t>> table;
  bool in_stab = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    std::string body = line.substr(a, b - a + 1);
    if (!in_stab) {
      if (body == "stab:") {
        in_stab = true;
        continue;
      }
      points.push_back(parse_point(body));
    } else {
      std::istringstream ls(body);
      std::string ord_tok, idx_tok, extra;
      if (!(ls >> ord_tok >> idx_tok) || (ls >> extra))
        throw ParseError(lineno, 1, "stab table line is '<ord> <index>'");
      if (idx_tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(lineno, 1, "stab index is not a number");
      table.emplace_back(parse_ord(ord_tok),
                         static_cast<std::size_t>(std::stoull(idx_tok)));
    }
  }
  if (points.empty()) {
    std::cerr << "error: stream file names no points\n";
    return 2;
  }
  if (probe == 0) probe = points.size();

  // the scripted stream repeats its last term forever
  auto stream = [&points](std::size_t i) {
    return i < points.size() ? points[i] : points.back();
  };
  // a table line "<ord> <index>" claims coordinate <ord> is constant past
  // <index>; the certificate for a bound takes the worst claim below it
  auto stab = [&table](const OrdCode& gamma) {
    std::size_t idx = 0;
    for (const auto& [coord, i] : table)
      if (coord < gamma) idx = std::max(idx, i);
    return idx;
  };

  SupResult r = sup_stable_stream(stream, stab, static_cast<std::size_t>(probe));
  std::string instance = file + ", probe " + std::to_string(probe);
  const std::string property =
      "stream supremum assembled from a verified stabilization certificate";
  if (const auto* v = std::get_if<FinSuppVec>(&r)) {
    std::string text = point_to_string(KurepaPoint::vec(*v));
    if (!json) {
      std::cout << text << "\n";
      return 0;
    }
    return emit("sup-stream", instance + " -> " + text, property, probe, {}, t);
  }
  const auto& f = std::get<SupFailure>(r);
  std::string msg = std::string(sup_kind_name(f.kind)) + ": " + f.detail;
  if (!json) {
    std::cout << msg << "\n";
    return 1;
  }
  return emit("sup-stream", instance, property, probe, {msg}, t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite order duality, lexicographic points, and gap machinery"};
  app.require_subcommand(1);

  auto* cmd_parse =
      app.add_subcommand("parse", "parse an order expression, echo its canonical form");
  std::string parse_text;
  bool parse_json = false;
  cmd_parse->add_option("expr", parse_text, "order expression")->required();
  cmd_parse->add_flag("--json", parse_json, "emit a JSON report");

  auto* cmd_dual = app.add_subcommand(
      "dual", "print the dual line of a finite order (k) or the order of a line's segments (x)");
  std::string dual_dir, dual_text;
  bool dual_json = false;
  cmd_dual->add_option("direction", dual_dir, "k or x")
      ->required()
      ->check(CLI::IsMember({"k", "x"}));
  cmd_dual->add_option("expr", dual_text, "order expression")->required();
  cmd_dual->add_flag("--json", dual_json, "emit a JSON report");

  auto* cmd_oracle =
      app.add_subcommand("oracle", "run an exhaustive finite ground-truth suite");
  std::string oracle_suite;
  std::uint64_t oracle_n = 0;
  cmd_oracle->add_option("suite", oracle_suite, "duality or lemma33")
      ->required()
      ->check(CLI::IsMember({"duality", "lemma33"}));
  cmd_oracle->add_option("--n", oracle_n, "maximum chain size")->required();

  auto* cmd_gap = app.add_subcommand(
      "gap", "test whether a stage's filler fills a proper gap of that stage");
  std::string gap_kappa, gap_s, gap_delta;
  std::uint64_t gap_depth = 100;
  cmd_gap->add_option("--kappa", gap_kappa, "length code of the order")->required();
  cmd_gap->add_option("--s", gap_s, "comma-separated filler codes");
  cmd_gap->add_option("--delta", gap_delta, "stage to test")->required();
  cmd_gap->add_option("--depth", gap_depth, "witness chain length to verify");

  auto* cmd_cmp = app.add_subcommand("kurepa-cmp",
                                     "compare two serialized points lexicographically");
  std::string cmp_p, cmp_q;
  bool cmp_json = false;
  cmd_cmp->add_option("p", cmp_p, "first point")->required();
  cmd_cmp->add_option("q", cmp_q, "second point")->required();
  cmd_cmp->add_flag("--json", cmp_json, "emit a JSON report");

  auto* cmd_sup = app.add_subcommand(
      "sup-stream", "assemble the supremum of a scripted increasing stream");
  std::string sup_file;
  std::uint64_t sup_probe = 0;
  bool sup_json = false;
  cmd_sup->add_option("file", sup_file, "stream file: points, 'stab:', table")
      ->required();
  cmd_sup->add_option("--probe", sup_probe, "terms to probe (default: all)");
  cmd_sup->add_flag("--json", sup_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_parse) return run_parse(parse_text, parse_json);
    if (*cmd_dual) return run_dual(dual_dir, dual_text, dual_json);
    if (*cmd_oracle) return run_oracle(oracle_suite, oracle_n);
    if (*cmd_gap) return run_gap(gap_kappa, gap_s, gap_delta, gap_depth);
    if (*cmd_cmp) return run_cmp(cmp_p, cmp_q, cmp_json);
    if (*cmd_sup) return run_sup(sup_file, sup_probe, sup_json);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
