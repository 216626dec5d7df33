#include "doctest.h"

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordline/report.hpp"
#include "test_support.hpp"

using namespace ordline;
using namespace ordline::testing;

namespace {

// the JSON envelope minus its only unstable field
std::string strip_elapsed(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("elapsed_ms");
  return j.dump(2);
}

}  // namespace

TEST_CASE("cli: parse echoes the canonical form") {
  CmdResult r = run_cli({"parse", "sum( OMEGA , fin(3) )"});
  CHECK(r.status == 0);
  CHECK(r.out == "sum(omega, fin(3))\n");
  CHECK(r.err.empty());

  SUBCASE("json mode emits a valid report") {
    CmdResult j = run_cli({"parse", "fin(2)", "--json"});
    CHECK(j.status == 0);
    CHECK(validate_report(j.out).empty());
    auto doc = nlohmann::ordered_json::parse(j.out);
    CHECK(doc["command"] == "parse");
    CHECK(doc["instance"] == "fin(2)");
    CHECK(doc["verdict"] == "pass");
  }

  SUBCASE("syntax errors exit 2 with a ParseError on stderr") {
    CmdResult e = run_cli({"parse", "fin("});
    CHECK(e.status == 2);
    CHECK(e.out.empty());
    CHECK(e.err.find("error: ParseError") != std::string::npos);
  }
}

TEST_CASE("cli: dual materializes both directions with a roundtrip check") {
  CmdResult k = run_cli({"dual", "k", "fin(3)"});
  CHECK(k.status == 0);
  CHECK(k.out == "{0,1,2}\n{1,2}\n{2}\n{}\npoints: 4\nroundtrip: pass\n");

  CmdResult x = run_cli({"dual", "x", "fin(3)"});
  CHECK(x.status == 0);
  CHECK(x.out == "[1,->)\n[2,->)\npoints: 2\nroundtrip: pass\n");

  SUBCASE("json mode moves the listing to stderr") {
    CmdResult j = run_cli({"dual", "k", "fin(3)", "--json"});
    CHECK(j.status == 0);
    CHECK(validate_report(j.out).empty());
    auto doc = nlohmann::ordered_json::parse(j.out);
    CHECK(doc["command"] == "dual k");
    CHECK(doc["instance"] == "fin(3) -> 4 points");
    CHECK(j.err.find("{1,2}") != std::string::npos);
  }

  SUBCASE("infinite orders are refused up front") {
    CmdResult inf = run_cli({"dual", "k", "omega"});
    CHECK(inf.status == 2);
    CHECK(inf.err.find("NotFinite") != std::string::npos);
  }

  SUBCASE("the direction argument is validated") {
    CHECK(run_cli({"dual", "z", "fin(3)"}).status == 2);
  }
}

TEST_CASE("cli: oracle suites report their exhaustive runs") {
  CmdResult r = run_cli({"oracle", "lemma33", "--n", "3"});
  CHECK(r.status == 0);
  CHECK(validate_report(r.out).empty());
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["command"] == "oracle lemma33");
  CHECK(doc["cases"] == 15);
  CHECK(doc["verdict"] == "pass");

  CmdResult d = run_cli({"oracle", "duality", "--n", "4"});
  CHECK(d.status == 0);
  CHECK(nlohmann::ordered_json::parse(d.out)["verdict"] == "pass");

  SUBCASE("output is byte-stable apart from the timing field") {
    CmdResult again = run_cli({"oracle", "lemma33", "--n", "3"});
    CHECK(strip_elapsed(r.out) == strip_elapsed(again.out));
  }

  SUBCASE("oversized requests exit 2") {
    CmdResult big = run_cli({"oracle", "lemma33", "--n", "50"});
    CHECK(big.status == 2);
    CHECK(big.err.find("BoundExceeded") != std::string::npos);
  }
}

TEST_CASE("cli: gap classifies stage fillers end to end") {
  CmdResult ok = run_cli({"gap", "--kappa", "w.10", "--s", "w.2", "--delta", "w.2",
                          "--depth", "100"});
  CHECK(ok.status == 0);
  CHECK(validate_report(ok.out).empty());
  auto doc = nlohmann::ordered_json::parse(ok.out);
  CHECK(doc["verdict"] == "pass");
  CHECK(doc["instance"] == "kurepa(w.10; w.2), stage w.2");
  CHECK(ok.err.find("verdict: FillsToDepth(100)") != std::string::npos);
  CHECK(ok.err.find("left:") != std::string::npos);
  CHECK(ok.err.find("right:") != std::string::npos);

  SUBCASE("a stage without a filler is honestly not a gap") {
    CmdResult no = run_cli({"gap", "--kappa", "w.10", "--s", "w.2", "--delta", "w.3"});
    CHECK(no.status == 1);
    CHECK(validate_report(no.out).empty());
    auto nd = nlohmann::ordered_json::parse(no.out);
    CHECK(nd["verdict"] == "fail");
    REQUIRE(nd["failures"].size() == 1);
    std::string msg = nd["failures"][0].get<std::string>();
    CHECK(msg.find("NotGap(noFiller)") != std::string::npos);
    CHECK(no.err.find("verdict: NotGap(noFiller)") != std::string::npos);
  }

  SUBCASE("non-limit and out-of-range stages are usage errors") {
    CmdResult bad = run_cli({"gap", "--kappa", "w.10", "--s", "w.2", "--delta", "5"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("is not a limit code") != std::string::npos);
    CmdResult high =
        run_cli({"gap", "--kappa", "w.2", "--s", "w.1", "--delta", "w.3"});
    CHECK(high.status == 2);
    CHECK(high.err.find("exceeds the order length") != std::string::npos);
    CmdResult zero = run_cli({"gap", "--kappa", "w.2", "--s", "w.1", "--delta", "w.1",
                              "--depth", "0"});
    CHECK(zero.status == 2);
    CHECK(zero.err.find("depth must be at least 1") != std::string::npos);
  }
}

TEST_CASE("cli: kurepa-cmp compares serialized points") {
  CHECK(run_cli({"kurepa-cmp", "{0:1}", "{1:5}"}).out == "GT\n");
  CHECK(run_cli({"kurepa-cmp", "y(w.1)", "{0:1}"}).out == "LT\n");
  CHECK(run_cli({"kurepa-cmp", "{}", "{}"}).out == "EQ\n");
  CHECK(run_cli({"kurepa-cmp", "{0:1}", "{1:5}"}).status == 0);

  SUBCASE("json mode names the comparison in the instance") {
    CmdResult j = run_cli({"kurepa-cmp", "{0:1}", "{1:5}", "--json"});
    CHECK(j.status == 0);
    CHECK(validate_report(j.out).empty());
    auto doc = nlohmann::ordered_json::parse(j.out);
    CHECK(doc["instance"] == "{0:1} vs {1:5} -> GT");
  }

  SUBCASE("malformed points are usage errors") {
    CmdResult bad = run_cli({"kurepa-cmp", "{0:}", "{}"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("ParseError") != std::string::npos);
  }
}

TEST_CASE("cli: sup-stream assembles a supremum from a certificate file") {
  const std::string good =
      "{0:1}\n"
      "{0:1, 1:1/2}\n"
      "stab:\n"
      "0 0\n"
      "1 1\n";
  auto file = write_temp("stream", good);
  CmdResult r = run_cli({"sup-stream", file.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "{0:1, 1:1/2}\n");

  SUBCASE("json mode reports the recovered point") {
    CmdResult j = run_cli({"sup-stream", file.string(), "--json"});
    CHECK(j.status == 0);
    CHECK(validate_report(j.out).empty());
    auto doc = nlohmann::ordered_json::parse(j.out);
    std::string inst = doc["instance"].get<std::string>();
    CHECK(inst.find("-> {0:1, 1:1/2}") != std::string::npos);
  }

  SUBCASE("a certificate pointing past the probed prefix is rejected") {
    auto bad = write_temp("stream", "{0:1}\n{0:1, 1:1/2}\nstab:\n0 0\n1 5\n");
    CmdResult b = run_cli({"sup-stream", bad.string()});
    CHECK(b.status == 1);
    CHECK(b.out.find("StabilizationViolation") != std::string::npos);
    std::filesystem::remove(bad);
  }

  SUBCASE("a decreasing stream is rejected") {
    auto dec = write_temp("stream", "{0:1}\n{0:1/2}\nstab:\n0 1\n");
    CmdResult b = run_cli({"sup-stream", dec.string()});
    CHECK(b.status == 1);
    CHECK(b.out.find("NotIncreasing") != std::string::npos);
    std::filesystem::remove(dec);
  }

  SUBCASE("file problems are usage errors") {
    CHECK(run_cli({"sup-stream", "/nonexistent/stream.txt"}).status == 2);
    auto empty = write_temp("stream", "stab:\n0 0\n");
    CmdResult e = run_cli({"sup-stream", empty.string()});
    CHECK(e.status == 2);
    CHECK(e.err.find("names no points") != std::string::npos);
    std::filesystem::remove(empty);
    auto junk = write_temp("stream", "{0:1}\nstab:\n0 x\n");
    CmdResult x = run_cli({"sup-stream", junk.string()});
    CHECK(x.status == 2);
    CHECK(x.err.find("stab index is not a number") != std::string::npos);
    std::filesystem::remove(junk);
  }

  std::filesystem::remove(file);
}

TEST_CASE("cli: top-level usage") {
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({"--help"}).out.find("sup-stream") != std::string::npos);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"parse", "fin(2)", "--bogus"}).status == 2);
  CHECK(run_cli({"frobnicate"}).status == 2);
}
