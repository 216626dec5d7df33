#include "doctest.h"

#include <string>
#include <vector>

#include "ordline/report.hpp"

using namespace ordline;

namespace {

std::string sample_report() {
  return render_report(make_report("oracle lemma33", "all chains |X| <= 4",
                                   "f.g = id", 31, {}, "pass", 7));
}

}  // namespace

TEST_CASE("reports render byte-identically with pinned key order") {
  const std::string expected =
      "{\n"
      "  \"command\": \"oracle lemma33\",\n"
      "  \"instance\": \"all chains |X| <= 4\",\n"
      "  \"property\": \"f.g = id\",\n"
      "  \"cases\": 31,\n"
      "  \"failures\": [],\n"
      "  \"verdict\": \"pass\",\n"
      "  \"elapsed_ms\": 7\n"
      "}\n";
  CHECK(sample_report() == expected);
  CHECK(sample_report() == sample_report());

  SUBCASE("failures render as a string array") {
    std::string text = render_report(
        make_report("gap", "w.2", "fills", 3, {"NotGap(member)"}, "fail", 0));
    CHECK(text.find("\"failures\": [\n    \"NotGap(member)\"\n  ]") !=
          std::string::npos);
    CHECK(validate_report(text).empty());
  }
}

TEST_CASE("validation accepts exactly the contract") {
  CHECK(validate_report(sample_report()).empty());

  SUBCASE("broken JSON") {
    auto p = validate_report("{nope");
    REQUIRE(p.size() == 1);
    CHECK(p[0].find("not valid JSON") != std::string::npos);
  }

  SUBCASE("non-object top level") {
    auto p = validate_report("[1, 2]");
    REQUIRE(p.size() == 1);
    CHECK(p[0] == "top level is not an object");
  }

  SUBCASE("missing key") {
    auto p = validate_report(
        R"({"command":"c","instance":"i","property":"p","cases":0,"failures":[],"verdict":"pass"})");
    REQUIRE(p.size() == 1);
    CHECK(p[0] == "missing key 'elapsed_ms'");
  }

  SUBCASE("extra key") {
    auto p = validate_report(
        R"({"command":"c","instance":"i","property":"p","cases":0,"failures":[],"verdict":"pass","elapsed_ms":1,"seed":9})");
    REQUIRE(p.size() == 1);
    CHECK(p[0] == "unexpected extra key 'seed'");
  }

  SUBCASE("misordered keys") {
    auto p = validate_report(
        R"({"instance":"i","command":"c","property":"p","cases":0,"failures":[],"verdict":"pass","elapsed_ms":1})");
    CHECK(p.size() == 2);  // both displaced keys are named
  }

  SUBCASE("wrong types") {
    CHECK(!validate_report(
               R"({"command":3,"instance":"i","property":"p","cases":0,"failures":[],"verdict":"pass","elapsed_ms":1})")
               .empty());
    CHECK(!validate_report(
               R"({"command":"c","instance":"i","property":"p","cases":-2,"failures":[],"verdict":"pass","elapsed_ms":1})")
               .empty());
    CHECK(!validate_report(
               R"({"command":"c","instance":"i","property":"p","cases":0,"failures":"none","verdict":"pass","elapsed_ms":1})")
               .empty());
    CHECK(!validate_report(
               R"({"command":"c","instance":"i","property":"p","cases":0,"failures":[7],"verdict":"pass","elapsed_ms":1})")
               .empty());
  }

  SUBCASE("verdict vocabulary") {
    auto p = validate_report(
        R"({"command":"c","instance":"i","property":"p","cases":0,"failures":[],"verdict":"maybe","elapsed_ms":1})");
    REQUIRE(p.size() == 1);
    CHECK(p[0] == "verdict 'maybe' is not pass | fail | error");
    for (const char* ok : {"pass", "fail", "error"}) {
      std::string text = render_report(make_report("c", "i", "p", 0, {}, ok, 1));
      CHECK(validate_report(text).empty());
    }
  }
}
