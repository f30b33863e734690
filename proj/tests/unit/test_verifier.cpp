#include <algorithm>
#include <set>

#include "cremona/errors.hpp"
#include "cremona/verifier/report.hpp"
#include "cremona/verifier/suites.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cremona;

namespace {

nlohmann::json without_timings(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  for (auto& c : j["checks"]) c.erase("runtime_ms");
  return j;
}

const VerificationReport& full_report() {
  static const VerificationReport r = run_suite("all", 1);
  return r;
}

const CheckResult* find_check(const VerificationReport& r, std::string_view id) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.id == id; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("selection names") {
    const auto names = suite_names();
    CHECK(names.size() == 14);
    CHECK(std::count(names.begin(), names.end(), "dp9") == 1);
    CHECK_THROWS_AS(run_suite("nosuch"), PreconditionError);
    CHECK_THROWS_AS(run_suite("dp10"), PreconditionError);
  }

  TEST_CASE("full run passes and has the nine table rows") {
    const auto& r = full_report();
    CHECK(r.ok());
    REQUIRE(r.table.size() == 9);
    const std::vector<long> orders{144, 24, 288, 432, 120, 96, 120, 48, 12};
    const std::vector<std::string> surfaces{"conic bundle", "dP9", "dP8", "dP6", "dP5", "dP4", "dP3", "dP2", "dP1"};
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(r.table[i].surface == surfaces[i]);
      CHECK(r.table[i].order == orders[i]);
      CHECK(r.table[i].status == CheckStatus::pass);
    }
  }

  TEST_CASE("checks are sorted by id and unique") {
    const auto& r = full_report();
    std::set<std::string> ids;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      ids.insert(r.checks[i].id);
      if (i > 0) CHECK(r.checks[i - 1].id < r.checks[i].id);
    }
    CHECK(ids.size() == r.checks.size());
  }

  TEST_CASE("summary counts match the check list") {
    const auto& r = full_report();
    const auto s = r.summary();
    CHECK(s.passed + s.failed + s.erratum_notes == r.checks.size());
    const auto notes = static_cast<std::size_t>(std::count_if(
        r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::erratum_note; }));
    CHECK(s.erratum_notes == notes);
    CHECK(s.failed == 0);
  }

  TEST_CASE("status is pass exactly when expected equals actual") {
    for (const auto& c : full_report().checks) {
      CAPTURE(c.id);
      CHECK((c.status == CheckStatus::pass) == (c.expected == c.actual));
    }
  }

  TEST_CASE("documented discrepancies are erratum notes") {
    const auto& r = full_report();
    for (std::string_view id : {"dp5.quadruple_list", "dp1.curve_list", "dp1.curves_printed_sextic", "dp3.printed_constant"}) {
      const auto* c = find_check(r, id);
      REQUIRE(c != nullptr);
      CHECK(c->status == CheckStatus::erratum_note);
    }
    CHECK(find_check(r, "dp5.quadruple_list")->actual == "{E4, l12, l13, l23}");
    CHECK(find_check(r, "dp3.printed_constant")->actual == "72");
    CHECK(find_check(r, "dp1.curves_scaled_sextic")->status == CheckStatus::pass);
  }

  TEST_CASE("single suites select by prefix") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      const auto r = run_suite(name, 3);
      for (const auto& c : r.checks) CHECK(c.id.rfind(name + ".", 0) == 0);
      CHECK(r.suite == name);
      CHECK(r.seed == 3U);
    }
    const auto dp6 = run_suite("dp6");
    REQUIRE(dp6.table.size() == 1);
    CHECK(dp6.table[0].order == 432L);
    const auto* c = find_check(dp6, "dp6.order432");
    REQUIRE(c != nullptr);
    CHECK(c->expected == "432");
    CHECK(c->actual == "432");
    CHECK(run_suite("dp7").checks.empty());
    CHECK(run_suite("minkowski").table.empty());
  }

  TEST_CASE("a tiny cap turns closures into recorded failures") {
    const auto r = run_suite("dp9", 1, 5);
    CHECK_FALSE(r.ok());
    const auto* c = find_check(r, "dp9.order24");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::fail);
    CHECK(c->actual.rfind("error:", 0) == 0);
    REQUIRE(r.table.size() == 1);
    CHECK(r.table[0].status == CheckStatus::fail);
    CHECK_FALSE(r.table[0].order.has_value());
  }
}

TEST_SUITE("rendering") {
  TEST_CASE("format names") {
    CHECK(parse_report_format("json") == ReportFormat::json);
    CHECK(parse_report_format("md") == ReportFormat::markdown);
    CHECK(parse_report_format("markdown") == ReportFormat::markdown);
    CHECK_FALSE(parse_report_format("html").has_value());
  }

  TEST_CASE("markdown table rows") {
    const auto text = render_report(full_report(), ReportFormat::markdown);
    CHECK(text.rfind("| Surface | Structure | Order | Status |\n", 0) == 0);
    CHECK(text.find("| dP6 | (Z/6Z)²⋊D₆ | 432 | pass |") != std::string::npos);
    CHECK(text.find("| conic bundle | D₆×D₆ | 144 | pass |") != std::string::npos);
    CHECK(text.find("| dP1 | D₆ | 12 | pass |") != std::string::npos);
  }

  TEST_CASE("empty report renders headers only") {
    VerificationReport empty;
    empty.suite = "dp7";
    const auto text = render_report(empty, ReportFormat::markdown);
    CHECK(text ==
          "| Surface | Structure | Order | Status |\n|---|---|---|---|\n\n"
          "| Check | Expected | Actual | Status |\n|---|---|---|---|\n");
    const auto j = nlohmann::json::parse(render_report(empty, ReportFormat::json));
    CHECK(j["checks"].empty());
    CHECK(j["table"].empty());
  }

  TEST_CASE("json schema") {
    const auto j = nlohmann::json::parse(render_report(run_suite("dp4", 7), ReportFormat::json));
    CHECK(j["suite"] == "dp4");
    CHECK(j["seed"] == 7);
    std::set<std::string> top;
    for (const auto& [k, v] : j.items()) top.insert(k);
    CHECK(top == std::set<std::string>{"suite", "seed", "checks", "table"});
    for (const auto& c : j["checks"]) {
      std::set<std::string> keys;
      for (const auto& [k, v] : c.items()) keys.insert(k);
      CHECK(keys == std::set<std::string>{"id", "paper_ref", "expected", "actual", "status", "runtime_ms"});
      CHECK(c["runtime_ms"].is_number());
    }
    REQUIRE(j["table"].size() == 1);
    CHECK(j["table"][0]["order"] == 96);
    CHECK(j["table"][0]["structure"] == "(Z/2Z)⁴⋊Sym₃");
  }

  TEST_CASE("markdown cells escape pipes") {
    VerificationReport r;
    r.checks.push_back({"x.y", "ref", "a|b", "a|b", CheckStatus::pass, 0.0});
    CHECK(render_report(r, ReportFormat::markdown).find("a\\|b") != std::string::npos);
  }

  TEST_CASE("json is deterministic apart from timings") {
    for (std::string_view suite : {"dp4", "pgl3"}) {
      const auto a = render_report(run_suite(suite, 11), ReportFormat::json);
      const auto b = render_report(run_suite(suite, 11), ReportFormat::json);
      CHECK(without_timings(a) == without_timings(b));
    }
    const auto full = render_report(run_suite("all", 1), ReportFormat::json);
    CHECK(without_timings(full) == without_timings(render_report(full_report(), ReportFormat::json)));
  }
}
