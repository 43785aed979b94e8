#include <doctest.h>

#include "taf/cli.hpp"

using namespace taf;

namespace {

const char* kConfig66 = R"({"r": {"cycle": [6]}, "s": {"cycle": [6]}})";
const char* kConfig23 = R"({"r": {"cycle": [2]}, "s": {"cycle": [3]}})";

}  // namespace

TEST_CASE("config parsing") {
  const Config config = parse_config(kConfig66);
  CHECK(config.r == SequenceProfile({}, {6}));
  CHECK(config.s == SequenceProfile({}, {6}));
  CHECK(parse_config(R"({"r": {"preamble": [2], "cycle": [3]}, "s": {"cycle": [2]},
                         "options": {"level": 2}})")
            .options.at("level") == 2);

  CHECK_THROWS_AS(parse_config("not json"), Error);
  CHECK_THROWS_AS(parse_config(R"({"r": {"cycle": [2]}})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"r": {"cycle": [2]}, "s": {"cycle": [2]}, "t": 1})"), Error);
  CHECK_THROWS_AS(parse_config(R"({"r": {"cycle": [1]}, "s": {"cycle": [2]}})"), Error);
  CHECK_THROWS_AS(
      parse_config(R"({"r": {"cycle": [2]}, "s": {"cycle": [2]}, "options": {"level": 0}})"),
      Error);
}

TEST_CASE("analyze reports the outer rank") {
  const Report report = run_command(parse_config(kConfig66), "analyze", {});
  CHECK(report.ok());
  CHECK(report.results.at("d") == 2);
  CHECK(report.results.at("out") == "Out ≅ Z^2");
  CHECK(report.results.at("common_primes") == Json::array({2, 3}));
  REQUIRE(report.results.at("generators").size() == 2);
  CHECK(report.results.at("generators")[0].at("scaling") == "1/2");
  CHECK(report_exit_code(report) == 0);

  const Report zero = run_command(parse_config(kConfig23), "analyze", {});
  CHECK(zero.results.at("d") == 0);
  CHECK(zero.results.at("out") == "Out ≅ Z^0");
}

TEST_CASE("compare reports finite equivalence") {
  CommandArgs args;
  args.config2_text = R"({"r": {"cycle": [2, 3]}, "s": {"cycle": [6]}})";
  const Report report = run_command(parse_config(kConfig66), "compare", args);
  CHECK(report.ok());
  CHECK(report.results.at("r_finitely_equivalent") == true);
  CHECK(report.results.at("s_finitely_equivalent") == true);

  args.config2_text = kConfig23;
  const Report other = run_command(parse_config(kConfig66), "compare", args);
  CHECK(other.results.at("r_finitely_equivalent") == false);
}

TEST_CASE("verify populates checks") {
  CommandArgs args;
  args.level = 2;
  const Report report = run_command(parse_config(kConfig23), "verify", args);
  CHECK(report.ok());
  REQUIRE(report.checks.size() == 5);
  for (const auto& [name, passed] : report.checks) CHECK(passed);
  CHECK(report.results.at("level") == 2);
  CHECK(report_exit_code(report) == 0);
}

TEST_CASE("point queries answer through reports") {
  CommandArgs args;
  args.action = "nu";
  args.point_text = R"({"right": [2]})";
  const Report nu = run_command(parse_config(kConfig23), "point", args);
  CHECK(nu.ok());
  CHECK(nu.results.at("nu") == "1/2");

  args.action = "gap";
  args.point_text = R"({"left": [2], "right_tail": "max"})";
  const Report gap = run_command(parse_config(kConfig23), "point", args);
  CHECK(gap.results.at("is_gap_point") == true);
  CHECK(gap.results.at("successor").at("left") == Json::array({3}));
  CHECK(gap.results.at("chart").at("scaling") == "2/1");

  args.action = "gap";
  args.point_text = R"({"right": [2]})";
  const Report pre = run_command(parse_config(kConfig23), "point", args);
  CHECK(pre.results.at("is_gap_point") == false);
  CHECK(pre.results.at("predecessor").at("right_tail") == "max");

  args.action = "alpha";
  args.point_text = R"({"right": [3]})";
  args.scaling = "1/2";
  const Report alpha = run_command(parse_config(kConfig66), "point", args);
  CHECK(alpha.ok());
  CHECK(alpha.results.at("image_nu") == "1/6");

  args = {};
  args.action = "cocycle";
  args.point_text = R"({"right": [2]})";
  args.point2_text = R"({"right": [1, 2]})";
  const Report cocycle = run_command(parse_config(kConfig23), "point", args);
  CHECK(cocycle.results.at("cocycle") == "-1/4");
  CHECK(cocycle.results.at("in_R") == false);
}

TEST_CASE("non-canonical point literals are canonicalized with a warning") {
  CommandArgs args;
  args.action = "nu";
  args.point_text = R"({"left": [2, 1], "right": [2, 1]})";
  const Report report = run_command(parse_config(kConfig23), "point", args);
  CHECK(report.ok());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.results.at("point").at("left") == Json::array({2}));
  CHECK(report.results.at("point").at("right") == Json::array({2}));
}

TEST_CASE("operation errors land in the report") {
  CommandArgs args;
  args.action = "nu";
  args.point_text = R"({"right": [9]})";
  const Report report = run_command(parse_config(kConfig23), "point", args);
  CHECK(!report.ok());
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors.front().find("InvalidPoint") == 0);
  CHECK(report_exit_code(report) == 1);

  args.point_text = R"({"right": [2]})";
  args.action = "alpha";
  args.scaling = "1/2";
  const Report bad = run_command(parse_config(kConfig23), "point", args);
  CHECK(!bad.ok());
  CHECK(bad.errors.front().find("InvalidScaling") == 0);
}

TEST_CASE("unknown commands and actions are usage errors") {
  CHECK_THROWS_AS(run_command(parse_config(kConfig23), "frobnicate", {}), Error);
  CommandArgs args;
  args.action = "volume";
  args.point_text = R"({"right": [2]})";
  CHECK_THROWS_AS(run_command(parse_config(kConfig23), "point", args), Error);
}

TEST_CASE("witness sweeps respect explicit bounds") {
  CommandArgs args;
  args.scaling = "2/1";
  args.level = 3;
  const Report report = run_command(parse_config(kConfig23), "witness", args);
  CHECK(report.ok());
  REQUIRE(report.results.at("sweep").size() == 4);
  for (const auto& entry : report.results.at("sweep")) CHECK(entry.at("found") == true);

  args.search_bound = 1;
  args.point_text = R"({"left": [2, 2]})";
  const Report bounded = run_command(parse_config(R"({"r": {"cycle": [2]}, "s": {"cycle": [2]}})"),
                                     "witness", args);
  CHECK(bounded.ok());
  CHECK(bounded.results.at("bounds").at("k_max") == 1);
  bool all_found = true;
  for (const auto& entry : bounded.results.at("sweep"))
    all_found = all_found && entry.at("found") == true;
  CHECK(!all_found);
}

TEST_CASE("reports render deterministically in both formats") {
  CommandArgs args;
  args.action = "nu";
  args.point_text = R"({"right": [2]})";
  const Report report = run_command(parse_config(kConfig23), "point", args);

  const std::string text = emit_report(report, "text");
  CHECK(text.find("nu: 1/2") != std::string::npos);
  CHECK(text.find("status: OK") != std::string::npos);

  const std::string json = emit_report(report, "json");
  CHECK(json == emit_report(report, "json"));
  const Json parsed = Json::parse(json);
  CHECK(parsed.at("results").at("nu") == "1/2");
  CHECK(parsed.at("ok") == true);
  // canonical machine form: re-serializing the parsed document is stable
  CHECK(nlohmann::json::parse(json).dump(2) + "\n" == json);
}

TEST_CASE("an empty verification report says so") {
  Report report;
  report.command = "verify";
  const std::string text = emit_report(report, "text");
  CHECK(text.find("no checks run") != std::string::npos);
  CHECK(report_exit_code(report) == 0);
}
