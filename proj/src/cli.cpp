#include "taf/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "taf/autgroup.hpp"
#include "taf/verify.hpp"

namespace taf {

namespace {

long options_long(const Json& options, const char* key, long fallback) {
  if (!options.contains(key)) return fallback;
  const Json& value = options.at(key);
  if (!value.is_number_integer())
    raise(Errc::parse_error, std::string("option \"") + key + "\" must be an integer");
  return value.get<long>();
}

}  // namespace

Config parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) raise(Errc::parse_error, "config must be a JSON object");
  if (!doc.contains("r") || !doc.contains("s"))
    raise(Errc::parse_error, "config needs \"r\" and \"s\" profiles");
  for (const auto& [key, value] : doc.items())
    if (key != "r" && key != "s" && key != "options")
      raise(Errc::parse_error, "unknown config field \"" + key + "\"");
  Config config{profile_from_json(doc.at("r")), profile_from_json(doc.at("s")),
                doc.contains("options") ? doc.at("options") : Json::object()};
  if (!config.options.is_object()) raise(Errc::parse_error, "\"options\" must be an object");
  for (const char* key : {"level", "samples", "k_max", "m_max", "j_max"})
    if (config.options.contains(key) && options_long(config.options, key, 1) < 1)
      raise(Errc::parse_error, std::string("option \"") + key + "\" must be at least 1");
  return config;
}

bool Report::ok() const {
  if (!errors.empty()) return false;
  for (const auto& [name, passed] : checks)
    if (!passed) return false;
  return true;
}

namespace {

void run_analyze(const Config& config, Report& report) {
  const Supernatural rn = from_profile(config.r), sn = from_profile(config.s);
  const OutRank rank = out_rank(config.r, config.s);
  report.results["r_profile"] = profile_to_json(config.r);
  report.results["s_profile"] = profile_to_json(config.s);
  report.results["r_supernatural"] = supernatural_to_json(rn);
  report.results["s_supernatural"] = supernatural_to_json(sn);
  report.results["common_primes"] = rank.primes;
  report.results["d"] = rank.d;
  report.results["out"] = "Out ≅ Z^" + std::to_string(rank.d);
  Json generators = Json::array();
  for (long p : rank.primes)
    generators.push_back(Json{{"prime", p}, {"scaling", rat_to_json(Rat(1, p))}});
  report.results["generators"] = std::move(generators);
}

void run_compare(const Config& config, const CommandArgs& args, Report& report) {
  if (args.config2_text.empty())
    raise(Errc::parse_error, "compare needs a second configuration");
  const Config other = parse_config(args.config2_text);
  const Supernatural ra = from_profile(config.r), rb = from_profile(other.r);
  const Supernatural sa = from_profile(config.s), sb = from_profile(other.s);
  report.results["r_supernaturals"] =
      Json{{"first", supernatural_to_json(ra)}, {"second", supernatural_to_json(rb)}};
  report.results["s_supernaturals"] =
      Json{{"first", supernatural_to_json(sa)}, {"second", supernatural_to_json(sb)}};
  report.results["r_finitely_equivalent"] = finitely_equivalent(ra, rb);
  report.results["s_finitely_equivalent"] = finitely_equivalent(sa, sb);
}

void run_verify(const Config& config, const CommandArgs& args, Report& report) {
  VerifyOptions opts;
  opts.level = args.level > 0 ? args.level : options_long(config.options, "level", opts.level);
  opts.samples = options_long(config.options, "samples", opts.samples);
  opts.seed = static_cast<std::uint64_t>(options_long(config.options, "seed", 20260823));
  const auto checks = run_verification(config.r, config.s, opts);
  Json details = Json::array();
  for (const CheckResult& check : checks) {
    report.checks.emplace_back(check.name, check.passed);
    details.push_back(Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  report.results["level"] = opts.level;
  report.results["checks"] = std::move(details);
}

SearchBounds resolve_bounds(const Config& config, const CommandArgs& args) {
  SearchBounds bounds;
  bounds.k_max = options_long(config.options, "k_max", bounds.k_max);
  bounds.m_max = options_long(config.options, "m_max", bounds.m_max);
  bounds.j_max = options_long(config.options, "j_max", bounds.j_max);
  if (args.level > 0) bounds.j_max = args.level;
  if (args.search_bound > 0) {
    bounds.k_max = args.search_bound;
    bounds.m_max = args.search_bound;
  }
  return bounds;
}

Point parse_point_argument(const CantorSpace& space, const std::string& text, Report& report) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, std::string("point literal is not valid JSON: ") + e.what());
  }
  const Point parsed = point_from_json(doc);
  const Point canonical = space.canonical(parsed);
  if (canonical != parsed)
    report.warnings.push_back("point literal canonicalized to " + point_to_json(canonical).dump());
  return canonical;
}

void run_point(const Config& config, const CommandArgs& args, Report& report) {
  if (args.action.empty())
    raise(Errc::unknown_command, "point needs an action: nu, gap, alpha, or cocycle");
  const CantorSpace space(config.r, config.s);
  if (args.point_text.empty()) raise(Errc::parse_error, "point commands need --point");
  const Point x = parse_point_argument(space, args.point_text, report);
  report.results["point"] = point_to_json(x);

  if (args.action == "nu") {
    report.results["nu"] = rat_to_json(space.nu(x));
  } else if (args.action == "gap") {
    const bool gap = space.is_gap_point(x);
    report.results["is_gap_point"] = gap;
    report.results["nu"] = rat_to_json(space.nu(x));
    if (gap) {
      report.results["successor"] = point_to_json(space.gap_successor(x));
      report.results["chart"] = gap_chart_to_json(gap_chart(space, x));
    } else {
      report.results["predecessor"] = point_to_json(space.gap_predecessor(x));
    }
  } else if (args.action == "alpha") {
    if (args.scaling.empty()) raise(Errc::parse_error, "alpha needs --c");
    const ExponentVector c = exponents_of(parse_rat_arg(args.scaling));
    const Point image = alpha_on_point(space, c, x);
    report.results["exponents"] = exponent_vector_to_json(c);
    report.results["image"] = point_to_json(image);
    report.results["nu"] = rat_to_json(space.nu(x));
    report.results["image_nu"] = rat_to_json(space.nu(image));
  } else if (args.action == "cocycle") {
    if (args.point2_text.empty()) raise(Errc::parse_error, "cocycle needs --point2");
    const Point y = parse_point_argument(space, args.point2_text, report);
    report.results["point2"] = point_to_json(y);
    report.results["cocycle"] = rat_to_json(space.cocycle(x, y));
    report.results["in_R"] = space.in_R(x, y);
  } else {
    raise(Errc::unknown_command, "unknown point action \"" + args.action + "\"");
  }
}

void run_witness(const Config& config, const CommandArgs& args, Report& report) {
  if (args.scaling.empty()) raise(Errc::parse_error, "witness needs --c");
  const Rat c = parse_rat_arg(args.scaling);
  const CantorSpace space(config.r, config.s);
  Point base = ones_point();
  if (!args.point_text.empty()) base = parse_point_argument(space, args.point_text, report);
  const SearchBounds bounds = resolve_bounds(config, args);

  report.results["scaling"] = rat_to_json(c);
  report.results["base_point"] = point_to_json(base);
  report.results["bounds"] =
      Json{{"k_max", bounds.k_max}, {"m_max", bounds.m_max}, {"j_max", bounds.j_max}};
  Json sweep = Json::array();
  bool consistent = true;
  for (const auto& [depth, witness] : density_sweep(space, c, base, bounds)) {
    Json entry{{"depth", depth}, {"found", witness.has_value()}};
    if (witness) {
      entry["witness"] = density_witness_to_json(*witness);
      consistent = consistent && witness_valid(space, c, *witness);
    }
    sweep.push_back(std::move(entry));
  }
  report.results["sweep"] = std::move(sweep);
  report.checks.emplace_back("witness_consistency", consistent);
}

void render_value(std::ostream& out, const Json& value) {
  if (value.is_string())
    out << value.get<std::string>();
  else
    out << value.dump();
}

}  // namespace

Report run_command(const Config& config, const std::string& command, const CommandArgs& args) {
  Report report;
  report.command = command;
  try {
    if (command == "analyze")
      run_analyze(config, report);
    else if (command == "compare")
      run_compare(config, args, report);
    else if (command == "verify")
      run_verify(config, args, report);
    else if (command == "point")
      run_point(config, args, report);
    else if (command == "witness")
      run_witness(config, args, report);
    else
      raise(Errc::unknown_command, "unknown command \"" + command + "\"");
  } catch (const Error& err) {
    if (err.code() == Errc::unknown_command) throw;
    report.errors.push_back(std::string(errc_name(err.code())) + ": " + err.what());
  }
  return report;
}

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "json") {
    Json doc{{"command", report.command},
             {"results", report.results},
             {"errors", report.errors},
             {"warnings", report.warnings},
             {"ok", report.ok()}};
    Json checks = Json::array();
    for (const auto& [name, passed] : report.checks)
      checks.push_back(Json{{"name", name}, {"passed", passed}});
    doc["checks"] = std::move(checks);
    // canonical machine form: keys sorted, stable indentation
    return nlohmann::json::parse(doc.dump()).dump(2) + "\n";
  }

  std::ostringstream out;
  out << "command: " << report.command << "\n";
  for (const auto& [key, value] : report.results.items()) {
    out << key << ": ";
    render_value(out, value);
    out << "\n";
  }
  if (!report.checks.empty()) {
    for (const auto& [name, passed] : report.checks)
      out << "check " << name << ": " << (passed ? "PASS" : "FAIL") << "\n";
  } else if (report.command == "verify") {
    out << "no checks run\n";
  }
  for (const std::string& warning : report.warnings) out << "warning: " << warning << "\n";
  for (const std::string& error : report.errors) out << "error: " << error << "\n";
  out << "status: " << (report.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

int report_exit_code(const Report& report) { return report.ok() ? 0 : 1; }

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for triangular alternation limit algebras"};
  app.require_subcommand(1);

  std::string config_path, config2_path, format = "text";
  std::string scaling, point_text, point2_text, action;
  long level = -1;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file (JSON)")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  add_common(app.add_subcommand("analyze", "outer automorphism rank and generators"));
  CLI::App* compare = app.add_subcommand("compare", "finite equivalence of two configurations");
  add_common(compare);
  compare->add_option("config2", config2_path, "second configuration file")->required();
  CLI::App* verify = app.add_subcommand("verify", "run the structural property suite");
  add_common(verify);
  verify->add_option("--level", level, "verification window level");
  CLI::App* point = app.add_subcommand("point", "point-level queries");
  add_common(point);
  point->add_option("action", action, "nu, gap, alpha, or cocycle")
      ->required()
      ->check(CLI::IsMember({"nu", "gap", "alpha", "cocycle"}));
  point->add_option("--point", point_text, "point literal (JSON)");
  point->add_option("--point2", point2_text, "second point literal (JSON)");
  point->add_option("--c", scaling, "scaling factor num/den");
  CLI::App* witness = app.add_subcommand("witness", "density witness sweep");
  add_common(witness);
  witness->add_option("--c", scaling, "scaling factor num/den");
  witness->add_option("--point", point_text, "base point literal (JSON)");
  witness->add_option("--level", level, "maximum progression depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto config_text = read_file(config_path);
  if (!config_text) {
    std::cerr << "error: cannot read config file \"" << config_path << "\"\n";
    return 2;
  }

  CommandArgs args;
  args.level = level;
  args.scaling = scaling;
  args.point_text = point_text;
  args.point2_text = point2_text;
  args.action = action;
  if (!config2_path.empty()) {
    const auto second = read_file(config2_path);
    if (!second) {
      std::cerr << "error: cannot read config file \"" << config2_path << "\"\n";
      return 2;
    }
    args.config2_text = *second;
  }
  if (const char* bound = std::getenv("TAF_SEARCH_BOUND")) {
    char* end = nullptr;
    const long parsed = std::strtol(bound, &end, 10);
    if (end == bound || *end != '\0' || parsed < 1) {
      std::cerr << "error: TAF_SEARCH_BOUND must be a positive integer\n";
      return 2;
    }
    args.search_bound = parsed;
  }

  try {
    const Config config = parse_config(*config_text);
    const Report report = run_command(config, app.get_subcommands().front()->get_name(), args);
    std::cout << emit_report(report, format);
    return report_exit_code(report);
  } catch (const Error& err) {
    std::cerr << "error: " << errc_name(err.code()) << ": " << err.what() << "\n";
    return 2;
  }
}

}  // namespace taf
