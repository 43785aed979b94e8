#pragma once

#include <string>
#include <vector>

#include "taf/profile.hpp"
#include "taf/serde.hpp"

namespace taf {

struct Config {
  SequenceProfile r;
  SequenceProfile s;
  Json options;  // search bounds, verification levels
};

/// Parses and validates {"r": {...}, "s": {...}, "options": {...}}.
/// Throws Error(parse_error) for malformed JSON and Error(invalid_profile)
/// for profile violations.
Config parse_config(const std::string& text);

struct Report {
  std::string command;
  Json results = Json::object();
  std::vector<std::pair<std::string, bool>> checks;  // name -> passed
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const;
};

struct CommandArgs {
  long level = 3;
  std::string scaling;      // --c, "num/den"
  std::string point_text;   // --point, JSON literal
  std::string point2_text;  // --point2, second literal for cocycle queries
  std::string action;       // point subcommand: nu | gap | alpha | cocycle
  std::string config2_text; // compare: second config document
  long search_bound = 0;    // 0 = defaults; overrides k_max and m_max
};

/// Dispatches one command (analyze, compare, verify, point, witness) and
/// collects results, check verdicts, and surfaced errors into a report.
/// Throws Error(unknown_command) for unrecognized commands; operation errors
/// are captured in the report instead of propagating.
Report run_command(const Config& config, const std::string& command, const CommandArgs& args);

/// Renders a report; "text" gives aligned human-readable lines, "json" the
/// canonical machine form. Both are deterministic.
std::string emit_report(const Report& report, const std::string& format);

/// Exit code contract: 0 all checks pass, 1 check failure or surfaced error.
int report_exit_code(const Report& report);

/// Full CLI entry point; returns the process exit code (2 for usage or parse
/// errors).
int cli_main(int argc, char** argv);

}  // namespace taf
