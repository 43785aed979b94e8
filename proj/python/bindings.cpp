#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taf/autgroup.hpp"
#include "taf/cli.hpp"

namespace py = pybind11;

namespace {

// Every wrapper speaks JSON strings so the python side matches the CLI
// contract byte for byte.
std::string emit(const taf::Report& report) { return taf::emit_report(report, "json"); }

std::string run(const std::string& config_text, const std::string& command,
                const taf::CommandArgs& args) {
  return emit(taf::run_command(taf::parse_config(config_text), command, args));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic toolkit for triangular alternation limit algebras";

  py::register_exception<taf::Error>(m, "TafError");

  m.def(
      "analyze",
      [](const std::string& config) { return run(config, "analyze", taf::CommandArgs{}); },
      py::arg("config"));

  m.def(
      "compare",
      [](const std::string& config, const std::string& config2) {
        taf::CommandArgs args;
        args.config2_text = config2;
        return run(config, "compare", args);
      },
      py::arg("config"), py::arg("config2"));

  m.def(
      "verify",
      [](const std::string& config, long level) {
        taf::CommandArgs args;
        args.level = level;
        return run(config, "verify", args);
      },
      py::arg("config"), py::arg("level") = -1);

  m.def(
      "point",
      [](const std::string& config, const std::string& action, const std::string& point,
         const std::string& point2, const std::string& c) {
        taf::CommandArgs args;
        args.action = action;
        args.point_text = point;
        args.point2_text = point2;
        args.scaling = c;
        return run(config, "point", args);
      },
      py::arg("config"), py::arg("action"), py::arg("point"), py::arg("point2") = "",
      py::arg("c") = "");

  m.def(
      "witness",
      [](const std::string& config, const std::string& c, const std::string& point, long level,
         long search_bound) {
        taf::CommandArgs args;
        args.scaling = c;
        args.point_text = point;
        args.level = level;
        args.search_bound = search_bound;
        return run(config, "witness", args);
      },
      py::arg("config"), py::arg("c"), py::arg("point") = "", py::arg("level") = -1,
      py::arg("search_bound") = 0);

  m.def(
      "out_rank",
      [](const std::string& config) {
        const taf::Config parsed = taf::parse_config(config);
        const taf::OutRank rank = taf::out_rank(parsed.r, parsed.s);
        return py::make_tuple(rank.d, rank.primes);
      },
      py::arg("config"));

  m.def(
      "nu",
      [](const std::string& config, const std::string& point) {
        const taf::Config parsed = taf::parse_config(config);
        const taf::CantorSpace space(parsed.r, parsed.s);
        const taf::Point x = space.canonical(taf::point_from_json(taf::Json::parse(point)));
        return taf::fraction_string(space.nu(x));
      },
      py::arg("config"), py::arg("point"));
}
