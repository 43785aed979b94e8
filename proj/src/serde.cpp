#include "taf/serde.hpp"

#include <utility>

#include "taf/error.hpp"

namespace taf {

Json rat_to_json(const Rat& v) { return fraction_string(v); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_fraction(j.get<std::string>());
  raise(Errc::parse_error, "expected a rational as \"num/den\" or an integer");
}

Json int_to_json(const Int& v) { return v.str(); }

namespace {

std::vector<long> digits_from_json(const Json& j, const char* field) {
  if (!j.is_array()) raise(Errc::parse_error, std::string(field) + " must be an array");
  std::vector<long> digits;
  for (const Json& entry : j) {
    if (!entry.is_number_integer())
      raise(Errc::parse_error, std::string(field) + " entries must be integers");
    digits.push_back(entry.get<long>());
  }
  return digits;
}

}  // namespace

Json point_to_json(const Point& x) {
  return Json{{"left", x.left},
              {"right", x.right},
              {"right_tail", x.right_tail == RightTail::ones ? "ones" : "max"}};
}

Point point_from_json(const Json& j) {
  if (!j.is_object()) raise(Errc::parse_error, "point literal must be an object");
  Point x;
  if (j.contains("left")) x.left = digits_from_json(j.at("left"), "left");
  if (j.contains("right")) x.right = digits_from_json(j.at("right"), "right");
  if (j.contains("right_tail")) {
    const std::string tail = j.at("right_tail").is_string() ? j.at("right_tail").get<std::string>() : "";
    if (tail == "ones")
      x.right_tail = RightTail::ones;
    else if (tail == "max")
      x.right_tail = RightTail::max;
    else
      raise(Errc::parse_error, "right_tail must be \"ones\" or \"max\"");
  }
  for (const auto& [key, value] : j.items())
    if (key != "left" && key != "right" && key != "right_tail")
      raise(Errc::parse_error, "unknown point field \"" + key + "\"");
  return x;
}

Json profile_to_json(const SequenceProfile& p) {
  return Json{{"preamble", p.preamble()}, {"cycle", p.cycle()}};
}

SequenceProfile profile_from_json(const Json& j) {
  if (!j.is_object()) raise(Errc::parse_error, "profile must be an object");
  std::vector<long> preamble, cycle;
  if (j.contains("preamble")) preamble = digits_from_json(j.at("preamble"), "preamble");
  if (j.contains("cycle")) cycle = digits_from_json(j.at("cycle"), "cycle");
  for (const auto& [key, value] : j.items())
    if (key != "preamble" && key != "cycle")
      raise(Errc::parse_error, "unknown profile field \"" + key + "\"");
  return SequenceProfile(std::move(preamble), std::move(cycle));
}

Json supernatural_to_json(const Supernatural& s) {
  Json finite = Json::object();
  for (const auto& [p, e] : s.finite_part) finite[std::to_string(p)] = e;
  return Json{{"finite", std::move(finite)},
              {"infinite", std::vector<long>(s.infinite_primes.begin(), s.infinite_primes.end())},
              {"display", s.to_string()}};
}

Json exponent_vector_to_json(const ExponentVector& v) {
  Json exponents = Json::object();
  for (const auto& [p, e] : v.exponents) exponents[std::to_string(p)] = e;
  return Json{{"exponents", std::move(exponents)}, {"scaling", rat_to_json(v.scaling())}};
}

ExponentVector exponent_vector_from_json(const Json& j) {
  if (!j.is_object()) raise(Errc::parse_error, "exponent vector must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "exponents" && key != "scaling")
      raise(Errc::parse_error, "unknown exponent vector field \"" + key + "\"");
  if (!j.contains("exponents") || !j.at("exponents").is_object())
    raise(Errc::parse_error, "exponent vector needs an \"exponents\" object");
  std::map<long, long> exponents;
  for (const auto& [key, value] : j.at("exponents").items()) {
    if (!value.is_number_integer()) raise(Errc::parse_error, "exponents must be integers");
    try {
      exponents[std::stol(key)] = value.get<long>();
    } catch (const std::exception&) {
      raise(Errc::parse_error, "exponent key \"" + key + "\" is not a prime");
    }
  }
  ExponentVector v = exponent_vector(std::move(exponents));
  if (j.contains("scaling") && rat_from_json(j.at("scaling")) != v.scaling())
    raise(Errc::parse_error, "scaling does not match the exponents");
  return v;
}

Json gap_chart_to_json(const GapChart& chart) {
  return Json{{"t", chart.t},
              {"word", chart.word},
              {"interval_count", int_to_json(chart.interval_count)},
              {"scaling", rat_to_json(chart.scaling)}};
}

Json density_witness_to_json(const DensityWitness& w) {
  return Json{{"base_point", point_to_json(w.base_point)},
              {"depth", w.depth},
              {"k", int_to_json(w.k)},
              {"m", int_to_json(w.m)},
              {"value", rat_to_json(w.value)}};
}

Json tri_element_to_json(const TriElement& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(Json{{"row", e.row},
                         {"col", e.col},
                         {"coeff", Json{{"a", rat_to_json(c.a)}, {"b", rat_to_json(c.b)}}}});
  return terms;
}

Rat parse_rat_arg(const std::string& text) { return parse_fraction(text); }

}  // namespace taf
