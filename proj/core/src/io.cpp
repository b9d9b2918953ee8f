#include "moeblox/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "moeblox/error.hpp"

namespace moeblox::io {

namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw GeometryError(Errc::InvalidArgument, std::string(what) + ": number expected");
  return j.get<double>();
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw GeometryError(Errc::InvalidArgument, "complex entry must be [re, im]");
  }
  return {number(j[0], "re"), number(j[1], "im")};
}

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
    throw GeometryError(Errc::InvalidArgument, "bad number '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Json to_json(const Cycle& c) { return Json::array({c.k(), c.l(), c.n(), c.m()}); }

Cycle cycle_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw GeometryError(Errc::InvalidArgument, "cycle must be [k, l, n, m]");
  }
  return {number(j[0], "k"), number(j[1], "l"), number(j[2], "n"), number(j[3], "m")};
}

Json to_json(const MoebiusMap& map) {
  Json out = Json::array();
  for (const Complex z : {map.a(), map.b(), map.c(), map.d()}) {
    out.push_back(Json::array({z.real(), z.imag()}));
  }
  return out;
}

MoebiusMap map_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw GeometryError(Errc::InvalidArgument, "map must list a, b, c, d");
  }
  return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
          complex_from_json(j[3])};
}

Json to_json(const LoxodromeTriple& t) {
  return {{"c1", to_json(t.c1())}, {"c2", to_json(t.c2())}, {"c3", to_json(t.c3())},
          {"sign", t.sign()}};
}

LoxodromeTriple triple_from_json(const Json& j) {
  if (!j.is_object()) throw GeometryError(Errc::InvalidArgument, "triple must be an object");
  for (const char* key : {"c1", "c2", "c3"}) {
    if (!j.contains(key)) throw GeometryError(Errc::InvalidArgument, std::string("missing ") + key);
  }
  int sign = 1;
  if (j.contains("sign")) {
    if (!j["sign"].is_number_integer()) {
      throw GeometryError(Errc::InvalidArgument, "sign must be +1 or -1");
    }
    sign = j["sign"].get<int>();
  }
  return {cycle_from_json(j["c1"]), cycle_from_json(j["c2"]), cycle_from_json(j["c3"]), sign};
}

ExtendedPoint parse_point(std::string_view text) {
  if (text == "inf" || text == "infinity") return ExtendedPoint::infinity();
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw GeometryError(Errc::InvalidArgument, "point must be 'x,y' or 'inf'");
  }
  return Complex{parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string format_number(double value, int precision) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(precision);
  out << value;
  std::string s = out.str();
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_point(const ExtendedPoint& p, int precision) {
  if (p.is_infinite()) return "inf";
  const Complex z = p.value();
  return format_number(z.real(), precision) + "," + format_number(z.imag(), precision);
}

Json to_json(const ExtendedPoint& p) {
  if (p.is_infinite()) return "inf";
  const Complex z = p.value();
  return Json::array({z.real(), z.imag()});
}

ExtendedPoint point_from_json(const Json& j) {
  if (j.is_string()) return parse_point(j.get<std::string>());
  const Complex z = complex_from_json(j);
  return z;
}

Json to_json(const MembershipReport& r) {
  const auto optional = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  return {{"member", r.member},
          {"t_coeff", optional(r.t_coeff)},
          {"lhs", optional(r.lhs)},
          {"rhs", optional(r.rhs)},
          {"flags", r.flags}};
}

}  // namespace moeblox::io
