#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "moeblox/loxodrome.hpp"

namespace moeblox::io {

using Json = nlohmann::json;

// [k, l, n, m]
Json to_json(const Cycle& c);
Cycle cycle_from_json(const Json& j);

// Row-major [[re, im], [re, im], [re, im], [re, im]].
Json to_json(const MoebiusMap& map);
MoebiusMap map_from_json(const Json& j);

// {"c1": [...], "c2": [...], "c3": [...], "sign": 1}; sign defaults to 1.
Json to_json(const LoxodromeTriple& t);
LoxodromeTriple triple_from_json(const Json& j);

// "x,y" or "inf".
ExtendedPoint parse_point(std::string_view text);
std::string format_point(const ExtendedPoint& p, int precision = 6);
Json to_json(const ExtendedPoint& p);
ExtendedPoint point_from_json(const Json& j);

Json to_json(const MembershipReport& report);

// Fixed-point formatting without trailing noise such as "-0.000000".
std::string format_number(double value, int precision = 6);

}  // namespace moeblox::io
