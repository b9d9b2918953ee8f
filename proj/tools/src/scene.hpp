#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <moeblox/io.hpp>

namespace moeblox::cli {

using Json = nlohmann::json;

// Invalid scene or reference; the message carries the location.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Style {
  std::string stroke;
  double width = 0.0;  // 0: renderer default
  std::string dash;
};

struct SceneObject {
  std::string id;
  std::string kind;  // circle | line | point | cycle | moebius | triple
  Json data;
};

/// Objects keyed by unique id, plus optional style hints and bbox.
///
/// Object data by kind:
///   circle  {"center": [x, y], "radius": r}
///   line    {"p": [x, y], "q": [x, y]}
///   point   [x, y] or "inf"
///   cycle   [k, l, n, m]
///   moebius [[re, im], [re, im], [re, im], [re, im]]
///   triple  {"c1": ..., "c2": ..., "c3": ..., "sign": 1}, each cycle
///           inline or the id of a circle, line, point or cycle object.
class Scene {
 public:
  static Scene parse(const std::string& text, const std::string& origin = "scene");
  static Scene load(const std::string& path);

  const std::vector<SceneObject>& objects() const { return objects_; }
  const SceneObject* find(const std::string& id) const;
  const std::optional<std::array<double, 4>>& bbox() const { return bbox_; }
  const Style* style(const std::string& id) const;

  Cycle cycle(const SceneObject& object) const;
  LoxodromeTriple triple(const SceneObject& object) const;
  MoebiusMap map(const SceneObject& object) const;
  ExtendedPoint point(const SceneObject& object) const;

  // Command-line references: an object id, inline JSON, or a JSON file.
  Cycle resolve_cycle(const std::string& ref) const;
  LoxodromeTriple resolve_triple(const std::string& ref) const;
  MoebiusMap resolve_map(const std::string& ref) const;
  ExtendedPoint resolve_point(const std::string& ref) const;

 private:
  Cycle cycle_value(const Json& value, const std::string& field) const;

  std::vector<SceneObject> objects_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, Style> styles_;
  std::optional<std::array<double, 4>> bbox_;
};

}  // namespace moeblox::cli
