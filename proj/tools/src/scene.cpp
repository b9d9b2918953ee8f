#include "scene.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace moeblox::cli {

namespace {

const std::set<std::string> kKinds{"circle", "line", "point", "cycle", "moebius", "triple"};
const std::set<std::string> kCycleKinds{"circle", "line", "point", "cycle"};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SceneError(where + ": " + what);
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

Complex xy(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(field, "expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError(path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SceneError(path + ":" + line_column(text, e.byte) + ": " + e.what());
  }
}

// Inline JSON, else a JSON file.
std::optional<Json> inline_or_file(const std::string& ref) {
  if (!ref.empty() && (ref.front() == '{' || ref.front() == '[' || ref.front() == '"')) {
    try {
      return Json::parse(ref);
    } catch (const Json::parse_error& e) {
      throw SceneError("argument '" + ref + "': " + e.what());
    }
  }
  if (std::filesystem::is_regular_file(ref)) return read_json_file(ref);
  return std::nullopt;
}

}  // namespace

Scene Scene::parse(const std::string& text, const std::string& origin) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SceneError(origin + ":" + line_column(text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) fail(origin, "scene must be a JSON object");
  if (!root.contains("objects") || !root["objects"].is_array()) {
    fail(origin + ": objects", "array expected");
  }

  Scene scene;
  const Json& objects = root["objects"];
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::string where = origin + ": objects[" + std::to_string(i) + "]";
    const Json& entry = objects[i];
    if (!entry.is_object()) fail(where, "object expected");
    if (!entry.contains("id") || !entry["id"].is_string()) fail(where + ".id", "string expected");
    if (!entry.contains("kind") || !entry["kind"].is_string()) {
      fail(where + ".kind", "string expected");
    }
    if (!entry.contains("data")) fail(where + ".data", "missing");
    SceneObject object{entry["id"].get<std::string>(), entry["kind"].get<std::string>(),
                       entry["data"]};
    if (!kKinds.count(object.kind)) fail(where + ".kind", "unknown kind '" + object.kind + "'");
    if (!scene.index_.emplace(object.id, scene.objects_.size()).second) {
      fail(where + ".id", "duplicate id '" + object.id + "'");
    }
    scene.objects_.push_back(std::move(object));
  }

  // Objects may reference earlier or later ids, so build them once all are known.
  for (std::size_t i = 0; i < scene.objects_.size(); ++i) {
    const SceneObject& object = scene.objects_[i];
    const std::string where = origin + ": objects[" + std::to_string(i) + "].data";
    try {
      if (kCycleKinds.count(object.kind)) {
        scene.cycle(object);
      } else if (object.kind == "triple") {
        scene.triple(object);
      } else {
        scene.map(object);
      }
    } catch (const SceneError& e) {
      fail(where, e.what());
    } catch (const GeometryError& e) {
      fail(where, e.what());
    } catch (const Json::exception& e) {
      fail(where, e.what());
    }
  }

  if (root.contains("bbox")) {
    const Json& b = root["bbox"];
    if (!b.is_array() || b.size() != 4) fail(origin + ": bbox", "expected [xmin, ymin, xmax, ymax]");
    std::array<double, 4> box{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!b[i].is_number()) fail(origin + ": bbox", "numbers expected");
      box[i] = b[i].get<double>();
    }
    if (!(box[0] < box[2]) || !(box[1] < box[3])) fail(origin + ": bbox", "empty box");
    scene.bbox_ = box;
  }

  if (root.contains("style")) {
    const Json& s = root["style"];
    if (!s.is_object()) fail(origin + ": style", "object keyed by id expected");
    for (const auto& [id, hint] : s.items()) {
      const std::string where = origin + ": style." + id;
      if (!scene.index_.count(id)) fail(where, "unknown id");
      if (!hint.is_object()) fail(where, "object expected");
      Style style;
      if (hint.contains("stroke")) style.stroke = hint["stroke"].get<std::string>();
      if (hint.contains("width")) style.width = hint["width"].get<double>();
      if (hint.contains("dash")) style.dash = hint["dash"].get<std::string>();
      scene.styles_[id] = style;
    }
  }
  return scene;
}

Scene Scene::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError(path + ": cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

const SceneObject* Scene::find(const std::string& id) const {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &objects_[it->second];
}

const Style* Scene::style(const std::string& id) const {
  const auto it = styles_.find(id);
  return it == styles_.end() ? nullptr : &it->second;
}

Cycle Scene::cycle(const SceneObject& object) const {
  const Json& d = object.data;
  if (object.kind == "cycle") return io::cycle_from_json(d);
  if (object.kind == "point") return zero_radius_at(io::point_from_json(d));
  if (object.kind == "circle") {
    if (!d.is_object() || !d.contains("center") || !d.contains("radius")) {
      fail("circle", "expected {\"center\": [x, y], \"radius\": r}");
    }
    if (!d["radius"].is_number()) fail("radius", "number expected");
    return from_circle(xy(d["center"], "center"), d["radius"].get<double>());
  }
  if (object.kind == "line") {
    if (!d.is_object() || !d.contains("p") || !d.contains("q")) {
      fail("line", "expected {\"p\": [x, y], \"q\": [x, y]}");
    }
    return from_line(xy(d["p"], "p"), xy(d["q"], "q"));
  }
  fail(object.id, "a " + object.kind + " is not a cycle");
}

Cycle Scene::cycle_value(const Json& value, const std::string& field) const {
  if (value.is_string()) {
    const SceneObject* target = find(value.get<std::string>());
    if (target == nullptr) fail(field, "unknown id '" + value.get<std::string>() + "'");
    if (!kCycleKinds.count(target->kind)) fail(field, "'" + target->id + "' is not a cycle");
    return cycle(*target);
  }
  try {
    return io::cycle_from_json(value);
  } catch (const GeometryError& e) {
    fail(field, e.what());
  }
}

LoxodromeTriple Scene::triple(const SceneObject& object) const {
  const Json& d = object.data;
  if (!d.is_object()) fail("triple", "object expected");
  for (const char* key : {"c1", "c2", "c3"}) {
    if (!d.contains(key)) fail(key, "missing");
  }
  int sign = 1;
  if (d.contains("sign")) {
    if (!d["sign"].is_number_integer()) fail("sign", "+1 or -1 expected");
    sign = d["sign"].get<int>();
  }
  return {cycle_value(d["c1"], "c1"), cycle_value(d["c2"], "c2"), cycle_value(d["c3"], "c3"),
          sign};
}

MoebiusMap Scene::map(const SceneObject& object) const { return io::map_from_json(object.data); }

ExtendedPoint Scene::point(const SceneObject& object) const {
  return io::point_from_json(object.data);
}

Cycle Scene::resolve_cycle(const std::string& ref) const {
  if (const SceneObject* object = find(ref)) {
    if (!kCycleKinds.count(object->kind)) fail(ref, "not a cycle");
    return cycle(*object);
  }
  if (const auto json = inline_or_file(ref)) return cycle_value(*json, ref);
  fail(ref, "unknown cycle reference");
}

LoxodromeTriple Scene::resolve_triple(const std::string& ref) const {
  if (const SceneObject* object = find(ref)) {
    if (object->kind != "triple") fail(ref, "not a triple");
    return triple(*object);
  }
  if (auto json = inline_or_file(ref)) {
    // Accept the output of `normalize` as well as a bare triple.
    if (json->is_object() && json->contains("triple")) json = (*json)["triple"];
    return triple(SceneObject{ref, "triple", *json});
  }
  fail(ref, "unknown triple reference");
}

MoebiusMap Scene::resolve_map(const std::string& ref) const {
  if (const SceneObject* object = find(ref)) {
    if (object->kind != "moebius") fail(ref, "not a moebius map");
    return map(*object);
  }
  if (auto json = inline_or_file(ref)) {
    if (json->is_object() && json->contains("map")) json = (*json)["map"];
    return io::map_from_json(*json);
  }
  fail(ref, "unknown map reference");
}

ExtendedPoint Scene::resolve_point(const std::string& ref) const {
  if (const SceneObject* object = find(ref)) {
    if (object->kind != "point") fail(ref, "not a point");
    return point(*object);
  }
  return io::parse_point(ref);
}

}  // namespace moeblox::cli
