#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "render.hpp"
#include "scene.hpp"

namespace moeblox::cli {

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  Tolerances tol;
  Scene scene;
  bool json = false;
  bool strict_mod1 = false;
  bool oracle = false;
  int precision = 6;

  std::string num(double v) const { return io::format_number(v, precision); }
  CongruenceMode mode() const {
    return strict_mod1 ? CongruenceMode::StrictMod1 : CongruenceMode::SignFoldedHalf;
  }
};

Json extended_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

int cmd_lambda(Context& ctx, const std::string& ref) {
  const LoxodromeTriple t = ctx.scene.resolve_triple(ref);
  const SlsParameter p = lambda_from_triple(t, ctx.tol);
  if (p.kind() == SlsParameter::Kind::PointDegenerate) {
    throw GeometryError(Errc::PointDegenerate, "point spiral");
  }
  const double x = p.is_finite() ? p.lambda_tilde() : std::numeric_limits<double>::infinity();
  if (ctx.json) {
    ctx.out << Json{{"lambda_tilde", extended_number(x)}, {"a", extended_number(p.a())}}.dump()
            << '\n';
  } else if (p.is_finite() && x == 0.0) {
    ctx.out << "lambda_tilde=0 a=1\n";
  } else {
    ctx.out << "lambda_tilde=" << ctx.num(x) << " a=" << ctx.num(p.a()) << '\n';
  }
  return kExitYes;
}

int cmd_member(Context& ctx, const std::string& ref, const std::string& point) {
  const LoxodromeTriple t = ctx.scene.resolve_triple(ref);
  const ExtendedPoint p = ctx.scene.resolve_point(point);
  MembershipReport report;
  if (ctx.oracle) {
    report.member = contains_point_oracle(t, p, ctx.tol);
    report.flags.emplace_back("oracle");
  } else {
    report = contains_point(t, p, ctx.tol, ctx.mode());
  }
  ctx.out << io::to_json(report).dump() << '\n';
  return report.member ? kExitYes : kExitNo;
}

int cmd_angle(Context& ctx, const std::string& a, const std::string& b, const std::string& point) {
  const double angle = intersection_angle(ctx.scene.resolve_triple(a), ctx.scene.resolve_triple(b),
                                          ctx.scene.resolve_point(point), ctx.tol);
  const double degrees = angle * 180.0 / kPi;
  if (ctx.json) {
    ctx.out << Json{{"radians", angle}, {"degrees", degrees}}.dump() << '\n';
  } else {
    ctx.out << "angle_rad=" << ctx.num(angle) << " angle_deg=" << ctx.num(degrees) << '\n';
  }
  return kExitYes;
}

int cmd_tangent(Context& ctx, const std::string& ref, const std::string& cycle,
                const std::string& point) {
  const bool tangent = tangent_check(ctx.scene.resolve_triple(ref), ctx.scene.resolve_cycle(cycle),
                                     ctx.scene.resolve_point(point), ctx.tol);
  if (ctx.json) {
    ctx.out << Json{{"tangent", tangent}}.dump() << '\n';
  } else {
    ctx.out << "tangent=" << (tangent ? "true" : "false") << '\n';
  }
  return tangent ? kExitYes : kExitNo;
}

int cmd_equiv(Context& ctx, const std::string& a, const std::string& b) {
  const EquivalenceReport r = equivalence_report(ctx.scene.resolve_triple(a),
                                                 ctx.scene.resolve_triple(b), ctx.tol, ctx.mode());
  if (r.j3_disagrees()) ctx.err << "warning: j=3 congruence disagrees with j=2\n";
  if (ctx.json) {
    ctx.out << Json{{"equivalent", r.equivalent},     {"same_pencil", r.same_pencil},
                    {"same_lambda", r.same_lambda},   {"congruent_j2", r.congruent_j2},
                    {"congruent_j3", r.congruent_j3}, {"lhs_j2", r.lhs_j2},
                    {"lhs_j3", r.lhs_j3},             {"rhs", r.rhs}}
                   .dump()
            << '\n';
  } else {
    const auto b2s = [](bool v) { return v ? "true" : "false"; };
    ctx.out << "equivalent=" << b2s(r.equivalent) << " same_pencil=" << b2s(r.same_pencil)
            << " same_lambda=" << b2s(r.same_lambda) << " congruent_j2=" << b2s(r.congruent_j2)
            << " congruent_j3=" << b2s(r.congruent_j3) << '\n';
  }
  return r.equivalent ? kExitYes : kExitNo;
}

int cmd_normalize(Context& ctx, const std::string& ref) {
  const LoxodromeTriple t = ctx.scene.resolve_triple(ref);
  const Loxodrome lox = to_loxodrome(t, ctx.tol);
  const double x = lox.param.is_finite() ? lox.param.lambda_tilde()
                                         : std::numeric_limits<double>::infinity();
  const Json doc{{"lambda_tilde", extended_number(x)},
                 {"map", io::to_json(lox.map.normalized())},
                 {"triple", io::to_json(standard_triple(lox.param))}};
  ctx.out << (ctx.json ? doc.dump() : doc.dump(2)) << '\n';
  return kExitYes;
}

int cmd_apply(Context& ctx, const std::string& map_ref, const std::string& ref) {
  const LoxodromeTriple image =
      apply_map(ctx.scene.resolve_map(map_ref), ctx.scene.resolve_triple(ref), ctx.tol);
  const Json doc = io::to_json(image);
  ctx.out << (ctx.json ? doc.dump() : doc.dump(2)) << '\n';
  return kExitYes;
}

int cmd_sample(Context& ctx, const std::string& ref, double t_min, double t_max, int count,
               const std::string& branch) {
  const BranchSet set = branch == "plus"    ? BranchSet::Plus
                        : branch == "minus" ? BranchSet::Minus
                                            : BranchSet::Both;
  const auto points =
      sample_curve(ctx.scene.resolve_triple(ref), t_min, t_max, count, set, ctx.tol);
  if (ctx.json) {
    Json arr = Json::array();
    for (const auto& p : points) arr.push_back(io::to_json(p));
    ctx.out << arr.dump() << '\n';
  } else {
    for (const auto& p : points) ctx.out << io::format_point(p, ctx.precision) << '\n';
  }
  return kExitYes;
}

int cmd_render(Context& ctx, const RenderConfig& config, const std::string& output,
               bool have_scene) {
  if (!have_scene) throw SceneError("render: --scene is required");
  const RenderResult result = render_svg(ctx.scene, config, ctx.tol);
  for (const auto& warning : result.warnings) ctx.err << "warning: " << warning << '\n';
  if (output.empty() || output == "-") {
    ctx.out << result.svg;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) throw SceneError(output + ": cannot write");
    file << result.svg;
    if (!file) throw SceneError(output + ": write failed");
  }
  return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loxodromes, cycles and Moebius maps", "moeblox"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string tol_text;
  std::string scene_path;
  bool json = false;
  bool strict = false;
  bool oracle = false;
  int precision = 6;
  app.add_option("--tol", tol_text, "eps_product[,eps_angle,eps_mod] (default: MOEBLOX_TOL)");
  app.add_option("--scene", scene_path, "scene JSON; object ids become valid references");
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--strict-mod1", strict, "literal mod-1 congruence");
  app.add_flag("--oracle", oracle, "membership through the standard map");
  app.add_option("--precision", precision, "decimal places in text output")
      ->check(CLI::Range(3, 12));

  std::function<int(Context&)> action;
  std::string a, b, c;

  auto* lambda = app.add_subcommand("lambda", "print lambda_tilde and a = exp(lambda_tilde)");
  lambda->add_option("triple", a)->required();
  lambda->callback([&] { action = [&](Context& ctx) { return cmd_lambda(ctx, a); }; });

  auto* member = app.add_subcommand("member", "is the point on the loxodrome");
  member->add_option("triple", a)->required();
  member->add_option("point", b, "x,y or inf")->required();
  member->callback([&] { action = [&](Context& ctx) { return cmd_member(ctx, a, b); }; });

  auto* angle = app.add_subcommand("angle", "intersection angle of two loxodromes at a point");
  angle->add_option("first", a)->required();
  angle->add_option("second", b)->required();
  angle->add_option("point", c)->required();
  angle->callback([&] { action = [&](Context& ctx) { return cmd_angle(ctx, a, b, c); }; });

  auto* tangent = app.add_subcommand("tangent", "is the cycle tangent to the loxodrome at the point");
  tangent->add_option("triple", a)->required();
  tangent->add_option("cycle", b)->required();
  tangent->add_option("point", c)->required();
  tangent->callback([&] { action = [&](Context& ctx) { return cmd_tangent(ctx, a, b, c); }; });

  auto* equiv = app.add_subcommand("equiv", "do two triples describe the same loxodrome");
  equiv->add_option("first", a)->required();
  equiv->add_option("second", b)->required();
  equiv->callback([&] { action = [&](Context& ctx) { return cmd_equiv(ctx, a, b); }; });

  auto* normalize = app.add_subcommand("normalize", "standard map and standard triple");
  normalize->add_option("triple", a)->required();
  normalize->callback([&] { action = [&](Context& ctx) { return cmd_normalize(ctx, a); }; });

  auto* apply = app.add_subcommand("apply", "image of a triple under a Moebius map");
  apply->add_option("map", a)->required();
  apply->add_option("triple", b)->required();
  apply->callback([&] { action = [&](Context& ctx) { return cmd_apply(ctx, a, b); }; });

  double t_min = -3.0;
  double t_max = 3.0;
  int count = 64;
  std::string branch = "both";
  auto* sample = app.add_subcommand("sample", "points of the loxodrome on a uniform t grid");
  sample->add_option("triple", a)->required();
  sample->add_option("--t-min", t_min);
  sample->add_option("--t-max", t_max);
  sample->add_option("--count", count);
  sample->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus", "both"}));
  sample->callback([&] {
    action = [&](Context& ctx) { return cmd_sample(ctx, a, t_min, t_max, count, branch); };
  });

  RenderConfig config;
  std::string output;
  auto* render = app.add_subcommand("render", "SVG of the scene");
  render->add_option("-o,--output", output, "output file (default: stdout)");
  render->add_option("--samples", config.samples, "samples per branch");
  render->add_option("--t-min", config.t_min);
  render->add_option("--t-max", config.t_max);
  render->add_option("--width", config.width);
  render->add_option("--height", config.height);
  render->add_option("--svg-precision", config.precision, "decimal places in the SVG");
  render->callback([&] {
    action = [&](Context& ctx) { return cmd_render(ctx, config, output, !scene_path.empty()); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    Context ctx{out, err, tol_text.empty() ? Tolerances::from_environment()
                                           : Tolerances::parse(tol_text),
                Scene{}};
    if (!scene_path.empty()) ctx.scene = Scene::load(scene_path);
    ctx.json = json;
    ctx.strict_mod1 = strict;
    ctx.oracle = oracle;
    ctx.precision = precision;
    return action(ctx);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const SceneError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace moeblox::cli
