#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

namespace moeblox::cli {

namespace {

struct Box {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity();
  double xmax = -std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();

  bool empty() const { return !(xmin <= xmax); }
  void add(Complex z) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  void add(Complex center, double radius) {
    add(center - Complex{radius, radius});
    add(center + Complex{radius, radius});
  }
};

struct Paint {
  std::string stroke;
  double width;
  std::string dash;
};

// World to pixel, uniform scale, y up.
class Viewport {
 public:
  Viewport(const Box& box, int width, int height) : box_(box) {
    const double sx = width / (box.xmax - box.xmin);
    const double sy = height / (box.ymax - box.ymin);
    scale_ = std::min(sx, sy);
    offset_x_ = (width - scale_ * (box.xmax - box.xmin)) / 2.0;
    offset_y_ = (height - scale_ * (box.ymax - box.ymin)) / 2.0;
  }

  double x(double wx) const { return offset_x_ + (wx - box_.xmin) * scale_; }
  double y(double wy) const { return offset_y_ + (box_.ymax - wy) * scale_; }
  double length(double w) const { return w * scale_; }
  const Box& box() const { return box_; }

  // Far outside the visible box: used to split polylines.
  bool far(Complex z) const {
    const double w = box_.xmax - box_.xmin;
    const double h = box_.ymax - box_.ymin;
    return z.real() < box_.xmin - 4 * w || z.real() > box_.xmax + 4 * w ||
           z.imag() < box_.ymin - 4 * h || z.imag() > box_.ymax + 4 * h;
  }

 private:
  Box box_;
  double scale_ = 1.0;
  double offset_x_ = 0.0;
  double offset_y_ = 0.0;
};

class Writer {
 public:
  explicit Writer(int precision) : precision_(precision) {}

  std::string num(double v) const { return io::format_number(v, precision_); }
  std::ostringstream& out() { return out_; }
  std::string str() const { return out_.str(); }

  std::string paint(const Paint& p) const {
    std::string s = " fill=\"none\" stroke=\"" + p.stroke + "\" stroke-width=\"" + num(p.width) + "\"";
    if (!p.dash.empty()) s += " stroke-dasharray=\"" + p.dash + "\"";
    return s;
  }

 private:
  int precision_;
  std::ostringstream out_;
};

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void add_cycle_bounds(Box& box, const Cycle& c, const Tolerances& tol) {
  switch (classify(c, tol)) {
    case CycleKind::Line: return;
    case CycleKind::PointCircle: {
      const ExtendedPoint p = point_of(c);
      if (!p.is_infinite(tol.eps_product)) box.add(p.value());
      return;
    }
    case CycleKind::ProperCircle: {
      const auto g = center_radius(c, tol);
      box.add(g.center, g.radius);
      return;
    }
  }
}

// Clips l x + n y = m / 2 to the box; empty when the line misses it.
std::optional<std::pair<Complex, Complex>> clip_line(const Cycle& c, const Box& box) {
  const double s2 = c.l() * c.l() + c.n() * c.n();
  const Complex foot = Complex{c.l(), c.n()} * (c.m() / (2.0 * s2));
  const Complex dir = Complex{-c.n(), c.l()} / std::sqrt(s2);
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  const auto slab = [&](double origin, double d, double lo, double hi) {
    if (d == 0.0) return lo <= origin && origin <= hi;
    double a = (lo - origin) / d;
    double b = (hi - origin) / d;
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    return t0 <= t1;
  };
  if (!slab(foot.real(), dir.real(), box.xmin, box.xmax)) return std::nullopt;
  if (!slab(foot.imag(), dir.imag(), box.ymin, box.ymax)) return std::nullopt;
  return std::pair{foot + t0 * dir, foot + t1 * dir};
}

void draw_point(Writer& w, const Viewport& v, const ExtendedPoint& p, const Paint& paint,
                const Tolerances& tol) {
  if (p.is_infinite(tol.eps_product)) return;
  const Complex z = p.value();
  w.out() << "<circle cx=\"" << w.num(v.x(z.real())) << "\" cy=\"" << w.num(v.y(z.imag()))
          << "\" r=\"3\" fill=\"" << paint.stroke << "\" stroke=\"none\"/>\n";
}

void draw_cycle(Writer& w, const Viewport& v, const Cycle& c, const Paint& paint,
                const Tolerances& tol, std::vector<std::string>& warnings, const std::string& id) {
  switch (classify(c, tol)) {
    case CycleKind::PointCircle:
      draw_point(w, v, point_of(c), paint, tol);
      return;
    case CycleKind::Line: {
      const auto segment = clip_line(c, v.box());
      if (!segment) return;
      w.out() << "<line x1=\"" << w.num(v.x(segment->first.real())) << "\" y1=\""
              << w.num(v.y(segment->first.imag())) << "\" x2=\""
              << w.num(v.x(segment->second.real())) << "\" y2=\""
              << w.num(v.y(segment->second.imag())) << "\"" << w.paint(paint) << "/>\n";
      return;
    }
    case CycleKind::ProperCircle: {
      if (c.discriminant() < 0.0) {
        warnings.push_back(id + ": imaginary circle not drawn");
        return;
      }
      const auto g = center_radius(c, tol);
      w.out() << "<circle cx=\"" << w.num(v.x(g.center.real())) << "\" cy=\""
              << w.num(v.y(g.center.imag())) << "\" r=\"" << w.num(v.length(g.radius)) << "\""
              << w.paint(paint) << "/>\n";
      return;
    }
  }
}

void draw_curve(Writer& w, const Viewport& v, const std::vector<ExtendedPoint>& points,
                const Paint& paint, const Tolerances& tol) {
  std::vector<Complex> run;
  const auto flush = [&] {
    if (run.size() >= 2) {
      w.out() << "<polyline points=\"";
      for (std::size_t i = 0; i < run.size(); ++i) {
        if (i) w.out() << ' ';
        w.out() << w.num(v.x(run[i].real())) << ',' << w.num(v.y(run[i].imag()));
      }
      w.out() << "\"" << w.paint(paint) << "/>\n";
    }
    run.clear();
  };
  for (const ExtendedPoint& p : points) {
    if (p.is_infinite(tol.eps_product) || v.far(p.value())) {
      flush();
    } else {
      run.push_back(p.value());
    }
  }
  flush();
}

Paint paint_for(const Scene& scene, const std::string& id, Paint fallback) {
  if (const Style* s = scene.style(id)) {
    if (!s->stroke.empty()) fallback.stroke = escape(s->stroke);
    if (s->width > 0.0) fallback.width = s->width;
    if (!s->dash.empty()) fallback.dash = escape(s->dash);
  }
  return fallback;
}

const Paint kCyclePaint{"#000000", 1.0, ""};
const Paint kEllipticPaint{"#2a9d3a", 1.0, "6,4"};
const Paint kHyperbolicPaint{"#c0392b", 1.0, ""};
const Paint kCurvePaint{"#1f4fbf", 1.5, ""};

}  // namespace

void RenderConfig::validate() const {
  if (samples < 16) throw SceneError("render: samples must be >= 16");
  if (precision < 3 || precision > 12) throw SceneError("render: precision must be in [3, 12]");
  if (!(t_min < t_max) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw SceneError("render: t-range must satisfy t_min < t_max");
  }
  if (width <= 0 || height <= 0) throw SceneError("render: width and height must be positive");
}

RenderResult render_svg(const Scene& scene, const RenderConfig& config, const Tolerances& tol) {
  config.validate();
  RenderResult result;

  Box box;
  if (const auto& b = scene.bbox()) {
    box = Box{(*b)[0], (*b)[1], (*b)[2], (*b)[3]};
  } else {
    for (const SceneObject& object : scene.objects()) {
      if (object.kind == "moebius") continue;
      if (object.kind == "triple") {
        const LoxodromeTriple t = scene.triple(object);
        for (const Cycle& c : {t.c1(), t.c2(), t.c3()}) add_cycle_bounds(box, c, tol);
      } else {
        add_cycle_bounds(box, scene.cycle(object), tol);
      }
    }
    if (box.empty()) {
      box = Box{-2.0, -2.0, 2.0, 2.0};
    } else {
      const double pad_x = box.xmax > box.xmin ? 0.1 * (box.xmax - box.xmin) : 1.0;
      const double pad_y = box.ymax > box.ymin ? 0.1 * (box.ymax - box.ymin) : 1.0;
      box = Box{box.xmin - pad_x, box.ymin - pad_y, box.xmax + pad_x, box.ymax + pad_y};
    }
  }
  const Viewport view{box, config.width, config.height};

  Writer w{config.precision};
  w.out() << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
          << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << config.width
          << "\" height=\"" << config.height << "\" viewBox=\"0 0 " << config.width << ' '
          << config.height << "\">\n"
          << "<rect x=\"0\" y=\"0\" width=\"" << config.width << "\" height=\"" << config.height
          << "\" fill=\"#ffffff\"/>\n";

  for (const SceneObject& object : scene.objects()) {
    if (object.kind == "moebius") continue;
    w.out() << "<g id=\"" << escape(object.id) << "\">\n";
    if (object.kind == "point") {
      draw_point(w, view, scene.point(object), paint_for(scene, object.id, kCyclePaint), tol);
    } else if (object.kind != "triple") {
      draw_cycle(w, view, scene.cycle(object), paint_for(scene, object.id, kCyclePaint), tol,
                 result.warnings, object.id);
    } else {
      const LoxodromeTriple t = scene.triple(object);
      const TripleCheck check = check_triple(t, tol);
      draw_cycle(w, view, t.c1(), kEllipticPaint, tol, result.warnings, object.id + ".c1");
      draw_cycle(w, view, t.c2(), kHyperbolicPaint, tol, result.warnings, object.id + ".c2");
      draw_cycle(w, view, t.c3(), kHyperbolicPaint, tol, result.warnings, object.id + ".c3");
      if (!check.ok()) {
        result.warnings.push_back(object.id + ": invalid triple (" + std::string(to_string(*check.violation)) +
                                  ", residual " + io::format_number(check.residual, 12) +
                                  "); drawing raw cycles only");
      } else {
        const Paint curve = paint_for(scene, object.id, kCurvePaint);
        try {
          for (const BranchSet branch : {BranchSet::Plus, BranchSet::Minus}) {
            draw_curve(w, view,
                       sample_curve(t, config.t_min, config.t_max, config.samples, branch, tol),
                       curve, tol);
          }
        } catch (const GeometryError& e) {
          result.warnings.push_back(object.id + ": curve not drawn: " + e.what());
        }
      }
    }
    w.out() << "</g>\n";
  }
  w.out() << "</svg>\n";
  result.svg = w.str();
  return result;
}

}  // namespace moeblox::cli
