#pragma once

#include <string>
#include <vector>

#include "scene.hpp"

namespace moeblox::cli {

struct RenderConfig {
  int samples = 2048;  // per branch
  double t_min = -3.0;
  double t_max = 3.0;
  int width = 800;
  int height = 800;
  int precision = 6;

  // Throws SceneError for samples < 16, precision outside [3, 12], an empty
  // t-range or a non-positive canvas.
  void validate() const;
};

struct RenderResult {
  std::string svg;
  std::vector<std::string> warnings;
};

// Deterministic SVG: one group per scene object, in scene order.
RenderResult render_svg(const Scene& scene, const RenderConfig& config, const Tolerances& tol);

}  // namespace moeblox::cli
