#pragma once

#include "mukai/numeric.hpp"
#include "mukai/plane.hpp"

#include <string>
#include <vector>

namespace mukai {

struct ScenePoint {
  std::string label;
  PlanePoint p;
};

struct SceneSegment {
  std::string cls;  // wall, hole, chord, mass, inner
  PlanePoint a, b;
  bool ray = false;  // drawn pre-clipped; marks a segment that continues up
};

struct SceneRegionPoly {
  std::string cls;
  std::vector<PlanePoint> pts;
};

// Exact description of a figure. h2 > 0 draws the parabola y = (h2/2) x^2;
// h2 = 0 is a charge-plane figure without one. All geometry is rational and
// the renderer is a pure function of the scene, so output bytes are stable.
struct Scene {
  Int h2;
  Rat x_min, x_max;
  std::vector<SceneRegionPoly> regions;
  std::vector<SceneSegment> segments;
  std::vector<ScenePoint> points;
};

std::string render_svg(const Scene& scene);

}
