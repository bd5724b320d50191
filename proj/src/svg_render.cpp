#include "svg_render.hpp"

#include <algorithm>
#include <sstream>

namespace mukai {

namespace {

std::string rat_attr(const Rat& v) {
  if (rat_den(v) == 1) return rat_num(v).str();
  return rat_num(v).str() + "/" + rat_den(v).str();
}

std::string point_attr(const PlanePoint& p) {
  return rat_attr(p.x) + "," + rat_attr(p.y);
}

constexpr unsigned kDigits = 3;

}  // namespace

std::string render_svg(const Scene& scene) {
  // Vertical extent from the content; the x extent is prescribed.
  Rat y_min = 0, y_max = 0;
  auto see = [&](const Rat& y) {
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  };
  if (scene.h2 > 0) {
    see(Rat(scene.h2, 2) * scene.x_min * scene.x_min);
    see(Rat(scene.h2, 2) * scene.x_max * scene.x_max);
  }
  for (const SceneRegionPoly& rp : scene.regions)
    for (const PlanePoint& p : rp.pts) see(p.y);
  for (const SceneSegment& sg : scene.segments) {
    see(sg.a.y);
    see(sg.b.y);
  }
  for (const ScenePoint& sp : scene.points) see(sp.p.y);
  if (y_max == y_min) y_max = y_min + 1;
  Rat y_pad = (y_max - y_min) / 12;
  y_min -= y_pad;
  y_max += y_pad;

  const int width = 720, height = 540, pad = 40;
  Rat sx = Rat(width - 2 * pad) / (scene.x_max - scene.x_min);
  Rat sy = Rat(height - 2 * pad) / (y_max - y_min);
  auto px = [&](const Rat& x) { return rat_to_decimal(pad + (x - scene.x_min) * sx, kDigits); };
  auto py = [&](const Rat& y) { return rat_to_decimal(pad + (y_max - y) * sy, kDigits); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
      << "\">\n";
  svg << "<style>\n"
         ".parabola{fill:none;stroke:#444;stroke-width:1.5}\n"
         ".axis{stroke:#bbb;stroke-width:1}\n"
         ".wall{stroke:#c0392b;stroke-width:2}\n"
         ".hole{stroke:#2471a3;stroke-width:2}\n"
         ".chord{stroke:#7f8c8d;stroke-width:1.5;stroke-dasharray:5 3}\n"
         ".mass{stroke:#1e8449;stroke-width:2}\n"
         ".inner{stroke:#884ea0;stroke-width:2;stroke-dasharray:4 3}\n"
         ".region{fill:#d5dbdb;opacity:0.6;stroke:none}\n"
         ".point{fill:#17202a}\n"
         "text{font:12px sans-serif;fill:#17202a}\n"
         "</style>\n";

  // Axes, clipped to the viewport.
  if (y_min <= 0 && 0 <= y_max) {
    svg << "<line class=\"axis\" x1=\"" << px(scene.x_min) << "\" y1=\"" << py(Rat(0))
        << "\" x2=\"" << px(scene.x_max) << "\" y2=\"" << py(Rat(0)) << "\"/>\n";
  }
  if (scene.x_min <= 0 && 0 <= scene.x_max) {
    svg << "<line class=\"axis\" x1=\"" << px(Rat(0)) << "\" y1=\"" << py(y_min)
        << "\" x2=\"" << px(Rat(0)) << "\" y2=\"" << py(y_max) << "\"/>\n";
  }

  for (const SceneRegionPoly& rp : scene.regions) {
    svg << "<polygon class=\"" << rp.cls << "\" points=\"";
    for (std::size_t i = 0; i < rp.pts.size(); ++i) {
      if (i) svg << " ";
      svg << px(rp.pts[i].x) << "," << py(rp.pts[i].y);
    }
    svg << "\"/>\n";
  }

  if (scene.h2 > 0) {
    // y = a x^2 over [x_min, x_max] is traced exactly by one quadratic
    // Bezier: control point ((x1+x2)/2, a x1 x2).
    Rat a(scene.h2, 2);
    Rat x1 = scene.x_min, x2 = scene.x_max;
    Rat cx = (x1 + x2) / 2, cy = a * x1 * x2;
    svg << "<path class=\"parabola\" d=\"M " << px(x1) << " " << py(a * x1 * x1)
        << " Q " << px(cx) << " " << py(cy) << " " << px(x2) << " " << py(a * x2 * x2)
        << "\"/>\n";
  }

  for (const SceneSegment& sg : scene.segments) {
    svg << "<line class=\"" << sg.cls << "\" x1=\"" << px(sg.a.x) << "\" y1=\""
        << py(sg.a.y) << "\" x2=\"" << px(sg.b.x) << "\" y2=\"" << py(sg.b.y)
        << "\" data-a=\"" << point_attr(sg.a) << "\" data-b=\"" << point_attr(sg.b)
        << "\"";
    if (sg.ray) svg << " data-ray=\"1\"";
    svg << "/>\n";
  }

  for (const ScenePoint& sp : scene.points) {
    svg << "<circle class=\"point\" r=\"3\" cx=\"" << px(sp.p.x) << "\" cy=\""
        << py(sp.p.y) << "\" data-label=\"" << sp.label << "\" data-x=\""
        << rat_attr(sp.p.x) << "\" data-y=\"" << rat_attr(sp.p.y) << "\"/>\n";
    svg << "<text x=\"" << rat_to_decimal(pad + (sp.p.x - scene.x_min) * sx + 5, kDigits)
        << "\" y=\"" << rat_to_decimal(pad + (y_max - sp.p.y) * sy - 5, kDigits) << "\">"
        << sp.label << "</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mukai
