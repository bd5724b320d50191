#pragma once

#include "mukai/lattice.hpp"
#include "mukai/radical.hpp"
#include "mukai/stability.hpp"

#include <vector>

namespace mukai {

// Charge at the base point of the Gieseker chamber, rescaled to
// zbar(v) = (r - s, c). Wall rays in this plane have positive imaginary
// part for the classes we bound.
ChargeValue zbar(const MukaiVector& v);

// Norm used by the h^0 estimate: |(re, im)| = sqrt(re^2 + (2 H^2 + 4) im^2).
RadicalValue bn_norm(const Rat& re, const Rat& im, const SurfaceParams& surf);

struct H0Bound {
  RadicalValue bound;  // chi(v)/2 + mass/2
  Int floor_value;     // certified floor of the bound
};

// Bound from the single wall through the Gieseker chamber boundary:
// chi(v)/2 + |zbar(v)|/2.
H0Bound h0_bound_wall(const MukaiVector& v, const SurfaceParams& surf);

// Chain of charge points (0,0) = p_0, p_1, ..., p_k walked by a
// Harder-Narasimhan filtration: every edge gains imaginary part and the
// edge directions rotate clockwise (cross products <= 0). The single-point
// chain {(0,0)} is the degenerate polygon of a semistable object with
// zbar = 0.
class HNPolygon {
 public:
  explicit HNPolygon(std::vector<ChargeValue> vertices);
  const std::vector<ChargeValue>& vertices() const { return vertices_; }

 private:
  std::vector<ChargeValue> vertices_;
};

// Total norm of the polygon's edges.
RadicalValue polygon_mass(const HNPolygon& poly, const SurfaceParams& surf);

// chi(v)/2 + mass/2 for a polygon ending at zbar(v).
H0Bound h0_bound_polygon(const MukaiVector& v, const HNPolygon& poly,
                         const SurfaceParams& surf);

}
