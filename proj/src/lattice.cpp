#include "mukai/lattice.hpp"

#include "mukai/errors.hpp"

#include <algorithm>

namespace mukai {

SurfaceParams make_surface(const Int& h2) {
  if (h2 < 2 || h2 % 2 != 0) {
    throw Error(ErrorCode::ConstraintViolation, "surface degree must be a positive even integer");
  }
  return SurfaceParams{h2};
}

Int pairing(const MukaiVector& a, const MukaiVector& b, const SurfaceParams& surf) {
  return a.c * b.c * surf.h2 - a.r * b.s - b.r * a.s;
}

Int square(const MukaiVector& v, const SurfaceParams& surf) {
  return v.c * v.c * surf.h2 - 2 * v.r * v.s;
}

Int euler_char(const MukaiVector& v) { return v.r + v.s; }

Slope slope(const MukaiVector& v) {
  if (v.r == 0) return Slope{true, Rat(0)};
  return Slope{false, rat_frac(v.c, v.r)};
}

PlanePoint project(const MukaiVector& v) {
  if (v.s == 0) {
    throw Error(ErrorCode::UndefinedProjection, "projection needs s != 0");
  }
  return PlanePoint{rat_frac(v.c, v.s), rat_frac(v.r, v.s)};
}

std::vector<MukaiVector> enumerate_roots_in_box(const SurfaceParams& surf, const Int& bound_r,
                                                const Int& bound_c, const Int& bound_s,
                                                const Region& region) {
  // A root has square -2, so 2 r s = c^2 H^2 + 2 > 0: both r and s are
  // nonzero and s is determined by (r, c) when the division is exact.
  std::vector<MukaiVector> out;
  for (Int r = -bound_r; r <= bound_r; ++r) {
    if (r == 0) continue;
    for (Int c = -bound_c; c <= bound_c; ++c) {
      Int num = c * c * surf.h2 + 2;
      Int den = 2 * r;
      if (num % den != 0) continue;
      Int s = num / den;
      if (abs(s) > bound_s) continue;
      MukaiVector v{r, c, s};
      if (!region.contains(project(v))) continue;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}
