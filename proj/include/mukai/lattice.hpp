#pragma once

#include "mukai/numeric.hpp"
#include "mukai/plane.hpp"

#include <compare>
#include <vector>

namespace mukai {

// Degree of the polarization; the only surface datum any formula needs.
struct SurfaceParams {
  Int h2;
};

SurfaceParams make_surface(const Int& h2);  // h2 >= 2 and even

// v = (r, c H, s), stored as the integer triple (r, c, s).
struct MukaiVector {
  Int r, c, s;
  bool operator==(const MukaiVector&) const = default;
  std::strong_ordering operator<=>(const MukaiVector&) const = default;
};

inline MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
  return {a.r + b.r, a.c + b.c, a.s + b.s};
}
inline MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
  return {a.r - b.r, a.c - b.c, a.s - b.s};
}
inline MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.c, -a.s}; }

// <(r,c,s),(r',c',s')> = c c' H^2 - r s' - r' s
Int pairing(const MukaiVector& a, const MukaiVector& b, const SurfaceParams& surf);
Int square(const MukaiVector& v, const SurfaceParams& surf);
Int euler_char(const MukaiVector& v);  // r + s

struct Slope {
  bool is_infinite;  // rank zero
  Rat value;         // c/r when finite
};
Slope slope(const MukaiVector& v);

// pr(r, cH, s) = (c/s, r/s); undefined when s = 0.
PlanePoint project(const MukaiVector& v);

// All triples with square -2 inside the coordinate box, restricted to those
// whose projection lies in `region`; lexicographic order by (r, c, s).
std::vector<MukaiVector> enumerate_roots_in_box(const SurfaceParams& surf, const Int& bound_r,
                                                const Int& bound_c, const Int& bound_s,
                                                const Region& region);

}
