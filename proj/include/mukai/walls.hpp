#pragma once

#include "mukai/lattice.hpp"
#include "mukai/plane.hpp"

#include <optional>
#include <vector>

namespace mukai {

// Rational line a x + b y = d with integer coefficients, gcd(a, b, d) = 1
// and the first nonzero of (a, b) positive. (a, b) != (0, 0).
struct Line {
  Int a, b, d;
  bool contains(const PlanePoint& pt) const;
  bool operator==(const Line&) const = default;
};

Line line_through(const PlanePoint& p, const PlanePoint& q);

// Locus where v and v1 have equal phase: the line through their projections
// (direction (c, r) replaces the projection of an s = 0 class).
Line wall_line(const MukaiVector& v, const MukaiVector& v1, const SurfaceParams& surf);

// True certifies that no wall for v crosses the vertical line b = b0:
// the imaginary parts c1 - b0 r1 of subobject classes are bounded away
// from making two phases collide when den*c - num*r = +-1.
bool no_wall_at_b(const MukaiVector& v, const Int& b0_num, const Int& b0_den);

struct SlopeWindow {
  Rat lo, hi;
};

struct Wall {
  Line line;
  MukaiVector witness;     // canonical class of the destabilizing pair
  MukaiVector complement;  // v - witness
  // Chord of the wall line inside the region above the parabola, when its
  // endpoints are rational; a vertical wall is the ray from the parabola up.
  std::optional<Segment> segment;
};

// All destabilizing pairs {v1, v - v1} within the search box whose wall is
// exactly the probe line, passing the positivity, rigidity and slope-window
// filters. The witness is the lexicographically larger class of the pair;
// output is sorted by witness.
std::vector<Wall> enumerate_destabilizer_candidates(const MukaiVector& v,
                                                    const Line& probe,
                                                    const SlopeWindow& window,
                                                    const SurfaceParams& surf,
                                                    const Int& bounds);

// Classes eligible as Harder-Narasimhan factors of a twist of v: positive
// first Chern coordinate up to c(v), a Bogomolov-type bound on r1 s1 and,
// for mixed signs, a linear cap on max(|r1|, |s1|). Sorted lexicographically.
std::vector<MukaiVector> enumerate_hn_factor_candidates(const MukaiVector& v,
                                                        const SurfaceParams& surf,
                                                        const Int& bounds);

Int default_search_bounds(const MukaiVector& v, const SurfaceParams& surf);

struct WallCandidate {
  MukaiVector v1;  // rank r(v1) = c(v) representative of the pair
  Line line;
  Rat y0;  // height of the wall over b = 0
};

// Candidate first walls for a torsion class v = (0, c, s): walls crossing
// the vertical axis at a valid stability point, filtered by positivity,
// rigidity and the slope window cut out by the wall's own chord.
std::vector<WallCandidate> first_wall_candidates(const MukaiVector& v,
                                                 const SurfaceParams& surf,
                                                 const Int& bounds);

// The lowest candidate wall over b = 0: the first wall met when descending
// from the Gieseker chamber. Distinct candidate lines at the minimal height
// are a wall-mismatch error; no candidates at all is a no-wall-found error.
Wall gieseker_first_wall(const MukaiVector& v, const SurfaceParams& surf,
                         const Int& bounds);

}
