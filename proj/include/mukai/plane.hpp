#pragma once

#include "mukai/numeric.hpp"

#include <vector>

namespace mukai {

struct PlanePoint {
  Rat x, y;
  bool operator==(const PlanePoint&) const = default;
};

// When to_infinity is set the segment is a vertical ray going up from a; b is ignored.
struct Segment {
  PlanePoint a;
  PlanePoint b;
  bool to_infinity = false;
};

// a*x + b*y <= d, or strict when `strict` is set.
struct HalfPlane {
  Rat a, b, d;
  bool strict = false;
};

using ConvexPiece = std::vector<HalfPlane>;

// Finite union of convex half-plane intersections. An empty piece matches
// every point, so whole_plane() is the region with one empty piece.
class Region {
 public:
  Region() = default;

  static Region whole_plane();
  static Region rectangle(const PlanePoint& lo, const PlanePoint& hi);  // closed
  static Region triangle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);  // closed

  void add_piece(ConvexPiece piece) { pieces_.push_back(std::move(piece)); }
  bool contains(const PlanePoint& p) const;
  const std::vector<ConvexPiece>& pieces() const { return pieces_; }

 private:
  std::vector<ConvexPiece> pieces_;
};

}
