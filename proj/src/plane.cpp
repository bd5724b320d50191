#include "mukai/plane.hpp"

#include "mukai/errors.hpp"

namespace mukai {

Region Region::whole_plane() {
  Region r;
  r.add_piece({});
  return r;
}

Region Region::rectangle(const PlanePoint& lo, const PlanePoint& hi) {
  if (lo.x > hi.x || lo.y > hi.y)
    throw Error(ErrorCode::PreconditionViolation, "rectangle corners out of order");
  Region r;
  r.add_piece({{Rat(-1), Rat(0), -lo.x},
               {Rat(1), Rat(0), hi.x},
               {Rat(0), Rat(-1), -lo.y},
               {Rat(0), Rat(1), hi.y}});
  return r;
}

static Rat cross(const PlanePoint& o, const PlanePoint& u, const PlanePoint& v) {
  return (u.x - o.x) * (v.y - o.y) - (u.y - o.y) * (v.x - o.x);
}

Region Region::triangle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  if (cross(a, b, c) == 0)
    throw Error(ErrorCode::PreconditionViolation, "degenerate triangle");
  Region r;
  ConvexPiece piece;
  const PlanePoint* vs[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    const PlanePoint& p = *vs[i];
    const PlanePoint& q = *vs[(i + 1) % 3];
    const PlanePoint& w = *vs[(i + 2) % 3];
    // edge pq, half-plane containing the opposite vertex w
    Rat ha = q.y - p.y, hb = p.x - q.x;
    Rat hd = ha * p.x + hb * p.y;
    if (ha * w.x + hb * w.y > hd) {
      ha = -ha; hb = -hb; hd = -hd;
    }
    piece.push_back({ha, hb, hd, false});
  }
  r.add_piece(std::move(piece));
  return r;
}

bool Region::contains(const PlanePoint& p) const {
  for (const ConvexPiece& piece : pieces_) {
    bool inside = true;
    for (const HalfPlane& h : piece) {
      Rat val = h.a * p.x + h.b * p.y;
      if (h.strict ? !(val < h.d) : !(val <= h.d)) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

}
