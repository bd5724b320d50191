#include "mukai/brill_noether.hpp"

#include "mukai/errors.hpp"

namespace mukai {

ChargeValue zbar(const MukaiVector& v) {
  return ChargeValue{Rat(v.r - v.s), Rat(v.c)};
}

RadicalValue bn_norm(const Rat& re, const Rat& im, const SurfaceParams& surf) {
  return RadicalValue::sqrt_of(re * re + (2 * surf.h2 + 4) * im * im);
}

H0Bound h0_bound_wall(const MukaiVector& v, const SurfaceParams& surf) {
  ChargeValue z = zbar(v);
  RadicalValue bound = RadicalValue(Rat(euler_char(v), 2)) +
                       bn_norm(z.re, z.im, surf) * Rat(1, 2);
  return H0Bound{bound, floor_certified(bound)};
}

HNPolygon::HNPolygon(std::vector<ChargeValue> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty())
    throw Error(ErrorCode::PreconditionViolation, "polygon chain is empty");
  if (!(vertices_.front().re == 0 && vertices_.front().im == 0))
    throw Error(ErrorCode::PreconditionViolation, "polygon chain must start at the origin");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    Rat dim = vertices_[i + 1].im - vertices_[i].im;
    if (!(dim > 0))
      throw Error(ErrorCode::PreconditionViolation,
                  "polygon edge must gain imaginary part");
  }
  // Decreasing phase along the chain: consecutive edges turn clockwise.
  for (std::size_t i = 0; i + 2 < vertices_.size(); ++i) {
    Rat re1 = vertices_[i + 1].re - vertices_[i].re;
    Rat im1 = vertices_[i + 1].im - vertices_[i].im;
    Rat re2 = vertices_[i + 2].re - vertices_[i + 1].re;
    Rat im2 = vertices_[i + 2].im - vertices_[i + 1].im;
    if (re1 * im2 - im1 * re2 > 0)
      throw Error(ErrorCode::PreconditionViolation, "polygon chain is not convex");
  }
}

RadicalValue polygon_mass(const HNPolygon& poly, const SurfaceParams& surf) {
  RadicalValue mass;
  const auto& vs = poly.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    mass += bn_norm(vs[i + 1].re - vs[i].re, vs[i + 1].im - vs[i].im, surf);
  }
  return mass;
}

H0Bound h0_bound_polygon(const MukaiVector& v, const HNPolygon& poly,
                         const SurfaceParams& surf) {
  ChargeValue z = zbar(v);
  const ChargeValue& last = poly.vertices().back();
  if (!(last.re == z.re && last.im == z.im))
    throw Error(ErrorCode::EndpointMismatch, "polygon must end at zbar(v)");
  RadicalValue bound = RadicalValue(Rat(euler_char(v), 2)) +
                       polygon_mass(poly, surf) * Rat(1, 2);
  return H0Bound{bound, floor_certified(bound)};
}

}  // namespace mukai
