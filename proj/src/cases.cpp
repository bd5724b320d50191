#include "mukai/cases.hpp"

#include "mukai/brill_noether.hpp"
#include "mukai/errors.hpp"

#include <algorithm>
#include <cassert>

namespace mukai {

namespace {

PlanePoint intersect_lines(const Line& l1, const Line& l2) {
  Rat det = Rat(l1.a * l2.b - l2.a * l1.b);
  if (det == 0)
    throw Error(ErrorCode::ConstraintViolation, "intersecting parallel lines");
  Rat x = (l1.d * l2.b - l2.d * l1.b) / det;
  Rat y = (l1.a * l2.d - l2.a * l1.d) / det;
  return PlanePoint{x, y};
}

PlanePoint gamma_point(const Rat& k, const SurfaceParams& surf) {
  Rat x = 1 / k;
  return PlanePoint{x, Rat(surf.h2, 2) * x * x};
}

// Corner q of the no-root region: chord gamma_m gamma_n meets the ray
// through gamma_{n - eps}. Doubled indices keep the arithmetic integral.
PlanePoint region_corner_q(const Int& m2, const Int& n2, const Int& eps2,
                           const SurfaceParams& surf) {
  Rat m(m2, 2), n(n2, 2), ke(n2 - eps2, 2);
  Rat sum = 1 / m + 1 / n;
  Rat inv_mn = 1 / (m * n);
  Rat x = inv_mn / (sum - 1 / ke);
  return PlanePoint{x, Rat(surf.h2) / (2 * ke) * x};
}

// Corner q' of the no-root region: the chord at x = 1/(m + eps).
PlanePoint region_corner_qprime(const Int& m2, const Int& n2, const Int& eps2,
                                const SurfaceParams& surf) {
  Rat m(m2, 2), n(n2, 2);
  Rat sum = 1 / m + 1 / n;
  Rat inv_mn = 1 / (m * n);
  Rat x(2, m2 + eps2);
  return PlanePoint{x, Rat(surf.h2, 2) * (sum * x - inv_mn)};
}

GapCertificate gap_from_parts(std::string case_id, RadicalValue l, RadicalValue l_in,
                              RadicalValue two_eps, unsigned max_bits) {
  GapCertificate cert;
  cert.case_id = std::move(case_id);
  cert.l = std::move(l);
  cert.l_in = std::move(l_in);
  cert.two_eps = std::move(two_eps);
  cert.gap = compare_radicals(cert.l - cert.l_in, cert.two_eps, max_bits);
  return cert;
}

FirstWallCertificate verify_first_wall_impl(const MukaiVector& v, const MukaiVector& vbar,
                                            const SurfaceParams& surf, const Rat& otilde_y) {
  Int bounds = default_search_bounds(v, surf);
  std::vector<WallCandidate> cands = first_wall_candidates(v, surf, bounds);
  if (cands.empty())
    throw Error(ErrorCode::WallMismatch, "no candidate wall in the search box");
  Wall wall = gieseker_first_wall(v, surf, bounds);
  Rat y0 = rat_frac(wall.line.d, wall.line.b);
  if (!(wall.witness == vbar))
    throw Error(ErrorCode::WallMismatch, "first wall witness differs from vbar");
  PlanePoint q = project(vbar);
  if (!wall.line.contains(q))
    throw Error(ErrorCode::WallMismatch, "first wall misses the projection of vbar");
  if (v.s != 0 && !wall.line.contains(project(v)))
    throw Error(ErrorCode::WallMismatch, "first wall misses the projection of v");
  if (y0 != otilde_y)
    throw Error(ErrorCode::WallMismatch, "first wall crosses b = 0 away from otilde");
  for (const WallCandidate& c : cands) {
    if (c.y0 < y0)
      throw Error(ErrorCode::WallMismatch, "candidate wall strictly below the first wall");
  }
  return FirstWallCertificate{wall, y0, vbar, q, cands.size()};
}

Int h0_ceiling_impl(const MukaiVector& v, const MukaiVector& vbar,
                    const SurfaceParams& surf) {
  ChargeValue o{Rat(0), Rat(0)};
  HNPolygon triangle({o, zbar(vbar), zbar(v)});
  return h0_bound_polygon(v, triangle, surf).floor_value;
}

}  // namespace

CaseAParams build_case_a(const Int& r, const Int& s) {
  if (r < 2)
    throw Error(ErrorCode::ConstraintViolation, "case A needs r >= 2");
  if (s < r || s < 5)
    throw Error(ErrorCode::ConstraintViolation, "case A needs s >= max(r, 5)");
  CaseAParams ca;
  ca.r = r;
  ca.s = s;
  ca.g = r * s + 1;
  ca.surf = make_surface(2 * r * s);
  ca.v = MukaiVector{0, r, r * s * (2 - r)};
  ca.vbar = MukaiVector{r, 1, s};
  ca.we = MukaiVector{-s, 1, -r};
  assert(square(ca.vbar, ca.surf) == 0);
  return ca;
}

CaseBParams build_case_b(const Int& p) {
  if (p < 13)
    throw Error(ErrorCode::ConstraintViolation, "case B needs p >= 13");
  if (p % 2 == 0)
    throw Error(ErrorCode::ConstraintViolation, "case B needs p odd");
  CaseBParams cb;
  cb.p = p;
  cb.g = p + 1;
  cb.surf = make_surface(2 * p);
  cb.v = MukaiVector{0, 4, 0};
  cb.vbar = MukaiVector{4, 2, p};
  cb.we = MukaiVector{-p, 2, -4};
  assert(square(cb.vbar, cb.surf) == 0);
  return cb;
}

std::map<std::string, PlanePoint> named_points(const CaseAParams& ca) {
  const Int& r = ca.r;
  const Int& s = ca.s;
  Int n = s * (r - 1);
  Int m2 = 2 * r, n2 = 2 * n, eps2 = 2;
  std::map<std::string, PlanePoint> pts;
  pts["q"] = project(ca.vbar);
  pts["p"] = PlanePoint{Rat(-1, n), Rat(r, s * (r - 1) * (r - 1))};
  pts["qprime"] = PlanePoint{Rat(-1, r), Rat(s, r)};
  pts["otilde"] = PlanePoint{Rat(0), Rat(r, n)};
  pts["oprime"] = PlanePoint{Rat(0), Rat(1)};
  PlanePoint cq = region_corner_q(m2, n2, eps2, ca.surf);
  PlanePoint cqp = region_corner_qprime(m2, n2, eps2, ca.surf);
  pts["e"] = PlanePoint{-cq.x, cq.y};
  pts["t"] = PlanePoint{-cqp.x, cqp.y};
  pts["tprime"] = PlanePoint{Rat(-1, 2 * r - 1), Rat(s - 1, 2 * r - 1)};
  // e' cuts the segment q'p at the ray x = b3 y.
  Rat b3 = r == 2 ? Rat(-1, 3) : Rat(-(r - 2), r - 1);
  Line ray = line_through(PlanePoint{Rat(0), Rat(0)}, PlanePoint{b3, Rat(1)});
  pts["eprime"] = intersect_lines(line_through(pts["qprime"], pts["p"]), ray);
  pts["gamma_m"] = gamma_point(Rat(r), ca.surf);
  pts["gamma_n"] = gamma_point(Rat(n), ca.surf);
  pts["gamma_n_minus_eps"] = gamma_point(Rat(n - 1), ca.surf);
  return pts;
}

std::map<std::string, PlanePoint> named_points(const CaseBParams& cb) {
  const Int& p = cb.p;
  Int m2 = 4, n2 = p, eps2 = 1;
  std::map<std::string, PlanePoint> pts;
  pts["q"] = project(cb.vbar);
  pts["spoint"] = PlanePoint{Rat(-2, p), Rat(4, p)};
  pts["sprime"] = PlanePoint{Rat(-1, 2), Rat(p, 4)};
  pts["otilde"] = PlanePoint{Rat(0), Rat(4, p)};
  pts["oprime"] = PlanePoint{Rat(0), Rat(1)};
  PlanePoint cq = region_corner_q(m2, n2, eps2, cb.surf);
  PlanePoint cqp = region_corner_qprime(m2, n2, eps2, cb.surf);
  pts["e"] = PlanePoint{-cq.x, cq.y};
  pts["t"] = PlanePoint{-cqp.x, cqp.y};
  pts["tprime"] = PlanePoint{Rat(-2, 5), Rat(p + 1, 5)};
  pts["gamma_m"] = gamma_point(Rat(2), cb.surf);
  pts["gamma_n"] = gamma_point(Rat(p, 2), cb.surf);
  pts["gamma_n_minus_eps"] = gamma_point(Rat(p - 1, 2), cb.surf);
  return pts;
}

CaseRegions certify_case_regions(const CaseAParams& ca) {
  Int m2 = 2 * ca.r, n2 = 2 * ca.s * (ca.r - 1), eps2 = 2;
  return CaseRegions{m2, n2, eps2, certify_region_lemma27(m2, n2, eps2, ca.surf)};
}

CaseRegions certify_case_regions(const CaseBParams& cb) {
  Int m2 = 4, n2 = cb.p, eps2 = 1;
  return CaseRegions{m2, n2, eps2, certify_region_lemma27(m2, n2, eps2, cb.surf)};
}

RootExclusion exclude_root_at_point(const PlanePoint& pt, const SurfaceParams& surf,
                                    const Int& s_modulus) {
  if (s_modulus < 1)
    throw Error(ErrorCode::ConstraintViolation, "s modulus must be positive");
  Int L = boost::multiprecision::lcm(rat_den(pt.x), rat_den(pt.y));
  L = boost::multiprecision::lcm(L, s_modulus);
  Rat disc = L * L * (pt.x * pt.x * surf.h2 - 2 * pt.y);
  assert(rat_den(disc) == 1);
  RootExclusion out;
  out.pt = pt;
  out.modulus = L;
  out.discriminant = rat_num(disc);
  out.root_exists = out.discriminant == -2;
  if (out.root_exists) {
    out.root = MukaiVector{rat_num(L * pt.y), rat_num(L * pt.x), L};
  }
  return out;
}

GapCertificate gap_certificate_a(const CaseAParams& ca, unsigned max_bits) {
  const Int& r = ca.r;
  const Int& s = ca.s;
  ChargeValue g1 = zbar(ca.vbar);
  ChargeValue g2 = zbar(ca.v);
  RadicalValue l = bn_norm(g1.re, g1.im, ca.surf) +
                   bn_norm(g2.re - g1.re, g2.im - g1.im, ca.surf);
  ChargeValue o{Rat(0), Rat(0)};
  ChargeValue g1p{Rat(r - s + 1), Rat(1)};
  ChargeValue g2p{Rat(s * (r - 2) + r) - Rat(r, r - 1), Rat(2)};
  std::vector<ChargeValue> chain = r == 2 ? std::vector<ChargeValue>{o, g1p, g2}
                                          : std::vector<ChargeValue>{o, g1p, g2p, g2};
  RadicalValue l_in = polygon_mass(HNPolygon(chain), ca.surf);
  RadicalValue two_eps = RadicalValue(Rat(euler_char(ca.v))) + l - Rat(2 * (r + s));
  GapCertificate cert = gap_from_parts("A", l, l_in, two_eps, max_bits);
  Int d = (r + s) * (r + s) + 4;
  Int w = s * r * (r - 1) * (r - 1);
  cert.f1 = Rat(2 * w - 3 * r + 1, 2 * (w + r));
  cert.f2 = RadicalValue::sqrt_of(Rat(1, d)) * Rat(2 * (s - r) - 1, 2);
  RadicalValue f_sum = RadicalValue(*cert.f1) + *cert.f2;
  cert.f_sum_lower = compare_radicals(f_sum, RadicalValue(Rat(69, 100)), max_bits);
  cert.eps_upper = compare_radicals(cert.two_eps, RadicalValue(Rat(686, 1000)), max_bits);
  cert.chain_holds =
      compare_radicals(cert.l - cert.l_in, f_sum, max_bits).ord != Ordering::Less;
  return cert;
}

GapCertificate gap_inequality_b(const Int& p, unsigned max_bits) {
  if (p < 1 || p % 2 == 0)
    throw Error(ErrorCode::ConstraintViolation, "odd p >= 1 required");
  SurfaceParams surf = make_surface(2 * p);
  Rat half_p(p, 2);
  ChargeValue g1{Rat(4 - p), Rat(2)};
  ChargeValue g2{Rat(0), Rat(4)};
  RadicalValue l = bn_norm(g1.re, g1.im, surf) + bn_norm(g2.re - g1.re, g2.im - g1.im, surf);
  // Inner chain o, (2 - p/2, 1), (5 - p, 2), (2 - p/2, 3), g2. Summed
  // directly so out-of-range p (where the chain is not convex) still
  // evaluate.
  std::vector<ChargeValue> chain = {
      ChargeValue{Rat(0), Rat(0)}, ChargeValue{2 - half_p, Rat(1)},
      ChargeValue{Rat(5 - p), Rat(2)}, ChargeValue{2 - half_p, Rat(3)}, g2};
  RadicalValue l_in;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    l_in += bn_norm(chain[i + 1].re - chain[i].re, chain[i + 1].im - chain[i].im, surf);
  }
  RadicalValue two_eps = l - Rat(2 * (p + 4));  // chi(v) = 0 for v = (0, 4, 0)
  return gap_from_parts("B", l, l_in, two_eps, max_bits);
}

GapCertificate gap_certificate_b(const CaseBParams& cb, unsigned max_bits) {
  return gap_inequality_b(cb.p, max_bits);
}

FirstWallCertificate verify_first_wall(const CaseAParams& ca) {
  Rat otilde_y(ca.r, ca.s * (ca.r - 1));
  return verify_first_wall_impl(ca.v, ca.vbar, ca.surf, otilde_y);
}

FirstWallCertificate verify_first_wall(const CaseBParams& cb) {
  return verify_first_wall_impl(cb.v, cb.vbar, cb.surf, Rat(4, cb.p));
}

Int h0_ceiling(const CaseAParams& ca) { return h0_ceiling_impl(ca.v, ca.vbar, ca.surf); }

Int h0_ceiling(const CaseBParams& cb) { return h0_ceiling_impl(cb.v, cb.vbar, cb.surf); }

}  // namespace mukai
