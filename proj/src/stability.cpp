#include "mukai/stability.hpp"

#include "mukai/errors.hpp"

#include <algorithm>

namespace mukai {

ChargeValue central_charge(const MukaiVector& v, const StabilityParams& sp,
                           const SurfaceParams& surf) {
  Rat re = sp.b * v.c * surf.h2 - v.s - Rat(surf.h2, 2) * v.r * (sp.b * sp.b - sp.w2);
  Rat im = v.c - sp.b * v.r;
  return ChargeValue{re, im};
}

PhaseOrder compare_phase(const ChargeValue& z1, const ChargeValue& z2) {
  auto check = [](const ChargeValue& z) {
    if (z.re == 0 && z.im == 0) {
      throw Error(ErrorCode::DegenerateCharge, "zero central charge has no phase");
    }
    if (z.im < 0 || (z.im == 0 && z.re > 0)) {
      throw Error(ErrorCode::InvalidCharge,
                  "charge must satisfy im > 0, or im = 0 with re < 0");
    }
  };
  check(z1);
  check(z2);
  bool max1 = (z1.im == 0);  // the phase-one ray
  bool max2 = (z2.im == 0);
  if (max1 || max2) {
    if (max1 && max2) return PhaseOrder::Equal;
    return max1 ? PhaseOrder::Greater : PhaseOrder::Less;
  }
  int c = sign_of(Rat(z1.re * z2.im - z2.re * z1.im));
  if (c < 0) return PhaseOrder::Greater;
  if (c > 0) return PhaseOrder::Less;
  return PhaseOrder::Equal;
}

PlanePoint kernel_point(const StabilityParams& sp, const SurfaceParams& surf) {
  if (sp.w2 <= 0) {
    throw Error(ErrorCode::PreconditionViolation, "kernel point needs w^2 > 0");
  }
  Rat q = surf.h2 * (sp.b * sp.b + sp.w2);
  return PlanePoint{2 * sp.b / q, 2 / q};
}

StabilityParams params_from_point(const PlanePoint& pt, const SurfaceParams& surf) {
  if (pt.y <= 0 || 2 * pt.y <= surf.h2 * pt.x * pt.x) {
    throw Error(ErrorCode::BelowParabola, "point must lie strictly above the parabola");
  }
  Rat b = pt.x / pt.y;
  Rat w2 = 2 / (surf.h2 * pt.y) - b * b;
  return StabilityParams{b, w2};
}

Segment hole_segment(const MukaiVector& delta, const SurfaceParams& surf) {
  if (square(delta, surf) != -2) {
    throw Error(ErrorCode::NotARoot, "hole segments exist only for square -2 classes");
  }
  if (delta.r <= 0) {
    throw Error(ErrorCode::NonpositiveRank, "hole segment wants the rank-positive representative");
  }
  if (delta.c == 0) {
    // Square -2 with c = 0 forces rs = 1, so delta = (1,0,1).
    PlanePoint top{Rat(0), Rat(1)};
    return Segment{top, top, true};
  }
  PlanePoint from = project(delta);
  PlanePoint to{rat_frac(2 * delta.r, surf.h2 * delta.c),
                Rat(2 * delta.r * delta.r, surf.h2 * delta.c * delta.c)};
  return Segment{from, to, false};
}

bool is_valid_stability_point(const PlanePoint& pt, const SurfaceParams& surf) {
  const Rat& x = pt.x;
  const Rat& y = pt.y;
  if (y <= 0) return false;
  if (2 * y <= surf.h2 * x * x) return false;
  if (x == 0) return y < 1;  // the only hole on the y-axis is {(0,y) : y >= 1}
  // A hole through pt lies on the ray x/y = c/r from the origin; in lowest
  // terms x/y = u/v with v > 0, so (c, r) = k(u, v) for an integer k >= 1
  // (negating delta projects to the same ray).
  Rat ratio = x / y;
  Int u = rat_num(ratio);
  Int v = rat_den(ratio);
  // pt sits in the closed hole of (kv, ku, s_k) iff s_k = (k^2 u^2 H^2 + 2)/(2kv)
  // is an integer and k^2 delta <= 2y, with delta = 2v^2 - H^2 u^2 y > 0 above
  // the parabola; the outer hole end t <= t_max reduces to delta >= 0.
  Rat delta = 2 * v * v - surf.h2 * u * u * y;
  for (Int k = 1; k * k * delta <= 2 * y; ++k) {
    Int num = k * k * u * u * surf.h2 + 2;
    Int den = 2 * k * v;
    if (num % den == 0) return false;
  }
  return true;
}

Region make_U_region(const Int& n2, const SurfaceParams& surf) {
  if (n2 < 1) {
    throw Error(ErrorCode::ConstraintViolation, "region index must be positive (passed doubled)");
  }
  Rat x_hi(2, n2);      // 1/n
  Rat m(surf.h2, n2);   // H^2/(2n)
  Region u;
  for (int sx : {+1, -1}) {
    for (int sy : {+1, -1}) {
      ConvexPiece piece;
      piece.push_back(HalfPlane{Rat(-sx), Rat(0), Rat(0), true});  // sx * x > 0
      piece.push_back(HalfPlane{Rat(sx), Rat(0), x_hi, true});     // sx * x < 1/n
      piece.push_back(HalfPlane{sx * m, Rat(-sy), Rat(0), true});  // sy * y > m |x|
      u.add_piece(piece);
    }
  }
  return u;
}

NoRootsCertificate certify_no_roots_U(const Int& n2, const SurfaceParams& surf,
                                      const Int& scan_bound) {
  if (n2 < 1 || scan_bound < 0) {
    throw Error(ErrorCode::ConstraintViolation, "region index must be positive (passed doubled)");
  }
  NoRootsCertificate cert;
  cert.n2 = n2;
  cert.h2 = surf.h2;
  cert.by_proof = (n2 <= surf.h2);  // n <= H^2/2
  if (!cert.by_proof) {
    cert.argument = "scan-only";
  } else if (n2 % 2 == 0) {
    // A root projecting into U_n pins n|c| inside the open unit-length
    // interval (|s| - 1/|r|, |s|); for integer n that is impossible.
    cert.argument = "integer-index";
  } else {
    // Odd |c| forces n|c| = |s| - 1/2 and |r| = 1, then n <= H^2/2 gives
    // |c| < 1; even |c| reduces to the integer case.
    cert.argument = "half-integer-index";
  }
  cert.scan_bound = scan_bound;
  if (scan_bound > 0) {
    cert.scan_hits =
        enumerate_roots_in_box(surf, scan_bound, scan_bound, scan_bound, make_U_region(n2, surf));
  }
  return cert;
}

bool Lemma27Certificate::ok() const {
  for (const CoverCheck& c : cover) {
    if (!c.ok) return false;
  }
  for (const NoRootsCertificate& p : pieces) {
    if (!p.ok()) return false;
  }
  return true;
}

Lemma27Certificate certify_region_lemma27(const Int& m2, const Int& n2, const Int& eps2,
                                          const SurfaceParams& surf) {
  if (m2 < 1 || n2 < 1 || eps2 < 1 || m2 >= n2) {
    throw Error(ErrorCode::ConstraintViolation,
                "indices must be positive with m < n (passed doubled)");
  }
  if (!(eps2 + 1 < n2)) {
    throw Error(ErrorCode::PreconditionViolation, "need eps + 1/2 < n");
  }
  if (!(n2 <= surf.h2)) {
    throw Error(ErrorCode::PreconditionViolation, "need n <= H^2/2");
  }
  if (!(m2 * (eps2 + 1) < eps2 * n2 - eps2 * (eps2 + 1))) {
    throw Error(ErrorCode::PreconditionViolation, "need m < (2 eps/(2 eps + 1)) n - eps");
  }
  Lemma27Certificate cert;
  cert.m2 = m2;
  cert.n2 = n2;
  cert.eps2 = eps2;
  cert.h2 = surf.h2;
  Rat m(m2, 2), n(n2, 2);
  Rat inv_mn = 1 / (m * n);
  Rat sum = 1 / m + 1 / n;  // chord through gamma_m, gamma_n: y = (H^2/2)(sum x - 1/(mn))
  for (Int k2 = m2 + eps2; k2 <= n2 - eps2 - 1; ++k2) {
    Rat k(k2, 2);
    Rat xk = inv_mn / (sum - 1 / k);  // chord meets the ray through gamma_k here
    Rat bound(2, k2 + 1);             // x-extent of U_{k+1/2}
    cert.cover.push_back(CoverCheck{k2, xk, bound, xk < bound});
  }
  for (Int k2 = m2 + eps2; k2 <= n2; ++k2) {
    cert.pieces.push_back(certify_no_roots_U(k2, surf, 0));
  }
  Rat ke(n2 - eps2, 2);
  Rat qx = inv_mn / (sum - 1 / ke);
  cert.q = PlanePoint{qx, Rat(surf.h2) / (2 * ke) * qx};
  Rat qpx(2, m2 + eps2);
  cert.qprime = PlanePoint{qpx, Rat(surf.h2, 2) * (sum * qpx - inv_mn)};
  return cert;
}

}
