#pragma once

#include "mukai/lattice.hpp"
#include "mukai/numeric.hpp"
#include "mukai/plane.hpp"

#include <string>
#include <vector>

namespace mukai {

// A point of the (b, w) half-plane, carried as (b, w^2); every formula in
// scope consumes w only through its square.
struct StabilityParams {
  Rat b;
  Rat w2;
};

struct ChargeValue {
  Rat re, im;
  bool operator==(const ChargeValue&) const = default;
};

enum class PhaseOrder { Less, Equal, Greater };

// Z_(b,w)(v) = b c H^2 - s - (H^2/2) r (b^2 - w^2) + i (c - b r)
ChargeValue central_charge(const MukaiVector& v, const StabilityParams& sp,
                           const SurfaceParams& surf);

// Exact ordering of phases in (0,1]: the ray {im = 0, re < 0} is phase one
// and maximal; for im > 0 larger phase means smaller cotangent re/im.
PhaseOrder compare_phase(const ChargeValue& z1, const ChargeValue& z2);

// k(b,w) = (2b, 2) / (H^2 (b^2 + w^2)); requires w^2 > 0.
PlanePoint kernel_point(const StabilityParams& sp, const SurfaceParams& surf);

// Inverse of kernel_point: defined exactly for points strictly above the
// parabola y = (H^2/2) x^2.
StabilityParams params_from_point(const PlanePoint& pt, const SurfaceParams& surf);

// Closed segment from pr(delta) out to the parabola along the ray from the
// origin; for delta = (1,0,1) the vertical ray {(0,y) : y >= 1}.
Segment hole_segment(const MukaiVector& delta, const SurfaceParams& surf);

// True iff pt is strictly above the parabola and on no hole segment.
bool is_valid_stability_point(const PlanePoint& pt, const SurfaceParams& surf);

// U_n = {(x,y) : 0 < |x| < 1/n and (H^2/(2n))|x| < |y|}, open.
// Half-integer indices are passed doubled throughout: n2 = 2n.
Region make_U_region(const Int& n2, const SurfaceParams& surf);

// Certificate that U_n contains no root projections. For n <= H^2/2 this is
// backed by the arithmetic argument (recorded by branch); a positive
// scan_bound additionally cross-checks by enumeration, and is the only
// evidence when n > H^2/2.
struct NoRootsCertificate {
  Int n2;
  Int h2;
  bool by_proof;
  std::string argument;  // "integer-index", "half-integer-index", "scan-only"
  Int scan_bound;        // 0 = scan skipped
  std::vector<MukaiVector> scan_hits;
  bool ok() const { return (by_proof || scan_bound > 0) && scan_hits.empty(); }
};

NoRootsCertificate certify_no_roots_U(const Int& n2, const SurfaceParams& surf,
                                      const Int& scan_bound = 50);

// One step of the covering argument: the chord gamma_m gamma_n passes the
// ray through gamma_k at x_k, which must fall inside U_{k+1/2}.
struct CoverCheck {
  Int k2;
  Rat xk;
  Rat bound;  // 1/(k + 1/2)
  bool ok;
};

struct Lemma27Certificate {
  Int m2, n2, eps2;
  Int h2;
  PlanePoint q;       // chord meets the ray through gamma_{n-eps}
  PlanePoint qprime;  // chord point above x = 1/(m+eps)
  std::vector<CoverCheck> cover;
  std::vector<NoRootsCertificate> pieces;
  bool ok() const;
};

Lemma27Certificate certify_region_lemma27(const Int& m2, const Int& n2, const Int& eps2,
                                          const SurfaceParams& surf);

}
