#pragma once

#include "mukai/lattice.hpp"
#include "mukai/plane.hpp"
#include "mukai/radical.hpp"
#include "mukai/stability.hpp"
#include "mukai/walls.hpp"

#include <map>
#include <optional>
#include <string>

namespace mukai {

// Family A: genus g = rs + 1, H^2 = 2rs, curve class v = (0, r, rs(2 - r)),
// spherical-twist center vbar = (r, 1, s) with vbar^2 = 0.
struct CaseAParams {
  Int r, s, g;
  SurfaceParams surf;
  MukaiVector v, vbar, we;
};

// Family B: genus g = p + 1 for odd p, H^2 = 2p, v = (0, 4, 0),
// vbar = (4, 2, p) with vbar^2 = 0.
struct CaseBParams {
  Int p, g;
  SurfaceParams surf;
  MukaiVector v, vbar, we;
};

CaseAParams build_case_a(const Int& r, const Int& s);  // r >= 2, s >= max(r, 5)
CaseBParams build_case_b(const Int& p);                // p odd, p >= 13

// Landmark points of the wall-and-hole figure, keyed by name: q, p, qprime,
// otilde, oprime, e, t, tprime, eprime and the gamma points for case A;
// q, spoint, sprime, otilde, oprime, e, t, tprime and the gamma points for
// case B. e and t mirror the corners q and q' of the certified chord region.
std::map<std::string, PlanePoint> named_points(const CaseAParams& ca);
std::map<std::string, PlanePoint> named_points(const CaseBParams& cb);

struct CaseRegions {
  Int m2, n2, eps2;  // doubled region indices fed to the certifier
  Lemma27Certificate cert;
  bool ok() const { return cert.ok(); }
};

// Root-free region certificates at the instantiation used by each family:
// (m, n, eps) = (r, s(r-1), 1) for case A and (2, p/2, 1/2) for case B.
CaseRegions certify_case_regions(const CaseAParams& ca);
CaseRegions certify_case_regions(const CaseBParams& cb);

// Integrality test for a root projecting to pt: with L the least common
// denominator (times the optional extra factor required of s), a root
// exists iff L^2 (x^2 H^2 - 2 y) = -2.
struct RootExclusion {
  PlanePoint pt;
  Int modulus;           // the L actually used
  Int discriminant;      // L^2 (x^2 H^2 - 2 y)
  bool root_exists;
  std::optional<MukaiVector> root;  // (L y, L x, L) when it exists
};

RootExclusion exclude_root_at_point(const PlanePoint& pt, const SurfaceParams& surf,
                                    const Int& s_modulus = Int(1));

// Comparison bundle behind the h^0 gap argument: outer mass l, inner mass
// l_in, defect 2 eps = chi(v) + l - 2 chi(vbar), and the certified
// comparison l - l_in > 2 eps. Case A additionally certifies the auxiliary
// bounds f1 + f2 >= 69/100 and 2 eps <= 686/1000 and records whether the
// intermediate chain l - l_in >= f1 + f2 happens to hold.
struct GapCertificate {
  std::string case_id;  // "A" or "B"
  RadicalValue l, l_in, two_eps;
  ComparisonCertificate gap;  // l - l_in vs 2 eps
  std::optional<Rat> f1;
  std::optional<RadicalValue> f2;
  std::optional<ComparisonCertificate> f_sum_lower;  // f1 + f2 vs 69/100
  std::optional<ComparisonCertificate> eps_upper;    // 2 eps vs 686/1000
  std::optional<bool> chain_holds;

  bool ok() const {
    if (gap.ord != Ordering::Greater) return false;
    if (f_sum_lower && f_sum_lower->ord == Ordering::Less) return false;
    if (eps_upper && eps_upper->ord == Ordering::Greater) return false;
    return true;
  }
};

GapCertificate gap_certificate_a(const CaseAParams& ca, unsigned max_bits = 1024);
GapCertificate gap_certificate_b(const CaseBParams& cb, unsigned max_bits = 1024);

// Raw case B comparison for any odd p >= 1, bypassing the p >= 13 gate.
// Out-of-range p are diagnostics (at p = 5 the inequality reverses).
GapCertificate gap_inequality_b(const Int& p, unsigned max_bits = 1024);

struct FirstWallCertificate {
  Wall wall;
  Rat y0;                 // height of the wall over b = 0
  MukaiVector expected;   // vbar
  PlanePoint q;           // projection of vbar, on the wall
  std::size_t candidate_count;
};

// Replays the first-wall search and checks the found wall against the
// predicted one: witness vbar, passing through the projections of vbar
// (and of v when defined), crossing b = 0 at otilde, with no candidate
// strictly below. Any failure is a wall-mismatch error.
FirstWallCertificate verify_first_wall(const CaseAParams& ca);
FirstWallCertificate verify_first_wall(const CaseBParams& cb);

// Certified floor of the triangle bound chi(v)/2 + (|zbar(vbar)| +
// |zbar(v) - zbar(vbar)|)/2; equals chi(vbar) on both families.
Int h0_ceiling(const CaseAParams& ca);
Int h0_ceiling(const CaseBParams& cb);

}
