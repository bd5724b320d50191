#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mukai/lattice.hpp"
#include "mukai/stability.hpp"
#include "test_util.hpp"

#include <cmath>
#include <random>

using namespace mukai;
using mukai::test::error_code_of;
using mukai::test::rand_int;
using mukai::test::rand_rat;

namespace {

double to_double(const Rat& q) { return q.convert_to<double>(); }

// Oracle: phase in (0, 1] through floating point, for cross-checking the
// exact comparator away from ties.
double phase_of(const ChargeValue& z) {
  double p = std::atan2(to_double(z.im), to_double(z.re)) / M_PI;
  if (p <= 0) p += 2;  // the ray of phase one reports +pi, never -pi, but 0 would
  return p;
}

}  // namespace

TEST_CASE("central charge at hand-computed points") {
  SurfaceParams surf = make_surface(Int(2));

  ChargeValue z1 = central_charge(MukaiVector{Int(1), Int(1), Int(1)},
                                  StabilityParams{Rat(1, 2), Rat(1, 4)}, surf);
  CHECK(z1.re == 0);
  CHECK(z1.im == Rat(1, 2));

  ChargeValue z2 = central_charge(MukaiVector{Int(0), Int(1), Int(0)},
                                  StabilityParams{Rat(1, 2), Rat(3)}, surf);
  CHECK(z2.re == 1);
  CHECK(z2.im == 1);

  ChargeValue z3 = central_charge(MukaiVector{Int(2), Int(0), Int(1)},
                                  StabilityParams{Rat(1), Rat(2)}, surf);
  CHECK(z3.re == 1);
  CHECK(z3.im == -2);
}

TEST_CASE("phase comparison is exact on rays and errors on bad charges") {
  auto z = [](long long re, long long im) {
    return ChargeValue{Rat(re), Rat(im)};
  };
  // phase one dominates everything else
  CHECK(compare_phase(z(-1, 0), z(0, 1)) == PhaseOrder::Greater);
  CHECK(compare_phase(z(0, 1), z(-3, 0)) == PhaseOrder::Less);
  CHECK(compare_phase(z(-1, 0), z(-5, 0)) == PhaseOrder::Equal);
  // interior orderings
  CHECK(compare_phase(z(1, 1), z(-1, 1)) == PhaseOrder::Less);
  CHECK(compare_phase(z(-2, 1), z(1, 3)) == PhaseOrder::Greater);
  CHECK(compare_phase(z(1, 2), z(2, 4)) == PhaseOrder::Equal);

  CHECK(error_code_of([&] { compare_phase(z(0, 0), z(1, 1)); }) ==
        ErrorCode::DegenerateCharge);
  CHECK(error_code_of([&] { compare_phase(z(1, 1), z(0, 0)); }) ==
        ErrorCode::DegenerateCharge);
  CHECK(error_code_of([&] { compare_phase(z(1, 0), z(1, 1)); }) ==
        ErrorCode::InvalidCharge);
  CHECK(error_code_of([&] { compare_phase(z(1, 1), z(0, -1)); }) ==
        ErrorCode::InvalidCharge);
}

TEST_CASE("phase comparison agrees with a floating-point oracle off ties") {
  std::mt19937_64 rng(0x9a5e);
  int used = 0;
  while (used < 1000) {
    ChargeValue z1{rand_rat(rng, -20, 20, 9), rand_rat(rng, 0, 20, 9)};
    ChargeValue z2{rand_rat(rng, -20, 20, 9), rand_rat(rng, 0, 20, 9)};
    bool ok1 = z1.im > 0 || (z1.im == 0 && z1.re < 0);
    bool ok2 = z2.im > 0 || (z2.im == 0 && z2.re < 0);
    if (!ok1 || !ok2) continue;
    double p1 = phase_of(z1);
    double p2 = phase_of(z2);
    if (std::abs(p1 - p2) <= 1e-9) continue;
    ++used;
    PhaseOrder want = p1 > p2 ? PhaseOrder::Greater : PhaseOrder::Less;
    CHECK(compare_phase(z1, z2) == want);
  }
}

TEST_CASE("kernel points live on x = b y and round-trip exactly") {
  std::mt19937_64 rng(0xbe41);
  for (long long h2 : {2LL, 20LL, 26LL}) {
    SurfaceParams surf = make_surface(Int(h2));
    for (int trial = 0; trial < 500; ++trial) {
      Rat b = rand_rat(rng, -12, 12, 7);
      Rat w2 = rand_rat(rng, 1, 9, 5);  // strictly positive
      StabilityParams sp{b, w2};
      PlanePoint k = kernel_point(sp, surf);
      CHECK(k.x == b * k.y);
      CHECK(k.y > 0);
      StabilityParams back = params_from_point(k, surf);
      CHECK(back.b == b);
      CHECK(back.w2 == w2);
    }
  }

  SurfaceParams deg2 = make_surface(Int(2));
  PlanePoint half{Rat(1, 2), Rat(1, 2)};
  StabilityParams sp = params_from_point(half, deg2);
  CHECK(sp.b == 1);
  CHECK(sp.w2 == 1);
  CHECK(kernel_point(sp, deg2) == half);

  CHECK(error_code_of([&] {
          kernel_point(StabilityParams{Rat(1), Rat(0)}, deg2);
        }) == ErrorCode::PreconditionViolation);
  CHECK(error_code_of([&] {
          kernel_point(StabilityParams{Rat(1), Rat(-1)}, deg2);
        }) == ErrorCode::PreconditionViolation);
  // (1,1) sits on the parabola for H^2 = 2, (0,0) on its vertex
  CHECK(error_code_of([&] {
          params_from_point(PlanePoint{Rat(1), Rat(1)}, deg2);
        }) == ErrorCode::BelowParabola);
  CHECK(error_code_of([&] {
          params_from_point(PlanePoint{Rat(0), Rat(0)}, deg2);
        }) == ErrorCode::BelowParabola);
  CHECK(error_code_of([&] {
          params_from_point(PlanePoint{Rat(1, 10), Rat(-1)}, deg2);
        }) == ErrorCode::BelowParabola);
}

TEST_CASE("hole segments: radial for c != 0, vertical ray for (1,0,1)") {
  SurfaceParams deg2 = make_surface(Int(2));

  Segment ray = hole_segment(MukaiVector{Int(1), Int(0), Int(1)}, deg2);
  CHECK(ray.to_infinity);
  CHECK(ray.a == PlanePoint{Rat(0), Rat(1)});

  Segment hole = hole_segment(MukaiVector{Int(1), Int(1), Int(2)}, deg2);
  CHECK_FALSE(hole.to_infinity);
  CHECK(hole.a == PlanePoint{Rat(1, 2), Rat(1, 2)});
  CHECK(hole.b == PlanePoint{Rat(1), Rat(1)});

  CHECK(error_code_of([&] {
          hole_segment(MukaiVector{Int(1), Int(0), Int(2)}, deg2);
        }) == ErrorCode::NotARoot);
  // non-root with negative rank still reports NotARoot first
  CHECK(error_code_of([&] {
          hole_segment(MukaiVector{Int(-2), Int(0), Int(-1)}, deg2);
        }) == ErrorCode::NotARoot);
  CHECK(error_code_of([&] {
          hole_segment(MukaiVector{Int(-1), Int(0), Int(-1)}, deg2);
        }) == ErrorCode::NonpositiveRank);
}

TEST_CASE("hole endpoints lie on the parabola beyond the projection") {
  for (long long h2 : {2LL, 20LL}) {
    SurfaceParams surf = make_surface(Int(h2));
    // at h2 = 20 the smallest root with c != 0 is (1, 1, 11): box 12
    auto roots = enumerate_roots_in_box(surf, Int(12), Int(12), Int(12),
                                        Region::whole_plane());
    int checked = 0;
    for (const auto& d : roots) {
      if (d.r <= 0 || d.c == 0) continue;
      ++checked;
      Segment seg = hole_segment(d, surf);
      CHECK(seg.a == project(d));
      CHECK(2 * seg.b.y == surf.h2 * seg.b.x * seg.b.x);
      // outer end is t * projection with t = 2rs/(2rs-2) > 1
      Rat t = Rat(2 * d.r * d.s, 2 * d.r * d.s - 2);
      CHECK(t > 1);
      CHECK(seg.b.x == t * seg.a.x);
      CHECK(seg.b.y == t * seg.a.y);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("stability point validity around holes") {
  SurfaceParams deg2 = make_surface(Int(2));
  auto valid = [&](const Rat& x, const Rat& y) {
    return is_valid_stability_point(PlanePoint{x, y}, deg2);
  };

  // y-axis: only the ray from (0,1) upward is excluded
  CHECK(valid(Rat(0), Rat(1, 2)));
  CHECK_FALSE(valid(Rat(0), Rat(1)));
  CHECK_FALSE(valid(Rat(0), Rat(3, 2)));
  CHECK_FALSE(valid(Rat(0), Rat(0)));

  // on or below the parabola
  CHECK_FALSE(valid(Rat(1), Rat(1)));
  CHECK_FALSE(valid(Rat(1), Rat(1, 2)));
  CHECK_FALSE(valid(Rat(1, 2), Rat(-1)));

  // the hole of (1,1,2) runs from (1/2,1/2) to (1,1), closed at both ends
  CHECK_FALSE(valid(Rat(1, 2), Rat(1, 2)));
  CHECK_FALSE(valid(Rat(3, 4), Rat(3, 4)));
  CHECK_FALSE(valid(Rat(1), Rat(1)));
  // just off the ray it is fine
  CHECK(valid(Rat(3, 4), Rat(31, 40)));

  // projections of enumerated roots are never valid
  for (long long h2 : {2LL, 20LL}) {
    SurfaceParams surf = make_surface(Int(h2));
    auto roots = enumerate_roots_in_box(surf, Int(5), Int(5), Int(5),
                                        Region::whole_plane());
    for (const auto& d : roots) {
      CHECK_FALSE(is_valid_stability_point(project(d), surf));
    }
  }
}

TEST_CASE("U regions: membership, mirror symmetry and boundaries") {
  SurfaceParams surf = make_surface(Int(20));
  for (long long n2 : {2LL, 5LL, 40LL}) {
    Region u = make_U_region(Int(n2), surf);
    // (1/(2n), H^2/(2n)) sits inside for n >= 1
    PlanePoint probe{Rat(1, n2), Rat(20, n2)};
    CHECK(u.contains(probe));
    CHECK(u.contains(PlanePoint{-probe.x, -probe.y}));
    CHECK(u.contains(PlanePoint{-probe.x, probe.y}));
    // the bounding lines are excluded
    CHECK_FALSE(u.contains(PlanePoint{Rat(0), Rat(1)}));
    CHECK_FALSE(u.contains(PlanePoint{Rat(2, n2), Rat(20, n2)}));
    CHECK_FALSE(u.contains(PlanePoint{probe.x, Rat(20, n2) * probe.x}));
  }
  CHECK(error_code_of([&] { make_U_region(Int(0), surf); }) ==
        ErrorCode::ConstraintViolation);
  CHECK(error_code_of([&] { make_U_region(Int(-3), surf); }) ==
        ErrorCode::ConstraintViolation);
}

TEST_CASE("no-root certificates inside the proved index range") {
  SurfaceParams surf = make_surface(Int(20));
  for (long long n2 = 1; n2 <= 20; ++n2) {
    NoRootsCertificate cert = certify_no_roots_U(Int(n2), surf, Int(50));
    CHECK(cert.by_proof);
    CHECK(cert.argument == (n2 % 2 == 0 ? "integer-index" : "half-integer-index"));
    CHECK(cert.scan_hits.empty());
    CHECK(cert.ok());
  }
}

TEST_CASE("no-root certificates degrade to scans past the proved range") {
  SurfaceParams surf = make_surface(Int(20));
  NoRootsCertificate cert = certify_no_roots_U(Int(21), surf, Int(50));
  CHECK_FALSE(cert.by_proof);
  CHECK(cert.argument == "scan-only");
  // U_{21/2} really does contain root projections on a degree-20 surface
  CHECK(cert.scan_hits.size() == 4);
  MukaiVector hit{Int(1), Int(1), Int(11)};
  CHECK(std::find(cert.scan_hits.begin(), cert.scan_hits.end(), hit) !=
        cert.scan_hits.end());
  CHECK_FALSE(cert.ok());

  // without a scan nothing is certified out there
  NoRootsCertificate blind = certify_no_roots_U(Int(21), surf, Int(0));
  CHECK_FALSE(blind.ok());

  CHECK(error_code_of([&] { certify_no_roots_U(Int(5), surf, Int(-1)); }) ==
        ErrorCode::ConstraintViolation);
}

TEST_CASE("chord region certificate, degree 20 instance") {
  SurfaceParams surf = make_surface(Int(20));
  Lemma27Certificate cert = certify_region_lemma27(Int(4), Int(10), Int(2), surf);
  CHECK(cert.ok());
  CHECK(cert.q == PlanePoint{Rat(2, 9), Rat(5, 9)});
  CHECK(cert.qprime == PlanePoint{Rat(1, 3), Rat(4, 3)});
  REQUIRE(cert.cover.size() == 2);
  CHECK(cert.cover[0].k2 == 6);
  CHECK(cert.cover[0].xk == Rat(3, 11));
  CHECK(cert.cover[0].bound == Rat(2, 7));
  CHECK(cert.cover[0].ok);
  CHECK(cert.cover[1].k2 == 7);
  CHECK(cert.cover[1].xk == Rat(7, 29));
  CHECK(cert.cover[1].bound == Rat(1, 4));
  CHECK(cert.cover[1].ok);
  REQUIRE(cert.pieces.size() == 5);
  for (const auto& piece : cert.pieces) {
    CHECK(piece.by_proof);
    CHECK(piece.scan_bound == 0);
    CHECK(piece.ok());
  }
}

TEST_CASE("chord region certificate, degree 26 instance") {
  SurfaceParams surf = make_surface(Int(26));
  Lemma27Certificate cert = certify_region_lemma27(Int(4), Int(13), Int(1), surf);
  CHECK(cert.ok());
  CHECK(cert.qprime.x == Rat(2, 5));
  CHECK(cert.qprime.y == Rat(12, 5));
  REQUIRE(cert.cover.size() == 7);
  CHECK(cert.cover.front().k2 == 5);
  CHECK(cert.cover.back().k2 == 11);
  CHECK(cert.pieces.size() == 9);
}

TEST_CASE("chord region certificate gates") {
  SurfaceParams surf = make_surface(Int(20));
  CHECK(error_code_of([&] {
          certify_region_lemma27(Int(10), Int(4), Int(2), surf);
        }) == ErrorCode::ConstraintViolation);
  CHECK(error_code_of([&] {
          certify_region_lemma27(Int(0), Int(10), Int(2), surf);
        }) == ErrorCode::ConstraintViolation);
  // n too large for the surface degree
  CHECK(error_code_of([&] {
          certify_region_lemma27(Int(4), Int(22), Int(2), surf);
        }) == ErrorCode::PreconditionViolation);
  // eps too large relative to n
  CHECK(error_code_of([&] {
          certify_region_lemma27(Int(4), Int(10), Int(9), surf);
        }) == ErrorCode::PreconditionViolation);
  // margin inequality fails: m too close to n
  CHECK(error_code_of([&] {
          certify_region_lemma27(Int(8), Int(10), Int(2), surf);
        }) == ErrorCode::PreconditionViolation);
}
