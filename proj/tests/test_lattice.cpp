#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mukai/lattice.hpp"
#include "mukai/plane.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace mukai;
using mukai::test::error_code_of;
using mukai::test::rand_int;

namespace {

// Oracle: the pairing written out directly from its defining formula,
// independent of the library implementation.
Int oracle_pairing(const MukaiVector& a, const MukaiVector& b, const Int& h2) {
  return a.c * b.c * h2 - a.r * b.s - b.r * a.s;
}

// Oracle: collect every class of self-pairing -2 in the box by brute force.
std::vector<MukaiVector> oracle_roots(const SurfaceParams& surf, long long br,
                                      long long bc, long long bs,
                                      const Region& region) {
  std::vector<MukaiVector> out;
  for (long long r = -br; r <= br; ++r)
    for (long long c = -bc; c <= bc; ++c)
      for (long long s = -bs; s <= bs; ++s) {
        MukaiVector v{Int(r), Int(c), Int(s)};
        if (oracle_pairing(v, v, surf.h2) != -2) continue;
        if (v.s == 0) continue;  // no projection, never reported
        if (!region.contains(project(v))) continue;
        out.push_back(v);
      }
  std::sort(out.begin(), out.end());
  return out;
}

MukaiVector rand_vector(std::mt19937_64& rng, long long bound) {
  return MukaiVector{rand_int(rng, -bound, bound), rand_int(rng, -bound, bound),
                     rand_int(rng, -bound, bound)};
}

}  // namespace

TEST_CASE("pairing matches its defining formula on random classes") {
  std::mt19937_64 rng(0x1a77ce);
  for (int trial = 0; trial < 10000; ++trial) {
    Int h2 = 2 * rand_int(rng, 1, 20);
    SurfaceParams surf = make_surface(h2);
    MukaiVector a = rand_vector(rng, 50);
    MukaiVector b = rand_vector(rng, 50);
    CHECK(pairing(a, b, surf) == oracle_pairing(a, b, h2));
    CHECK(pairing(a, b, surf) == pairing(b, a, surf));
    CHECK(square(a, surf) == oracle_pairing(a, a, h2));
  }
}

TEST_CASE("pairing is bilinear") {
  std::mt19937_64 rng(0xb111);
  SurfaceParams surf = make_surface(Int(20));
  for (int trial = 0; trial < 2000; ++trial) {
    MukaiVector a = rand_vector(rng, 30);
    MukaiVector b = rand_vector(rng, 30);
    MukaiVector c = rand_vector(rng, 30);
    CHECK(pairing(a + b, c, surf) == pairing(a, c, surf) + pairing(b, c, surf));
    CHECK(pairing(a - b, c, surf) == pairing(a, c, surf) - pairing(b, c, surf));
    CHECK(pairing(-a, c, surf) == -pairing(a, c, surf));
  }
}

TEST_CASE("the trivial class is a root on every surface") {
  MukaiVector o{Int(1), Int(0), Int(1)};
  for (long long h2 = 2; h2 <= 40; h2 += 2) {
    SurfaceParams surf = make_surface(Int(h2));
    CHECK(square(o, surf) == -2);
  }
  CHECK(euler_char(o) == 2);
}

TEST_CASE("euler characteristic and slope basics") {
  MukaiVector v{Int(2), Int(1), Int(5)};
  CHECK(euler_char(v) == 7);

  Slope mu = slope(v);
  CHECK_FALSE(mu.is_infinite);
  CHECK(mu.value == Rat(1, 2));

  Slope inf = slope(MukaiVector{Int(0), Int(3), Int(-1)});
  CHECK(inf.is_infinite);

  CHECK(project(v) == PlanePoint{Rat(1, 5), Rat(2, 5)});
  CHECK(error_code_of([] { project(MukaiVector{Int(1), Int(1), Int(0)}); }) ==
        ErrorCode::UndefinedProjection);
}

TEST_CASE("projections of v, v1 and v - v1 are collinear") {
  std::mt19937_64 rng(0xc0111);
  int seen = 0;
  while (seen < 2000) {
    MukaiVector v = rand_vector(rng, 20);
    MukaiVector v1 = rand_vector(rng, 20);
    MukaiVector v2 = v - v1;
    if (v.s == 0 || v1.s == 0 || v2.s == 0) continue;
    ++seen;
    PlanePoint p = project(v);
    PlanePoint p1 = project(v1);
    PlanePoint p2 = project(v2);
    Rat cross = (p1.x - p.x) * (p2.y - p.y) - (p1.y - p.y) * (p2.x - p.x);
    CHECK(cross == 0);
  }
}

TEST_CASE("root enumeration agrees with the brute-force oracle") {
  for (long long h2 : {2LL, 10LL, 20LL, 26LL}) {
    SurfaceParams surf = make_surface(Int(h2));
    Region plane = Region::whole_plane();
    for (long long bound = 1; bound <= 6; ++bound) {
      auto got = enumerate_roots_in_box(surf, Int(bound), Int(bound),
                                        Int(bound), plane);
      auto want = oracle_roots(surf, bound, bound, bound, plane);
      CHECK(got == want);
    }
  }
}

TEST_CASE("degree-two roots at bound three include the familiar ones") {
  SurfaceParams surf = make_surface(Int(2));
  auto roots = enumerate_roots_in_box(surf, Int(3), Int(3), Int(3),
                                      Region::whole_plane());
  auto has = [&](long long r, long long c, long long s) {
    MukaiVector v{Int(r), Int(c), Int(s)};
    return std::find(roots.begin(), roots.end(), v) != roots.end();
  };
  CHECK(has(1, 0, 1));
  CHECK(has(1, 1, 2));
  CHECK(has(-1, 0, -1));
  CHECK_FALSE(has(1, 1, 1));  // square is -2 only when c^2 h2 - 2 r s = -2

  // output is sorted and duplicate-free
  CHECK(std::is_sorted(roots.begin(), roots.end()));
  CHECK(std::adjacent_find(roots.begin(), roots.end()) == roots.end());
}

TEST_CASE("region filter: no root projects near the degree-20 chord corner") {
  SurfaceParams surf = make_surface(Int(20));
  Rat eps(1, 100);
  Region box = Region::rectangle(PlanePoint{Rat(1, 5) - eps, Rat(2, 5) - eps},
                                 PlanePoint{Rat(1, 5) + eps, Rat(2, 5) + eps});
  auto roots = enumerate_roots_in_box(surf, Int(40), Int(40), Int(40), box);
  CHECK(roots.empty());

  auto oracle = oracle_roots(surf, 40, 40, 40, box);
  CHECK(oracle.empty());
}

TEST_CASE("region filter matches the oracle on a half-plane piece") {
  SurfaceParams surf = make_surface(Int(2));
  Region region = Region::whole_plane();
  // restrict to x > 0 strictly
  Region right;
  right.add_piece(ConvexPiece{HalfPlane{Rat(-1), Rat(0), Rat(0), true}});
  auto got = enumerate_roots_in_box(surf, Int(5), Int(5), Int(5), right);
  auto want = oracle_roots(surf, 5, 5, 5, right);
  CHECK(got == want);
  CHECK_FALSE(got.empty());
  for (const auto& v : got) CHECK(project(v).x > 0);
}
