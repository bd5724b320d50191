#include "mukai/walls.hpp"

#include "mukai/errors.hpp"
#include "mukai/stability.hpp"

#include <algorithm>
#include <map>

namespace mukai {

namespace {

Line normalize_line(const Rat& a, const Rat& b, const Rat& d) {
  if (a == 0 && b == 0)
    throw Error(ErrorCode::UnderdeterminedLine, "line has no normal direction");
  Int L = boost::multiprecision::lcm(rat_den(a), rat_den(b));
  L = boost::multiprecision::lcm(L, rat_den(d));
  Int A = rat_num(a) * (L / rat_den(a));
  Int B = rat_num(b) * (L / rat_den(b));
  Int D = rat_num(d) * (L / rat_den(d));
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(A), abs(B)), abs(D));
  if (g > 1) {
    A /= g;
    B /= g;
    D /= g;
  }
  int lead = A != 0 ? sign_of(A) : sign_of(B);
  if (lead < 0) {
    A = -A;
    B = -B;
    D = -D;
  }
  return Line{A, B, D};
}

// a^2 + 2 H^2 b d: discriminant of the line against y = (H^2/2) x^2.
// Positive exactly when the line meets the open region above the parabola.
Int chord_disc(const Line& l, const SurfaceParams& surf) {
  return l.a * l.a + 2 * surf.h2 * l.b * l.d;
}

// A point of the line strictly above the parabola (chord midpoint for a
// transversal line, one unit above the parabola for a vertical one).
PlanePoint sample_above(const Line& l, const SurfaceParams& surf) {
  if (l.b == 0) {
    Rat x0(l.d, l.a);
    return PlanePoint{x0, Rat(surf.h2, 2) * x0 * x0 + 1};
  }
  if (chord_disc(l, surf) <= 0)
    throw Error(ErrorCode::PreconditionViolation,
                "probe line does not meet the region above the parabola");
  Rat xs = Rat(-l.a) / (surf.h2 * l.b);
  Rat ys = (l.d - l.a * xs) / l.b;
  return PlanePoint{xs, ys};
}

// Chord of the line above the parabola when its endpoints are rational;
// a vertical line gives the ray up from the parabola.
std::optional<Segment> wall_segment(const Line& l, const SurfaceParams& surf) {
  if (l.b == 0) {
    Rat x0(l.d, l.a);
    PlanePoint base{x0, Rat(surf.h2, 2) * x0 * x0};
    return Segment{base, base, true};
  }
  Int disc = chord_disc(l, surf);
  if (disc <= 0 || !is_perfect_square(disc)) return std::nullopt;
  Int f = isqrt_floor(disc);
  Rat x1 = Rat(-l.a - f) / (surf.h2 * l.b);
  Rat x2 = Rat(-l.a + f) / (surf.h2 * l.b);
  if (x1 > x2) std::swap(x1, x2);
  Rat y1 = (l.d - l.a * x1) / l.b;
  Rat y2 = (l.d - l.a * x2) / l.b;
  return Segment{PlanePoint{x1, y1}, PlanePoint{x2, y2}, false};
}

bool proportional(const MukaiVector& a, const MukaiVector& b) {
  return a.r * b.c - b.r * a.c == 0 && a.r * b.s - b.r * a.s == 0 &&
         a.c * b.s - b.c * a.s == 0;
}

// Sign of alpha + beta sqrt(disc), disc >= 0, decided by squaring.
int sign_linear_sqrt(const Rat& alpha, int beta, const Int& disc) {
  if (beta == 0 || disc == 0) return sign_of(alpha);
  if (alpha == 0) return beta;
  int sa = sign_of(alpha);
  if (sa == beta) return sa;
  Rat aa = alpha * alpha;
  if (aa > disc) return sa;
  if (aa < disc) return beta;
  return 0;
}

void require_bounds(const Int& bounds) {
  if (bounds < 1)
    throw Error(ErrorCode::ConstraintViolation, "search bounds must be at least 1");
}

}  // namespace

bool Line::contains(const PlanePoint& pt) const {
  return a * pt.x + b * pt.y == d;
}

Line line_through(const PlanePoint& p, const PlanePoint& q) {
  if (p == q)
    throw Error(ErrorCode::ConstraintViolation, "line through two equal points");
  Rat a = q.y - p.y;
  Rat b = p.x - q.x;
  Rat d = a * p.x + b * p.y;
  return normalize_line(a, b, d);
}

Line wall_line(const MukaiVector& v, const MukaiVector& v1, const SurfaceParams& surf) {
  (void)surf;  // the locus of equal phase does not depend on H^2
  if (proportional(v, v1))
    throw Error(ErrorCode::ProportionalClasses, "proportional classes have no wall");
  if (v.s == 0 && v1.s == 0)
    throw Error(ErrorCode::UnderdeterminedLine,
                "both classes project to infinity");
  if (v.s != 0 && v1.s != 0) return line_through(project(v), project(v1));
  // One class at infinity: line through the finite projection with
  // direction (c, r) of the infinite one.
  const MukaiVector& fin = v.s != 0 ? v : v1;
  const MukaiVector& inf = v.s != 0 ? v1 : v;
  PlanePoint p = project(fin);
  Rat a = Rat(inf.r);
  Rat b = Rat(-inf.c);
  return normalize_line(a, b, a * p.x + b * p.y);
}

bool no_wall_at_b(const MukaiVector& v, const Int& b0_num, const Int& b0_den) {
  if (b0_den == 0)
    throw Error(ErrorCode::ConstraintViolation, "b0 denominator is zero");
  Int num = b0_num, den = b0_den;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (boost::multiprecision::gcd(abs(num), den) != 1)
    throw Error(ErrorCode::ConstraintViolation, "b0 must be in lowest terms");
  Int t = den * v.c - num * v.r;
  return t == 1 || t == -1;
}

std::vector<Wall> enumerate_destabilizer_candidates(const MukaiVector& v,
                                                    const Line& probe,
                                                    const SlopeWindow& window,
                                                    const SurfaceParams& surf,
                                                    const Int& bounds) {
  if (window.lo > window.hi)
    throw Error(ErrorCode::EmptySlopeWindow, "slope window is empty");
  require_bounds(bounds);
  // A wall for v lies on probe only if v itself is compatible with probe.
  if (v.s != 0) {
    if (!probe.contains(project(v))) return {};
  } else {
    if (probe.a * v.c + probe.b * v.r != 0) return {};
  }
  PlanePoint sample = sample_above(probe, surf);
  Rat bstar = sample.x / sample.y;
  StabilityParams sp = params_from_point(sample, surf);

  std::map<MukaiVector, MukaiVector> pairs;  // witness -> complement
  auto try_candidate = [&](const Int& r1, const Int& c1, const Int& s1) {
    MukaiVector v1{r1, c1, s1};
    if (v1.r == 0 && v1.c == 0 && v1.s == 0) return;
    if (proportional(v1, v)) return;
    if (v.s == 0 && v1.s == 0) return;
    if (!(wall_line(v, v1, surf) == probe)) return;
    MukaiVector v2 = v - v1;
    if (square(v1, surf) < -2 * v1.c * v1.c) return;
    if (square(v2, surf) < -2 * v2.c * v2.c) return;
    for (const MukaiVector& u : {v1, v2}) {
      if (!(u.c - bstar * u.r > 0)) return;
      if (u.r > 0 && rat_frac(u.c, u.r) < window.hi) return;
      if (u.r < 0 && rat_frac(u.c, u.r) > window.lo) return;
    }
    // Phases genuinely agree along the probe.
    ChargeValue z1 = central_charge(v1, sp, surf);
    ChargeValue zv = central_charge(v, sp, surf);
    if (z1.re * zv.im - zv.re * z1.im != 0) return;
    MukaiVector witness = v1 < v2 ? v2 : v1;
    pairs.emplace(witness, v - witness);
  };

  for (Int r1 = -bounds; r1 <= bounds; ++r1) {
    for (Int c1 = -bounds; c1 <= bounds; ++c1) {
      Int t = probe.a * c1 + probe.b * r1;
      if (probe.d != 0) {
        if (t % probe.d != 0) continue;
        Int s1 = t / probe.d;
        if (abs(s1) > bounds) continue;
        try_candidate(r1, c1, s1);
      } else {
        if (t != 0) continue;
        for (Int s1 = -bounds; s1 <= bounds; ++s1) try_candidate(r1, c1, s1);
      }
    }
  }

  std::optional<Segment> seg = wall_segment(probe, surf);
  std::vector<Wall> out;
  out.reserve(pairs.size());
  for (const auto& [w, comp] : pairs) out.push_back(Wall{probe, w, comp, seg});
  return out;
}

std::vector<MukaiVector> enumerate_hn_factor_candidates(const MukaiVector& v,
                                                        const SurfaceParams& surf,
                                                        const Int& bounds) {
  if (v.c <= 0)
    throw Error(ErrorCode::PreconditionViolation,
                "factor enumeration needs c(v) > 0");
  require_bounds(bounds);
  Int linear_cap = 2 * abs(v.r) + abs(v.s);
  std::vector<MukaiVector> out;
  for (Int r1 = -bounds; r1 <= bounds; ++r1) {
    for (Int c1 = 1; c1 <= v.c; ++c1) {
      Int product_cap = c1 * c1 * (surf.h2 / 2 + 1);
      for (Int s1 = -bounds; s1 <= bounds; ++s1) {
        Int rs = r1 * s1;
        if (rs > product_cap) continue;
        if (rs <= 0 && std::max(abs(s1), abs(r1)) >= linear_cap) continue;
        out.push_back(MukaiVector{r1, c1, s1});
      }
    }
  }
  return out;  // loop nesting emits lexicographic order
}

Int default_search_bounds(const MukaiVector& v, const SurfaceParams& surf) {
  Int b = 4 * (abs(v.r) + abs(v.s) + abs(v.c) * surf.h2);
  return b < 4 ? Int(4) : b;
}

std::vector<WallCandidate> first_wall_candidates(const MukaiVector& v,
                                                 const SurfaceParams& surf,
                                                 const Int& bounds) {
  if (!(v.r == 0 && v.c > 0))
    throw Error(ErrorCode::PreconditionViolation,
                "first wall search needs a torsion class (0, c, s) with c > 0");
  require_bounds(bounds);
  std::vector<WallCandidate> out;
  for (Int c1 = 1; c1 < v.c; ++c1) {
    for (Int s1 = -bounds; s1 <= bounds; ++s1) {
      if (v.s == 0 && s1 == 0) continue;
      // Any rank decomposition of (0, c, s) restricts to (c, c1, s1) up to
      // sign and multiples; larger ranks violate the rigidity filter.
      MukaiVector v1{v.c, c1, s1};
      Line line = wall_line(v, v1, surf);
      if (line.b == 0) continue;  // vertical walls never cross b = 0
      Rat y0 = rat_frac(line.d, line.b);
      if (!(y0 > 0)) continue;
      if (!is_valid_stability_point(PlanePoint{Rat(0), y0}, surf)) continue;
      MukaiVector v2 = v - v1;
      if (square(v1, surf) < -2 * v1.c * v1.c) continue;
      if (square(v2, surf) < -2 * v2.c * v2.c) continue;
      Int disc = chord_disc(line, surf);
      if (disc <= 0) continue;  // (0, y0) above the parabola forces disc > 0
      PlanePoint sample = sample_above(line, surf);
      Rat bstar = sample.x / sample.y;
      bool keep = true;
      for (const MukaiVector& u : {v1, v2}) {
        if (!(u.c - bstar * u.r > 0)) {
          keep = false;
          break;
        }
        if (u.r == 0) continue;
        // Slope window cut out by the chord: positive ranks sit at or above
        // both endpoint ratios x/y = (a +- sqrt(disc))/(H^2 d), negative
        // ranks at or below. d != 0 because the line misses the origin.
        Rat mu = rat_frac(u.c, u.r);
        int sgn_d = sign_of(line.d);
        for (int branch : {1, -1}) {
          int rel = sign_linear_sqrt(mu * surf.h2 * line.d - line.a, -branch, disc) * sgn_d;
          if ((u.r > 0 && rel < 0) || (u.r < 0 && rel > 0)) {
            keep = false;
            break;
          }
        }
        if (!keep) break;
      }
      if (!keep) continue;
      out.push_back(WallCandidate{v1, line, y0});
    }
  }
  std::sort(out.begin(), out.end(), [](const WallCandidate& a, const WallCandidate& b) {
    if (a.y0 != b.y0) return a.y0 < b.y0;
    return a.v1 < b.v1;
  });
  return out;
}

Wall gieseker_first_wall(const MukaiVector& v, const SurfaceParams& surf,
                         const Int& bounds) {
  std::vector<WallCandidate> cands = first_wall_candidates(v, surf, bounds);
  if (cands.empty())
    throw Error(ErrorCode::NoWallFound, "no candidate wall in the search box");
  const Rat& ymin = cands.front().y0;
  Line line = cands.front().line;
  MukaiVector witness = cands.front().v1;
  for (const WallCandidate& c : cands) {
    if (c.y0 != ymin) break;
    if (!(c.line == line))
      throw Error(ErrorCode::WallMismatch,
                  "distinct candidate walls at the minimal height over b = 0");
    if (witness < c.v1) witness = c.v1;
  }
  return Wall{line, witness, v - witness, wall_segment(line, surf)};
}

}  // namespace mukai
