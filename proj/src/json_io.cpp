#include "json_io.hpp"

namespace mukai {

Json json_int(const Int& v) { return v.str(); }

Json json_rat(const Rat& v) {
  return Json{{"num", rat_num(v).str()}, {"den", rat_den(v).str()}};
}

Json json_point(const PlanePoint& p) {
  return Json{{"x", json_rat(p.x)}, {"y", json_rat(p.y)}};
}

Json json_mv(const MukaiVector& v) {
  return Json{{"r", json_int(v.r)}, {"c", json_int(v.c)}, {"s", json_int(v.s)}};
}

Json json_line(const Line& l) {
  return Json{{"a", json_int(l.a)}, {"b", json_int(l.b)}, {"d", json_int(l.d)}};
}

Json json_segment(const Segment& s) {
  return Json{{"a", json_point(s.a)},
              {"b", json_point(s.b)},
              {"to_infinity", s.to_infinity}};
}

Json json_charge(const ChargeValue& z) {
  return Json{{"re", json_rat(z.re)}, {"im", json_rat(z.im)}};
}

Json json_radical(const RadicalValue& v) {
  Json terms = Json::array();
  for (const auto& [d, q] : v.radical_terms()) {
    terms.push_back(Json{{"radicand", json_int(d)}, {"coeff", json_rat(q)}});
  }
  return Json{{"rational", json_rat(v.rational_part())}, {"terms", terms}};
}

Json json_comparison(const ComparisonCertificate& c) {
  return Json{{"ord", ordering_name(c.ord)},
              {"method", c.method},
              {"bits", c.bits},
              {"diff_lo", json_rat(c.diff_lo)},
              {"diff_hi", json_rat(c.diff_hi)}};
}

Json json_no_roots(const NoRootsCertificate& c) {
  Json hits = Json::array();
  for (const MukaiVector& v : c.scan_hits) hits.push_back(json_mv(v));
  return Json{{"n2", json_int(c.n2)},       {"h2", json_int(c.h2)},
              {"by_proof", c.by_proof},     {"argument", c.argument},
              {"scan_bound", json_int(c.scan_bound)},
              {"scan_hits", hits},          {"ok", c.ok()}};
}

Json json_cover_check(const CoverCheck& c) {
  return Json{{"k2", json_int(c.k2)},
              {"xk", json_rat(c.xk)},
              {"bound", json_rat(c.bound)},
              {"ok", c.ok}};
}

Json json_lemma27(const Lemma27Certificate& c) {
  Json cover = Json::array();
  for (const CoverCheck& cc : c.cover) cover.push_back(json_cover_check(cc));
  Json pieces = Json::array();
  for (const NoRootsCertificate& nc : c.pieces) pieces.push_back(json_no_roots(nc));
  return Json{{"m2", json_int(c.m2)},   {"n2", json_int(c.n2)},
              {"eps2", json_int(c.eps2)}, {"h2", json_int(c.h2)},
              {"q", json_point(c.q)},   {"qprime", json_point(c.qprime)},
              {"cover", cover},         {"pieces", pieces},
              {"ok", c.ok()}};
}

Json json_case_regions(const CaseRegions& c) {
  return Json{{"m2", json_int(c.m2)},
              {"n2", json_int(c.n2)},
              {"eps2", json_int(c.eps2)},
              {"cert", json_lemma27(c.cert)},
              {"ok", c.ok()}};
}

Json json_gap(const GapCertificate& c) {
  Json j{{"case_id", c.case_id},
         {"l", json_radical(c.l)},
         {"l_in", json_radical(c.l_in)},
         {"two_eps", json_radical(c.two_eps)},
         {"gap", json_comparison(c.gap)},
         {"ok", c.ok()}};
  j["f1"] = c.f1 ? json_rat(*c.f1) : Json(nullptr);
  j["f2"] = c.f2 ? json_radical(*c.f2) : Json(nullptr);
  j["f_sum_lower"] = c.f_sum_lower ? json_comparison(*c.f_sum_lower) : Json(nullptr);
  j["eps_upper"] = c.eps_upper ? json_comparison(*c.eps_upper) : Json(nullptr);
  j["chain_holds"] = c.chain_holds ? Json(*c.chain_holds) : Json(nullptr);
  return j;
}

Json json_root_exclusion(const RootExclusion& c) {
  Json j{{"point", json_point(c.pt)},
         {"modulus", json_int(c.modulus)},
         {"discriminant", json_int(c.discriminant)},
         {"root_exists", c.root_exists}};
  j["root"] = c.root ? json_mv(*c.root) : Json(nullptr);
  return j;
}

Json json_wall(const Wall& w) {
  Json j{{"line", json_line(w.line)},
         {"witness", json_mv(w.witness)},
         {"complement", json_mv(w.complement)}};
  j["segment"] = w.segment ? json_segment(*w.segment) : Json(nullptr);
  return j;
}

Json json_wall_candidate(const WallCandidate& c) {
  return Json{{"v1", json_mv(c.v1)}, {"line", json_line(c.line)}, {"y0", json_rat(c.y0)}};
}

Json json_first_wall(const FirstWallCertificate& c) {
  return Json{{"wall", json_wall(c.wall)},
              {"y0", json_rat(c.y0)},
              {"expected", json_mv(c.expected)},
              {"q", json_point(c.q)},
              {"candidate_count", c.candidate_count}};
}

Json json_h0(const H0Bound& b) {
  return Json{{"bound", json_radical(b.bound)}, {"floor", json_int(b.floor_value)}};
}

}  // namespace mukai
