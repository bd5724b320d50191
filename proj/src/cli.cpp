#include "mukai/cli.hpp"

#include "mukai/brill_noether.hpp"
#include "mukai/cases.hpp"
#include "mukai/errors.hpp"
#include "mukai/lattice.hpp"
#include "mukai/radical.hpp"
#include "mukai/stability.hpp"
#include "mukai/walls.hpp"

#include "json_io.hpp"
#include "svg_render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <utility>

namespace mukai {

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct RunParams {
  std::optional<Int> h2;
  std::optional<std::pair<Int, Int>> case_a;
  std::optional<Int> case_b;
  std::optional<Int> bounds;
  unsigned precision = 1024;
  Int seed = 0;
};

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError, "not an integer: " + s);
  }
}

int surface_sources(const RunParams& rp) {
  return int(rp.h2.has_value()) + int(rp.case_a.has_value()) +
         int(rp.case_b.has_value());
}

SurfaceParams surface_of(const RunParams& rp) {
  if (surface_sources(rp) != 1)
    throw Error(ErrorCode::UsageError,
                "exactly one of --h2, --case-a, --case-b is required");
  if (rp.h2) return make_surface(*rp.h2);
  if (rp.case_a) return build_case_a(rp.case_a->first, rp.case_a->second).surf;
  return build_case_b(*rp.case_b).surf;
}

Json params_json(const RunParams& rp) {
  Json j;
  if (rp.h2) j["h2"] = json_int(*rp.h2);
  if (rp.case_a) {
    j["r"] = json_int(rp.case_a->first);
    j["s"] = json_int(rp.case_a->second);
  }
  if (rp.case_b) j["p"] = json_int(*rp.case_b);
  if (rp.bounds) j["bounds"] = json_int(*rp.bounds);
  j["precision"] = rp.precision;
  j["seed"] = json_int(rp.seed);
  return j;
}

RunParams params_from_json(const Json& j) {
  RunParams rp;
  auto get_int = [&](const char* k) { return parse_int(j.at(k).get<std::string>()); };
  if (j.contains("h2")) rp.h2 = get_int("h2");
  if (j.contains("r") && j.contains("s")) rp.case_a = std::pair(get_int("r"), get_int("s"));
  if (j.contains("p")) rp.case_b = get_int("p");
  if (j.contains("bounds")) rp.bounds = get_int("bounds");
  if (j.contains("precision")) rp.precision = j.at("precision").get<unsigned>();
  if (j.contains("seed")) rp.seed = get_int("seed");
  return rp;
}

Json make_document(const std::string& command, Json params, Json surface, Json result,
                   Json certificate, bool ok) {
  Json doc;
  doc["tool_version"] = kToolVersion;
  doc["command"] = command;
  doc["params"] = std::move(params);
  doc["surface"] = std::move(surface);
  doc["result"] = std::move(result);
  doc["certificate"] = std::move(certificate);
  doc["status"] = ok ? "ok" : "fail";
  return doc;
}

Json build_roots_document(const RunParams& rp) {
  SurfaceParams surf = surface_of(rp);
  Int bound = rp.bounds.value_or(Int(10));
  std::vector<MukaiVector> roots =
      enumerate_roots_in_box(surf, bound, bound, bound, Region::whole_plane());
  Json arr = Json::array();
  for (const MukaiVector& d : roots) {
    Json e;
    e["class"] = json_mv(d);
    e["projection"] = json_point(project(d));
    e["hole"] = d.r > 0 ? json_segment(hole_segment(d, surf)) : Json(nullptr);
    arr.push_back(std::move(e));
  }
  Json result{{"count", roots.size()}, {"bound", json_int(bound)}};
  return make_document("roots", params_json(rp), Json{{"h2", json_int(surf.h2)}},
                       std::move(result), std::move(arr), true);
}

Json build_verify_document(const std::string& target, const RunParams& rp) {
  SurfaceParams surf = surface_of(rp);
  Json params = params_json(rp);
  params["target"] = target;
  Json certs = Json::array();
  Json result;
  bool ok = true;

  auto require_case_a = [&]() {
    if (!rp.case_a)
      throw Error(ErrorCode::UsageError, "target " + target + " needs --case-a R S");
    return build_case_a(rp.case_a->first, rp.case_a->second);
  };
  auto require_case_b = [&]() {
    if (!rp.case_b)
      throw Error(ErrorCode::UsageError, "target " + target + " needs --case-b P");
    return build_case_b(*rp.case_b);
  };
  auto h0_result = [&](const MukaiVector& v, const MukaiVector& vbar) {
    ChargeValue o{Rat(0), Rat(0)};
    HNPolygon triangle({o, zbar(vbar), zbar(v)});
    H0Bound bound = h0_bound_polygon(v, triangle, surf);
    certs.push_back(json_h0(bound));
    Int expected = euler_char(vbar);
    bool matches = bound.floor_value == expected;
    ok = ok && matches;
    return Json{{"h0_ceiling", json_int(bound.floor_value)},
                {"chi_vbar", json_int(expected)},
                {"matches", matches}};
  };

  try {
    if (target == "lemma26") {
      Int scan = rp.bounds.value_or(Int(50));
      Int verified = 0;
      for (Int n2 = 1; n2 <= surf.h2; ++n2) {
        NoRootsCertificate c = certify_no_roots_U(n2, surf, scan);
        if (c.ok()) ++verified;
        ok = ok && c.ok();
        certs.push_back(json_no_roots(c));
      }
      result = Json{{"checked", json_int(surf.h2)}, {"verified", json_int(verified)}};
    } else if (target == "lemma27") {
      if (!rp.case_a && !rp.case_b)
        throw Error(ErrorCode::UsageError, "lemma27 needs --case-a or --case-b");
      CaseRegions cr = rp.case_a ? certify_case_regions(require_case_a())
                                 : certify_case_regions(require_case_b());
      ok = cr.ok();
      certs.push_back(json_case_regions(cr));
      result = Json{{"m2", json_int(cr.m2)},
                    {"n2", json_int(cr.n2)},
                    {"eps2", json_int(cr.eps2)},
                    {"cover_checks", cr.cert.cover.size()},
                    {"pieces", cr.cert.pieces.size()}};
    } else if (target == "case-a" || target == "case-b") {
      // Full certificate chain for one family member: root-free regions,
      // mass gap, first wall, excluded root, h^0 ceiling.
      MukaiVector v, vbar;
      PlanePoint t_point{Rat(0), Rat(0)};
      CaseRegions cr{};
      GapCertificate gap;
      if (target == "case-a") {
        CaseAParams ca = require_case_a();
        v = ca.v;
        vbar = ca.vbar;
        cr = certify_case_regions(ca);
        gap = gap_certificate_a(ca, rp.precision);
        t_point = named_points(ca).at("t");
      } else {
        CaseBParams cb = require_case_b();
        v = cb.v;
        vbar = cb.vbar;
        cr = certify_case_regions(cb);
        gap = gap_certificate_b(cb, rp.precision);
        t_point = named_points(cb).at("t");
      }
      certs.push_back(json_case_regions(cr));
      ok = ok && cr.ok();
      certs.push_back(json_gap(gap));
      ok = ok && gap.ok();
      FirstWallCertificate fw =
          rp.case_a ? verify_first_wall(build_case_a(rp.case_a->first, rp.case_a->second))
                    : verify_first_wall(build_case_b(*rp.case_b));
      certs.push_back(json_first_wall(fw));
      RootExclusion ex = exclude_root_at_point(t_point, surf);
      certs.push_back(json_root_exclusion(ex));
      ok = ok && !ex.root_exists;
      result = h0_result(v, vbar);
      result["gap_ok"] = gap.ok();
      result["regions_ok"] = cr.ok();
      result["first_wall_y0"] = json_rat(fw.y0);
    } else if (target == "first-wall") {
      if (!rp.case_a && !rp.case_b)
        throw Error(ErrorCode::UsageError, "first-wall needs --case-a or --case-b");
      FirstWallCertificate fw =
          rp.case_a ? verify_first_wall(build_case_a(rp.case_a->first, rp.case_a->second))
                    : verify_first_wall(build_case_b(*rp.case_b));
      certs.push_back(json_first_wall(fw));
      result = Json{{"y0", json_rat(fw.y0)},
                    {"witness", json_mv(fw.wall.witness)},
                    {"candidates", fw.candidate_count}};
    } else if (target == "h0") {
      if (rp.case_a) {
        CaseAParams ca = require_case_a();
        result = h0_result(ca.v, ca.vbar);
      } else if (rp.case_b) {
        CaseBParams cb = require_case_b();
        result = h0_result(cb.v, cb.vbar);
      } else {
        throw Error(ErrorCode::UsageError, "h0 needs --case-a or --case-b");
      }
    } else {
      throw Error(ErrorCode::UsageError, "unknown verify target: " + target);
    }
  } catch (const Error& e) {
    // Falsified or undecidable checks still produce a document; parameter
    // and usage problems propagate to the caller.
    switch (e.code()) {
      case ErrorCode::WallMismatch:
      case ErrorCode::NoWallFound:
      case ErrorCode::UndecidedComparison:
        ok = false;
        result = Json{{"error", Json{{"code", error_code_name(e.code())},
                                     {"message", e.what()}}}};
        break;
      default:
        throw;
    }
  }
  return make_document("verify", std::move(params), Json{{"h2", json_int(surf.h2)}},
                       std::move(result), std::move(certs), ok);
}

struct FigureCase {
  SurfaceParams surf;
  MukaiVector v, vbar;
  std::map<std::string, PlanePoint> pts;
  bool is_a;
  Int r, s, p;
};

FigureCase figure_case(const RunParams& rp) {
  FigureCase fc;
  if (rp.case_a) {
    CaseAParams ca = build_case_a(rp.case_a->first, rp.case_a->second);
    fc = FigureCase{ca.surf, ca.v, ca.vbar, named_points(ca), true, ca.r, ca.s, 0};
  } else if (rp.case_b) {
    CaseBParams cb = build_case_b(*rp.case_b);
    fc = FigureCase{cb.surf, cb.v, cb.vbar, named_points(cb), false, 0, 0, cb.p};
  } else {
    throw Error(ErrorCode::UsageError, "plot needs --case-a R S or --case-b P");
  }
  return fc;
}

void add_holes(Scene* scene, const SurfaceParams& surf, const Rat& y_cap) {
  for (const MukaiVector& d :
       enumerate_roots_in_box(surf, 3, 3, 3, Region::whole_plane())) {
    if (d.r <= 0) continue;
    PlanePoint pr = project(d);
    if (pr.x < scene->x_min || pr.x > scene->x_max) continue;
    Segment h = hole_segment(d, surf);
    if (h.to_infinity) {
      scene->segments.push_back(
          SceneSegment{"hole", h.a, PlanePoint{h.a.x, y_cap}, true});
    } else {
      scene->segments.push_back(SceneSegment{"hole", h.a, h.b, false});
    }
  }
}

void frame_from_points(Scene* scene) {
  Rat x_min = 0, x_max = 0;
  for (const ScenePoint& sp : scene->points) {
    x_min = std::min(x_min, sp.p.x);
    x_max = std::max(x_max, sp.p.x);
  }
  for (const SceneSegment& sg : scene->segments) {
    x_min = std::min({x_min, sg.a.x, sg.b.x});
    x_max = std::max({x_max, sg.a.x, sg.b.x});
  }
  if (x_max == x_min) x_max = x_min + 1;
  Rat pad = (x_max - x_min) / 5;
  scene->x_min = x_min - pad;
  scene->x_max = x_max + pad;
}

std::string build_figure(const std::string& figure, const RunParams& rp) {
  if (figure == "polygon") {
    FigureCase fc = figure_case(rp);
    Scene scene;
    scene.h2 = 0;
    ChargeValue g1 = zbar(fc.vbar), g2 = zbar(fc.v);
    auto pp = [](const ChargeValue& z) { return PlanePoint{z.re, z.im}; };
    PlanePoint o{Rat(0), Rat(0)};
    scene.segments.push_back(SceneSegment{"mass", o, pp(g1)});
    scene.segments.push_back(SceneSegment{"mass", pp(g1), pp(g2)});
    scene.segments.push_back(SceneSegment{"chord", pp(g2), o});
    std::vector<std::pair<std::string, PlanePoint>> inner;
    if (fc.is_a) {
      // Inner comparison chain: g1' and (for r > 2) g2' between g1 and g2.
      const Int &r = fc.r, &s = fc.s;
      inner.emplace_back("g1p", PlanePoint{Rat(r - s + 1), Rat(1)});
      if (r > 2)
        inner.emplace_back(
            "g2p", PlanePoint{Rat(s * (r - 2) + r) - Rat(r, r - 1), Rat(2)});
    } else {
      const Int& p = fc.p;
      inner.emplace_back("s1", PlanePoint{Rat(4 - p, 2), Rat(1)});
      inner.emplace_back("s2", PlanePoint{Rat(5 - p), Rat(2)});
      inner.emplace_back("s3", PlanePoint{Rat(4 - p, 2), Rat(3)});
    }
    PlanePoint prev = o;
    for (const auto& [label, pt] : inner) {
      scene.segments.push_back(SceneSegment{"inner", prev, pt});
      prev = pt;
    }
    scene.segments.push_back(SceneSegment{"inner", prev, pp(g2)});
    scene.points.push_back(ScenePoint{"o", o});
    scene.points.push_back(ScenePoint{"g1", pp(g1)});
    scene.points.push_back(ScenePoint{"g2", pp(g2)});
    for (const auto& [label, pt] : inner) scene.points.push_back(ScenePoint{label, pt});
    frame_from_points(&scene);
    return render_svg(scene);
  }

  FigureCase fc = figure_case(rp);
  Scene scene;
  scene.h2 = fc.surf.h2;
  if (figure == "walls") {
    for (const auto& [label, pt] : fc.pts) scene.points.push_back(ScenePoint{label, pt});
    Int bounds = rp.bounds.value_or(default_search_bounds(fc.v, fc.surf));
    Wall w = gieseker_first_wall(fc.v, fc.surf, bounds);
    if (w.segment)
      scene.segments.push_back(SceneSegment{"wall", w.segment->a, w.segment->b});
    frame_from_points(&scene);
    Rat y_cap = 0;
    for (const ScenePoint& sp : scene.points) y_cap = std::max(y_cap, sp.p.y);
    y_cap = y_cap * Rat(3, 2) + 1;
    add_holes(&scene, fc.surf, y_cap);
    return render_svg(scene);
  }
  if (figure == "regions") {
    // Hole-free zone: the cone over the chord corners e and t, plus the
    // strip of the first covering prism U_{m + eps}.
    PlanePoint o{Rat(0), Rat(0)};
    PlanePoint e = fc.pts.at("e"), t = fc.pts.at("t");
    scene.regions.push_back(SceneRegionPoly{"region", {o, e, t}});
    Int m2 = fc.is_a ? 2 * fc.r : Int(4);
    Int eps2 = fc.is_a ? Int(2) : Int(1);
    Rat half_w(2, m2 + eps2);
    Rat edge_y = Rat(fc.surf.h2) / (m2 + eps2) * half_w;
    for (const char* key : {"e", "t", "tprime", "otilde", "oprime", "gamma_m",
                            "gamma_n", "gamma_n_minus_eps"}) {
      scene.points.push_back(ScenePoint{key, fc.pts.at(key)});
    }
    Rat y_cap = 0;
    for (const ScenePoint& sp : scene.points) y_cap = std::max(y_cap, sp.p.y);
    y_cap = y_cap * Rat(3, 2) + 1;
    for (int sx : {1, -1}) {
      Rat xe = sx * half_w;
      scene.regions.push_back(SceneRegionPoly{
          "region",
          {o, PlanePoint{xe, edge_y}, PlanePoint{xe, y_cap}, PlanePoint{Rat(0), y_cap}}});
    }
    // Chord of the mirrored gamma points bounding the zone from below.
    PlanePoint gm = fc.pts.at("gamma_m"), gn = fc.pts.at("gamma_n");
    scene.segments.push_back(SceneSegment{
        "chord", PlanePoint{-gm.x, gm.y}, PlanePoint{-gn.x, gn.y}});
    frame_from_points(&scene);
    add_holes(&scene, fc.surf, y_cap);
    return render_svg(scene);
  }
  throw Error(ErrorCode::UsageError, "unknown figure: " + figure);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("exact wall-and-region computations for stability on a degree-2n K3",
               "mukai-walls");

  std::string h2_s, case_b_s, bounds_s, seed_s;
  std::vector<std::string> case_a_s;
  unsigned precision = 1024;
  std::string out_path, in_path, target, figure;
  bool flag_json = false, flag_svg = false;

  app.add_option("--h2", h2_s, "surface degree H^2 (positive even integer)");
  app.add_option("--case-a", case_a_s, "family A parameters R S")->expected(2);
  app.add_option("--case-b", case_b_s, "family B parameter P (odd, >= 13)");
  app.add_option("--bounds", bounds_s, "search box half-width");
  app.add_option("--precision", precision, "interval refinement limit in bits (>= 64)");
  app.add_option("--seed", seed_s, "sampling seed, recorded in the output");
  app.add_option("--out", out_path, "write the output to this file");
  app.add_flag("--json", flag_json, "emit JSON (default for roots and verify)");
  app.add_flag("--svg", flag_svg, "emit SVG (plot output format)");

  auto* roots_cmd = app.add_subcommand("roots", "enumerate roots and their holes in a box");
  auto* verify_cmd = app.add_subcommand("verify", "replay a verification target");
  verify_cmd->add_option("target", target,
                         "one of: lemma26 lemma27 case-a case-b first-wall h0")
      ->required();
  auto* plot_cmd = app.add_subcommand("plot", "render a figure as SVG");
  plot_cmd->add_option("figure", figure, "one of: regions walls polygon")->required();
  auto* recheck_cmd =
      app.add_subcommand("recheck", "re-run a saved document and compare verdicts");
  recheck_cmd->add_option("--in", in_path, "JSON document produced by this tool")
      ->required();
  for (auto* sub : {roots_cmd, verify_cmd, plot_cmd, recheck_cmd}) sub->fallthrough();
  app.require_subcommand(1);

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("mukai-walls");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (precision < 64)
      throw Error(ErrorCode::UsageError, "--precision must be at least 64");
    RunParams rp;
    rp.precision = precision;
    if (!h2_s.empty()) rp.h2 = parse_int(h2_s);
    if (!case_a_s.empty())
      rp.case_a = std::pair(parse_int(case_a_s[0]), parse_int(case_a_s[1]));
    if (!case_b_s.empty()) rp.case_b = parse_int(case_b_s);
    if (!bounds_s.empty()) {
      rp.bounds = parse_int(bounds_s);
      if (*rp.bounds < 1)
        throw Error(ErrorCode::UsageError, "--bounds must be at least 1");
    }
    if (!seed_s.empty()) rp.seed = parse_int(seed_s);

    auto emit = [&](const std::string& text) {
      if (out_path.empty()) {
        out << text;
        return;
      }
      std::ofstream f(out_path, std::ios::binary);
      if (!f)
        throw Error(ErrorCode::IoError, "cannot open output file: " + out_path);
      f << text;
      f.flush();
      if (!f.good())
        throw Error(ErrorCode::IoError, "failed writing output file: " + out_path);
    };

    if (roots_cmd->parsed()) {
      Json doc = build_roots_document(rp);
      emit(doc.dump(2) + "\n");
      return doc["status"] == "ok" ? 0 : 1;
    }
    if (verify_cmd->parsed()) {
      Json doc = build_verify_document(target, rp);
      emit(doc.dump(2) + "\n");
      return doc["status"] == "ok" ? 0 : 1;
    }
    if (plot_cmd->parsed()) {
      emit(build_figure(figure, rp));
      return 0;
    }
    // recheck
    std::ifstream f(in_path);
    if (!f) throw Error(ErrorCode::IoError, "cannot open input file: " + in_path);
    Json doc;
    try {
      doc = Json::parse(f);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::UsageError, std::string("invalid JSON input: ") + e.what());
    }
    if (!doc.contains("command") || !doc.contains("params"))
      throw Error(ErrorCode::UsageError, "document lacks command or params");
    std::string cmd = doc.at("command").get<std::string>();
    RunParams stored = params_from_json(doc.at("params"));
    Json fresh;
    if (cmd == "roots") {
      fresh = build_roots_document(stored);
    } else if (cmd == "verify") {
      fresh = build_verify_document(doc.at("params").at("target").get<std::string>(),
                                    stored);
    } else {
      throw Error(ErrorCode::UsageError, "recheck handles roots and verify documents");
    }
    bool match = fresh.at("result") == doc.at("result") &&
                 fresh.at("certificate") == doc.at("certificate") &&
                 fresh.at("status") == doc.at("status");
    out << (match ? "recheck: match\n" : "recheck: mismatch\n");
    return match ? 0 : 1;
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::WallMismatch:
      case ErrorCode::NoWallFound:
      case ErrorCode::UndecidedComparison:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mukai
