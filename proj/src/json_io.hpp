#pragma once

#include "mukai/brill_noether.hpp"
#include "mukai/cases.hpp"
#include "mukai/lattice.hpp"
#include "mukai/plane.hpp"
#include "mukai/radical.hpp"
#include "mukai/stability.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

namespace mukai {

using Json = nlohmann::json;

// Integers and rationals are serialized as decimal strings so documents
// survive readers with 64-bit number limits.
Json json_int(const Int& v);
Json json_rat(const Rat& v);
Json json_point(const PlanePoint& p);
Json json_mv(const MukaiVector& v);
Json json_line(const Line& l);
Json json_segment(const Segment& s);
Json json_charge(const ChargeValue& z);
Json json_radical(const RadicalValue& v);
Json json_comparison(const ComparisonCertificate& c);
Json json_no_roots(const NoRootsCertificate& c);
Json json_cover_check(const CoverCheck& c);
Json json_lemma27(const Lemma27Certificate& c);
Json json_case_regions(const CaseRegions& c);
Json json_gap(const GapCertificate& c);
Json json_root_exclusion(const RootExclusion& c);
Json json_wall(const Wall& w);
Json json_wall_candidate(const WallCandidate& c);
Json json_first_wall(const FirstWallCertificate& c);
Json json_h0(const H0Bound& b);

}
