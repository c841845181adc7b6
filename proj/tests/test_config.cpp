#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "ice/boundary.hpp"

using namespace ice;

static Configuration legal_config(const HexDomain& d) {
  return seed_config(d, {SeedTag::AllOneCycles});
}

TEST_CASE("all-1-cycles seed is legal everywhere") {
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, 6);
    Configuration c = legal_config(d);
    CHECK(is_ice(d, c));
    int directed = 0;
    for (const auto& f : d.faces)
      directed += face_orientation(d, c, f.id) != FaceOrient::None;
    CHECK(directed == int(d.faces.size()));
  }
}

TEST_CASE("ice violations are reported per vertex") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  Configuration c = legal_config(d);
  // Reversing one interior arrow unbalances both endpoints.
  int eid = -1;
  for (const auto& e : d.edges)
    if (!e.boundary && d.vertex(e.tail).interior && d.vertex(e.head).interior) eid = e.id;
  REQUIRE(eid >= 0);
  c.bits[eid] ^= 1;
  auto bad = ice_violations(d, c);
  CHECK(bad.size() == 2);
  CHECK_FALSE(is_ice(d, c));
}

TEST_CASE("height field closes and flips move the face center by 2") {
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, 6);
    Configuration c = legal_config(d);
    HeightField h = height_field(d, c);
    CHECK(h.h[d.dual.basePoint] == 0);
    auto prof = boundary_profile(d, c);
    CHECK(prof.front() == 0);
    CHECK(prof.back() == 0);
    // Heights reconstruct the arrows.
    CHECK(config_of_field(d, h.h).bits == c.bits);
    // A 1-cycle flip changes only the center height, by exactly 2.
    int fid = -1;
    for (const auto& f : d.faces)
      if (!f.touchesBoundary && face_orientation(d, c, f.id) != FaceOrient::None) fid = f.id;
    REQUIRE(fid >= 0);
    Configuration c2 = c;
    flip_face(d, c2, fid);
    CHECK(is_ice(d, c2));
    HeightField h2 = height_field(d, c2);
    int diffs = 0;
    for (std::size_t i = 0; i < h.h.size(); ++i)
      if (h.h[i] != h2.h[i]) {
        ++diffs;
        CHECK(std::abs(h.h[i] - h2.h[i]) == 2);
        CHECK(int(i) == d.face(fid).centerDual);
      }
    CHECK(diffs == 1);
    flip_face(d, c2, fid);
    CHECK(c2.bits == c.bits);  // involution
  }
}

TEST_CASE("height field rejects broken configurations") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  Configuration c = legal_config(d);
  int eid = -1;
  for (const auto& e : d.edges)
    if (!e.boundary && d.vertex(e.tail).interior && d.vertex(e.head).interior) eid = e.id;
  c.bits[eid] ^= 1;
  CHECK_THROWS_AS(height_field(d, c), invalid_config_error);
}

TEST_CASE("signature tilts sum to zero flux") {
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, 6);
    auto sig = signature_of(d, legal_config(d));
    // Weighted by side lengths, the tilts cancel.
    long long num = 0, den = 1;
    for (int k = 0; k < 6; ++k) {
      num = num * sig.tilt[k].den + sig.tilt[k].num * den * d.sideLength();
      den *= sig.tilt[k].den;
    }
    CHECK(num == 0);
  }
}

TEST_CASE("partial order and extremal elements") {
  HexDomain d = build_domain(LatticeKind::Triangular, 6);
  Configuration c = legal_config(d);
  Configuration hi = extremal(d, c, Extremal::Max);
  Configuration lo = extremal(d, c, Extremal::Min);
  CHECK(is_ice(d, hi));
  CHECK(is_ice(d, lo));
  HeightField hc = height_field(d, c), hHi = height_field(d, hi), hLo = height_field(d, lo);
  CHECK(compare_heights(hLo, hHi) == PartialOrder::Less);
  auto leq = [](PartialOrder o) { return o == PartialOrder::Less || o == PartialOrder::Equal; };
  CHECK(leq(compare_heights(hLo, hc)));
  CHECK(leq(compare_heights(hc, hHi)));
  // Extremal configurations have no interior CCW (resp. CW) 1-cycle left.
  for (const auto& f : d.faces) {
    if (f.touchesBoundary) continue;
    CHECK(face_orientation(d, hi, f.id) != FaceOrient::CCW);
    CHECK(face_orientation(d, lo, f.id) != FaceOrient::CW);
  }
  // max_fill_in recovers the maximal element from the boundary alone.
  auto mf = max_fill_in(d, boundary_of(d, c));
  REQUIRE(mf);
  CHECK(mf->bits == hi.bits);
}

TEST_CASE("max_fill_in rejects a contradictory boundary") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  BoundarySpec s = boundary_of(d, legal_config(d));
  // Point every boundary arrow at its interior endpoint: influx overload.
  for (const auto& e : d.edges)
    if (e.boundary) s.bit[e.id] = d.vertex(e.head).interior ? 1 : 0;
  CHECK_FALSE(max_fill_in(d, s));
}

TEST_CASE("config and boundary files round-trip") {
  HexDomain d = build_domain(LatticeKind::Kagome, 4);
  Configuration c = legal_config(d);
  std::stringstream f;
  write_config(d, c, f);
  CHECK(read_config(d, f).bits == c.bits);

  BoundarySpec s = boundary_of(d, c);
  std::stringstream g;
  write_boundary(d, s, g);
  BoundarySpec s2 = read_boundary(d, g);
  CHECK(s2.bit == s.bit);
  CHECK(is_boundary_spec(d, s2));

  std::stringstream bad("ICECFG tri 4\n0 1\n");
  CHECK_THROWS_AS(read_config(d, bad), format_error);
}
