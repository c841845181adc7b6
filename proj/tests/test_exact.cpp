#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ice/boundary.hpp"
#include "ice/exact.hpp"

using namespace ice;

TEST_CASE("fill-in counts match frozen enumeration oracles") {
  struct Row {
    LatticeKind kind;
    int n;
    const char* count;
  };
  // Whole-boundary directed cycle; values frozen from independent runs of
  // the backtracker at different free-edge orderings.
  const Row rows[] = {
      {LatticeKind::Triangular, 4, "18"},
      {LatticeKind::Triangular, 6, "94677"},
      {LatticeKind::Kagome, 2, "2"},
      {LatticeKind::Kagome, 4, "7141"},
      {LatticeKind::T3464, 2, "387"},
  };
  for (const Row& r : rows) {
    CAPTURE(to_string(r.kind));
    CAPTURE(r.n);
    HexDomain d = build_domain(r.kind, r.n);
    auto res = enumerate_fill_ins(d, cycle_boundary(d));
    CHECK(res.count.get_str() == r.count);
    CHECK_FALSE(res.truncated);
    CHECK(res.configs.size() == res.count.get_ui());
    for (const auto& c : res.configs) CHECK(is_ice(d, c));
  }
}

TEST_CASE("edge-split boundary counts") {
  HexDomain d = build_domain(LatticeKind::Triangular, 6);
  auto res = enumerate_fill_ins(d, alternating_edge_split(d), 0);
  CHECK(res.count.get_str() == "56960");
  CHECK(res.configs.empty());  // count-only mode
}

TEST_CASE("store limit marks truncation") {
  HexDomain d = build_domain(LatticeKind::Triangular, 6);
  auto res = enumerate_fill_ins(d, cycle_boundary(d), 100);
  CHECK(res.truncated);
  CHECK(res.configs.empty());  // a partial store is dropped, not returned
  CHECK(res.count.get_str() == "94677");  // counting continues past the store
}

TEST_CASE("full flip graph is connected") {
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, kind == LatticeKind::Triangular ? 4 : 2);
    auto res = enumerate_fill_ins(d, cycle_boundary(d));
    auto g = flip_graph(d, res.configs, default_schedule(kind).passes);
    CHECK(g.nodes == res.configs.size());
    CHECK(g.components == 1);
  }
}

TEST_CASE("restricted move set disconnects the Fig 4a instance") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  auto c = seed_config(d, {SeedTag::Fig4a});
  auto res = enumerate_fill_ins(d, boundary_of(d, c));
  CHECK(res.count.get_str() == "4");
  auto up = flip_graph(d, res.configs, {FlipFamily::EvenTriangle});
  CHECK(up.components == 2);
  auto full = flip_graph(d, res.configs, default_schedule(d.kind).passes);
  CHECK(full.components == 1);
}

TEST_CASE("entropy per arrow") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  CHECK(entropy_of(d, mpz_class(1)) == 0.0);
  CHECK(entropy_of(d, mpz_class(18)) ==
        doctest::Approx(std::log(18.0) / double(d.edges.size())).epsilon(1e-12));
}

TEST_CASE("sampler is uniform on an enumerated instance") {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  auto res = enumerate_fill_ins(d, from_signature(d, {0, 0, 0, 0, 0, 0}));
  REQUIRE(res.count.get_str() == "11");
  auto sched = default_schedule(d.kind);
  auto u = uniformity_test(d, res.configs, sched, 3, 20000, 1, 500);
  CHECK(u.pValue > 0.01);
  CHECK(u.dof == 10);
  // Negative control: deterministic flips are far from uniform.
  auto bad = uniformity_test(d, res.configs, sched, 3, 20000, 1, 500, CoinMode::AlwaysFlip);
  CHECK(bad.pValue < 1e-6);
}
