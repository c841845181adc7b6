// Acceptance gate: one line per criterion, PASS/FAIL, exit = #failures.
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "ice/analysis.hpp"
#include "ice/boundary.hpp"
#include "ice/exact.hpp"

using namespace ice;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %2d %s %s (%s)\n", idx, ok ? "PASS" : "FAIL", name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// --- 1. local legality counts -------------------------------------------
void criterion1() {
  std::ostringstream det;
  bool ok = true;
  const struct {
    LatticeKind kind;
    int legal, classes;
  } want[] = {{LatticeKind::Triangular, 20, 1},
              {LatticeKind::Kagome, 6, 3},
              {LatticeKind::T3464, 6, 6}};
  for (auto w : want) {
    HexDomain d = build_domain(w.kind, 6);
    std::set<std::multiset<std::pair<int, int>>> classes;
    int legal = -1;
    for (int v : d.interiorVertexIds) {
      std::multiset<std::pair<int, int>> steps;
      int deg = int(d.vertexEdges[v].size());
      int cnt = 0;
      for (int m = 0; m < (1 << deg); ++m) {
        int in = 0, out = 0;
        for (int i = 0; i < deg; ++i) {
          const Edge& e = d.edges[d.vertexEdges[v][i]];
          (((m >> i) & 1) == (e.tail == v) ? out : in)++;
        }
        cnt += in == out;
      }
      for (int eid : d.vertexEdges[v]) {
        const Edge& e = d.edges[eid];
        Axial s = d.vertices[e.tail == v ? e.head : e.tail].at - d.vertices[v].at;
        steps.insert({s.a, s.b});
      }
      classes.insert(steps);
      if (legal < 0) legal = cnt;
      ok &= legal == cnt;
    }
    ok &= legal == w.legal && int(classes.size()) == w.classes;
    det << to_string(w.kind) << ":" << legal << "x" << classes.size() << " ";
  }
  report(1, "per-vertex legal patterns 20/6x3/6x6", ok, det.str());
}

// --- 2. frozen uniqueness ------------------------------------------------
void criterion2() {
  std::ostringstream det;
  bool ok = true;
  const struct {
    LatticeKind kind;
    int n;
  } inst[] = {{LatticeKind::Triangular, 8}, {LatticeKind::Kagome, 6}};
  for (auto w : inst) {
    HexDomain d = build_domain(w.kind, w.n);
    BoundarySpec s = from_signature(d, {1, 1, 0, -1, -1, 0});
    auto res = enumerate_fill_ins(d, s);
    ok &= res.count == 1;
    det << to_string(w.kind) << " N=" << w.n << " count=" << res.count.get_str();
    if (res.count == 1) {
      SamplerState st{res.configs.front(), 1, 0};
      FlipStats stats;
      run_sampler(d, st, default_schedule(w.kind), 200, 1, &stats);
      std::uint64_t flips = 0;
      for (auto c : stats.flips) flips += c;
      ok &= flips == 0;
      det << " flips=" << flips;
    }
    det << "  ";
  }
  report(2, "signature (+1,+1,0,-1,-1,0) freezes uniquely", ok, det.str());
}

// --- 3. full-family connectivity ------------------------------------------
void criterion3() {
  std::ostringstream det;
  bool ok = true;
  struct Inst {
    LatticeKind kind;
    int n;
    int which;  // 0 cycle, 1 split, 2 zero signature
  };
  const Inst inst[] = {{LatticeKind::Triangular, 4, 0}, {LatticeKind::Triangular, 4, 2},
                       {LatticeKind::Triangular, 6, 0}, {LatticeKind::Triangular, 6, 1},
                       {LatticeKind::Kagome, 4, 0},     {LatticeKind::Kagome, 4, 1},
                       {LatticeKind::T3464, 2, 0},      {LatticeKind::T3464, 2, 2}};
  for (auto w : inst) {
    HexDomain d = build_domain(w.kind, w.n);
    BoundarySpec s = w.which == 0   ? cycle_boundary(d)
                     : w.which == 1 ? alternating_edge_split(d)
                                    : from_signature(d, {0, 0, 0, 0, 0, 0});
    auto res = enumerate_fill_ins(d, s);
    if (res.truncated || res.configs.empty()) {
      ok = false;
      continue;
    }
    auto g = flip_graph(d, res.configs, default_schedule(w.kind).passes);
    ok &= g.components == 1;
    det << to_string(w.kind) << w.n << "/" << w.which << ":" << res.configs.size()
        << "cfg," << g.components << "comp ";
  }
  report(3, "full flip graph connected on every tested instance", ok, det.str());
}

// --- 4. restricted counterexamples ----------------------------------------
void criterion4() {
  std::ostringstream det;
  bool ok = true;
  struct Case {
    LatticeKind kind;
    SeedTag tag;
    std::vector<FlipFamily> moves;
  };
  const Case cases[] = {
      {LatticeKind::Triangular, SeedTag::Fig4a, {FlipFamily::EvenTriangle}},
      {LatticeKind::Kagome, SeedTag::Fig4b,
       {FlipFamily::EvenTriangle, FlipFamily::Hexagon1}},
      {LatticeKind::Kagome, SeedTag::Fig4c,
       {FlipFamily::EvenTriangle, FlipFamily::OddTriangle}},
      {LatticeKind::T3464, SeedTag::Fig4d,
       {FlipFamily::OddTriangle, FlipFamily::LozengeStraight, FlipFamily::LozengeLeft,
        FlipFamily::LozengeRight, FlipFamily::Hexagon1}},
  };
  const char* names[] = {"4a", "4b", "4c", "4d"};
  int i = 0;
  for (const auto& c : cases) {
    HexDomain d = build_domain(c.kind, 4);
    auto res = enumerate_fill_ins(d, boundary_of(d, seed_config(d, {c.tag})));
    auto g = flip_graph(d, res.configs, c.moves);
    ok &= g.components > 1;
    det << names[i++] << ":" << g.components << "comp ";
  }
  report(4, "Fig 4 restricted move sets disconnect", ok, det.str());
}

// --- 5. enclosed 1-cycles --------------------------------------------------
void criterion5() {
  bool ok = true;
  int harvested = 0, misses = 0;
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, 10);
    SamplerState st{seed_config(d, {SeedTag::AllOneCycles}), 17, 0};
    auto sched = default_schedule(kind);
    run_sampler(d, st, sched, 200, 2);
    std::uint64_t hint = 1;
    while (harvested < 350 * (int(kind) + 1)) {
      run_sampler(d, st, sched, 1, 2);
      auto cyc = find_unidirectional_cycle(d, st.cfg, hint++);
      if (cyc.size() < 3) continue;
      ++harvested;
      if (!find_enclosed_1cycle(d, st.cfg, cyc)) {
        ++misses;
        ok = false;
      }
      if (hint > 100000) break;  // defensive: never loop forever
    }
  }
  ok &= harvested >= 1000;
  report(5, "every unidirectional cycle encloses a 1-cycle", ok,
         "cycles=" + std::to_string(harvested) + " misses=" + std::to_string(misses));
}

// --- 6. sampler uniformity ---------------------------------------------------
void criterion6() {
  HexDomain d = build_domain(LatticeKind::Triangular, 4);
  auto res = enumerate_fill_ins(d, from_signature(d, {0, 0, 0, 0, 0, 0}));
  bool sized = res.count >= 10 && res.count <= 10000;
  auto sched = default_schedule(d.kind);
  auto u = uniformity_test(d, res.configs, sched, 3, 100000, 1, 1000);
  auto bad = uniformity_test(d, res.configs, sched, 3, 100000, 1, 1000,
                             CoinMode::AlwaysFlip);
  bool ok = sized && u.pValue > 0.01 && bad.pValue < 0.01;
  std::ostringstream det;
  det << "states=" << res.count.get_str() << " p=" << u.pValue
      << " control-p=" << bad.pValue;
  report(6, "chi-square uniformity with failing negative control", ok, det.str());
}

// --- 7. Fig 6 demarcation ----------------------------------------------------
// Wedge coordinate t1+t2 at corner k of the N/2-hexagon; > 0 inside.
double wedge_t(Axial v, int k, int R) {
  double a = v.a, b = v.b;
  for (int t = 0; t < k; ++t) {
    double na = a + b, nb = -a;
    a = na, b = nb;
  }
  double t1 = R - a, t2 = R - a - b;
  if (t1 < 0 || t2 < 0) return 1e18;
  return t1 + t2;
}

void criterion7() {
  const int N = 100;
  std::ostringstream det;
  bool ok = true;
  for (int mode = 0; mode < 2; ++mode) {
    HexDomain d = build_domain(LatticeKind::Triangular, N);
    BoundarySpec bs = mode == 0 ? from_signature(d, {1, -1, 1, -1, 1, -1})
                                : alternating_edge_split(d);
    auto cfg = max_fill_in(d, bs);
    SamplerState st{*cfg, 7, 0};
    auto sched = default_schedule(d.kind);
    run_sampler(d, st, sched, 13000, 4);
    FlipStats stats;
    run_sampler(d, st, sched, 6000, 4, &stats);
    int R = N / 2;
    if (mode == 0) {
      // Corner triangles spanning N/4 boundary arrows (N/8 lattice units):
      // no face wholly inside may flip.
      int badCorner = 0;
      for (const auto& f : d.faces) {
        if (stats.flips[f.id] == 0) continue;
        for (int k = 0; k < 6; ++k) {
          double worst = 0;
          for (int e : f.edges) {
            worst = std::max(worst, wedge_t(d.vertex(d.edge(e).tail).at, k, R));
            worst = std::max(worst, wedge_t(d.vertex(d.edge(e).head).at, k, R));
          }
          if (worst <= N / 8.0) ++badCorner;
        }
      }
      ok &= badCorner == 0;
      det << "sig-corner-flips=" << badCorner;
    } else {
      // Edge-split: a frozen lozenge at every corner.
      auto rep = demarcation(d, stats);
      int minArea = rep.cornerFrozenAreas[0];
      for (int k = 1; k < 6; ++k) minArea = std::min(minArea, rep.cornerFrozenAreas[k]);
      ok &= minArea >= 10;
      det << " split-min-corner-area=" << minArea;
    }
    // Center disc of radius N/8 boundary arrows is essentially all active.
    std::int64_t r2 = std::int64_t(12 * N / 16) * (12 * N / 16);
    int hot = 0, tot = 0;
    for (const auto& f : d.faces) {
      if (f.centroid.x * f.centroid.x + 3 * f.centroid.y * f.centroid.y > r2) continue;
      ++tot;
      hot += stats.flips[f.id] != 0;
    }
    ok &= hot * 100 >= tot * 99;
    det << " center=" << hot << "/" << tot << "  ";
  }
  report(7, "N=100 demarcation: frozen corners, active center", ok, det.str());
}

// --- 8. Kagome flip ratio -----------------------------------------------------
void criterion8() {
  HexDomain d = build_domain(LatticeKind::Kagome, 12);
  SamplerState st{seed_config(d, {SeedTag::AllOneCycles}), 1, 0};
  FlipStats stats;
  run_sampler(d, st, schedule_from_string(d.kind, "fe,fh,fo,fh"), 6000, 2, &stats);
  double r = flip_ratio(d, stats, d.N / 6.0);
  bool ok = r >= 4.0 && r <= 6.0;
  report(8, "Kagome triangle/hexagon flip ratio in [4,6]", ok,
         "ratio=" + std::to_string(r));
}

// --- 9. Prop 4.3 suite ----------------------------------------------------------
void criterion9() {
  std::ostringstream det;
  bool ok = true;
  HexDomain d = build_domain(LatticeKind::T3464, 10);
  // (a) unidirectional density over sampled configurations.
  double minFrac = 1.0;
  {
    BoundarySpec s = cycle_boundary(d);
    SamplerState st{*max_fill_in(d, s), 23, 0};
    auto sched = default_schedule(d.kind);
    for (int round = 0; round < 50; ++round) {
      run_sampler(d, st, sched, 5, 2);
      auto rep = check_3464_bounds(d, s, &st.cfg);
      minFrac = std::min(minFrac, *rep.unidirectionalFraction);
      ok &= rep.densityOk;
      ok &= rep.blockBoundsHold;  // (b) on the generated boundary
    }
  }
  det << "min-uni-frac=" << minFrac;
  // (b) block bounds on the other generated boundary.
  {
    BoundarySpec s = from_signature(d, {0, 0, 0, 0, 0, 0});
    ok &= check_3464_bounds(d, s).blockBoundsHold;
  }
  // (c) maximal tilts rejected.
  bool rejected = false;
  try {
    from_signature(d, {1, -1, 1, -1, 1, -1});
  } catch (const no_maximal_tilt_error&) {
    rejected = true;
  }
  ok &= rejected;
  det << " tilt1-rejected=" << rejected;
  // (d) exhaustive Y-plaquette check.
  bool y = y_plaquette_property(build_domain(LatticeKind::T3464, 4));
  ok &= y;
  det << " y=" << y;
  report(9, "3.4.6.4: density >= 1/7, block bounds, no max tilt, Y-check", ok, det.str());
}

// --- 10. entropy bracket ----------------------------------------------------------
void criterion10() {
  HexDomain d = build_domain(LatticeKind::Triangular, 6);
  auto hb = estimate_free_entropy(LatticeKind::Triangular);
  bool ok = true;
  double prev = 1e9, last = -1;
  std::ostringstream det;
  det << "hbar=" << hb.value << " h:";
  for (int x = -3; x <= 3; ++x) {
    auto cfg = seed_config(d, {SeedTag::QuadrantCross, x});
    auto res = enumerate_fill_ins(d, boundary_of(d, cfg), 0);
    double h = entropy_of(d, res.count);
    auto [lo, up] = entropy_bracket(d, x, hb);
    ok &= lo <= h + 1e-12 && h <= up + 1e-12;
    ok &= h <= prev + 1e-12;  // monotone left to right
    prev = h;
    last = h;
    det << " " << h;
  }
  ok &= last == 0.0;
  report(10, "quadrant entropies sit in the Prop 4.1 bracket, monotone to 0", ok,
         det.str());
}

// --- 11. determinism ----------------------------------------------------------------
void criterion11() {
  HexDomain d = build_domain(LatticeKind::Kagome, 10);
  Configuration c0 = seed_config(d, {SeedTag::AllOneCycles});
  std::string first;
  bool ok = true;
  for (int threads : {1, 2, 8}) {
    SamplerState st{c0, 77, 0};
    FlipStats stats;
    run_sampler(d, st, default_schedule(d.kind), 400, threads, &stats);
    std::ostringstream bytes;
    write_config(d, st.cfg, bytes);
    write_pgm(heatmap(d, stats, 2), bytes);
    for (auto v : stats.flips) bytes << v << ',';
    if (first.empty()) first = bytes.str();
    ok &= bytes.str() == first;
  }
  report(11, "outputs byte-identical at 1/2/8 threads", ok,
         "bytes=" + std::to_string(first.size()));
}

// --- 12. height convention pin --------------------------------------------------------
void criterion12() {
  bool ok = true;
  long checked = 0;
  for (auto kind : {LatticeKind::Triangular, LatticeKind::Kagome, LatticeKind::T3464}) {
    HexDomain d = build_domain(kind, 8);
    SamplerState st{seed_config(d, {SeedTag::AllOneCycles}), 31, 0};
    auto sched = default_schedule(kind);
    for (int round = 0; round < 25; ++round) {
      run_sampler(d, st, sched, 4, 2);
      HeightField h = height_field(d, st.cfg);
      for (const auto& f : d.faces) {
        FaceOrient o = face_orientation(d, st.cfg, f.id);
        if (o == FaceOrient::None || f.centerDual < 0) continue;
        // Compare the center height against all surrounding duals.
        for (int e : f.edges) {
          int l = d.dual.edgeLeft[e], r = d.dual.edgeRight[e];
          int other = l == f.centerDual ? r : l;
          if (other < 0) continue;
          ++checked;
          if (o == FaceOrient::CCW) ok &= h.h[f.centerDual] < h.h[other];
          else ok &= h.h[f.centerDual] > h.h[other];
        }
      }
    }
  }
  report(12, "CCW 1-cycle centers are strict minima, CW strict maxima", ok,
         "comparisons=" + std::to_string(checked));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
