#include "ice/dynamics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ice {

Schedule default_schedule(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Triangular:
      return {{FlipFamily::EvenTriangle, FlipFamily::OddTriangle}};
    case LatticeKind::Kagome:
      return {{FlipFamily::EvenTriangle, FlipFamily::OddTriangle, FlipFamily::Hexagon1}};
    case LatticeKind::T3464:
      return {{FlipFamily::EvenTriangle, FlipFamily::OddTriangle,
               FlipFamily::LozengeStraight, FlipFamily::LozengeLeft,
               FlipFamily::LozengeRight, FlipFamily::Hexagon1}};
  }
  return {};
}

Schedule schedule_from_string(LatticeKind kind, const std::string& s) {
  Schedule sched;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    FlipFamily f = family_from_string(tok);
    if (!family_valid_for(kind, f))
      throw std::invalid_argument("family " + tok + " is not a face family of " +
                                  to_string(kind));
    sched.passes.push_back(f);
  }
  if (sched.passes.empty()) throw std::invalid_argument("empty schedule");
  return sched;
}

std::string to_string(const Schedule& s) {
  std::string out;
  for (std::size_t i = 0; i < s.passes.size(); ++i) {
    if (i) out += ',';
    out += to_string(s.passes[i]);
  }
  return out;
}

static std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

bool flip_coin(std::uint64_t seed, std::uint64_t sweep, std::uint32_t passIndex,
               std::uint32_t faceId) {
  std::uint64_t x = mix64(seed + 0x9e3779b97f4a7c15ull);
  x = mix64(x ^ sweep);
  x = mix64(x ^ ((std::uint64_t(passIndex) << 32) | faceId));
  return (x & 1) != 0;
}

void run_sampler(const HexDomain& d, SamplerState& st, const Schedule& sched,
                 std::uint64_t sweeps, int threads, FlipStats* stats, CoinMode coin) {
  if (st.cfg.bits.size() != d.edges.size())
    throw std::invalid_argument("configuration size does not match domain");
  for (FlipFamily f : sched.passes)
    if (!family_valid_for(d.kind, f))
      throw std::invalid_argument("schedule family not present on this lattice");
  if (threads < 1) threads = 1;
  if (stats && stats->flips.size() != d.faces.size())
    stats->flips.assign(d.faces.size(), 0);

  // Flippable faces per family, fixed order.
  std::vector<std::vector<int>> pool(sched.passes.size());
  for (std::size_t p = 0; p < sched.passes.size(); ++p)
    for (int fid : d.facesOfFamily[int(sched.passes[p])])
      if (!d.faces[fid].touchesBoundary) pool[p].push_back(fid);

  auto do_range = [&](std::uint64_t sweep, std::uint32_t pass, const std::vector<int>& ids,
                      std::size_t lo, std::size_t hi, std::vector<int>* flipped) {
    for (std::size_t i = lo; i < hi; ++i) {
      int fid = ids[i];
      if (face_orientation(d, st.cfg, fid) == FaceOrient::None) continue;
      if (coin == CoinMode::Fair && !flip_coin(st.seed, sweep, pass, std::uint32_t(fid)))
        continue;
      flip_face(d, st.cfg, fid);
      if (flipped) flipped->push_back(fid);
    }
  };

  std::vector<std::vector<int>> flippedPerThread(threads);
  for (std::uint64_t s = 0; s < sweeps; ++s) {
    std::uint64_t sw = st.sweep;
    for (std::uint32_t p = 0; p < sched.passes.size(); ++p) {
      const auto& ids = pool[p];
      if (threads == 1 || ids.size() < 256) {
        do_range(sw, p, ids, 0, ids.size(), stats ? &flippedPerThread[0] : nullptr);
      } else {
        std::vector<std::thread> ts;
        std::size_t chunk = (ids.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
          std::size_t lo = std::min(ids.size(), std::size_t(t) * chunk);
          std::size_t hi = std::min(ids.size(), lo + chunk);
          if (lo >= hi) break;
          ts.emplace_back(do_range, sw, p, std::cref(ids), lo, hi,
                          stats ? &flippedPerThread[t] : nullptr);
        }
        for (auto& th : ts) th.join();
      }
    }
    if (stats) {
      for (auto& v : flippedPerThread) {
        for (int fid : v) stats->flips[fid]++;
        v.clear();
      }
      stats->sweeps++;
    }
    st.sweep++;
  }
}

std::vector<int> find_unidirectional_cycle(const HexDomain& d, const Configuration& c,
                                           std::uint64_t startHint) {
  if (d.interiorVertexIds.empty()) return {};
  // Outgoing interior arrows per vertex.
  auto out_edges = [&](int v) {
    std::vector<int> heads;
    for (int eid : d.vertexEdges[v]) {
      const Edge& e = d.edges[eid];
      int to = c.bits[eid] ? e.head : e.tail;
      int from = e.tail + e.head - to;
      if (from == v && d.vertices[to].interior) heads.push_back(to);
    }
    return heads;
  };
  std::uint64_t x = startHint;
  auto next_rand = [&] {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    return x >> 33;
  };
  int v = d.interiorVertexIds[next_rand() % d.interiorVertexIds.size()];
  std::vector<int> path;
  std::vector<int> at(d.vertices.size(), -1);
  for (;;) {
    if (at[v] >= 0) {
      return {path.begin() + at[v], path.end()};
    }
    at[v] = int(path.size());
    path.push_back(v);
    auto heads = out_edges(v);
    if (heads.empty()) return {};  // walked into the boundary; no cycle here
    v = heads[next_rand() % heads.size()];
  }
}

std::vector<int> faces_inside_cycle(const HexDomain& d, const std::vector<int>& cycleVerts) {
  std::vector<int> out;
  if (cycleVerts.size() < 3) return out;
  std::vector<Pos12> poly;
  for (int v : cycleVerts) poly.push_back(d.vertices[v].pos);
  auto inside = [&](Pos12 q) {
    // Ray casting toward +x; face centers never lie on lattice edges.
    bool in = false;
    for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
      Pos12 a = poly[j], b = poly[i];
      if ((a.y > q.y) == (b.y > q.y)) continue;
      // x coordinate where the segment meets the ray, compared to q.x:
      // sign of (a.x - q.x)(b.y - q.y) - (b.x - q.x)(a.y - q.y) relative
      // to the sign of (b.y - a.y).
      __int128 lhs = (__int128)(a.x - q.x) * (b.y - q.y) -
                     (__int128)(b.x - q.x) * (a.y - q.y);
      if (b.y > a.y ? lhs > 0 : lhs < 0) in = !in;
    }
    return in;
  };
  for (const Face& f : d.faces)
    if (inside(f.centroid)) out.push_back(f.id);
  return out;
}

std::optional<int> find_enclosed_1cycle(const HexDomain& d, const Configuration& c,
                                        const std::vector<int>& cycleVerts) {
  for (int fid : faces_inside_cycle(d, cycleVerts))
    if (face_orientation(d, c, fid) != FaceOrient::None) return fid;
  return std::nullopt;
}

}  // namespace ice
