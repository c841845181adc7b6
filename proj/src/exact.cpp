#include "ice/exact.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ice {

namespace {

struct VertexBudget {
  int in = 0;
  int out = 0;
  int cap = 0;  // degree / 2
};

std::string pack_key(const Configuration& c) {
  std::string key((c.bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < c.bits.size(); ++i)
    if (c.bits[i]) key[i >> 3] |= char(1 << (i & 7));
  return key;
}

}  // namespace

EnumerationResult enumerate_fill_ins(const HexDomain& d, const BoundarySpec& s,
                                     std::uint64_t storeLimit) {
  if (s.bit.size() != d.edges.size())
    throw std::invalid_argument("boundary spec size does not match domain");

  std::vector<VertexBudget> budget(d.vertices.size());
  std::vector<int> rank(d.vertices.size(), -1);
  for (std::size_t i = 0; i < d.interiorVertexIds.size(); ++i)
    rank[d.interiorVertexIds[i]] = int(i);
  for (int vid : d.interiorVertexIds)
    budget[vid].cap = int(d.vertexEdges[vid].size()) / 2;

  Configuration cur = zero_config(d);
  // apply: returns false when a budget overflows (and rolls nothing back).
  auto charge = [&](int vid, bool outgoing, int dir) -> bool {
    if (rank[vid] < 0) return true;
    VertexBudget& b = budget[vid];
    int& slot = outgoing ? b.out : b.in;
    slot += dir;
    return slot <= b.cap;
  };

  std::vector<int> freeEdges;
  for (const Edge& e : d.edges) {
    if (s.bit[e.id] == -1) {
      freeEdges.push_back(e.id);
    } else {
      cur.bits[e.id] = std::uint8_t(s.bit[e.id]);
      bool ok = charge(e.tail, s.bit[e.id] == 1, +1) & charge(e.head, s.bit[e.id] == 0, +1);
      if (!ok) return {};  // pinned arrows already break the ice rule
    }
  }
  // Visit the free arrows grouped around interior vertices so budget
  // violations surface early.
  std::sort(freeEdges.begin(), freeEdges.end(), [&](int a, int b) {
    auto keyOf = [&](int eid) {
      const Edge& e = d.edges[eid];
      int ra = rank[e.tail] < 0 ? INT_MAX : rank[e.tail];
      int rb = rank[e.head] < 0 ? INT_MAX : rank[e.head];
      return std::pair(std::min(ra, rb), eid);
    };
    return keyOf(a) < keyOf(b);
  });

  EnumerationResult res;
  res.count = 0;

  auto set_bit = [&](int eid, int bit) -> bool {
    const Edge& e = d.edges[eid];
    cur.bits[eid] = std::uint8_t(bit);
    bool a = charge(e.tail, bit == 1, +1);
    bool b = charge(e.head, bit == 0, +1);
    return a && b;
  };
  auto clear_bit = [&](int eid, int bit) {
    const Edge& e = d.edges[eid];
    charge(e.tail, bit == 1, -1);
    charge(e.head, bit == 0, -1);
  };

  // Iterative DFS: state per depth is the next bit value to try (0, 1, 2).
  std::vector<int> tried(freeEdges.size() + 1, 0);
  std::vector<int> placed(freeEdges.size(), -1);
  std::size_t depth = 0;
  for (;;) {
    if (depth == freeEdges.size()) {
      res.count += 1;
      if (!res.truncated) {
        if (std::uint64_t(res.configs.size()) < storeLimit)
          res.configs.push_back(cur);
        else
          res.truncated = true;
      }
      if (depth == 0) break;
      --depth;
      clear_bit(freeEdges[depth], placed[depth]);
      continue;
    }
    if (tried[depth] == 2) {
      tried[depth] = 0;
      if (depth == 0) break;
      --depth;
      clear_bit(freeEdges[depth], placed[depth]);
      continue;
    }
    int bit = tried[depth]++;
    if (set_bit(freeEdges[depth], bit)) {
      placed[depth] = bit;
      ++depth;
      tried[depth] = 0;
    } else {
      clear_bit(freeEdges[depth], bit);
    }
  }
  if (res.truncated) res.configs.clear();
  return res;
}

FlipGraphSummary flip_graph(const HexDomain& d, const std::vector<Configuration>& cfgs,
                            const std::vector<FlipFamily>& families) {
  FlipGraphSummary g;
  g.nodes = cfgs.size();
  if (cfgs.empty()) return g;

  std::vector<int> moveFaces;
  for (const Face& f : d.faces)
    if (!f.touchesBoundary &&
        std::find(families.begin(), families.end(), f.family) != families.end())
      moveFaces.push_back(f.id);

  std::unordered_map<std::string, int> index;
  index.reserve(cfgs.size() * 2);
  for (std::size_t i = 0; i < cfgs.size(); ++i)
    if (!index.emplace(pack_key(cfgs[i]), int(i)).second)
      throw std::invalid_argument("duplicate configuration in flip graph input");

  std::vector<int> parent(cfgs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> sz(cfgs.size(), 1);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (sz[a] < sz[b]) std::swap(a, b);
    parent[b] = a;
    sz[a] += sz[b];
  };

  std::uint64_t directed = 0;
  Configuration tmp;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    for (int fid : moveFaces) {
      if (face_orientation(d, cfgs[i], fid) == FaceOrient::None) continue;
      tmp = cfgs[i];
      flip_face(d, tmp, fid);
      auto it = index.find(pack_key(tmp));
      if (it == index.end())
        throw std::logic_error("flip landed outside the enumerated set");
      ++directed;
      unite(int(i), it->second);
    }
  }
  g.edges = std::size_t(directed / 2);
  g.component.resize(cfgs.size());
  std::unordered_map<int, int> roots;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    int r = find(int(i));
    auto [it, fresh] = roots.emplace(r, int(roots.size()));
    g.component[i] = it->second;
  }
  g.components = int(roots.size());
  return g;
}

double entropy_of(const HexDomain& d, const mpz_class& count) {
  if (count <= 0) throw std::invalid_argument("entropy of a non-positive count");
  signed long exp2;
  double m = mpz_get_d_2exp(&exp2, count.get_mpz_t());
  double logCount = std::log(m) + double(exp2) * std::log(2.0);
  return logCount / double(d.edges.size());
}

UniformityResult uniformity_test(const HexDomain& d, const std::vector<Configuration>& cfgs,
                                 const Schedule& sched, std::uint64_t seed,
                                 std::uint64_t samples, std::uint64_t spacingSweeps,
                                 std::uint64_t burnInSweeps, CoinMode coin) {
  if (cfgs.size() < 2) throw std::invalid_argument("need at least two configurations");
  if (spacingSweeps == 0) throw std::invalid_argument("sample spacing must be >= 1 sweep");
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < cfgs.size(); ++i) index.emplace(pack_key(cfgs[i]), int(i));

  UniformityResult r;
  r.hits.assign(cfgs.size(), 0);
  SamplerState st{cfgs.front(), seed, 0};
  run_sampler(d, st, sched, burnInSweeps, 1, nullptr, coin);
  for (std::uint64_t s = 0; s < samples; ++s) {
    run_sampler(d, st, sched, spacingSweeps, 1, nullptr, coin);
    auto it = index.find(pack_key(st.cfg));
    if (it == index.end())
      throw std::logic_error("sampler left the enumerated configuration set");
    r.hits[it->second]++;
  }
  r.samples = samples;
  double expct = double(samples) / double(cfgs.size());
  for (auto h : r.hits) {
    double dlt = double(h) - expct;
    r.chi2 += dlt * dlt / expct;
  }
  r.dof = cfgs.size() - 1;
  r.pValue = gsl_cdf_chisq_Q(r.chi2, double(r.dof));
  return r;
}

}  // namespace ice
