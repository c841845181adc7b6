#include "ice/config.hpp"

#include <algorithm>
#include <climits>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

namespace ice {

Configuration zero_config(const HexDomain& d) {
  return Configuration{std::vector<std::uint8_t>(d.edges.size(), 0)};
}

static void check_size(const HexDomain& d, const Configuration& c) {
  if (c.bits.size() != d.edges.size())
    throw std::invalid_argument("configuration size does not match domain");
}

std::vector<IceViolation> ice_violations(const HexDomain& d, const Configuration& c) {
  check_size(d, c);
  std::vector<IceViolation> out;
  for (int vid : d.interiorVertexIds) {
    int in = 0, outdeg = 0;
    for (int eid : d.vertexEdges[vid]) {
      const Edge& e = d.edges[eid];
      bool intoV = (e.head == vid) == bool(c.bits[eid]);
      (intoV ? in : outdeg)++;
    }
    if (in != outdeg) out.push_back({vid, in, outdeg});
  }
  return out;
}

bool is_ice(const HexDomain& d, const Configuration& c) {
  return ice_violations(d, c).empty();
}

static int cross_step(const HexDomain& d, const Configuration& c, int eid) {
  // Height change from the left dual vertex of edge eid to the right one.
  return c.bits[eid] ? d.dual.crossSignBit1[eid] : -d.dual.crossSignBit1[eid];
}

HeightField height_field(const HexDomain& d, const Configuration& c) {
  check_size(d, c);
  const int n = int(d.dual.pos.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, delta)
  for (const Edge& e : d.edges) {
    int L = d.dual.edgeLeft[e.id], R = d.dual.edgeRight[e.id];
    int s = cross_step(d, c, e.id);
    adj[L].push_back({R, s});
    adj[R].push_back({L, -s});
  }
  HeightField f;
  f.h.assign(n, INT_MIN);
  int root = d.dual.basePoint >= 0 ? d.dual.basePoint : 0;
  f.h[root] = 0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, s] : adj[u]) {
      int hv = f.h[u] + s;
      if (f.h[v] == INT_MIN) {
        f.h[v] = hv;
        q.push(v);
      } else if (f.h[v] != hv) {
        throw invalid_config_error("height increments are not path independent");
      }
    }
  }
  for (int h : f.h)
    if (h == INT_MIN) throw std::logic_error("dual cover is disconnected");
  return f;
}

Configuration config_of_field(const HexDomain& d, const std::vector<int>& h) {
  if (h.size() != d.dual.pos.size())
    throw std::invalid_argument("height field size does not match dual cover");
  Configuration c = zero_config(d);
  for (const Edge& e : d.edges) {
    int delta = h[d.dual.edgeRight[e.id]] - h[d.dual.edgeLeft[e.id]];
    if (delta != 1 && delta != -1)
      throw std::invalid_argument("height field is not unit-Lipschitz across an edge");
    c.bits[e.id] = (delta == d.dual.crossSignBit1[e.id]) ? 1 : 0;
  }
  return c;
}

std::vector<int> boundary_profile(const HexDomain& d, const Configuration& c) {
  check_size(d, c);
  std::vector<int> p;
  p.reserve(d.dual.loop.size() + 1);
  int h = 0;
  p.push_back(h);
  for (const auto& cr : d.dual.loop) {
    int step = cr.signBit1;
    h += c.bits[cr.edge] ? step : -step;
    p.push_back(h);
  }
  return p;
}

Signature signature_of(const HexDomain& d, const Configuration& c) {
  auto p = boundary_profile(d, c);
  Signature s;
  std::size_t i = 0;
  for (int side = 0; side < 6; ++side) {
    std::size_t start = i;
    while (i < d.dual.loop.size() && d.dual.loop[i].side == side) ++i;
    long long len = (long long)(i - start);
    if (len == 0) throw std::logic_error("empty boundary side");
    s.tilt[side] = Rat(p[i] - p[start], len);
  }
  return s;
}

PartialOrder compare_heights(const HeightField& a, const HeightField& b) {
  if (a.h.size() != b.h.size())
    throw std::invalid_argument("height fields have different sizes");
  bool le = true, ge = true;
  for (std::size_t i = 0; i < a.h.size(); ++i) {
    le &= a.h[i] <= b.h[i];
    ge &= a.h[i] >= b.h[i];
  }
  if (le && ge) return PartialOrder::Equal;
  if (le) return PartialOrder::Less;
  if (ge) return PartialOrder::Greater;
  return PartialOrder::Incomparable;
}

FaceOrient face_orientation(const HexDomain& d, const Configuration& c, int faceId) {
  const Face& f = d.faces[faceId];
  bool ccw = true, cw = true;
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    bool along = c.bits[f.edges[i]] == f.ccwSense[i];
    ccw &= along;
    cw &= !along;
  }
  if (ccw) return FaceOrient::CCW;
  if (cw) return FaceOrient::CW;
  return FaceOrient::None;
}

void flip_face(const HexDomain& d, Configuration& c, int faceId) {
  for (int eid : d.faces[faceId].edges) c.bits[eid] ^= 1;
}

Configuration extremal(const HexDomain& d, Configuration c, Extremal which) {
  check_size(d, c);
  const FaceOrient want = which == Extremal::Max ? FaceOrient::CCW : FaceOrient::CW;
  for (;;) {
    std::vector<int> ready;
    for (const Face& f : d.faces)
      if (!f.touchesBoundary && face_orientation(d, c, f.id) == want)
        ready.push_back(f.id);
    if (ready.empty()) return c;
    for (int fid : ready) flip_face(d, c, fid);
  }
}

BoundarySpec boundary_of(const HexDomain& d, const Configuration& c) {
  check_size(d, c);
  BoundarySpec s;
  s.bit.assign(d.edges.size(), -1);
  for (const Edge& e : d.edges)
    if (e.boundary) s.bit[e.id] = std::int8_t(c.bits[e.id]);
  return s;
}

bool is_boundary_spec(const HexDomain& d, const BoundarySpec& s) {
  if (s.bit.size() != d.edges.size()) return false;
  for (const Edge& e : d.edges) {
    if (e.boundary && s.bit[e.id] != 0 && s.bit[e.id] != 1) return false;
    if (!e.boundary && s.bit[e.id] != -1) return false;
  }
  return true;
}

std::optional<Configuration> max_fill_in(const HexDomain& d, const BoundarySpec& s) {
  if (!is_boundary_spec(d, s))
    throw std::invalid_argument("not a boundary specification for this domain");
  const int n = int(d.dual.pos.size());

  // Boundary heights along the loop; the loop must close.
  std::vector<int> hb(n, INT_MAX);
  int h = 0;
  for (const auto& cr : d.dual.loop) {
    if (hb[cr.fromDual] != INT_MAX && hb[cr.fromDual] != h) return std::nullopt;
    hb[cr.fromDual] = h;
    h += s.bit[cr.edge] ? cr.signBit1 : -cr.signBit1;
  }
  if (h != 0) return std::nullopt;

  // Pointwise maximum of all unit-Lipschitz extensions:
  // h(x) = min over loop vertices b of hb(b) + dist(x, b).
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : d.edges) {
    adj[d.dual.edgeLeft[e.id]].push_back(d.dual.edgeRight[e.id]);
    adj[d.dual.edgeRight[e.id]].push_back(d.dual.edgeLeft[e.id]);
  }
  using Item = std::pair<int, int>;  // (value, dual vertex)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  std::vector<int> val(n, INT_MAX);
  for (int v = 0; v < n; ++v)
    if (hb[v] != INT_MAX) {
      val[v] = hb[v];
      pq.push({hb[v], v});
    }
  while (!pq.empty()) {
    auto [hv, v] = pq.top();
    pq.pop();
    if (hv != val[v]) continue;
    for (int w : adj[v])
      if (hv + 1 < val[w]) {
        val[w] = hv + 1;
        pq.push({val[w], w});
      }
  }
  // A loop vertex pulled below its prescribed height means the boundary
  // violates the Lipschitz bound: no fill-in exists.
  for (int v = 0; v < n; ++v)
    if (hb[v] != INT_MAX && val[v] != hb[v]) return std::nullopt;

  Configuration c = zero_config(d);
  for (const Edge& e : d.edges) {
    int delta = val[d.dual.edgeRight[e.id]] - val[d.dual.edgeLeft[e.id]];
    if (delta != 1 && delta != -1) return std::nullopt;
    c.bits[e.id] = (delta == d.dual.crossSignBit1[e.id]) ? 1 : 0;
  }
  for (const Edge& e : d.edges)
    if (e.boundary && c.bits[e.id] != s.bit[e.id]) return std::nullopt;
  if (!is_ice(d, c)) return std::nullopt;
  return c;
}

void write_config(const HexDomain& d, const Configuration& c, std::ostream& out) {
  check_size(d, c);
  out << "ICECFG " << to_string(d.kind) << ' ' << d.N << '\n';
  for (const Edge& e : d.edges) out << e.id << ' ' << int(c.bits[e.id]) << '\n';
}

static void read_header(const HexDomain& d, std::istream& in, const char* magic) {
  std::string tag, lat;
  int n = -1;
  if (!(in >> tag >> lat >> n) || tag != magic)
    throw format_error(std::string("bad header, expected ") + magic);
  if (lat != to_string(d.kind) || n != d.N)
    throw format_error("file domain does not match: got " + lat + " " +
                       std::to_string(n));
}

Configuration read_config(const HexDomain& d, std::istream& in) {
  read_header(d, in, "ICECFG");
  Configuration c = zero_config(d);
  std::vector<char> seen(d.edges.size(), 0);
  int id, bit;
  while (in >> id >> bit) {
    if (id < 0 || id >= int(d.edges.size())) throw format_error("edge id out of range");
    if (bit != 0 && bit != 1) throw format_error("arrow bit must be 0 or 1");
    if (seen[id]) throw format_error("duplicate edge " + std::to_string(id));
    seen[id] = 1;
    c.bits[id] = std::uint8_t(bit);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char v) { return v; }))
    throw format_error("missing arrows in ICECFG file");
  return c;
}

void write_boundary(const HexDomain& d, const BoundarySpec& s, std::ostream& out) {
  if (!is_boundary_spec(d, s))
    throw std::invalid_argument("not a boundary specification for this domain");
  out << "ICEBND " << to_string(d.kind) << ' ' << d.N << '\n';
  for (const Edge& e : d.edges)
    if (e.boundary) out << e.id << ' ' << int(s.bit[e.id]) << '\n';
}

BoundarySpec read_boundary(const HexDomain& d, std::istream& in) {
  read_header(d, in, "ICEBND");
  BoundarySpec s;
  s.bit.assign(d.edges.size(), -1);
  int id, bit;
  while (in >> id >> bit) {
    if (id < 0 || id >= int(d.edges.size())) throw format_error("edge id out of range");
    if (!d.edges[id].boundary) throw format_error("edge is not a boundary arrow");
    if (bit != 0 && bit != 1) throw format_error("arrow bit must be 0 or 1");
    if (s.bit[id] != -1) throw format_error("duplicate edge " + std::to_string(id));
    s.bit[id] = std::int8_t(bit);
  }
  for (const Edge& e : d.edges)
    if (e.boundary && s.bit[e.id] == -1)
      throw format_error("missing boundary arrows in ICEBND file");
  return s;
}

}  // namespace ice
