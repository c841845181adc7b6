#include "ice/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <ostream>
#include <stdexcept>

namespace ice {

const char* to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::Triangular: return "tri";
    case LatticeKind::Kagome: return "kagome";
    case LatticeKind::T3464: return "t3464";
  }
  return "?";
}

LatticeKind lattice_from_string(const std::string& s) {
  if (s == "tri" || s == "triangular") return LatticeKind::Triangular;
  if (s == "kagome") return LatticeKind::Kagome;
  if (s == "t3464" || s == "3.4.6.4") return LatticeKind::T3464;
  throw std::invalid_argument("unknown lattice: " + s);
}

int lattice_degree(LatticeKind k) {
  return k == LatticeKind::Triangular ? 6 : 4;
}

const char* to_string(FlipFamily f) {
  switch (f) {
    case FlipFamily::EvenTriangle: return "F_e";
    case FlipFamily::OddTriangle: return "F_o";
    case FlipFamily::Hexagon1: return "F_h";
    case FlipFamily::LozengeLeft: return "F_l";
    case FlipFamily::LozengeRight: return "F_r";
    case FlipFamily::LozengeStraight: return "F_s";
  }
  return "?";
}

FlipFamily family_from_string(const std::string& s) {
  if (s == "F_e" || s == "fe" || s == "e") return FlipFamily::EvenTriangle;
  if (s == "F_o" || s == "fo" || s == "o") return FlipFamily::OddTriangle;
  if (s == "F_h" || s == "fh" || s == "h") return FlipFamily::Hexagon1;
  if (s == "F_l" || s == "fl" || s == "l") return FlipFamily::LozengeLeft;
  if (s == "F_r" || s == "fr" || s == "r") return FlipFamily::LozengeRight;
  if (s == "F_s" || s == "fs" || s == "s") return FlipFamily::LozengeStraight;
  throw std::invalid_argument("unknown flip family: " + s);
}

bool family_valid_for(LatticeKind k, FlipFamily f) {
  switch (k) {
    case LatticeKind::Triangular:
      return f == FlipFamily::EvenTriangle || f == FlipFamily::OddTriangle;
    case LatticeKind::Kagome:
      return f == FlipFamily::EvenTriangle || f == FlipFamily::OddTriangle ||
             f == FlipFamily::Hexagon1;
    case LatticeKind::T3464:
      return true;
  }
  return false;
}

bool HexDomain::canonical_step(Axial step) {
  return step == kDirs[0] || step == kDirs[1] || step == kDirs[2];
}

namespace {

struct AxialHash {
  std::size_t operator()(Axial v) const {
    std::uint64_t h = (std::uint64_t(std::uint32_t(v.a)) << 32) ^ std::uint32_t(v.b);
    h *= 0x9e3779b97f4a7c15ull;
    return std::size_t(h ^ (h >> 29));
  }
};

bool is_site(LatticeKind kind, Axial v) {
  switch (kind) {
    case LatticeKind::Triangular:
      return true;
    case LatticeKind::Kagome:
      return ((v.a & 1) | (v.b & 1)) != 0;
    case LatticeKind::T3464:
      return coset7(v) != 0;
  }
  return false;
}

// True if (u, u + e_k) is a bond of the infinite lattice.  For 3.4.6.4
// this drops pairs through a hexagon center and the short diagonal of a
// lozenge; the rule is symmetric in the two endpoints.
bool is_bond(LatticeKind kind, Axial u, int k) {
  Axial v = u + kDirs[dir_mod6(k)];
  if (!is_site(kind, u) || !is_site(kind, v)) return false;
  if (kind != LatticeKind::T3464) return true;
  return coset7(u) != coset7(kDirs[dir_mod6(k + 1)]);
}

int interior_radius(LatticeKind kind, int N) {
  switch (kind) {
    case LatticeKind::Triangular: return N / 2 - 1;
    case LatticeKind::Kagome: return N - 1;
    case LatticeKind::T3464: return N;
  }
  return 0;
}

// Does the infinite lattice have this face?
bool face_exists(LatticeKind kind, const FaceKey& key) {
  Axial s = key.anchor;
  switch (key.type) {
    case FaceType::UpTri:
      switch (kind) {
        case LatticeKind::Triangular: return true;
        case LatticeKind::Kagome: return (s.a & 1) && (s.b & 1);
        case LatticeKind::T3464: return coset7(s) == 5;
      }
      return false;
    case FaceType::DownTri:
      switch (kind) {
        case LatticeKind::Triangular: return true;
        case LatticeKind::Kagome: return !(s.a & 1) && (s.b & 1);
        case LatticeKind::T3464: return coset7(s) == 4;
      }
      return false;
    case FaceType::Hex:
      if (kind == LatticeKind::Kagome) return !(s.a & 1) && !(s.b & 1);
      if (kind == LatticeKind::T3464) return coset7(s) == 0;
      return false;
    case FaceType::Loz0:
    case FaceType::Loz1:
    case FaceType::Loz2:
      return kind == LatticeKind::T3464 && coset7(s) == 0;
  }
  return false;
}

std::vector<Axial> face_corners(const FaceKey& key) {
  Axial s = key.anchor;
  switch (key.type) {
    case FaceType::UpTri:
      return {s, s + kDirs[0], s + kDirs[1]};
    case FaceType::DownTri:
      return {s, s + kDirs[5], s + kDirs[0]};
    case FaceType::Hex: {
      std::vector<Axial> c;
      for (int k = 0; k < 6; ++k) c.push_back(s + kDirs[k]);
      return c;
    }
    case FaceType::Loz0:
    case FaceType::Loz1:
    case FaceType::Loz2: {
      int k = int(key.type) - int(FaceType::Loz0);
      Axial ek = kDirs[k], en = kDirs[k + 1];
      return {s + ek, s + en, s + 2 * en, s + ek + en};
    }
  }
  return {};
}

Pos12 face_centroid(const FaceKey& key) {
  auto corners = face_corners(key);
  Pos12 sum;
  for (Axial c : corners) sum = sum + pos_of(c);
  auto n = std::int64_t(corners.size());
  assert(sum.x % n == 0 && sum.y % n == 0);
  return {sum.x / n, sum.y / n};
}

// Corners sorted counterclockwise around the centroid, starting from the
// smallest angle in [0, 2pi).
std::vector<Axial> face_corners_ccw(const FaceKey& key) {
  auto corners = face_corners(key);
  Pos12 c = face_centroid(key);
  auto half = [&](Axial v) {
    Pos12 d = pos_of(v) - c;
    return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0;
  };
  std::sort(corners.begin(), corners.end(), [&](Axial p, Axial q) {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return cross_sign(pos_of(p) - c, pos_of(q) - c) > 0;
  });
  return corners;
}

// All faces of the infinite lattice having (u, u + e_k) as a side.
std::vector<FaceKey> lattice_faces_of_edge(LatticeKind kind, Axial u, int k) {
  Axial v = u + kDirs[dir_mod6(k)];
  std::vector<FaceKey> out;
  auto consider = [&](FaceKey key) {
    if (!face_exists(kind, key)) return;
    auto corners = face_corners(key);
    bool hasU = false, hasV = false;
    for (Axial c : corners) {
      hasU |= (c == u);
      hasV |= (c == v);
    }
    if (hasU && hasV && std::find(out.begin(), out.end(), key) == out.end())
      out.push_back(key);
  };
  for (Axial w : {u, v}) {
    consider({FaceType::UpTri, w});
    consider({FaceType::UpTri, w - kDirs[0]});
    consider({FaceType::UpTri, w - kDirs[1]});
    consider({FaceType::DownTri, w});
    consider({FaceType::DownTri, w - kDirs[0]});
    consider({FaceType::DownTri, w - kDirs[5]});
    if (kind != LatticeKind::Triangular)
      for (int j = 0; j < 6; ++j) consider({FaceType::Hex, w - kDirs[j]});
    if (kind == LatticeKind::T3464)
      for (int t = 0; t < 3; ++t) {
        auto type = FaceType(int(FaceType::Loz0) + t);
        Axial ek = kDirs[t], en = kDirs[t + 1];
        consider({type, w - ek});
        consider({type, w - en});
        consider({type, w - en - en});
        consider({type, w - ek - en});
      }
  }
  return out;
}

FlipFamily family_of_face(LatticeKind kind, const FaceKey& key) {
  switch (key.type) {
    case FaceType::UpTri: return FlipFamily::EvenTriangle;
    case FaceType::DownTri: return FlipFamily::OddTriangle;
    case FaceType::Hex: return FlipFamily::Hexagon1;
    case FaceType::Loz0: return FlipFamily::LozengeStraight;
    case FaceType::Loz1: return FlipFamily::LozengeLeft;
    case FaceType::Loz2: return FlipFamily::LozengeRight;
  }
  (void)kind;
  return FlipFamily::EvenTriangle;
}

// Hexagon side of a boundary crossing, from the direction of the primal
// edge midpoint.  Side k spans polar angles [180 + 60k, 240 + 60k).
int side_of_direction(Pos12 m) {
  // Directions of the side-start rays in Pos12 units.
  static constexpr Pos12 rays[6] = {{-1, 0}, {-1, -1}, {1, -1},
                                    {1, 0},  {1, 1},   {-1, 1}};
  for (int k = 0; k < 6; ++k) {
    Pos12 a = rays[k], b = rays[(k + 1) % 6];
    if (cross_sign(a, m) >= 0 && cross_sign(m, b) > 0) return k;
  }
  throw std::logic_error("side_of_direction: zero vector");
}

}  // namespace

HexDomain build_domain(LatticeKind kind, int N) {
  if (N < 2 || N % 2 != 0)
    throw std::invalid_argument("domain size N must be even and >= 2");
  HexDomain d;
  d.kind = kind;
  d.N = N;

  const int R = interior_radius(kind, N);
  const int RMAX = R + 1;

  // Sites that can appear: interior plus their lattice neighbors.
  std::unordered_map<Axial, int, AxialHash> siteId;
  std::vector<Axial> sites;
  for (int b = -RMAX; b <= RMAX; ++b)
    for (int a = -RMAX; a <= RMAX; ++a) {
      Axial v{a, b};
      if (hexnorm(v) > RMAX || !is_site(kind, v)) continue;
      sites.push_back(v);
    }

  auto interior = [&](Axial v) { return hexnorm(v) <= R; };

  // Keep a site if it is interior or joined to an interior site by a bond.
  std::vector<Axial> kept;
  for (Axial u : sites) {
    bool keep = interior(u);
    for (int k = 0; k < 6 && !keep; ++k)
      if (is_bond(kind, u, k) && interior(u + kDirs[k])) keep = true;
    if (keep) kept.push_back(u);
  }
  for (Axial u : kept) {
    int id = int(d.vertices.size());
    siteId.emplace(u, id);
    Vertex vx;
    vx.id = id;
    vx.at = u;
    vx.pos = pos_of(u);
    vx.interior = interior(u);
    if (kind == LatticeKind::T3464) {
      vx.basis = coset7(u);
    } else if (kind == LatticeKind::Kagome) {
      vx.basis = (u.a & 1) + 2 * (u.b & 1);  // 1, 2, 3 for the three sublattices
    }
    d.vertices.push_back(vx);
    if (vx.interior) d.interiorVertexIds.push_back(id);
  }

  // Edges: lattice bonds with at least one interior endpoint, enumerated
  // from the canonical tail (direction angle in [0, pi)).
  std::unordered_map<Axial, std::array<int, 3>, AxialHash> edgeAt;
  for (const Vertex& vx : d.vertices) {
    for (int k = 0; k < 3; ++k) {
      if (!is_bond(kind, vx.at, k)) continue;
      Axial w = vx.at + kDirs[k];
      auto it = siteId.find(w);
      if (it == siteId.end()) continue;
      bool ti = vx.interior, hi = d.vertices[it->second].interior;
      if (!ti && !hi) continue;
      Edge e;
      e.id = int(d.edges.size());
      e.tail = vx.id;
      e.head = it->second;
      e.dirclass = k;
      e.boundary = (ti != hi);
      auto [slot, fresh] = edgeAt.try_emplace(vx.at, std::array<int, 3>{-1, -1, -1});
      slot->second[k] = e.id;
      d.edges.push_back(e);
    }
  }

  auto find_edge = [&](Axial p, Axial q) -> int {
    Axial step = q - p;
    Axial tail = p;
    int k = -1;
    for (int j = 0; j < 6; ++j)
      if (step == kDirs[j]) { k = j; break; }
    if (k < 0) return -1;
    if (k >= 3) { tail = q; k -= 3; }
    auto it = edgeAt.find(tail);
    return it == edgeAt.end() ? -1 : it->second[k];
  };

  d.vertexEdges.assign(d.vertices.size(), {});
  for (const Edge& e : d.edges) {
    d.vertexEdges[e.tail].push_back(e.id);
    d.vertexEdges[e.head].push_back(e.id);
  }

  // Faces of the lattice whose sides are all domain edges.
  std::unordered_map<FaceKey, int, FaceKeyHash> faceIdOf;
  auto try_face = [&](const FaceKey& key) {
    if (!face_exists(kind, key) || faceIdOf.count(key)) return;
    auto corners = face_corners_ccw(key);
    int n = int(corners.size());
    Face f;
    f.key = key;
    for (int i = 0; i < n; ++i) {
      Axial p = corners[i], q = corners[(i + 1) % n];
      int eid = find_edge(p, q);
      if (eid < 0) return;
      f.edges.push_back(eid);
      f.ccwSense.push_back(d.vertices[d.edges[eid].tail].at == p ? 1 : 0);
      f.touchesBoundary |= d.edges[eid].boundary;
    }
    f.id = int(d.faces.size());
    f.family = family_of_face(kind, key);
    f.centroid = face_centroid(key);
    faceIdOf.emplace(key, f.id);
    d.faces.push_back(f);
  };
  for (int b = -RMAX - 2; b <= RMAX + 2; ++b)
    for (int a = -RMAX - 2; a <= RMAX + 2; ++a) {
      Axial s{a, b};
      try_face({FaceType::UpTri, s});
      try_face({FaceType::DownTri, s});
      if (kind != LatticeKind::Triangular) try_face({FaceType::Hex, s});
      if (kind == LatticeKind::T3464)
        for (int t = 0; t < 3; ++t) try_face({FaceType(int(FaceType::Loz0) + t), s});
    }

  d.facesOfFamily.assign(kFamilyCount, {});
  for (const Face& f : d.faces) d.facesOfFamily[int(f.family)].push_back(f.id);

  d.edgeFaces.assign(d.edges.size(), {});
  for (const Face& f : d.faces)
    for (int eid : f.edges) d.edgeFaces[eid].push_back(f.id);

  // Dual cover: centers of all lattice faces flanking a domain edge,
  // including faces that are not domain faces themselves.
  std::map<FaceKey, int> dualIdOf;
  std::vector<std::pair<FaceKey, FaceKey>> edgeLR(d.edges.size());
  for (const Edge& e : d.edges) {
    Axial u = d.vertices[e.tail].at;
    auto adj = lattice_faces_of_edge(kind, u, e.dirclass);
    if (adj.size() != 2)
      throw std::logic_error("edge is not flanked by exactly two lattice faces");
    Pos12 pu = d.vertices[e.tail].pos, pv = d.vertices[e.head].pos;
    FaceKey left = adj[0], right = adj[1];
    if (cross_sign(pv - pu, face_centroid(left) - pu) < 0) std::swap(left, right);
    assert(cross_sign(pv - pu, face_centroid(left) - pu) > 0);
    assert(cross_sign(pv - pu, face_centroid(right) - pu) < 0);
    edgeLR[e.id] = {left, right};
    dualIdOf.emplace(left, 0);
    dualIdOf.emplace(right, 0);
  }
  {
    int next = 0;
    for (auto& [key, id] : dualIdOf) id = next++;
  }
  d.dual.pos.resize(dualIdOf.size());
  d.dual.key.resize(dualIdOf.size());
  for (const auto& [key, id] : dualIdOf) {
    d.dual.pos[id] = face_centroid(key);
    d.dual.key[id] = key;
  }
  d.dual.edgeLeft.resize(d.edges.size());
  d.dual.edgeRight.resize(d.edges.size());
  d.dual.crossSignBit1.resize(d.edges.size());
  for (const Edge& e : d.edges) {
    int L = dualIdOf.at(edgeLR[e.id].first);
    int Rr = dualIdOf.at(edgeLR[e.id].second);
    d.dual.edgeLeft[e.id] = L;
    d.dual.edgeRight[e.id] = Rr;
    Pos12 t = d.dual.pos[Rr] - d.dual.pos[L];
    Pos12 arrow = d.vertices[e.head].pos - d.vertices[e.tail].pos;
    int s = cross_sign(t, arrow);
    assert(s != 0);
    d.dual.crossSignBit1[e.id] = s;
  }
  for (Face& f : d.faces) {
    auto it = dualIdOf.find(f.key);
    f.centerDual = it == dualIdOf.end() ? -1 : it->second;
  }

  // Boundary loop: cross every boundary arrow keeping the interior
  // endpoint on the left, then chain the crossings into one cycle.
  std::vector<BoundaryCrossing> crossings;
  for (const Edge& e : d.edges) {
    if (!e.boundary) continue;
    BoundaryCrossing c;
    c.edge = e.id;
    const Vertex& vt = d.vertices[e.tail];
    const Vertex& vh = d.vertices[e.head];
    Pos12 inw = vt.interior ? vt.pos - vh.pos : vh.pos - vt.pos;
    int L = d.dual.edgeLeft[e.id], Rr = d.dual.edgeRight[e.id];
    Pos12 t = d.dual.pos[Rr] - d.dual.pos[L];
    if (cross_sign(t, inw) > 0) {
      c.fromDual = L;
      c.toDual = Rr;
      c.signBit1 = d.dual.crossSignBit1[e.id];
    } else {
      c.fromDual = Rr;
      c.toDual = L;
      c.signBit1 = -d.dual.crossSignBit1[e.id];
    }
    Pos12 mid{(vt.pos.x + vh.pos.x) / 2, (vt.pos.y + vh.pos.y) / 2};
    c.side = side_of_direction(mid);
    crossings.push_back(c);
  }
  if (!crossings.empty()) {
    std::unordered_map<int, int> nextAt;  // fromDual -> crossing index
    for (int i = 0; i < int(crossings.size()); ++i)
      if (!nextAt.emplace(crossings[i].fromDual, i).second)
        throw std::logic_error("boundary loop is not a simple cycle");
    // Walk the cycle from any crossing, then rotate so it opens at side 0.
    std::vector<BoundaryCrossing> loop;
    int at = 0;
    for (size_t n = 0; n < crossings.size(); ++n) {
      loop.push_back(crossings[at]);
      auto it = nextAt.find(crossings[at].toDual);
      if (it == nextAt.end()) throw std::logic_error("boundary loop is broken");
      at = it->second;
    }
    if (at != 0 || loop.size() != crossings.size())
      throw std::logic_error("boundary crossings form more than one cycle");
    int start = -1;
    for (int i = 0; i < int(loop.size()); ++i) {
      int prev = (i + int(loop.size()) - 1) % int(loop.size());
      if (loop[i].side == 0 && loop[prev].side != 0) { start = i; break; }
    }
    if (start < 0) throw std::logic_error("boundary loop has no side-0 opening");
    std::rotate(loop.begin(), loop.begin() + start, loop.end());
    int pos = 0, prevSide = -1;
    for (auto& c : loop) {
      pos = (c.side == prevSide) ? pos + 1 : 0;
      prevSide = c.side;
      c.posInSide = pos;
    }
    d.dual.loop = std::move(loop);
    d.dual.basePoint = d.dual.loop.front().fromDual;
    for (const auto& c : d.dual.loop) d.boundaryEdgesCCW.push_back(c.edge);
  }
  return d;
}

std::vector<const Face*> faces_by_family(const HexDomain& d, FlipFamily family) {
  std::vector<const Face*> out;
  for (int id : d.facesOfFamily[int(family)]) out.push_back(&d.faces[id]);
  return out;
}

std::vector<BoundaryEdgeRef> boundary_edges(const HexDomain& d) {
  std::vector<BoundaryEdgeRef> out;
  for (const auto& c : d.dual.loop) out.push_back({c.edge, c.side, c.posInSide});
  return out;
}

void export_domain(const HexDomain& d, std::ostream& out) {
  out << "DOMAIN " << to_string(d.kind) << ' ' << d.N << '\n';
  for (const Vertex& v : d.vertices)
    out << "V " << v.id << ' ' << v.at.a << ' ' << v.at.b << ' '
        << int(v.interior) << '\n';
  for (const Edge& e : d.edges)
    out << "E " << e.id << ' ' << e.tail << ' ' << e.head << ' ' << e.dirclass
        << ' ' << int(e.boundary) << '\n';
  for (const Face& f : d.faces) {
    out << "F " << f.id << ' ' << to_string(f.family) << ' ' << int(f.key.type)
        << ' ' << f.key.anchor.a << ' ' << f.key.anchor.b;
    for (int eid : f.edges) out << ' ' << eid;
    out << '\n';
  }
}

}  // namespace ice
