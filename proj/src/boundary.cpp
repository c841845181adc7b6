#include "ice/boundary.hpp"

#include <stdexcept>

namespace ice {

BoundarySpec from_signature(const HexDomain& d, const std::array<int, 6>& tilt) {
  long long weighted = 0;
  bool maximal = false;
  std::array<long long, 6> len{};
  for (const auto& c : d.dual.loop) len[c.side]++;
  for (int s = 0; s < 6; ++s) {
    if (tilt[s] < -1 || tilt[s] > 1)
      throw infeasible_signature_error("tilts must be -1, 0 or +1");
    weighted += (long long)tilt[s] * len[s];
    maximal |= (tilt[s] != 0);
  }
  if (weighted != 0)
    throw infeasible_signature_error("signature has nonzero weighted sum");
  if (d.kind == LatticeKind::T3464 && maximal)
    throw no_maximal_tilt_error("3.4.6.4 admits no tilt-1 boundary (tilt ceiling 13/15)");

  // Tilt-0 sides alternate strictly, but which step they open with is a
  // free phase, and the feasible choice depends on the lattice and the
  // neighboring sides.  Try the phase vectors in a fixed order (+1-first)
  // and return the first boundary that closes and admits a fill-in.
  std::vector<int> zeroSides;
  for (int s = 0; s < 6; ++s)
    if (tilt[s] == 0 && len[s] > 0) zeroSides.push_back(s);
  for (unsigned mask = 0; mask < (1u << zeroSides.size()); ++mask) {
    std::array<int, 6> phase{};
    for (std::size_t z = 0; z < zeroSides.size(); ++z)
      phase[zeroSides[z]] = (mask >> z) & 1 ? -1 : +1;
    BoundarySpec spec;
    spec.bit.assign(d.edges.size(), -1);
    long long flux = 0;
    std::size_t i = 0;
    while (i < d.dual.loop.size()) {
      int side = d.dual.loop[i].side;
      std::size_t j = i;
      while (j < d.dual.loop.size() && d.dual.loop[j].side == side) ++j;
      int step = tilt[side] != 0 ? tilt[side] : phase[side];
      for (std::size_t k = i; k < j; ++k) {
        const auto& cr = d.dual.loop[k];
        spec.bit[cr.edge] = std::int8_t(step == cr.signBit1 ? 1 : 0);
        flux += step;
        if (tilt[side] == 0) step = -step;
      }
      i = j;
    }
    if (flux != 0) continue;
    if (max_fill_in(d, spec)) return spec;
  }
  throw infeasible_signature_error("signature admits no ice fill-in on this domain");
}

BoundarySpec cycle_boundary(const HexDomain& d) {
  // Strictly alternating steps around the whole loop: the fixed arrows
  // trace one directed cycle around the hexagon rim.
  BoundarySpec spec;
  spec.bit.assign(d.edges.size(), -1);
  int step = +1;
  for (const auto& cr : d.dual.loop) {
    spec.bit[cr.edge] = std::int8_t(step == cr.signBit1 ? 1 : 0);
    step = -step;
  }
  return spec;
}

BoundarySpec alternating_edge_split(const HexDomain& d) {
  if (d.kind == LatticeKind::T3464)
    throw no_maximal_tilt_error("3.4.6.4 admits no extremal-tilt segments");
  BoundarySpec spec;
  spec.bit.assign(d.edges.size(), -1);
  long long flux = 0;
  std::size_t i = 0;
  while (i < d.dual.loop.size()) {
    int side = d.dual.loop[i].side;
    std::size_t j = i;
    while (j < d.dual.loop.size() && d.dual.loop[j].side == side) ++j;
    std::size_t L = j - i;
    // Odd-length sides put the longer +1 run on even sides only, keeping
    // the total flux zero.
    std::size_t plus = (side % 2 == 0) ? (L + 1) / 2 : L / 2;
    for (std::size_t k = i; k < j; ++k) {
      int step = (k - i < plus) ? +1 : -1;
      const auto& cr = d.dual.loop[k];
      spec.bit[cr.edge] = std::int8_t(step == cr.signBit1 ? 1 : 0);
      flux += step;
    }
    i = j;
  }
  if (flux != 0) throw std::logic_error("generated boundary has nonzero flux");
  return spec;
}

namespace {

// Direction classes of the three axes: arrows along +e_k get bit 1, along
// -e_k bit 0, for the canonical axes k = 0 (3 o'clock), 1 (1 o'clock),
// 2 (11 o'clock).

Configuration fig4a(const HexDomain& d) {
  // All arrows toward 1, 3 or 5 o'clock; then the 1 o'clock line through
  // the center (a = 0) and the 5 o'clock line (a + b = 0) are reversed.
  Configuration c = zero_config(d);
  for (const Edge& e : d.edges) {
    int bit = e.dirclass == 2 ? 0 : 1;
    Axial t = d.vertices[e.tail].at, h = d.vertices[e.head].at;
    if (e.dirclass == 1 && t.a == 0 && h.a == 0) bit ^= 1;
    if (e.dirclass == 2 && t.a + t.b == 0 && h.a + h.b == 0) bit ^= 1;
    c.bits[e.id] = std::uint8_t(bit);
  }
  return c;
}

Configuration fig4b(const HexDomain& d) {
  // Lines toward 3 (+e_0), 7 (-e_1) and 11 (+e_2) o'clock.
  Configuration c = zero_config(d);
  for (const Edge& e : d.edges)
    c.bits[e.id] = std::uint8_t(e.dirclass == 1 ? 0 : 1);
  return c;
}

Configuration fig4c(const HexDomain& d) {
  // Each axis alternates line by line between the two opposite bearings:
  // 1/7 o'clock on the e_1 axis, 3/9 on e_0, 5/11 on e_2.  Kagome lines
  // sit at odd line coordinates only.
  Configuration c = zero_config(d);
  for (const Edge& e : d.edges) {
    Axial t = d.vertices[e.tail].at;
    long long l = e.dirclass == 0 ? t.b : (e.dirclass == 1 ? t.a : t.a + t.b);
    if ((l & 1) == 0) throw std::logic_error("Kagome line coordinate must be odd");
    bool jEven = (((l - 1) / 2) % 2) == 0;
    int bit;
    if (e.dirclass == 2)
      bit = jEven ? 0 : 1;  // 5 o'clock (-e_2) first, then 11 o'clock
    else
      bit = jEven ? 1 : 0;  // +e_0 / +e_1 first
    c.bits[e.id] = std::uint8_t(bit);
  }
  return c;
}

// Fig 4d: one arrow bit per edge orbit of the period-7 sublattice,
// indexed by (coset of the canonical tail - 1) * 3 + direction class.
// The values below are the frozen result of an exhaustive search over
// all 4096 ice-legal periodic patterns (see tests): this one extends to
// a valid configuration whose fill-in count is minimal and whose flip
// graph without even-triangle moves is disconnected.
constexpr std::int8_t kFig4dBits[18] = {
    // -1 marks the six orbit slots that are not lattice edges
    -1, 1, 0, -1, 0, -1, 1, -1, 0, 0, 0, -1, 1, 0, 0, 0, -1, 0};

int orbit_index(Axial tail, int dirclass) {
  return (coset7(tail) - 1) * 3 + dirclass;
}

Configuration fig4d(const HexDomain& d) {
  Configuration c = zero_config(d);
  for (const Edge& e : d.edges) {
    std::int8_t bit = kFig4dBits[orbit_index(d.vertices[e.tail].at, e.dirclass)];
    if (bit < 0) throw std::logic_error("Fig 4d pattern table is incomplete");
    c.bits[e.id] = std::uint8_t(bit);
  }
  return c;
}

// Height field with every lattice face a directed 1-cycle: one class of
// the bipartite dual at 0, the other at 1.
std::vector<int> all_cycles_field(const HexDomain& d) {
  std::vector<int> h(d.dual.pos.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    FaceType t = d.dual.key[i].type;
    switch (d.kind) {
      case LatticeKind::Triangular:
        h[i] = t == FaceType::DownTri ? 1 : 0;
        break;
      case LatticeKind::Kagome:
        h[i] = t == FaceType::Hex ? 1 : 0;
        break;
      case LatticeKind::T3464:
        h[i] = (t == FaceType::Hex || t == FaceType::UpTri || t == FaceType::DownTri)
                   ? 0
                   : 1;
        break;
    }
  }
  return h;
}

Configuration quadrant_cross(const HexDomain& d, int x) {
  if (d.kind != LatticeKind::Triangular)
    throw std::invalid_argument("QuadrantCross is a triangular-lattice recipe");
  int m = d.N / 2;
  if (x < -m || x > m)
    throw std::invalid_argument("cross point is outside the hexagon");
  // Pointwise max of the all-cycles field and the two maximal-tilt plane
  // fields rising leftward from the lattice lines through (x, 0).
  std::vector<int> h(d.dual.pos.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    Axial s = d.dual.key[i].anchor;
    bool down = d.dual.key[i].type == FaceType::DownTri;
    int cyc = down ? 1 : 0;
    int p1 = 2 * (x - s.a) + (down ? -1 : 0);
    int p2 = 2 * (x - s.a - s.b) + (down ? 1 : 0);
    h[i] = std::max({cyc, p1, p2});
  }
  return config_of_field(d, h);
}

}  // namespace

Configuration seed_config(const HexDomain& d, const SeedRecipe& r) {
  switch (r.tag) {
    case SeedTag::Fig4a:
      if (d.kind != LatticeKind::Triangular)
        throw std::invalid_argument("Fig 4a is a triangular-lattice recipe");
      return fig4a(d);
    case SeedTag::Fig4b:
      if (d.kind != LatticeKind::Kagome)
        throw std::invalid_argument("Fig 4b is a Kagome recipe");
      return fig4b(d);
    case SeedTag::Fig4c:
      if (d.kind != LatticeKind::Kagome)
        throw std::invalid_argument("Fig 4c is a Kagome recipe");
      return fig4c(d);
    case SeedTag::Fig4d:
      if (d.kind != LatticeKind::T3464)
        throw std::invalid_argument("Fig 4d is a 3.4.6.4 recipe");
      return fig4d(d);
    case SeedTag::QuadrantCross:
      return quadrant_cross(d, r.x);
    case SeedTag::AllOneCycles:
      return config_of_field(d, all_cycles_field(d));
  }
  throw std::invalid_argument("unknown seed recipe");
}

}  // namespace ice
