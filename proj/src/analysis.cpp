#include "ice/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>

#include "ice/boundary.hpp"
#include "ice/exact.hpp"

namespace ice {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

std::vector<int> face_corner_ids(const HexDomain& d, const Face& f) {
  std::vector<int> out;
  for (int e : f.edges) {
    out.push_back(d.edge(e).tail);
    out.push_back(d.edge(e).head);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double cart_x(Pos12 p) { return p.x / 12.0; }
double cart_y(Pos12 p) { return p.y * kSqrt3 / 12.0; }

std::int64_t dist2_scaled(Pos12 u, Pos12 v) {
  Pos12 w = u - v;
  return w.x * w.x + 3 * w.y * w.y;  // 144 * squared Euclidean distance
}

}  // namespace

Heatmap heatmap(const HexDomain& d, const FlipStats& stats, int pixelsPerUnit,
                std::optional<FlipFamily> family) {
  if (pixelsPerUnit < 1) throw std::invalid_argument("pixelsPerUnit must be >= 1");
  double minX = 0, maxX = 0, minY = 0, maxY = 0;
  double hexR = 0;
  for (const auto& v : d.vertices) {
    minX = std::min(minX, cart_x(v.pos));
    maxX = std::max(maxX, cart_x(v.pos));
    minY = std::min(minY, cart_y(v.pos));
    maxY = std::max(maxY, cart_y(v.pos));
    double s = std::abs(double(v.at.a) + double(v.at.b));
    hexR = std::max({hexR, std::abs(double(v.at.a)), std::abs(double(v.at.b)), s});
  }
  double pad = 1.0;
  minX -= pad, minY -= pad, maxX += pad, maxY += pad;

  Heatmap img;
  img.width = int(std::ceil((maxX - minX) * pixelsPerUnit)) + 1;
  img.height = int(std::ceil((maxY - minY) * pixelsPerUnit)) + 1;
  img.pixels.assign(std::size_t(img.width) * img.height, 255);

  // Light-gray hexagon so the frozen corners read against the outside.
  for (int py = 0; py < img.height; ++py) {
    double Y = maxY - double(py) / pixelsPerUnit;
    double b = Y / (kSqrt3 / 2.0);
    for (int px = 0; px < img.width; ++px) {
      double X = minX + double(px) / pixelsPerUnit;
      double a = X - b / 2.0;
      double hn = std::max({std::abs(a), std::abs(b), std::abs(a + b)});
      if (hn <= hexR + 0.25) img.pixels[std::size_t(py) * img.width + px] = 200;
    }
  }

  std::uint64_t maxCount = 0;
  for (const auto& f : d.faces) {
    if (family && f.family != *family) continue;
    if (f.id < int(stats.flips.size())) maxCount = std::max(maxCount, stats.flips[f.id]);
  }
  if (maxCount == 0) return img;

  for (const auto& f : d.faces) {
    if (family && f.family != *family) continue;
    std::uint64_t c = f.id < int(stats.flips.size()) ? stats.flips[f.id] : 0;
    int px = int(std::lround((cart_x(f.centroid) - minX) * pixelsPerUnit));
    int py = int(std::lround((maxY - cart_y(f.centroid)) * pixelsPerUnit));
    if (px < 0 || px >= img.width || py < 0 || py >= img.height) continue;
    auto gray = std::uint8_t(200 - std::lround(200.0 * double(c) / double(maxCount)));
    auto& pix = img.pixels[std::size_t(py) * img.width + px];
    pix = std::min(pix, gray);
  }
  return img;
}

void write_pgm(const Heatmap& h, std::ostream& out, bool binary) {
  out << (binary ? "P5" : "P2") << "\n" << h.width << " " << h.height << "\n255\n";
  if (binary) {
    out.write(reinterpret_cast<const char*>(h.pixels.data()),
              std::streamsize(h.pixels.size()));
  } else {
    for (int y = 0; y < h.height; ++y) {
      for (int x = 0; x < h.width; ++x) {
        out << int(h.pixels[std::size_t(y) * h.width + x])
            << (x + 1 == h.width ? '\n' : ' ');
      }
    }
  }
}

DemarcationReport demarcation(const HexDomain& d, const FlipStats& stats) {
  DemarcationReport rep;
  std::vector<char> frozen(d.faces.size(), 0);
  for (const auto& f : d.faces) {
    if (f.touchesBoundary) continue;
    std::uint64_t c = f.id < int(stats.flips.size()) ? stats.flips[f.id] : 0;
    (c == 0 ? rep.frozenFaces : rep.temperateFaces).push_back(f.id);
    frozen[f.id] = (c == 0);
  }

  // Connected components of the frozen faces (adjacency across an edge).
  std::vector<int> comp(d.faces.size(), -1);
  std::vector<int> compSize(d.faces.size(), 0);
  std::vector<int> stack;
  for (int root : rep.frozenFaces) {
    if (comp[root] >= 0) continue;
    int size = 0;
    comp[root] = root;
    stack.push_back(root);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      ++size;
      for (int e : d.face(f).edges) {
        for (int g : d.edgeFaces[e]) {
          if (g == f || !frozen[g] || comp[g] >= 0) continue;
          comp[g] = root;
          stack.push_back(g);
        }
      }
    }
    compSize[root] = size;
  }

  // Corner k sits where side k of the boundary loop begins.
  for (int k = 0; k < 6; ++k) {
    Pos12 cornerPos{};
    for (const auto& cr : d.dual.loop) {
      if (cr.side == k && cr.posInSide == 0) {
        cornerPos = d.dual.pos[cr.fromDual];
        break;
      }
    }
    int best = -1;
    std::int64_t bestDist = std::numeric_limits<std::int64_t>::max();
    for (const auto& f : d.faces) {
      if (f.touchesBoundary) continue;
      std::int64_t dd = dist2_scaled(f.centroid, cornerPos);
      if (dd < bestDist) bestDist = dd, best = f.id;
    }
    rep.cornerFrozenAreas[k] = (best >= 0 && comp[best] >= 0) ? compSize[comp[best]] : 0;
  }

  std::size_t offBoundary = rep.frozenFaces.size() + rep.temperateFaces.size();
  rep.frozenAreaFraction =
      offBoundary ? double(rep.frozenFaces.size()) / double(offBoundary) : 0.0;
  return rep;
}

double flip_ratio(const HexDomain& d, const FlipStats& stats, double centerRadius) {
  if (d.kind != LatticeKind::Kagome)
    throw std::invalid_argument("flip ratio needs the Kagome lattice");
  auto r2 = std::int64_t(std::llround(144.0 * centerRadius * centerRadius));
  std::uint64_t triSum = 0, hexSum = 0;
  std::int64_t triCnt = 0, hexCnt = 0;
  for (const auto& f : d.faces) {
    if (f.touchesBoundary) continue;
    if (dist2_scaled(f.centroid, Pos12{0, 0}) > r2) continue;
    std::uint64_t c = f.id < int(stats.flips.size()) ? stats.flips[f.id] : 0;
    if (f.family == FlipFamily::Hexagon1) {
      hexSum += c, ++hexCnt;
    } else {
      triSum += c, ++triCnt;
    }
  }
  if (hexCnt == 0 || triCnt == 0)
    throw undefined_ratio_error("no faces of both kinds in the central disc");
  if (hexSum == 0) throw undefined_ratio_error("no hexagon flips in the central disc");
  double triMean = double(triSum) / double(triCnt);
  double hexMean = double(hexSum) / double(hexCnt);
  return triMean / hexMean;
}

Bounds3464Report check_3464_bounds(const HexDomain& d, const BoundarySpec& s,
                                   const Configuration* cfg) {
  if (d.kind != LatticeKind::T3464)
    throw std::invalid_argument("block bounds target the 3.4.6.4 lattice");
  Bounds3464Report rep;
  rep.blockBoundsHold = true;
  rep.worstBlockSlack = std::numeric_limits<double>::infinity();

  // Height steps along the boundary loop.
  std::vector<int> step(d.dual.loop.size());
  for (std::size_t i = 0; i < d.dual.loop.size(); ++i) {
    const auto& cr = d.dual.loop[i];
    int b = s.bit[cr.edge];
    if (b < 0) throw std::invalid_argument("boundary bit missing for block bounds");
    step[i] = b ? cr.signBit1 : -cr.signBit1;
  }

  std::size_t i = 0;
  while (i < step.size()) {
    std::size_t j = i;
    while (j < step.size() && d.dual.loop[j].side == d.dual.loop[i].side) ++j;
    std::size_t L = j - i;
    std::vector<int> h(L + 1, 0);
    for (std::size_t t = 0; t < L; ++t) h[t + 1] = h[t] + step[i + t];
    for (std::size_t a = 0; a < L; ++a) {
      bool period8 = true;
      for (std::size_t n = 1; a + n <= L; ++n) {
        if (n > 8 && step[i + a + n - 1] != step[i + a + n - 9]) period8 = false;
        long dh = std::labs(long(h[a + n]) - long(h[a]));
        if (period8) {
          double bound = (3.0 * double(n) + 7.0) / 4.0;
          rep.worstBlockSlack = std::min(rep.worstBlockSlack, bound - double(dh));
          if (4 * dh > 3 * long(n) + 7) rep.blockBoundsHold = false;
        }
        if (n >= 15) {
          double bound = (13.0 * double(n) + 28.0) / 15.0;
          rep.worstBlockSlack = std::min(rep.worstBlockSlack, bound - double(dh));
          if (15 * dh > 13 * long(n) + 28) rep.blockBoundsHold = false;
        }
      }
    }
    i = j;
  }

  if (cfg) {
    std::int64_t uni = 0, total = 0;
    for (const auto& f : d.faces) {
      if (f.family == FlipFamily::Hexagon1) continue;
      ++total;
      if (face_orientation(d, *cfg, f.id) != FaceOrient::None) ++uni;
    }
    rep.unidirectionalFraction = total ? double(uni) / double(total) : 0.0;
    rep.densityOk = total && 7 * uni >= total;
  }
  return rep;
}

bool y_plaquette_property(const HexDomain& d) {
  if (d.kind != LatticeKind::T3464)
    throw std::invalid_argument("Y plaquettes live on the 3.4.6.4 lattice");

  // Find a central triangle whose three lozenge neighbours and their three
  // opposite triangles are all in the domain.
  std::vector<int> plaqFaces;
  for (const auto& center : d.faces) {
    if (center.key.type != FaceType::UpTri) continue;
    plaqFaces.assign(1, center.id);
    bool ok = true;
    for (int e : center.edges) {
      int loz = -1;
      for (int g : d.edgeFaces[e])
        if (g != center.id && d.face(g).family != FlipFamily::Hexagon1) loz = g;
      if (loz < 0 || d.face(loz).edges.size() != 4) {
        ok = false;
        break;
      }
      plaqFaces.push_back(loz);
      // The opposite side of the lozenge shares no vertex with e.
      auto disjoint = [&](int e2) {
        const Edge &x = d.edge(e), &y = d.edge(e2);
        return x.tail != y.tail && x.tail != y.head && x.head != y.tail &&
               x.head != y.head;
      };
      int outerTri = -1;
      for (int e2 : d.face(loz).edges) {
        if (!disjoint(e2)) continue;
        for (int g : d.edgeFaces[e2])
          if (g != loz && d.face(g).edges.size() == 3) outerTri = g;
      }
      if (outerTri < 0) {
        ok = false;
        break;
      }
      plaqFaces.push_back(outerTri);
    }
    if (ok && plaqFaces.size() == 7) break;
    plaqFaces.clear();
  }
  if (plaqFaces.size() != 7) throw capacity_error("domain too small for a Y plaquette");

  std::vector<int> edgeIds;
  for (int f : plaqFaces)
    for (int e : d.face(f).edges) edgeIds.push_back(e);
  std::sort(edgeIds.begin(), edgeIds.end());
  edgeIds.erase(std::unique(edgeIds.begin(), edgeIds.end()), edgeIds.end());
  if (edgeIds.size() != 18) throw capacity_error("unexpected Y plaquette shape");

  // Per-vertex incidence within the plaquette.
  std::map<int, std::vector<std::pair<int, bool>>> star;  // vertex -> (slot, outgoing)
  for (std::size_t t = 0; t < edgeIds.size(); ++t) {
    const Edge& e = d.edge(edgeIds[t]);
    star[e.tail].push_back({int(t), true});
    star[e.head].push_back({int(t), false});
  }

  // Face slots and CCW senses in plaquette-local numbering.
  struct LocalFace {
    std::vector<int> slot;
    std::vector<std::uint8_t> ccw;
  };
  std::vector<LocalFace> local;
  for (int f : plaqFaces) {
    LocalFace lf;
    const Face& face = d.face(f);
    for (std::size_t t = 0; t < face.edges.size(); ++t) {
      auto it = std::lower_bound(edgeIds.begin(), edgeIds.end(), face.edges[t]);
      lf.slot.push_back(int(it - edgeIds.begin()));
      lf.ccw.push_back(face.ccwSense[t]);
    }
    local.push_back(std::move(lf));
  }

  // A pattern is legal when it extends to an ice configuration: every
  // vertex sees at most 2 inward and 2 outward plaquette arrows.
  for (std::uint32_t mask = 0; mask < (1u << 18); ++mask) {
    bool legal = true;
    for (const auto& [v, inc] : star) {
      int in = 0, out = 0;
      for (auto [slot, outgoing] : inc) {
        bool bit = (mask >> slot) & 1;
        (bit == outgoing ? out : in) += 1;  // bit 1 = along canonical tail->head
      }
      if (in > 2 || out > 2) {
        legal = false;
        break;
      }
    }
    if (!legal) continue;
    bool hasUni = false;
    for (const auto& lf : local) {
      bool allCCW = true, allCW = true;
      for (std::size_t t = 0; t < lf.slot.size(); ++t) {
        bool bit = (mask >> lf.slot[t]) & 1;
        if (bit != bool(lf.ccw[t])) allCCW = false;
        if (bit == bool(lf.ccw[t])) allCW = false;
      }
      if (allCCW || allCW) {
        hasUni = true;
        break;
      }
    }
    if (!hasUni) return false;
  }
  return true;
}

FreeEntropyEstimate estimate_free_entropy(LatticeKind kind) {
  int n1 = kind == LatticeKind::Triangular ? 4 : 2;
  int n2 = n1 + 2;
  double h[2];
  for (int t = 0; t < 2; ++t) {
    HexDomain d = build_domain(kind, t == 0 ? n1 : n2);
    auto res = enumerate_fill_ins(d, cycle_boundary(d), 0);
    h[t] = entropy_of(d, res.count);
  }
  FreeEntropyEstimate est;
  // h_N = hbar + c / N, solved from the two exact points.
  est.value = (n2 * h[1] - n1 * h[0]) / double(n2 - n1);
  return est;
}

std::pair<double, double> entropy_bracket(const HexDomain& d, int x,
                                          const FreeEntropyEstimate& hbar) {
  std::int64_t upInR = 0, notInF = 0;
  for (const auto& f : d.faces) {
    bool inR = true, inF = true;
    for (int v : face_corner_ids(d, f)) {
      const Axial& at = d.vertex(v).at;
      if (!(at.a > x && at.a + at.b > x)) inR = false;
      if (!(at.a <= x && at.a + at.b <= x)) inF = false;
    }
    if (inR && !f.touchesBoundary && f.key.type == FaceType::UpTri) ++upInR;
    if (!inF) ++notInF;
  }
  double lower = double(upInR) * std::log(2.0) / double(d.edges.size());
  double upper = double(notInF) / double(d.faces.size()) * hbar.value;
  return {lower, upper};
}

double flip_count_variance(const HexDomain& d, const FlipStats& stats) {
  std::vector<double> c;
  for (const auto& f : d.faces) {
    if (f.touchesBoundary) continue;
    c.push_back(f.id < int(stats.flips.size()) ? double(stats.flips[f.id]) : 0.0);
  }
  if (c.empty()) return 0.0;
  double mean = std::accumulate(c.begin(), c.end(), 0.0) / double(c.size());
  double var = 0;
  for (double v : c) var += (v - mean) * (v - mean);
  return var / double(c.size());
}

}  // namespace ice
