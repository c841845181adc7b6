#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "ice/geom.hpp"

namespace ice {

enum class LatticeKind { Triangular, Kagome, T3464 };

const char* to_string(LatticeKind k);
LatticeKind lattice_from_string(const std::string& s);

// Vertex degree of the infinite lattice.
int lattice_degree(LatticeKind k);

enum class FlipFamily : int {
  EvenTriangle = 0,
  OddTriangle = 1,
  Hexagon1 = 2,
  LozengeLeft = 3,
  LozengeRight = 4,
  LozengeStraight = 5,
};
inline constexpr int kFamilyCount = 6;

const char* to_string(FlipFamily f);
FlipFamily family_from_string(const std::string& s);
bool family_valid_for(LatticeKind k, FlipFamily f);

struct Vertex {
  int id = -1;
  Axial at;            // axial coordinates on the underlying triangular lattice
  int cellA = 0, cellB = 0;  // unit-cell coordinates (lattice specific)
  int basis = 0;             // index within the unit cell
  Pos12 pos;
  bool interior = false;  // full arrow star inside the domain
};

struct Edge {
  int id = -1;
  int tail = -1;  // vertex id; canonical direction tail->head has angle in [0, pi)
  int head = -1;
  int dirclass = 0;  // 0, 1, 2 for the axes at 0, 60, 120 degrees
  bool boundary = false;
};

// Canonical identity of a face of the infinite lattice.
enum class FaceType : int { UpTri = 0, DownTri = 1, Hex = 2, Loz0 = 3, Loz1 = 4, Loz2 = 5 };

struct FaceKey {
  FaceType type = FaceType::UpTri;
  Axial anchor;
  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

struct FaceKeyHash {
  std::size_t operator()(const FaceKey& k) const {
    std::uint64_t h = std::uint64_t(int(k.type)) * 0x9e3779b97f4a7c15ull;
    h ^= (std::uint64_t(std::uint32_t(k.anchor.a)) << 21) + std::uint64_t(std::uint32_t(k.anchor.b));
    h *= 0xbf58476d1ce4e5b9ull;
    return std::size_t(h ^ (h >> 31));
  }
};

struct Face {
  int id = -1;
  FlipFamily family = FlipFamily::EvenTriangle;
  FaceKey key;
  std::vector<int> edges;        // counterclockwise cyclic order
  std::vector<std::uint8_t> ccwSense;  // 1 if CCW traversal follows the canonical direction
  Pos12 centroid;
  int centerDual = -1;           // dual vertex at the face center
  bool touchesBoundary = false;  // contains at least one boundary arrow
};

// One crossing of the dual boundary loop over a boundary arrow.
struct BoundaryCrossing {
  int edge = -1;      // primal boundary edge crossed
  int fromDual = -1;
  int toDual = -1;
  int signBit1 = 0;   // height increment along the loop when the edge bit is 1
  int side = 0;       // hexagon side 0..5, counterclockwise from the base point
  int posInSide = 0;
};

struct DualCover {
  std::vector<Pos12> pos;                 // position per dual vertex
  std::vector<FaceKey> key;               // lattice face per dual vertex
  std::vector<int> edgeLeft, edgeRight;   // dual vertex on each side of a primal
                                          // edge, relative to its canonical direction
  std::vector<int> crossSignBit1;         // height increment left->right when bit = 1
  int basePoint = -1;                     // loop origin, a leftmost dual vertex
  std::vector<BoundaryCrossing> loop;     // closed CCW boundary loop from basePoint
};

class HexDomain {
 public:
  LatticeKind kind;
  int N = 0;

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Face> faces;
  DualCover dual;

  std::vector<int> interiorVertexIds;
  std::vector<int> boundaryEdgesCCW;              // edge ids in loop order
  std::vector<std::vector<int>> facesOfFamily;     // face ids per family tag
  std::vector<std::vector<int>> vertexEdges;       // incident edge ids per vertex
  std::vector<std::vector<int>> edgeFaces;         // domain face ids bordering an edge

  int sideLength() const { return int(dual.loop.size()) / 6; }
  const Vertex& vertex(int id) const { return vertices[id]; }
  const Edge& edge(int id) const { return edges[id]; }
  const Face& face(int id) const { return faces[id]; }

  // True if `v` points along the canonical (angle in [0, pi)) direction of
  // an axis; used when orienting raw axial steps.
  static bool canonical_step(Axial step);
};

// Builds the N-hexagon domain.  N must be even and >= 2.
HexDomain build_domain(LatticeKind kind, int N);

std::vector<const Face*> faces_by_family(const HexDomain& d, FlipFamily family);

struct BoundaryEdgeRef {
  int edge;
  int side;
  int posInSide;
};
std::vector<BoundaryEdgeRef> boundary_edges(const HexDomain& d);

// Line-oriented text export: V/E/F records, deterministic order.
void export_domain(const HexDomain& d, std::ostream& out);

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ice
