#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ice/lattice.hpp"

namespace ice {

// One arrow per edge: bit = 1 means the arrow runs along the canonical
// tail -> head direction of the edge.
struct Configuration {
  std::vector<std::uint8_t> bits;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration zero_config(const HexDomain& d);

struct IceViolation {
  int vertex;
  int in;
  int out;
};

// Interior vertices where in-degree != out-degree.
std::vector<IceViolation> ice_violations(const HexDomain& d, const Configuration& c);
bool is_ice(const HexDomain& d, const Configuration& c);

struct invalid_config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Height on the dual cover, one integer per dual vertex, zero at the
// domain base point.  Crossing a primal edge left to right (relative to
// its canonical direction) changes the height by crossSignBit1 when the
// bit is 1 and by its negation when the bit is 0.
struct HeightField {
  std::vector<int> h;

  friend bool operator==(const HeightField&, const HeightField&) = default;
};

// Throws invalid_config_error when the increments are not path
// independent (equivalently, when the ice rule fails somewhere).
HeightField height_field(const HexDomain& d, const Configuration& c);

// Arrows of the unique configuration whose height field is h; requires
// |h(left) - h(right)| = 1 across every edge.
Configuration config_of_field(const HexDomain& d, const std::vector<int>& h);

// Heights visited by the boundary loop: entry i is the height at the
// source dual vertex of crossing i, entry loop.size() is the closing
// value (0 for every ice configuration).
std::vector<int> boundary_profile(const HexDomain& d, const Configuration& c);

// Per-side tilt: net height change over a side divided by its crossings.
struct Signature {
  std::array<Rat, 6> tilt;
};
Signature signature_of(const HexDomain& d, const Configuration& c);

enum class PartialOrder { Less, Equal, Greater, Incomparable };
PartialOrder compare_heights(const HeightField& a, const HeightField& b);

enum class FaceOrient { None, CCW, CW };
FaceOrient face_orientation(const HexDomain& d, const Configuration& c, int faceId);
void flip_face(const HexDomain& d, Configuration& c, int faceId);

// Extremal configuration with the same boundary: Max repeatedly flips
// every interior CCW 1-cycle at once, Min every CW 1-cycle.
enum class Extremal { Min, Max };
Configuration extremal(const HexDomain& d, Configuration c, Extremal which);

// Pinned arrows: bit[e] in {0, 1} when fixed, -1 when free.  A boundary
// condition pins exactly the boundary arrows.
struct BoundarySpec {
  std::vector<std::int8_t> bit;
};

BoundarySpec boundary_of(const HexDomain& d, const Configuration& c);
bool is_boundary_spec(const HexDomain& d, const BoundarySpec& s);

// The height-maximal fill-in of a boundary condition, or nullopt when no
// ice configuration matches it.
std::optional<Configuration> max_fill_in(const HexDomain& d, const BoundarySpec& s);

// Text formats.  ICECFG holds every arrow, ICEBND only the pinned ones.
void write_config(const HexDomain& d, const Configuration& c, std::ostream& out);
Configuration read_config(const HexDomain& d, std::istream& in);
void write_boundary(const HexDomain& d, const BoundarySpec& s, std::ostream& out);
BoundarySpec read_boundary(const HexDomain& d, std::istream& in);

}  // namespace ice
