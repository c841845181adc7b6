#pragma once

#include <optional>

#include "ice/dynamics.hpp"

namespace ice {

struct Heatmap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, 0 = darkest
};

// Cumulative flip counts deposited at face centroids; max count maps to
// black, zero to the hexagon's light-gray background, outside to white.
// `family` restricts the rendering to one flip family.
Heatmap heatmap(const HexDomain& d, const FlipStats& stats, int pixelsPerUnit = 1,
                std::optional<FlipFamily> family = std::nullopt);

void write_pgm(const Heatmap& h, std::ostream& out, bool binary = true);

struct DemarcationReport {
  std::vector<int> frozenFaces;      // off-boundary faces with zero flips
  std::vector<int> temperateFaces;   // the rest of the off-boundary faces
  std::array<int, 6> cornerFrozenAreas{};  // frozen component size at each corner
  double frozenAreaFraction = 0;
};

DemarcationReport demarcation(const HexDomain& d, const FlipStats& stats);

// Kagome: mean triangle flip count over mean 1-hexagon flip count among
// faces within centerRadius lattice units of the domain center.
double flip_ratio(const HexDomain& d, const FlipStats& stats, double centerRadius);

struct undefined_ratio_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Bounds3464Report {
  bool blockBoundsHold = false;  // every n-block along every side
  double worstBlockSlack = 0;    // min of (bound - |dh|) over checked blocks
  double tiltCeiling = 13.0 / 15.0;
  // Filled when a full configuration is supplied:
  std::optional<double> unidirectionalFraction;  // among 1-triangles + 1-lozenges
  bool densityOk = false;                        // fraction >= 1/7
};

Bounds3464Report check_3464_bounds(const HexDomain& d, const BoundarySpec& s,
                                   const Configuration* cfg = nullptr);

// Exhaustive check of the Y-plaquette property: every ice-legal arrow
// assignment on the 18 edges of a central triangle, its three lozenges
// and the three outer triangles contains a unidirectional face.
bool y_plaquette_property(const HexDomain& d);

struct FreeEntropyEstimate {
  double value = 0;  // per arrow, natural log
  bool sampled = false;
};

// Default h-bar: fit of the all-zero-signature exact entropies at the two
// largest quickly enumerable sizes, extrapolated linearly in 1/N.
FreeEntropyEstimate estimate_free_entropy(LatticeKind kind);

// Prop 4.1 bracket for the QuadrantCross(x) boundary.
std::pair<double, double> entropy_bracket(const HexDomain& d, int x,
                                          const FreeEntropyEstimate& hbar);

// Homogeneity statistic: variance of per-face flip counts (off-boundary).
double flip_count_variance(const HexDomain& d, const FlipStats& stats);

}  // namespace ice
