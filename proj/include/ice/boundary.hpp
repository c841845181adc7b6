#pragma once

#include <array>

#include "ice/config.hpp"

namespace ice {

struct infeasible_signature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct no_maximal_tilt_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundary with the requested per-side tilts, each in {-1, 0, +1}.
// Sides of tilt +-1 are monotone runs; tilt-0 sides alternate, the first
// starting with a +1 step and later odd-length ones flipping phase so the
// total flux stays zero.
BoundarySpec from_signature(const HexDomain& d, const std::array<int, 6>& tilt);

// Every side split into half tilt +1 and half tilt -1; on odd sides the
// halves swap so consecutive corners alternate peak/valley.
BoundarySpec alternating_edge_split(const HexDomain& d);

enum class SeedTag {
  Fig4a,         // triangular: 1/3/5 o'clock lines, two lines through the center reversed
  Fig4b,         // Kagome: 3/7/11 o'clock lines
  Fig4c,         // Kagome: alternating line directions per axis
  Fig4d,         // 3.4.6.4: frozen periodic low-entropy pattern
  QuadrantCross, // triangular: Fig 5a, four quadrants meeting at x on the horizontal axis
  AllOneCycles,  // every face a directed 1-cycle
};

struct SeedRecipe {
  SeedTag tag;
  int x = 0;  // QuadrantCross only: horizontal axial coordinate in [-N/2, N/2]
};

Configuration seed_config(const HexDomain& d, const SeedRecipe& r);

// Whole-boundary directed cycle: the zero signature with strictly
// alternating boundary arrows.
BoundarySpec cycle_boundary(const HexDomain& d);

}  // namespace ice
