#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "ice/dynamics.hpp"

namespace ice {

struct EnumerationResult {
  mpz_class count;                    // exact number of fill-ins
  std::vector<Configuration> configs; // stored while count <= storeLimit
  bool truncated = false;             // configs omitted past the limit
};

// Exact backtracking over the free arrows of a boundary condition.
EnumerationResult enumerate_fill_ins(const HexDomain& d, const BoundarySpec& s,
                                     std::uint64_t storeLimit = 10'000'000);

struct FlipGraphSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;       // unordered flip moves
  int components = 0;
  std::vector<int> component;  // per config index
};

// Flip graph over a complete set of fill-ins, moves restricted to the
// given families (boundary-touching faces never move).
FlipGraphSummary flip_graph(const HexDomain& d, const std::vector<Configuration>& cfgs,
                            const std::vector<FlipFamily>& families);

// Entropy per arrow: log(count) / #edges of the domain.
double entropy_of(const HexDomain& d, const mpz_class& count);

struct UniformityResult {
  double chi2 = 0;
  double pValue = 0;
  std::size_t dof = 0;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> hits;  // per config index
};

// Pearson chi-square test of the sampler's empirical distribution over a
// completely enumerated instance.
UniformityResult uniformity_test(const HexDomain& d, const std::vector<Configuration>& cfgs,
                                 const Schedule& sched, std::uint64_t seed,
                                 std::uint64_t samples, std::uint64_t spacingSweeps,
                                 std::uint64_t burnInSweeps,
                                 CoinMode coin = CoinMode::Fair);

}  // namespace ice
