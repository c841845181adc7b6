#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ice/config.hpp"

namespace ice {

// One sweep applies the family passes in order.  Within a pass every
// currently unidirectional face of that family (off the boundary) is
// reversed independently with probability 1/2; faces of one family share
// no edges, so the flips commute.
struct Schedule {
  std::vector<FlipFamily> passes;
};

Schedule default_schedule(LatticeKind kind);
Schedule schedule_from_string(LatticeKind kind, const std::string& s);
std::string to_string(const Schedule& s);

struct FlipStats {
  std::vector<std::uint64_t> flips;  // per face id
  std::uint64_t sweeps = 0;          // sweeps counted into `flips`
};

struct SamplerState {
  Configuration cfg;
  std::uint64_t seed = 0;
  std::uint64_t sweep = 0;  // sweeps completed so far
};

// AlwaysFlip replaces the fair coin with p = 1; it breaks detailed
// balance and serves as a negative control for uniformity tests.
enum class CoinMode { Fair, AlwaysFlip };

// Runs `sweeps` sweeps.  The trajectory depends only on (cfg, seed,
// sweep, schedule); the thread count never changes the outcome.
void run_sampler(const HexDomain& d, SamplerState& st, const Schedule& sched,
                 std::uint64_t sweeps, int threads, FlipStats* stats = nullptr,
                 CoinMode coin = CoinMode::Fair);

// The coin used for a face flip; exposed for reproducibility tests.
bool flip_coin(std::uint64_t seed, std::uint64_t sweep, std::uint32_t passIndex,
               std::uint32_t faceId);

// Walks forward along arrows through interior vertices until a vertex
// repeats, returning the directed cycle found (vertex ids in order).
// `startHint` seeds the choice of start vertex and of outgoing arrows.
std::vector<int> find_unidirectional_cycle(const HexDomain& d, const Configuration& c,
                                           std::uint64_t startHint);

// Faces whose center lies strictly inside the closed polygon through the
// given vertices (in cyclic order).
std::vector<int> faces_inside_cycle(const HexDomain& d, const std::vector<int>& cycleVerts);

// A unidirectional face enclosed by the given unidirectional cycle.
std::optional<int> find_enclosed_1cycle(const HexDomain& d, const Configuration& c,
                                        const std::vector<int>& cycleVerts);

}  // namespace ice
