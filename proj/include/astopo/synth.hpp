#pragma once

#include <cstdint>
#include <random>

#include "astopo/graph.hpp"
#include "astopo/powerlaw.hpp"

namespace astopo {

/// Deterministic pseudo-random stream. Uniform doubles are built from the
/// raw 64-bit output (53-bit mantissa) and bounded integers by rejection,
/// so identical seeds give identical sequences on every platform; the
/// standard distribution adapters are implementation-defined and avoided.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [0, 1).
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// n independent draws through the inverse CDF. Frequencies converge to the
/// pmf; a fixed seed reproduces the exact sequence.
DegreeSequence sample_degrees(const BoundedPowerLaw& d, std::int64_t n, RandomState& state);

struct GenerateResult {
    EdgeList edges;
    /// Odd-sum repair: one uniformly chosen node's degree was raised by 1.
    bool degree_adjusted = false;
    std::int64_t adjusted_node = -1;
    /// Stubs rewired while making the graph simple.
    std::int64_t rewire_swaps = 0;
    /// Leftover self-loops / duplicate edges dropped after the swap budget
    /// ran out; the realized degree sequence deviates by these.
    std::int64_t residual_self_loops = 0;
    std::int64_t residual_duplicates = 0;
};

/// Random stub matching over nodes 0..n-1 with the prescribed degrees.
/// With `simple` set, self-loops and multi-edges are rewired away by random
/// stub swaps (bounded attempts; residual removals reported). Throws
/// DataError when `simple` is set and the largest degree exceeds the stubs
/// available from all other nodes.
GenerateResult configuration_model(const DegreeSequence& seq, RandomState& state, bool simple);

}  // namespace astopo
