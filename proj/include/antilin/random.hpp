#pragma once

// Seeded, platform-independent random instances.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Normal deviates come from a Box-Muller transform written here
// (std::normal_distribution is implementation-defined). Independent streams
// are derived with Rng::stream(seed, index): the seed and stream index are
// mixed through SplitMix64, so trial k of a seeded run always sees the same
// numbers regardless of how many other trials ran or in which order.

#include <cstdint>
#include <random>

#include "antilin/bipartite.hpp"

namespace antilin {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Generator for stream `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double normal();
  /// Standard complex normal: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

ComplexMatrix random_matrix(Index rows, Index cols, Rng& rng);
ComplexVector random_unit_vector(Index d, Rng& rng);
ComplexMatrix random_unitary(Index d, Rng& rng);
/// G G^* for a Ginibre G, scaled to unit trace.
ComplexMatrix random_density(Index d, Rng& rng);
ComplexMatrix random_hermitian(Index d, Rng& rng);

/// Coefficients drawn i.i.d. standard complex normal, row-major, then
/// normalized to unit norm.
BipartiteVector random_state(Index dim_a, Index dim_b, Rng& rng);

/// Deterministic per (dims, seed). With `completely_entangled`, draws are
/// repeated until both reductions have full rank (requires dim_a == dim_b).
BipartiteVector random_state(Index dim_a, Index dim_b, std::uint64_t seed,
                             bool completely_entangled = false);

}  // namespace antilin
