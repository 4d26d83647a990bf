#pragma once

// Counter-based random numbers for reproducible Monte Carlo.
//
// The generator is Philox4x32-10 (Salmon et al., Random123). Sample i of a
// run seeded with s draws from its own stream: key = s, counter =
// (block, 0, lo32(i), hi32(i)). Samples are therefore independent of the
// order and thread in which they are drawn, and a fixed seed reproduces the
// same bits on any platform with IEEE doubles and a correctly rounded libm.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace dihedral {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Ten-round Philox4x32 bijection.
PhiloxBlock philox4x32(PhiloxBlock counter, PhiloxKey key);

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  double normal();
  /// log of a Gamma(shape, 1) variate; stable for small shapes.
  double log_gamma_variate(double shape);

 private:
  void refill();

  PhiloxKey key_;
  PhiloxBlock counter_;
  PhiloxBlock buffer_{};
  int available_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Writes one Dirichlet(alphas) sample into `out` (same size as alphas).
void draw_dirichlet(CounterRng& rng, std::span<const double> alphas,
                    std::span<double> out);

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Mean of fn(u) over `count` Dirichlet(alphas) samples. Chunks are reduced
/// in a fixed pairwise tree, so the result does not depend on the thread
/// count (DIHEDRAL_THREADS, default hardware concurrency).
MonteCarloEstimate dirichlet_expectation(
    std::span<const double> alphas, std::size_t count, std::uint64_t seed,
    const std::function<double(std::span<const double>)>& fn);

/// Worker count taken from DIHEDRAL_THREADS.
unsigned configured_thread_count();

}  // namespace dihedral
