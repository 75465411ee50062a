#pragma once

#include <cmath>
#include <cstdint>

#include "wavecrest/dynamics.hpp"

namespace wavecrest {

/// splitmix64: tiny, seedable, platform-independent generator, so seeded
/// ensembles and output files are bit-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1) + i[-1, 1).
  Complex complex_box() {
    return Complex(2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0);
  }

 private:
  std::uint64_t state_ = 0;
};

/// Random holomorphic trig polynomial supported on -k_max..-1, with a 1/|k|
/// coefficient profile so that the field and its first derivative have
/// comparable size ~ amp, plus an optional zero mode.
inline SpectralField random_holo(const Grid& grid, Rng& rng, int k_max,
                                 double amp, Complex mean_value = 0.0) {
  SpectralField f(grid);
  double scale = amp / std::sqrt(static_cast<double>(k_max));
  for (int k = -k_max; k <= -1; ++k) {
    f.set_coeff(k, scale / std::abs(k) * rng.complex_box());
  }
  f.set_coeff(0, mean_value);
  return f;
}

/// Random admissible wave state: W with purely imaginary mean, Q with real
/// mean, both supported on modes -k_max..0.
inline WaveState random_state(const Grid& grid, std::uint64_t seed, int k_max,
                              double amp) {
  Rng rng(seed);
  SpectralField W = random_holo(grid, rng, k_max, amp,
                                Complex(0.0, amp * (2.0 * rng.uniform() - 1.0)));
  SpectralField Q = random_holo(grid, rng, k_max, amp,
                                Complex(amp * (2.0 * rng.uniform() - 1.0), 0.0));
  return WaveState::make(W, Q, 0.0);
}

/// Random holomorphic linearized perturbation (w, r).
inline LinState random_linstate(const Grid& grid, std::uint64_t seed,
                                int k_max, double amp) {
  Rng rng(seed);
  SpectralField w = random_holo(grid, rng, k_max, amp,
                                Complex(0.0, amp * (2.0 * rng.uniform() - 1.0)));
  SpectralField r = random_holo(grid, rng, k_max, amp,
                                Complex(amp * (2.0 * rng.uniform() - 1.0), 0.0));
  return LinState::make(w, r);
}

}  // namespace wavecrest
