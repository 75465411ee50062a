#pragma once

#include <stdexcept>
#include <string>

namespace wavecrest {

/// The conformal parametrization degenerated: min |1 + W_alpha| fell below
/// the configured chord-arc bound, so divisions by 1 + W_alpha are unsafe.
struct DegenerateSurfaceError : std::runtime_error {
  explicit DegenerateSurfaceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Graph-to-conformal fixed point failed to converge (surface too steep).
struct SteepSurfaceError : std::runtime_error {
  explicit SteepSurfaceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A field that must be holomorphic (Fourier support in k <= 0) carries
/// positive-frequency content above tolerance.
struct HolomorphyError : std::runtime_error {
  explicit HolomorphyError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavecrest
