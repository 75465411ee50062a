#pragma once

#include <string>
#include <utility>

#include "wavecrest/errors.hpp"
#include "wavecrest/field.hpp"

namespace wavecrest {

/// Field with Fourier support in k <= 0 (boundary value of a function
/// holomorphic in the lower half-plane). Positive modes are zeroed on
/// construction; `enforce` additionally requires the discarded content to
/// be below tolerance, while `project` just records its size. Derived
/// rational expressions are holomorphic in the continuum but pick up tiny
/// positive-frequency tails from grid truncation, hence the two entry
/// points.
class HoloField {
 public:
  static constexpr double default_tol = 1e-12;

  static HoloField enforce(const SpectralField& f,
                           double tol = default_tol,
                           const char* what = "HoloField") {
    double leak = positive_leak(f);
    if (!(leak <= tol)) {
      throw HolomorphyError(std::string(what) +
                            ": positive-frequency content " +
                            std::to_string(leak) + " exceeds tolerance");
    }
    return HoloField(strip(f), leak);
  }

  static HoloField project(const SpectralField& f) {
    return HoloField(strip(f), positive_leak(f));
  }

  static HoloField zero(const Grid& grid) {
    return HoloField(SpectralField(grid), 0.0);
  }

  const SpectralField& field() const { return f_; }
  operator const SpectralField&() const { return f_; }

  /// Largest |coefficient| found at k > 0 before stripping.
  double leak() const { return leak_; }

  /// max |c_k| over k > 0.
  static double positive_leak(const SpectralField& f) {
    double m = 0.0;
    for (int i = 0; i < f.n(); ++i) {
      if (f.mode_of(i) > 0) m = std::max(m, std::abs(f.coeffs()[i]));
    }
    return m;
  }

 private:
  HoloField(SpectralField f, double leak) : f_(std::move(f)), leak_(leak) {}

  static SpectralField strip(const SpectralField& f) {
    SpectralField out = f;
    for (int i = 0; i < out.n(); ++i) {
      if (out.mode_of(i) > 0) out.coeffs()[i] = 0.0;
    }
    return out;
  }

  SpectralField f_;
  double leak_;
};

}  // namespace wavecrest
