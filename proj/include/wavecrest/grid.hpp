#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

namespace wavecrest {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Uniform periodic grid on [0, period) with n_modes collocation points.
/// n_modes must be a power of two so that FFTs are exact radix-2 and the
/// dyadic frequency blocks tile the spectrum without remainders.
class Grid {
 public:
  Grid(int n_modes, double period = two_pi)
      : n_(n_modes), period_(period) {
    if (n_ < 4 || (n_ & (n_ - 1)) != 0)
      throw std::invalid_argument("Grid: n_modes must be a power of two >= 4");
    if (!(period_ > 0.0))
      throw std::invalid_argument("Grid: period must be positive");
  }

  int n_modes() const { return n_; }
  double period() const { return period_; }

  /// Collocation node alpha_j = j * period / n_modes.
  double node(int j) const { return period_ * static_cast<double>(j) / n_; }

  std::vector<double> nodes() const {
    std::vector<double> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = node(j);
    return out;
  }

  /// Integer mode range is [-n/2, n/2).
  int k_min() const { return -n_ / 2; }
  int k_max() const { return n_ / 2 - 1; }

  /// Physical wavenumber of integer mode k (coefficient of e^{i kappa alpha}).
  double wavenumber(int k) const { return two_pi * k / period_; }

  /// Largest retained |k| under the 2/3 dealiasing rule. For power-of-two
  /// n this is strictly below n/3, so quadratic aliases never land in band.
  int dealias_limit() const { return n_ / 3; }

  bool operator==(const Grid& o) const {
    return n_ == o.n_ && period_ == o.period_;
  }
  bool operator!=(const Grid& o) const { return !(*this == o); }

 private:
  int n_;
  double period_;
};

}  // namespace wavecrest
