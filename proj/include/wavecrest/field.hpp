#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "wavecrest/fft.hpp"
#include "wavecrest/grid.hpp"

namespace wavecrest {

using Complex = std::complex<double>;

/// Complex function on the periodic grid, stored as Fourier coefficients
/// c_k of e^{2 pi i k alpha / period}, k = -n/2 .. n/2-1 (ascending).
///
/// Parseval convention: integral |f|^2 dalpha = period * sum_k |c_k|^2.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid)
      : grid_(grid), c_(grid.n_modes(), Complex(0.0, 0.0)) {}

  const Grid& grid() const { return grid_; }
  int n() const { return grid_.n_modes(); }

  const Complex& coeff(int k) const { return c_[index(k)]; }
  void set_coeff(int k, Complex v) { c_[index(k)] = v; }
  void add_coeff(int k, Complex v) { c_[index(k)] += v; }

  const std::vector<Complex>& coeffs() const { return c_; }
  std::vector<Complex>& coeffs() { return c_; }

  /// k for storage slot i.
  int mode_of(int i) const { return i - grid_.n_modes() / 2; }

  bool same_grid(const SpectralField& o) const { return grid_ == o.grid_; }

  SpectralField& operator+=(const SpectralField& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  SpectralField& operator-=(const SpectralField& o) {
    check(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  SpectralField& operator*=(Complex s) {
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    a += b;
    return a;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    a -= b;
    return a;
  }
  friend SpectralField operator*(Complex s, SpectralField f) {
    f *= s;
    return f;
  }
  friend SpectralField operator*(SpectralField f, Complex s) {
    f *= s;
    return f;
  }
  friend SpectralField operator-(SpectralField f) {
    f *= Complex(-1.0, 0.0);
    return f;
  }

 private:
  void check(const SpectralField& o) const {
    if (!same_grid(o))
      throw std::invalid_argument("SpectralField: grid mismatch");
  }
  int index(int k) const {
    int i = k + grid_.n_modes() / 2;
    if (i < 0 || i >= grid_.n_modes())
      throw std::out_of_range("SpectralField: mode out of range");
    return i;
  }

  Grid grid_;
  std::vector<Complex> c_;
};

// ---------------------------------------------------------------------------
// Physical <-> spectral transforms.
// ---------------------------------------------------------------------------

/// Samples f at the collocation nodes.
inline std::vector<Complex> to_physical(const SpectralField& f) {
  const int n = f.n();
  std::vector<Complex> buf(n);
  // Reorder ascending-k storage into FFT natural order (k mod n).
  for (int i = 0; i < n; ++i) {
    int k = f.mode_of(i);
    buf[(k + n) % n] = f.coeffs()[i];
  }
  detail::FftEngine::backward(buf);
  return buf;
}

inline SpectralField from_physical(const Grid& grid,
                                   std::vector<Complex> values) {
  if (static_cast<int>(values.size()) != grid.n_modes())
    throw std::invalid_argument("from_physical: length mismatch");
  detail::FftEngine::forward(values);
  SpectralField f(grid);
  const int n = grid.n_modes();
  const double inv = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    int k = f.mode_of(i);
    f.coeffs()[i] = values[(k + n) % n] * inv;
  }
  return f;
}

/// Samples f on a refined grid with pad_factor * n points (trigonometric
/// interpolation; exact for band-limited f).
inline std::vector<Complex> to_physical_padded(const SpectralField& f,
                                               int pad_factor = 2) {
  const int n = f.n();
  const int m = n * pad_factor;
  std::vector<Complex> buf(m, Complex(0.0, 0.0));
  for (int i = 0; i < n; ++i) {
    int k = f.mode_of(i);
    buf[(k + m) % m] = f.coeffs()[i];
  }
  detail::FftEngine::backward(buf);
  return buf;
}

/// Transforms values on the pad_factor-refined grid back and keeps only the
/// modes representable on the base grid (|k| <= keep_limit).
inline SpectralField from_physical_padded(const Grid& grid,
                                          std::vector<Complex> values,
                                          int keep_limit) {
  const int m = static_cast<int>(values.size());
  detail::FftEngine::forward(values);
  SpectralField f(grid);
  const double inv = 1.0 / m;
  for (int k = -keep_limit; k <= keep_limit; ++k) {
    f.set_coeff(k, values[(k + m) % m] * inv);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Elementary field utilities.
// ---------------------------------------------------------------------------

inline SpectralField constant_field(const Grid& grid, Complex value) {
  SpectralField f(grid);
  f.set_coeff(0, value);
  return f;
}

/// Single Fourier mode amp * e^{2 pi i k alpha / period}.
inline SpectralField mode_field(const Grid& grid, int k, Complex amp) {
  SpectralField f(grid);
  f.set_coeff(k, amp);
  return f;
}

inline SpectralField add_constant(SpectralField f, Complex value) {
  f.add_coeff(0, value);
  return f;
}

/// Pointwise complex conjugate, computed exactly in spectral space:
/// c'_k = conj(c_{-k}), with the unpaired mode -n/2 conjugated in place.
inline SpectralField conj_field(const SpectralField& f) {
  SpectralField out(f.grid());
  const int half = f.n() / 2;
  out.set_coeff(-half, std::conj(f.coeff(-half)));
  for (int k = -half + 1; k <= half - 1; ++k)
    out.set_coeff(k, std::conj(f.coeff(-k)));
  return out;
}

/// (f + conj f)/2 as a field.
inline SpectralField real_part_field(const SpectralField& f) {
  SpectralField out = f;
  out += conj_field(f);
  out *= Complex(0.5, 0.0);
  return out;
}

inline Complex mean(const SpectralField& f) { return f.coeff(0); }

/// integral f dalpha = period * c_0.
inline Complex integral(const SpectralField& f) {
  return f.grid().period() * f.coeff(0);
}

/// Parseval: integral |f|^2 dalpha.
inline double l2_sq(const SpectralField& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::norm(c);
  return f.grid().period() * s;
}

inline double l2_norm(const SpectralField& f) { return std::sqrt(l2_sq(f)); }

/// max_j |f(alpha_j)| over the collocation nodes.
inline double sup_norm(const SpectralField& f) {
  double m = 0.0;
  for (const auto& v : to_physical(f)) m = std::max(m, std::abs(v));
  return m;
}

/// Largest |coefficient| (used for support/leakage checks).
inline double max_abs_coeff(const SpectralField& f) {
  double m = 0.0;
  for (const auto& c : f.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

inline bool finite(const SpectralField& f) {
  for (const auto& c : f.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

}  // namespace wavecrest
