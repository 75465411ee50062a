#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "wavecrest/errors.hpp"
#include "wavecrest/field.hpp"

namespace wavecrest {

// ---------------------------------------------------------------------------
// Fourier multipliers.
//
// Conventions: H e^{ik alpha} = -i sgn(k) e^{ik alpha}, so holomorphic
// boundary values (support k <= 0) satisfy f = -i H f away from the mean.
// P = (I - iH)/2 keeps k < 0 and half of the zero mode; Pbar = I - P.
// ---------------------------------------------------------------------------

inline SpectralField apply_multiplier(
    const SpectralField& f, const std::function<Complex(int)>& symbol) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    out.coeffs()[i] *= symbol(out.mode_of(i));
  }
  return out;
}

inline SpectralField hilbert(const SpectralField& f) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    int k = out.mode_of(i);
    if (k > 0)
      out.coeffs()[i] *= Complex(0.0, -1.0);
    else if (k < 0)
      out.coeffs()[i] *= Complex(0.0, 1.0);
    else
      out.coeffs()[i] = 0.0;
  }
  return out;
}

/// P = (I - iH)/2: zeroes k > 0, halves k = 0, keeps k < 0.
inline SpectralField project_P(const SpectralField& f) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    int k = out.mode_of(i);
    if (k > 0)
      out.coeffs()[i] = 0.0;
    else if (k == 0)
      out.coeffs()[i] *= 0.5;
  }
  return out;
}

/// Pbar = I - P (equivalently conj . P . conj).
inline SpectralField project_Pbar(const SpectralField& f) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    int k = out.mode_of(i);
    if (k < 0)
      out.coeffs()[i] = 0.0;
    else if (k == 0)
      out.coeffs()[i] *= 0.5;
  }
  return out;
}

/// P0: zero mode only.
inline SpectralField project_P0(const SpectralField& f) {
  SpectralField out(f.grid());
  out.set_coeff(0, f.coeff(0));
  return out;
}

/// Psharp = P - P0/2: keeps k < 0 strictly, kills the zero mode.
inline SpectralField project_Psharp(const SpectralField& f) {
  SpectralField out = project_P(f);
  out.set_coeff(0, 0.0);
  return out;
}

/// Pr = Psharp + Re o P0. Real-linear (not complex-linear) on the zero mode.
inline SpectralField project_Pr(const SpectralField& f) {
  SpectralField out = project_Psharp(f);
  out.set_coeff(0, Complex(f.coeff(0).real(), 0.0));
  return out;
}

/// Pi = Psharp + i Im o P0. Real-linear on the zero mode.
inline SpectralField project_Pi(const SpectralField& f) {
  SpectralField out = project_Psharp(f);
  out.set_coeff(0, Complex(0.0, f.coeff(0).imag()));
  return out;
}

/// conj . T . conj for the zero-mode projector variants.
inline SpectralField project_Pbar_sharp(const SpectralField& f) {
  return conj_field(project_Psharp(conj_field(f)));
}
inline SpectralField project_Pbar_r(const SpectralField& f) {
  return conj_field(project_Pr(conj_field(f)));
}
inline SpectralField project_Pbar_i(const SpectralField& f) {
  return conj_field(project_Pi(conj_field(f)));
}

/// d^order/dalpha^order, multiplier (i kappa)^order with kappa = 2 pi k / L.
inline SpectralField deriv(const SpectralField& f, int order = 1) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    double kappa = out.grid().wavenumber(out.mode_of(i));
    out.coeffs()[i] *= std::pow(Complex(0.0, kappa), order);
  }
  return out;
}

/// |D|^s, multiplier |kappa|^s. The zero mode is annihilated for s > 0.
inline SpectralField frac_deriv(const SpectralField& f, double s) {
  SpectralField out = f;
  for (int i = 0; i < out.n(); ++i) {
    double kappa = std::abs(out.grid().wavenumber(out.mode_of(i)));
    out.coeffs()[i] *= (kappa == 0.0 && s > 0.0) ? 0.0 : std::pow(kappa, s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dealiased products and pointwise rational expressions.
// ---------------------------------------------------------------------------

namespace detail {

// Dealiasing can be disabled per-thread for aliasing experiments; all
// normal code paths leave it on.
inline thread_local bool dealias_enabled = true;

inline int keep_limit(const Grid& grid) {
  return dealias_enabled ? grid.dealias_limit() : grid.n_modes() / 2 - 1;
}

}  // namespace detail

struct DealiasScope {
  explicit DealiasScope(bool on) : saved_(detail::dealias_enabled) {
    detail::dealias_enabled = on;
  }
  ~DealiasScope() { detail::dealias_enabled = saved_; }
  DealiasScope(const DealiasScope&) = delete;
  DealiasScope& operator=(const DealiasScope&) = delete;

 private:
  bool saved_;
};

/// 2/3-rule truncation: zeroes all |k| > n/3.
inline SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  const int lim = detail::keep_limit(f.grid());
  for (int i = 0; i < out.n(); ++i) {
    if (std::abs(out.mode_of(i)) > lim) out.coeffs()[i] = 0.0;
  }
  return out;
}

/// Dealiased pointwise product. Both factors are truncated to |k| <= n/3
/// before the grid multiplication and the result is truncated again, so
/// quadratic aliases (which land outside the band) never survive. For
/// factors already supported in the band this equals exact convolution.
inline SpectralField product(const SpectralField& f, const SpectralField& g) {
  if (!f.same_grid(g)) throw std::invalid_argument("product: grid mismatch");
  auto fv = to_physical(dealias(f));
  auto gv = to_physical(dealias(g));
  for (size_t j = 0; j < fv.size(); ++j) fv[j] *= gv[j];
  return dealias(from_physical(f.grid(), std::move(fv)));
}

namespace detail {

/// Shared implementation for pointwise rational expressions: evaluates
/// numerator(j) / denominator(j) on a 2x padded grid and keeps the dealias
/// band. Padding pushes the wrap-around alias of the (non band-limited)
/// quotient far outside the retained band.
template <typename Num, typename Den>
SpectralField pointwise_ratio(const Grid& grid, Num num, Den den, int m) {
  std::vector<Complex> vals(m);
  for (int j = 0; j < m; ++j) vals[j] = num(j) / den(j);
  return from_physical_padded(grid, std::move(vals), keep_limit(grid));
}

inline void check_lower_bound(double got, double need, const char* what) {
  if (!(got >= need)) {
    throw DegenerateSurfaceError(std::string(what) +
                                 ": pointwise lower bound violated (min = " +
                                 std::to_string(got) + ")");
  }
}

}  // namespace detail

/// min_j |g(alpha_j)| on the 2x padded grid.
inline double min_abs_padded(const SpectralField& g) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : to_physical_padded(g)) m = std::min(m, std::abs(v));
  return m;
}

/// f / g by padded pointwise division; requires min |g| >= floor_abs.
inline SpectralField divide(const SpectralField& f, const SpectralField& g,
                            double floor_abs) {
  if (!f.same_grid(g)) throw std::invalid_argument("divide: grid mismatch");
  auto fv = to_physical_padded(f);
  auto gv = to_physical_padded(g);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : gv) lo = std::min(lo, std::abs(v));
  detail::check_lower_bound(lo, floor_abs, "divide");
  return detail::pointwise_ratio(
      f.grid(), [&](int j) { return fv[j]; }, [&](int j) { return gv[j]; },
      static_cast<int>(fv.size()));
}

/// f / |u|^2 (pointwise padded); requires min |u| >= floor_abs.
inline SpectralField divide_abs2(const SpectralField& f,
                                 const SpectralField& u, double floor_abs) {
  if (!f.same_grid(u))
    throw std::invalid_argument("divide_abs2: grid mismatch");
  auto fv = to_physical_padded(f);
  auto uv = to_physical_padded(u);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : uv) lo = std::min(lo, std::abs(v));
  detail::check_lower_bound(lo, floor_abs, "divide_abs2");
  return detail::pointwise_ratio(
      f.grid(), [&](int j) { return fv[j]; },
      [&](int j) { return std::norm(uv[j]); }, static_cast<int>(fv.size()));
}

/// |f|^2 / |u|^2 (pointwise padded); requires min |u| >= floor_abs.
inline SpectralField ratio_abs2(const SpectralField& f, const SpectralField& u,
                                double floor_abs) {
  if (!f.same_grid(u)) throw std::invalid_argument("ratio_abs2: grid mismatch");
  auto fv = to_physical_padded(f);
  auto uv = to_physical_padded(u);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : uv) lo = std::min(lo, std::abs(v));
  detail::check_lower_bound(lo, floor_abs, "ratio_abs2");
  return detail::pointwise_ratio(
      f.grid(), [&](int j) { return Complex(std::norm(fv[j]), 0.0); },
      [&](int j) { return std::norm(uv[j]); }, static_cast<int>(fv.size()));
}

/// f / u^2 (pointwise padded); requires min |u| >= floor_abs.
inline SpectralField divide_sq(const SpectralField& f, const SpectralField& u,
                               double floor_abs) {
  if (!f.same_grid(u)) throw std::invalid_argument("divide_sq: grid mismatch");
  auto fv = to_physical_padded(f);
  auto uv = to_physical_padded(u);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : uv) lo = std::min(lo, std::abs(v));
  detail::check_lower_bound(lo, floor_abs, "divide_sq");
  return detail::pointwise_ratio(
      f.grid(), [&](int j) { return fv[j]; },
      [&](int j) { return uv[j] * uv[j]; }, static_cast<int>(fv.size()));
}

// ---------------------------------------------------------------------------
// Quadrature of products that exceed the base band (up to cubic integrands):
// trapezoid on the 2x padded grid integrates trig polynomials of degree
// < 2n exactly.
// ---------------------------------------------------------------------------

template <typename F>
Complex integrate_padded(const Grid& grid, int m, F integrand) {
  Complex s(0.0, 0.0);
  for (int j = 0; j < m; ++j) s += integrand(j);
  return s * (grid.period() / static_cast<double>(m));
}

}  // namespace wavecrest
