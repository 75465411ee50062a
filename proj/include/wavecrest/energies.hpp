#pragma once

#include <cmath>

#include "wavecrest/state.hpp"

namespace wavecrest {

/// integral Im(r conj(r)_alpha) dalpha, evaluated spectrally:
/// period * sum_k (-kappa_k) |r_k|^2. Nonnegative on holomorphic fields,
/// where it equals the homogeneous H^{1/2} norm squared.
inline double imag_rrbar_term(const SpectralField& r) {
  double s = 0.0;
  for (int i = 0; i < r.n(); ++i) {
    s -= r.grid().wavenumber(r.mode_of(i)) * std::norm(r.coeffs()[i]);
  }
  return r.grid().period() * s;
}

/// period * sum |kappa| |c_k|^2 (the |D|^{1/2} square norm; coincides with
/// imag_rrbar_term on holomorphic fields).
inline double hdot_half_sq(const SpectralField& f) {
  double s = 0.0;
  for (int i = 0; i < f.n(); ++i) {
    s += std::abs(f.grid().wavenumber(f.mode_of(i))) * std::norm(f.coeffs()[i]);
  }
  return f.grid().period() * s;
}

/// E0(w, r) = integral (1/2)|w|^2 + (1/2i)(r conj(r)_alpha - conj(r) r_alpha).
inline double energy_E0(const SpectralField& w, const SpectralField& r) {
  return 0.5 * l2_sq(w) + imag_rrbar_term(r);
}

/// Equal-weight quadratic form integral |w|^2 + Im(r conj(r)_alpha): the
/// quantity conserved by the flat linearized flow w_t = -r_alpha, r_t = i w.
inline double energy_quadratic(const SpectralField& w,
                               const SpectralField& r) {
  return l2_sq(w) + imag_rrbar_term(r);
}

/// Conserved energy of the full system: twice the physical (kinetic +
/// potential) energy of the fluid, expressed in (W, Q). Spectral quadratic
/// part plus padded-grid quadrature for the cubic and mean corrections:
///
///   E = int (1/2)|W|^2 + (1/2) Im(Q conj(Q)_alpha)
///         - (1/4)(conj(W)^2 W_alpha + W^2 conj(W)_alpha)
///         - (1/4)(W^2 + conj(W)^2) dalpha.
inline double energy_E(const WaveState& s) {
  const SpectralField& W = s.W.field();
  const SpectralField& Q = s.Q.field();
  double e = 0.5 * l2_sq(W) + 0.5 * imag_rrbar_term(Q);

  auto wv = to_physical_padded(W);
  auto wav = to_physical_padded(deriv(W));
  const int m = static_cast<int>(wv.size());
  Complex cubic = integrate_padded(W.grid(), m, [&](int j) {
    return std::conj(wv[j]) * std::conj(wv[j]) * wav[j];
  });
  Complex square = integrate_padded(W.grid(), m, [&](int j) {
    return wv[j] * wv[j];
  });
  e -= 0.5 * cubic.real();
  e -= 0.5 * square.real();
  return e;
}

/// Background fields entering the linearized energies.
struct LinEnergyBackground {
  SpectralField a;
  SpectralField R;
  SpectralField Wa;

  static LinEnergyBackground flat(const Grid& grid) {
    return {SpectralField(grid), SpectralField(grid), SpectralField(grid)};
  }
  static LinEnergyBackground from(const DerivedFields& d) {
    return {d.a, d.R.field(), d.Wa.field()};
  }
  static LinEnergyBackground from(const DiffDerived& dd,
                                  const SpectralField& R) {
    return {dd.a, R, dd.one_plus_Wa - constant_field(R.grid(), 1.0)};
  }
};

/// E^(2)_lin = integral (1+a)|w|^2 + Im(r conj(r)_alpha). Positive definite
/// since a >= 0.
inline double energy_E2lin(const LinEnergyBackground& bg,
                           const SpectralField& w, const SpectralField& r) {
  auto av = to_physical_padded(bg.a);
  auto wv = to_physical_padded(w);
  const int m = static_cast<int>(wv.size());
  Complex wterm = integrate_padded(w.grid(), m, [&](int j) {
    return Complex((1.0 + av[j].real()) * std::norm(wv[j]), 0.0);
  });
  return wterm.real() + imag_rrbar_term(r);
}

/// E^(3)_lin = E^(2)_lin + 2 Im integral conj(R) w r_alpha
///                        - 2 Re integral conj(bold W) w^2.
inline double energy_E3lin(const LinEnergyBackground& bg,
                           const SpectralField& w, const SpectralField& r) {
  double e = energy_E2lin(bg, w, r);
  auto rv = to_physical_padded(bg.R);
  auto wav = to_physical_padded(bg.Wa);
  auto wv = to_physical_padded(w);
  auto rav = to_physical_padded(deriv(r));
  const int m = static_cast<int>(wv.size());
  Complex c1 = integrate_padded(w.grid(), m, [&](int j) {
    return std::conj(rv[j]) * wv[j] * rav[j];
  });
  Complex c2 = integrate_padded(w.grid(), m, [&](int j) {
    return std::conj(wav[j]) * wv[j] * wv[j];
  });
  return e + 2.0 * c1.imag() - 2.0 * c2.real();
}

/// Modified second-order energy: conjugates (bold W_alpha, R_alpha(1+bold W))
/// by the weight e^{2 phi}, phi = -2 Re log(1 + bold W), projects, and
/// evaluates E^(3)_lin on the projected pair. Equivalent to the norm of
/// (bold W_alpha, R_alpha) for small states.
inline double energy_n2_cubic(const DiffState& d,
                              double c_min = default_c_min) {
  const Grid& g = d.grid();
  DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), c_min);
  SpectralField Waa = deriv(d.Wa.field());
  SpectralField RR = product(deriv(d.R.field()), dd.one_plus_Wa);

  auto uv = to_physical_padded(dd.one_plus_Wa);
  auto wav = to_physical_padded(Waa);
  auto rrv = to_physical_padded(RR);
  const int m = static_cast<int>(uv.size());
  std::vector<Complex> wvals(m), rvals(m);
  for (int j = 0; j < m; ++j) {
    double weight = 1.0 / (std::norm(uv[j]) * std::norm(uv[j]));  // e^{2 phi}
    wvals[j] = weight * wav[j];
    rvals[j] = weight * rrv[j];
  }
  SpectralField w = from_physical_padded(g, std::move(wvals), g.dealias_limit());
  SpectralField r = from_physical_padded(g, std::move(rvals), g.dealias_limit());
  LinEnergyBackground bg{dd.a, d.R.field(), d.Wa.field()};
  return energy_E3lin(bg, project_P(w), project_P(r));
}

/// sqrt of sum_{j=0,1} ||d^j bold W||_{L^2}^2 + ||d^j R||_{H^{1/2}}^2:
/// the norm monitored by the lifespan experiments.
inline double h1_pair_norm(const DiffState& d) {
  const SpectralField& Wa = d.Wa.field();
  const SpectralField& R = d.R.field();
  double s = l2_sq(Wa) + hdot_half_sq(R) + l2_sq(deriv(Wa)) +
             hdot_half_sq(deriv(R));
  return std::sqrt(s);
}

}  // namespace wavecrest
