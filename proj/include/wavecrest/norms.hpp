#pragma once

#include <algorithm>
#include <cmath>

#include "wavecrest/littlewood_paley.hpp"
#include "wavecrest/state.hpp"

namespace wavecrest {

/// Dyadic mean-oscillation proxy for the BMO norm: max over dyadic windows
/// I (all scales with >= 2 nodes) of (1/|I|) int_I |f - avg_I f|. A proxy,
/// not the full sup over intervals; invariant under adding constants and
/// bounded by 2 sup|f|.
inline double bmo_proxy(const SpectralField& f) {
  auto vals = to_physical(f);
  const int n = static_cast<int>(vals.size());
  double best = 0.0;
  for (int len = n; len >= 2; len /= 2) {
    for (int start = 0; start < n; start += len) {
      Complex avg(0.0, 0.0);
      for (int j = start; j < start + len; ++j) avg += vals[j];
      avg /= static_cast<double>(len);
      double osc = 0.0;
      for (int j = start; j < start + len; ++j) osc += std::abs(vals[j] - avg);
      best = std::max(best, osc / len);
    }
  }
  return best;
}

/// l^2 sum over dyadic blocks of L^inf block norms (B^{0,infty}_2-type proxy).
inline double besov_proxy(const SpectralField& f) {
  double s = 0.0;
  for (const auto& block : lp_decompose(f)) {
    double b = sup_norm(block);
    s += b * b;
  }
  return std::sqrt(s);
}

/// (period * sum |kappa|^{2s} |c_k|^2)^{1/2}.
inline double sobolev_norm(const SpectralField& f, double s) {
  double acc = 0.0;
  for (int i = 0; i < f.n(); ++i) {
    double kappa = std::abs(f.grid().wavenumber(f.mode_of(i)));
    double w = (kappa == 0.0 && s > 0.0) ? 0.0 : std::pow(kappa, 2.0 * s);
    acc += w * std::norm(f.coeffs()[i]);
  }
  return std::sqrt(f.grid().period() * acc);
}

/// Scale-invariant control norm
/// A = ||bold W||_inf + ||Y||_inf + max(|||D|^{1/2} R||_inf, besov(|D|^{1/2} R)).
inline double norm_A(const SpectralField& Wa, const SpectralField& R,
                     const SpectralField& Y) {
  SpectralField hr = frac_deriv(R, 0.5);
  return sup_norm(Wa) + sup_norm(Y) +
         std::max(sup_norm(hr), besov_proxy(hr));
}

inline double norm_A(const DiffState& d, double c_min = default_c_min) {
  DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), c_min);
  return norm_A(d.Wa.field(), d.R.field(), dd.Y.field());
}

/// H^1-level control norm B = bmo(|D|^{1/2} bold W) + bmo(R_alpha).
inline double norm_B(const SpectralField& Wa, const SpectralField& R) {
  return bmo_proxy(frac_deriv(Wa, 0.5)) + bmo_proxy(deriv(R));
}

inline double norm_B(const DiffState& d) {
  return norm_B(d.Wa.field(), d.R.field());
}

}  // namespace wavecrest
