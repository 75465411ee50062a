#pragma once

#include <cmath>

#include "wavecrest/config.hpp"
#include "wavecrest/energies.hpp"
#include "wavecrest/state.hpp"

namespace wavecrest {

namespace detail {

inline void check_realizable(const Grid& g, int k) {
  if (k >= 0)
    throw ConfigError("data: W modes must have k < 0 (holomorphic)");
  if (-k > g.dealias_limit())
    throw ConfigError("data: |k| = " + std::to_string(-k) +
                      " exceeds the dealias band n/3 = " +
                      std::to_string(g.dealias_limit()));
}

/// Q coefficient of the right-moving linear eigenmode for a given W mode.
inline Complex traveling_Q(const Grid& g, int k, Complex w_coeff) {
  double kappa = std::abs(g.wavenumber(k));
  return -w_coeff / std::sqrt(kappa);
}

}  // namespace detail

/// Builds the initial state described by `data` on the configured grid.
inline WaveState make_initial_data(const Grid& g, const DataSpec& data) {
  SpectralField W(g), Q(g);
  switch (data.kind) {
    case DataSpec::Kind::single_mode: {
      detail::check_realizable(g, data.k);
      W.set_coeff(data.k, Complex(data.eps, 0.0));
      if (data.traveling)
        Q.set_coeff(data.k, detail::traveling_Q(g, data.k, W.coeff(data.k)));
      break;
    }
    case DataSpec::Kind::multi_mode: {
      if (data.modes.empty())
        throw ConfigError("data: multi_mode needs data_modes");
      for (const auto& m : data.modes) {
        detail::check_realizable(g, m.k);
        Complex c = std::polar(m.amp, m.phase);
        W.add_coeff(m.k, c);
        if (data.traveling)
          Q.add_coeff(m.k, detail::traveling_Q(g, m.k, c));
      }
      break;
    }
    case DataSpec::Kind::localized: {
      // Holomorphic Poisson-kernel bump: W = eps (1-s) [1/(1 - s e^{-i th}) - 1]
      // with th = 2 pi (x - center)/L; width w maps to s = 1 - 2 pi w / L.
      double L = g.period();
      double s_par = 1.0 - two_pi * data.width / L;
      if (!(s_par > 0.0 && s_par < 1.0))
        throw ConfigError("data: localized width out of range for the period");
      double center = data.center < 0.0 ? 0.5 * L : data.center;
      for (int m = 1; m <= g.dealias_limit(); ++m) {
        double cm = data.eps * (1.0 - s_par) * std::pow(s_par, m);
        if (cm < 1e-300) break;
        Complex c = cm * std::polar(1.0, two_pi * m * center / L);
        W.set_coeff(-m, c);
        if (data.traveling)
          Q.set_coeff(-m, detail::traveling_Q(g, -m, c));
      }
      break;
    }
    case DataSpec::Kind::from_graph: {
      SpectralField eta(g), psi(g);
      if (data.eta_amp != 0.0) {
        detail::check_realizable(g, -std::abs(data.eta_k));
        eta.set_coeff(data.eta_k, Complex(0.5 * data.eta_amp, 0.0));
        eta.set_coeff(-data.eta_k, Complex(0.5 * data.eta_amp, 0.0));
      }
      if (data.psi_amp != 0.0) {
        detail::check_realizable(g, -std::abs(data.psi_k));
        psi.set_coeff(data.psi_k, Complex(0.5 * data.psi_amp, 0.0));
        psi.set_coeff(-data.psi_k, Complex(0.5 * data.psi_amp, 0.0));
      }
      return from_graph_surface(eta, psi);
    }
  }
  return WaveState::make(W, Q);
}

/// Rescales the data profile so that the monitored pair norm of
/// (bold W, R) equals `eps` exactly (bisection on the amplitude).
inline WaveState scale_to_h1_norm(const Grid& g, const DataSpec& data,
                                  double eps, double c_min = default_c_min) {
  WaveState profile = make_initial_data(g, data);
  auto norm_of = [&](double lam) -> double {
    try {
      WaveState s =
          WaveState::make(Complex(lam, 0.0) * profile.W.field(),
                          Complex(lam, 0.0) * profile.Q.field());
      return h1_pair_norm(diagonal_state(s, c_min));
    } catch (const DegenerateSurfaceError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  while (norm_of(hi) < eps) {
    hi *= 2.0;
    if (++guard > 60) throw ConfigError("data: cannot reach requested norm");
  }
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (norm_of(mid) < eps ? lo : hi) = mid;
  }
  double lam = 0.5 * (lo + hi);
  return WaveState::make(Complex(lam, 0.0) * profile.W.field(),
                         Complex(lam, 0.0) * profile.Q.field());
}

}  // namespace wavecrest
