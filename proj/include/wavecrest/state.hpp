#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "wavecrest/holo.hpp"
#include "wavecrest/spectral_ops.hpp"

namespace wavecrest {

inline constexpr double default_c_min = 0.1;

/// The simulated unknown: W = Z - alpha (surface position) and Q (holomorphic
/// velocity potential), both holomorphic, at time t.
///
/// Periodic normalization: mean(W) purely imaginary, mean(Q) real. The
/// equations preserve both; `normalization_drift` measures the violation
/// instead of silently re-projecting, so a drift is a bug signal.
struct WaveState {
  HoloField W;
  HoloField Q;
  double t = 0.0;

  static WaveState make(const SpectralField& W, const SpectralField& Q,
                        double t = 0.0, double holo_tol = 1e-12) {
    return WaveState{HoloField::enforce(W, holo_tol, "WaveState.W"),
                     HoloField::enforce(Q, holo_tol, "WaveState.Q"), t};
  }

  static WaveState flat(const Grid& grid) {
    return WaveState{HoloField::zero(grid), HoloField::zero(grid), 0.0};
  }

  const Grid& grid() const { return W.field().grid(); }
};

struct NormalizationDrift {
  double re_mean_W = 0.0;
  double im_mean_Q = 0.0;
  bool flagged = false;
};

inline NormalizationDrift normalization_drift(const WaveState& s,
                                              double tol = 1e-9) {
  NormalizationDrift d;
  d.re_mean_W = std::abs(mean(s.W.field()).real());
  d.im_mean_Q = std::abs(mean(s.Q.field()).imag());
  d.flagged = d.re_mean_W > tol || d.im_mean_Q > tol;
  return d;
}

/// Diagonal variables (bold W, R) = (W_alpha, Q_alpha / (1 + W_alpha)).
struct DiffState {
  HoloField Wa;  // bold W
  HoloField R;
  double t = 0.0;

  const Grid& grid() const { return Wa.field().grid(); }
};

/// All first-order derived fields of a state. b, a, M are real; J > 0;
/// a >= 0 (Taylor sign). RR is the modified variable R_alpha (1 + bold W).
struct DerivedFields {
  SpectralField one_plus_Wa;  // 1 + W_alpha
  HoloField Wa;
  HoloField R;
  HoloField Y;   // bold W / (1 + bold W)
  HoloField F;   // advection part of the fully nonlinear system
  HoloField RR;  // R_alpha (1 + bold W)
  SpectralField J;  // |1 + W_alpha|^2
  SpectralField a;  // frequency shift
  SpectralField b;  // advection velocity
  SpectralField M;
  double min_one_plus_Wa = 0.0;
};

namespace detail {

inline void chord_arc_guard(double min_abs, double c_min) {
  if (!(min_abs >= c_min)) {
    throw DegenerateSurfaceError(
        "chord-arc bound violated: min |1 + W_alpha| = " +
        std::to_string(min_abs) + " < c_min = " + std::to_string(c_min));
  }
}

}  // namespace detail

/// Derived fields that only need the diagonal pair (bold W, R):
/// Y, J, b, a, M. Used by the differentiated system and the norms.
struct DiffDerived {
  SpectralField one_plus_Wa;
  HoloField Y;
  SpectralField J;
  SpectralField a;
  SpectralField b;
  SpectralField M;
  double min_one_plus_Wa = 0.0;
};

inline DiffDerived derive_from_diff(const SpectralField& Wa,
                                    const SpectralField& R,
                                    double c_min = default_c_min) {
  SpectralField u = add_constant(Wa, 1.0);  // 1 + bold W
  double lo = min_abs_padded(u);
  detail::chord_arc_guard(lo, c_min);

  HoloField Y = HoloField::project(divide(Wa, u, c_min));
  SpectralField J = product(u, conj_field(u));

  // b = P[R / (1 + conj bold W)] + conjugate  (= P[Q_alpha / J] + c.c.)
  SpectralField g1 = divide(R, conj_field(u), c_min);
  SpectralField Pg1 = project_P(g1);
  SpectralField b = Pg1 + conj_field(Pg1);

  // a = i (Pbar[conj(R) R_alpha] - P[R conj(R_alpha)]) = 2 Im P[R conj(R_alpha)]
  SpectralField Ra = deriv(R);
  SpectralField h = project_P(product(R, conj_field(Ra)));
  SpectralField a = Complex(0.0, 1.0) * (conj_field(h) - h);

  // M, first (rational) form: R_alpha/(1+conj bW) + conj(R_alpha)/(1+bW) - b_alpha
  SpectralField m1 = divide(Ra, conj_field(u), c_min);
  SpectralField M = m1 + conj_field(m1) - deriv(b);

  return DiffDerived{u,
                     std::move(Y),
                     std::move(J),
                     std::move(a),
                     std::move(b),
                     std::move(M),
                     lo};
}

inline DiffState diagonal_state(const WaveState& s,
                                double c_min = default_c_min) {
  SpectralField Wa = deriv(s.W.field());
  SpectralField u = add_constant(Wa, 1.0);
  detail::chord_arc_guard(min_abs_padded(u), c_min);
  SpectralField R = divide(deriv(s.Q.field()), u, c_min);
  return DiffState{HoloField::project(Wa), HoloField::project(R), s.t};
}

inline DerivedFields derive_all(const WaveState& s,
                                double c_min = default_c_min) {
  SpectralField Wa = deriv(s.W.field());
  SpectralField u = add_constant(Wa, 1.0);
  double lo = min_abs_padded(u);
  detail::chord_arc_guard(lo, c_min);

  SpectralField Qa = deriv(s.Q.field());
  HoloField R = HoloField::project(divide(Qa, u, c_min));
  DiffDerived dd = derive_from_diff(Wa, R.field(), c_min);

  // F = P[(Q_alpha - conj Q_alpha)/J]; built from the same division as b so
  // that b - F = conj(Q_alpha)/J holds by projector algebra alone.
  SpectralField g1 = divide_abs2(Qa, u, c_min);
  SpectralField g2 = conj_field(g1);
  SpectralField F = project_P(g1 - g2);

  SpectralField RR = product(deriv(R.field()), u);

  DerivedFields out{std::move(u),
                    HoloField::project(Wa),
                    std::move(R),
                    std::move(dd.Y),
                    HoloField::project(F),
                    HoloField::project(RR),
                    std::move(dd.J),
                    std::move(dd.a),
                    std::move(dd.b),
                    std::move(dd.M),
                    lo};
  return out;
}

/// min_alpha (1 + a): the Taylor sign quantity -J dp/dn.
inline double taylor_sign(const WaveState& s, double c_min = default_c_min) {
  DiffState d = diagonal_state(s, c_min);
  DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), c_min);
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : to_physical(dd.a)) lo = std::min(lo, v.real());
  return 1.0 + lo;
}

// ---------------------------------------------------------------------------
// Identity ledger: sup-norm residuals of cross-identities between the
// derived fields. All should vanish on band-limited states; they are the
// primary guard against sign/conjugation mistakes in the derivations.
// ---------------------------------------------------------------------------

struct IdentityReport {
  double b_decomposition = 0.0;    // b - F - conj(R)/(1 + bold W)
  double M_two_forms = 0.0;        // rational form vs projector form
  double b_polynomial = 0.0;       // b - 2 Re(R - P[R conj Y])
  double a_two_forms = 0.0;        // a - 2 Im P[R conj(R_alpha)]
  double a_re_variant = 0.0;       // report-only: |a - 2 Re P[R conj(R_alpha)]|
  double realness_a = 0.0;
  double realness_b = 0.0;
  double realness_M = 0.0;
  double r_minus_f = 0.0;          // (R - F) - P[R conj Y - conj R Y]
  double tolerance = 1e-10;

  double max_residual() const {
    double m = b_decomposition;
    m = std::max(m, M_two_forms);
    m = std::max(m, b_polynomial);
    m = std::max(m, a_two_forms);
    m = std::max(m, realness_a);
    m = std::max(m, realness_b);
    m = std::max(m, realness_M);
    m = std::max(m, r_minus_f);
    return m;
  }
  bool pass() const { return max_residual() <= tolerance; }
};

inline double sup_imag(const SpectralField& f) {
  double m = 0.0;
  for (const auto& v : to_physical(f)) m = std::max(m, std::abs(v.imag()));
  return m;
}

inline IdentityReport verify_identities(const DerivedFields& d,
                                        double c_min = default_c_min,
                                        double tolerance = 1e-10) {
  IdentityReport rep;
  rep.tolerance = tolerance;
  const SpectralField& u = d.one_plus_Wa;
  const SpectralField& R = d.R.field();
  const SpectralField& Y = d.Y.field();
  const SpectralField& F = d.F.field();

  // (i) b = F + conj(R)/(1 + bold W)
  rep.b_decomposition =
      sup_norm(d.b - F - divide(conj_field(R), u, c_min));

  // (ii) M = Pbar[conj(R) Y_alpha - R_alpha conj(Y)] + P[R conj(Y_alpha) - conj(R_alpha) Y]
  SpectralField Ra = deriv(R);
  SpectralField Ya = deriv(Y);
  SpectralField anti = project_Pbar(product(conj_field(R), Ya) -
                                    product(Ra, conj_field(Y)));
  SpectralField holo = project_P(product(R, conj_field(Ya)) -
                                 product(conj_field(Ra), Y));
  rep.M_two_forms = sup_norm(d.M - anti - holo);

  // (iii) b = 2 Re(R - P[R conj Y])
  SpectralField half_b = R - project_P(product(R, conj_field(Y)));
  rep.b_polynomial = sup_norm(d.b - half_b - conj_field(half_b));

  // (iv) a = 2 Im P[R conj(R_alpha)]; also report the 2 Re variant, which
  // is nonzero already for a single mode.
  SpectralField Ph = project_P(product(R, conj_field(Ra)));
  SpectralField two_im = Complex(0.0, -1.0) * (Ph - conj_field(Ph));
  rep.a_two_forms = sup_norm(d.a - two_im);
  SpectralField two_re = Ph + conj_field(Ph);
  rep.a_re_variant = sup_norm(d.a - two_re);

  // (v) realness of a, b, M.
  rep.realness_a = sup_imag(d.a);
  rep.realness_b = sup_imag(d.b);
  rep.realness_M = sup_imag(d.M);

  // R - F = P[R conj Y - conj R Y]
  SpectralField rf = project_P(product(R, conj_field(Y)) -
                               product(conj_field(R), Y));
  rep.r_minus_f = sup_norm(R - F - rf);

  return rep;
}

inline IdentityReport verify_identities(const WaveState& s,
                                        double c_min = default_c_min,
                                        double tolerance = 1e-10) {
  return verify_identities(derive_all(s, c_min), c_min, tolerance);
}

// ---------------------------------------------------------------------------
// Graph-to-conformal data construction.
// ---------------------------------------------------------------------------

/// Evaluates the trigonometric interpolant of f at arbitrary points.
inline std::vector<Complex> eval_at(const SpectralField& f,
                                    const std::vector<double>& points) {
  std::vector<Complex> out(points.size(), Complex(0.0, 0.0));
  for (int i = 0; i < f.n(); ++i) {
    Complex c = f.coeffs()[i];
    if (c == Complex(0.0, 0.0)) continue;
    double kappa = f.grid().wavenumber(f.mode_of(i));
    for (size_t j = 0; j < points.size(); ++j) {
      out[j] += c * std::polar(1.0, kappa * points[j]);
    }
  }
  return out;
}

/// Builds the conformal state for a graph surface y = eta(x) with surface
/// potential psi(x): solves Y(alpha) = eta(alpha + H Y(alpha)) by fixed
/// point, then W = H Y + i Y and Q = (I - iH)(psi o X).
///
/// Requires sup|eta'| < 0.5 (fixed-point contraction gate).
inline WaveState from_graph_surface(const SpectralField& eta,
                                    const SpectralField& psi,
                                    double fp_tol = 1e-12,
                                    int max_iter = 200) {
  const Grid& g = eta.grid();
  double steep = sup_norm(deriv(eta));
  if (!(steep < 0.5)) {
    throw SteepSurfaceError("from_graph_surface: sup|eta'| = " +
                            std::to_string(steep) + " >= 0.5");
  }
  std::vector<double> alpha = g.nodes();
  SpectralField Y = eta;  // Y^0 = eta
  double delta = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    std::vector<Complex> hy = to_physical(hilbert(Y));
    std::vector<double> pts(alpha.size());
    for (size_t j = 0; j < pts.size(); ++j)
      pts[j] = alpha[j] + hy[j].real();
    std::vector<Complex> next = eval_at(eta, pts);
    for (auto& v : next) v = Complex(v.real(), 0.0);
    SpectralField Ynext = from_physical(g, next);
    delta = sup_norm(Ynext - Y);
    Y = Ynext;
    if (delta < fp_tol) break;
  }
  if (!(delta < fp_tol)) {
    throw SteepSurfaceError(
        "from_graph_surface: fixed point stalled at update " +
        std::to_string(delta));
  }

  SpectralField W = hilbert(Y) + Complex(0.0, 1.0) * Y;

  std::vector<Complex> hy = to_physical(hilbert(Y));
  std::vector<double> pts(alpha.size());
  for (size_t j = 0; j < pts.size(); ++j) pts[j] = alpha[j] + hy[j].real();
  std::vector<Complex> psi_x = eval_at(psi, pts);
  for (auto& v : psi_x) v = Complex(v.real(), 0.0);
  SpectralField Psi = from_physical(g, psi_x);
  SpectralField Q = Psi - Complex(0.0, 1.0) * hilbert(Psi);

  return WaveState::make(W, Q, 0.0, 1e-9);
}

}  // namespace wavecrest
