#pragma once

#include "wavecrest/rhs.hpp"

namespace wavecrest {

/// Near-identity normal form variables
///   Wtilde = W - 2 P[Re(W) W_alpha],  Qtilde = Q - 2 P[Re(W) R].
/// They satisfy Wtilde_t + Qtilde_alpha = G, Qtilde_t - i Wtilde = K with
/// G, K cubic in the state: the quadratic nonlinearity is transformed away.
struct NFState {
  HoloField Wt;
  HoloField Qt;
};

inline NFState normal_form(const WaveState& s,
                           double c_min = default_c_min) {
  const SpectralField& W = s.W.field();
  SpectralField rew = real_part_field(W);
  SpectralField Wa = deriv(W);
  SpectralField u = add_constant(Wa, 1.0);
  detail::chord_arc_guard(min_abs_padded(u), c_min);
  SpectralField R = divide(deriv(s.Q.field()), u, c_min);

  SpectralField Wt = W - 2.0 * project_P(product(rew, Wa));
  SpectralField Qt = s.Q.field() - 2.0 * project_P(product(rew, R));
  return NFState{HoloField::project(Wt), HoloField::project(Qt)};
}

/// Defect of the normal form variables, computed two independent ways:
///   explicit: the closed cubic expressions in (W, bold W, R, F, a, b, Y);
///   chain:    G = d/dt Wtilde + Qtilde_alpha and K = d/dt Qtilde - i Wtilde
///             with all time derivatives substituted analytically from the
///             full right-hand side.
/// The two routes are algebraically identical; their difference is the
/// cross-check residual. The chain route is the normative one.
struct NfResidual {
  SpectralField G_explicit;
  SpectralField K_explicit;
  SpectralField G_chain;
  SpectralField K_chain;
  double normG = 0.0;        // L2 norm of the chain-route G
  double normK = 0.0;
  double crosscheck = 0.0;   // max sup-norm difference between the routes
};

inline NfResidual nf_residual(const WaveState& s,
                              double c_min = default_c_min) {
  const SpectralField& W = s.W.field();
  const SpectralField& Q = s.Q.field();
  DerivedFields d = derive_all(s, c_min);
  const SpectralField& u = d.one_plus_Wa;
  const SpectralField& Wa = d.Wa.field();
  const SpectralField& R = d.R.field();
  const SpectralField& Y = d.Y.field();
  const SpectralField& F = d.F.field();
  SpectralField rew = real_part_field(W);

  // Route (i): explicit cubic expressions, products associated left to right.
  SpectralField term1 = product(deriv(F - R), rew);
  SpectralField term2 = product(product(deriv(Wa), F), rew);
  SpectralField term3 = product(Wa, real_part_field(product(Wa, F)));
  SpectralField term4 = product(product(deriv(F), Wa), rew);
  SpectralField part1 =
      2.0 * project_P(term1 + term2 + term3 + term4);
  SpectralField inner = project_P(product(conj_field(R), Y)) +
                        project_Pbar(product(R, conj_field(Y)));
  SpectralField term5 =
      product(product(conj_field(Wa), R), conj_field(Y));
  SpectralField term6 = product(Wa, inner);
  SpectralField G1 = part1 - project_P(term5 - term6);

  SpectralField t1 =
      product(conj_field(product(F, u)) - conj_field(R), R);
  SpectralField t2 =
      Complex(0.0, 2.0) *
      product(project_P(divide(product(Wa, Wa) + d.a, u, c_min)), rew);
  SpectralField t3 =
      2.0 * product(project_P(product(d.b, deriv(R))), rew);
  SpectralField K1 = project_P(t1 + t2 + t3);

  // Route (ii): differentiate the transform along the flow.
  FullRhs rhs = rhs_full(s, c_min);
  SpectralField Wat = deriv(rhs.Wt);
  SpectralField Rt = divide(deriv(rhs.Qt) - product(R, Wat), u, c_min);
  SpectralField ret = real_part_field(rhs.Wt);

  SpectralField Wtilde = W - 2.0 * project_P(product(rew, Wa));
  SpectralField Qtilde = Q - 2.0 * project_P(product(rew, R));
  SpectralField Wtilde_t =
      rhs.Wt - 2.0 * project_P(product(ret, Wa) + product(rew, Wat));
  SpectralField Qtilde_t =
      rhs.Qt - 2.0 * project_P(product(ret, R) + product(rew, Rt));

  SpectralField G2 = Wtilde_t + deriv(Qtilde);
  SpectralField K2 = Qtilde_t - Complex(0.0, 1.0) * Wtilde;

  NfResidual out{std::move(G1), std::move(K1), std::move(G2),
                 std::move(K2), 0.0, 0.0, 0.0};
  out.normG = l2_norm(out.G_chain);
  out.normK = l2_norm(out.K_chain);
  out.crosscheck = std::max(sup_norm(out.G_explicit - out.G_chain),
                            sup_norm(out.K_explicit - out.K_chain));
  return out;
}

/// The quadratic identity R - F = P[R conj(Y) - conj(R) Y], returned as the
/// difference of the two sides.
inline SpectralField rf_minus_r(const WaveState& s,
                                double c_min = default_c_min) {
  DerivedFields d = derive_all(s, c_min);
  SpectralField rhs =
      project_P(product(d.R.field(), conj_field(d.Y.field())) -
                product(conj_field(d.R.field()), d.Y.field()));
  return d.R.field() - d.F.field() - rhs;
}

}  // namespace wavecrest
