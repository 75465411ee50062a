#pragma once

#include <utility>

#include "wavecrest/state.hpp"

namespace wavecrest {

enum class Integrator { rk4 };
enum class ZeroModePolicy { appendix_a, projector_p };


// ---------------------------------------------------------------------------
// Right-hand sides.
// ---------------------------------------------------------------------------

struct FullRhs {
  SpectralField Wt;
  SpectralField Qt;
};

/// Fully nonlinear system:
///   W_t = -F (1 + W_alpha)
///   Q_t = -F Q_alpha + i W - P[|Q_alpha|^2 / J]
/// with F = P[(Q_alpha - conj Q_alpha)/J], J = |1 + W_alpha|^2.
/// Both outputs have exact Fourier support in k <= 0.
inline FullRhs rhs_full(const WaveState& s, double c_min = default_c_min) {
  SpectralField Wa = deriv(s.W.field());
  SpectralField u = add_constant(Wa, 1.0);
  detail::chord_arc_guard(min_abs_padded(u), c_min);
  SpectralField Qa = deriv(s.Q.field());

  SpectralField g1 = divide_abs2(Qa, u, c_min);  // Q_alpha / J
  SpectralField F = project_P(g1 - conj_field(g1));

  SpectralField Wt = -product(F, u);
  SpectralField Qt = -product(F, Qa) + Complex(0.0, 1.0) * s.W.field() -
                     project_P(ratio_abs2(Qa, u, c_min));
  return FullRhs{std::move(Wt), std::move(Qt)};
}

struct DiffRhs {
  SpectralField Wat;
  SpectralField Rt;
};

/// Differentiated (diagonal) system:
///   bold W_t = -b bold W_alpha - (1 + bold W) R_alpha / (1 + conj bold W)
///              + (1 + bold W) M
///   R_t      = -b R_alpha + i (bold W - a) / (1 + bold W)
inline DiffRhs rhs_diff(const DiffState& d, double c_min = default_c_min) {
  const SpectralField& Wa = d.Wa.field();
  const SpectralField& R = d.R.field();
  DiffDerived dd = derive_from_diff(Wa, R, c_min);
  const SpectralField& u = dd.one_plus_Wa;

  SpectralField Ra = deriv(R);
  SpectralField Wat = -product(dd.b, deriv(Wa)) -
                      product(u, divide(Ra, conj_field(u), c_min)) +
                      product(u, dd.M);
  SpectralField Rt =
      -product(dd.b, Ra) +
      Complex(0.0, 1.0) * divide(Wa - dd.a, u, c_min);
  return DiffRhs{std::move(Wat), std::move(Rt)};
}

// ---------------------------------------------------------------------------
// Linearized system in diagonal variables (w, r = q - R w).
// ---------------------------------------------------------------------------

struct LinState {
  HoloField w;
  HoloField r;

  static LinState make(const SpectralField& w, const SpectralField& r,
                       double tol = 1e-12) {
    return LinState{HoloField::enforce(w, tol, "LinState.w"),
                    HoloField::enforce(r, tol, "LinState.r")};
  }
  static LinState zero(const Grid& g) {
    return LinState{HoloField::zero(g), HoloField::zero(g)};
  }
};

struct LinOptions {
  bool projected = false;  // default: the unprojected system
  ZeroModePolicy policy = ZeroModePolicy::appendix_a;
};

/// Background fields consumed by the linearized right-hand side.
struct LinBackground {
  SpectralField u;           // 1 + bold W
  SpectralField b;
  SpectralField one_plus_a;  // 1 + a
  SpectralField R;
  SpectralField Ra;
  double c_min = default_c_min;

  static LinBackground from(const WaveState& s,
                            double c_min = default_c_min) {
    DiffState d = diagonal_state(s, c_min);
    DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), c_min);
    return LinBackground{dd.one_plus_Wa,
                         dd.b,
                         add_constant(dd.a, 1.0),
                         d.R.field(),
                         deriv(d.R.field()),
                         c_min};
  }
  static LinBackground flat(const Grid& g, double c_min = default_c_min) {
    return LinBackground{constant_field(g, 1.0), SpectralField(g),
                         constant_field(g, 1.0), SpectralField(g),
                         SpectralField(g), c_min};
  }
};

struct LinRhs {
  SpectralField wt;
  SpectralField rt;
};

/// Linearized evolution around the background:
///   w_t + b w_alpha + r_alpha/(1+conj bW) + R_alpha w/(1+conj bW) = G(w,r)
///   r_t + b r_alpha - i (1+a) w/(1+bW)                            = K(w,r)
/// with
///   m = (r_alpha + R_alpha w)/J + conj(R) w_alpha/(1+bW)^2,
///   n = conj(R)(r_alpha + R_alpha w)/(1+bW),
///   G = (1+bW)(P conj(m) + Pbar m),  K = Pbar n - P conj(n).
/// When projected, each equation is projected holomorphically; the
/// appendix_a policy uses P^i for the first equation and P^r for the
/// second (splitting the zero mode by real/imaginary part), projector_p
/// uses plain P for both.
inline LinRhs rhs_linearized(const LinBackground& bg, const LinState& p,
                             const LinOptions& opt = {}) {
  const SpectralField& w = p.w.field();
  const SpectralField& r = p.r.field();
  const SpectralField& u = bg.u;
  const double c_min = bg.c_min;

  SpectralField wa = deriv(w);
  SpectralField ra = deriv(r);
  SpectralField ra_plus_Raw = ra + product(bg.Ra, w);

  SpectralField m = divide_abs2(ra_plus_Raw, u, c_min) +
                    divide_sq(product(conj_field(bg.R), wa), u, c_min);
  SpectralField n =
      divide(product(conj_field(bg.R), ra_plus_Raw), u, c_min);

  SpectralField G = product(
      u, project_P(conj_field(m)) + project_Pbar(m));
  SpectralField K = project_Pbar(n) - project_P(conj_field(n));

  SpectralField t_w = product(bg.b, wa);
  SpectralField t_r1 = divide(ra, conj_field(u), c_min);
  SpectralField t_r2 = divide(product(bg.Ra, w), conj_field(u), c_min);
  SpectralField t_iw = divide(product(bg.one_plus_a, w), u, c_min);
  SpectralField t_br = product(bg.b, ra);

  if (!opt.projected) {
    SpectralField wt = -t_w - t_r1 - t_r2 + G;
    SpectralField rt = -t_br + Complex(0.0, 1.0) * t_iw + K;
    return LinRhs{std::move(wt), std::move(rt)};
  }

  auto proj1 = [&](const SpectralField& f) {
    return opt.policy == ZeroModePolicy::appendix_a ? project_Pi(f)
                                                    : project_P(f);
  };
  auto proj2 = [&](const SpectralField& f) {
    return opt.policy == ZeroModePolicy::appendix_a ? project_Pr(f)
                                                    : project_P(f);
  };
  SpectralField wt = -proj1(t_w) - proj1(t_r1) - proj1(t_r2) + proj1(G);
  SpectralField rt =
      -proj2(t_br) + Complex(0.0, 1.0) * proj1(t_iw) + proj2(K);
  return LinRhs{std::move(wt), std::move(rt)};
}

// ---------------------------------------------------------------------------
// Time stepping (classical RK4) and the simulation loop.
// ---------------------------------------------------------------------------

inline WaveState step_rk4(const WaveState& s, double dt,
                          double c_min = default_c_min) {
  auto advance = [&](const FullRhs& k, double h) {
    return WaveState{
        HoloField::project(s.W.field() + h * k.Wt),
        HoloField::project(s.Q.field() + h * k.Qt), s.t + h};
  };
  FullRhs k1 = rhs_full(s, c_min);
  FullRhs k2 = rhs_full(advance(k1, 0.5 * dt), c_min);
  FullRhs k3 = rhs_full(advance(k2, 0.5 * dt), c_min);
  FullRhs k4 = rhs_full(advance(k3, dt), c_min);
  SpectralField W =
      s.W.field() + (dt / 6.0) * (k1.Wt + 2.0 * k2.Wt + 2.0 * k3.Wt + k4.Wt);
  SpectralField Q =
      s.Q.field() + (dt / 6.0) * (k1.Qt + 2.0 * k2.Qt + 2.0 * k3.Qt + k4.Qt);
  return WaveState{HoloField::project(W), HoloField::project(Q), s.t + dt};
}

/// One RK4 step of the coupled (background, tangent) pair: the exact
/// derivative of the RK4 map when the linearized rhs is the exact Jacobian.
inline std::pair<WaveState, LinState> step_rk4_coupled(
    const WaveState& s, const LinState& p, double dt,
    const LinOptions& opt = {}, double c_min = default_c_min) {
  struct K {
    FullRhs f;
    LinRhs l;
  };
  auto eval = [&](const WaveState& sc, const LinState& pc) {
    return K{rhs_full(sc, c_min),
             rhs_linearized(LinBackground::from(sc, c_min), pc, opt)};
  };
  auto advance = [&](const K& k, double h) {
    WaveState sn{HoloField::project(s.W.field() + h * k.f.Wt),
                 HoloField::project(s.Q.field() + h * k.f.Qt), s.t + h};
    LinState pn{HoloField::project(p.w.field() + h * k.l.wt),
                HoloField::project(p.r.field() + h * k.l.rt)};
    return std::make_pair(sn, pn);
  };
  K k1 = eval(s, p);
  auto [s2, p2] = advance(k1, 0.5 * dt);
  K k2 = eval(s2, p2);
  auto [s3, p3] = advance(k2, 0.5 * dt);
  K k3 = eval(s3, p3);
  auto [s4, p4] = advance(k3, dt);
  K k4 = eval(s4, p4);
  WaveState sn{
      HoloField::project(s.W.field() + (dt / 6.0) * (k1.f.Wt + 2.0 * k2.f.Wt +
                                                     2.0 * k3.f.Wt + k4.f.Wt)),
      HoloField::project(s.Q.field() + (dt / 6.0) * (k1.f.Qt + 2.0 * k2.f.Qt +
                                                     2.0 * k3.f.Qt + k4.f.Qt)),
      s.t + dt};
  LinState pn{
      HoloField::project(p.w.field() + (dt / 6.0) * (k1.l.wt + 2.0 * k2.l.wt +
                                                     2.0 * k3.l.wt + k4.l.wt)),
      HoloField::project(p.r.field() + (dt / 6.0) * (k1.l.rt + 2.0 * k2.l.rt +
                                                     2.0 * k3.l.rt + k4.l.rt))};
  return {sn, pn};
}

}  // namespace wavecrest
