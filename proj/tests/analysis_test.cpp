#include <catch2/catch.hpp>

#include "wavecrest/dynamics.hpp"
#include "wavecrest/energies.hpp"
#include "wavecrest/envelope.hpp"
#include "wavecrest/norms.hpp"
#include "wavecrest/rng.hpp"

using namespace wavecrest;

TEST_CASE("E0 on single modes") {
  Grid g(64);
  REQUIRE(energy_E0(SpectralField(g), SpectralField(g)) == 0.0);
  // w = e^{-ia}: (1/2) * 2 pi = pi.
  REQUIRE(energy_E0(mode_field(g, -1, 1.0), SpectralField(g)) ==
          Approx(std::numbers::pi));
  // r = e^{-ia}: period * |k| * |c|^2 = 2 pi.
  REQUIRE(energy_E0(SpectralField(g), mode_field(g, -1, 1.0)) ==
          Approx(2.0 * std::numbers::pi));
  // E0 agrees with direct quadrature of the defining integral.
  Rng rng(3);
  SpectralField w(g), r(g);
  for (int k = -20; k <= -1; ++k) {
    w.set_coeff(k, 0.1 * rng.complex_box());
    r.set_coeff(k, 0.1 * rng.complex_box());
  }
  auto wv = to_physical_padded(w);
  auto rv = to_physical_padded(r);
  auto rav = to_physical_padded(deriv(r));
  int m = static_cast<int>(wv.size());
  double quad = 0.0;
  for (int j = 0; j < m; ++j) {
    quad += 0.5 * std::norm(wv[j]) +
            (rv[j] * std::conj(rav[j])).imag();
  }
  quad *= g.period() / m;
  REQUIRE(energy_E0(w, r) == Approx(quad).epsilon(1e-10));
}

TEST_CASE("conserved nonlinear energy") {
  Grid g(256);
  SECTION("flat state has zero energy") {
    REQUIRE(energy_E(WaveState::flat(g)) == 0.0);
  }
  SECTION("single W mode: E = pi eps^2") {
    double eps = 0.03;
    WaveState s =
        WaveState::make(mode_field(g, -1, Complex(eps, 0.0)), SpectralField(g));
    REQUIRE(energy_E(s) == Approx(std::numbers::pi * eps * eps));
  }
  SECTION("exact conservation along a nonlinear run") {
    double eps = 0.05;
    WaveState s0 = WaveState::make(mode_field(g, -1, Complex(eps, 0.0)),
                                   mode_field(g, -1, Complex(-eps, 0.0)));
    double E0v = energy_E(s0);
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 3.0;
    double drift = 0.0;
    run(s0, cfg, [&](const DiagnosticsRecord& rec, const WaveState&) {
      drift = std::max(drift, std::abs(rec.E - E0v) / std::abs(E0v));
    });
    REQUIRE(drift < 1e-12);
  }
}

TEST_CASE("linearized energies") {
  Grid g(128);
  LinEnergyBackground flat = LinEnergyBackground::flat(g);
  SpectralField w = mode_field(g, -2, Complex(0.4, 0.1));
  SpectralField r = mode_field(g, -3, Complex(-0.2, 0.3));
  SECTION("flat background: E2 = E3, with the E0 pieces recombined") {
    REQUIRE(energy_E2lin(flat, w, r) == Approx(energy_E3lin(flat, w, r)));
    REQUIRE(energy_E2lin(flat, w, SpectralField(g)) ==
            Approx(2.0 * energy_E0(w, SpectralField(g))));
    REQUIRE(energy_E2lin(flat, SpectralField(g), r) ==
            Approx(energy_E0(SpectralField(g), r)));
    REQUIRE(energy_E2lin(flat, w, r) == Approx(energy_quadratic(w, r)));
  }
  SECTION("E2 is nonnegative on random backgrounds and perturbations") {
    Grid g2(256);
    for (int seed = 1; seed <= 30; ++seed) {
      WaveState s = random_state(g2, seed, 40, 0.05);
      DerivedFields d = derive_all(s);
      LinState p = random_linstate(g2, seed + 1000, 40, 1.0);
      REQUIRE(energy_E2lin(LinEnergyBackground::from(d), p.w.field(),
                           p.r.field()) >= 0.0);
    }
  }
  SECTION("E3 = (1 + O(A)) E_quadratic") {
    Grid g2(256);
    for (int seed = 1; seed <= 10; ++seed) {
      WaveState s = random_state(g2, seed, 20, 0.01);
      DiffState dd = diagonal_state(s);
      double A = norm_A(dd);
      DerivedFields d = derive_all(s);
      LinState p = random_linstate(g2, seed + 2000, 20, 1.0);
      double e3 = energy_E3lin(LinEnergyBackground::from(d), p.w.field(),
                               p.r.field());
      double e0 = energy_quadratic(p.w.field(), p.r.field());
      REQUIRE(std::abs(e3 / e0 - 1.0) <= 5.0 * A);
    }
  }
}

TEST_CASE("n = 2 modified energy") {
  Grid g(256);
  SECTION("small amplitude: equivalent to the quadratic energy of the pair") {
    for (int seed : {3, 4}) {
      WaveState s = random_state(g, seed, 20, 0.01);
      DiffState d = diagonal_state(s);
      double A = norm_A(d);
      double e = energy_n2_cubic(d);
      SpectralField Waa = deriv(d.Wa.field());
      SpectralField RR =
          product(deriv(d.R.field()), add_constant(d.Wa.field(), 1.0));
      double e0 = energy_quadratic(Waa, RR);
      REQUIRE(std::abs(e / e0 - 1.0) <= 5.0 * A + 1e-12);
    }
  }
  SECTION("slow drift along a run (cubic estimate)") {
    double eps = 0.05;
    WaveState s0 = WaveState::make(mode_field(g, -1, Complex(eps, 0.0)),
                                   mode_field(g, -1, Complex(-eps, 0.0)));
    DiffState d0 = diagonal_state(s0);
    double e0 = energy_n2_cubic(d0);
    double A = norm_A(d0), B = norm_B(d0);
    SimConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 5.0;
    double worst_rate = 0.0;
    run(s0, cfg, [&](const DiagnosticsRecord& rec, const WaveState& st) {
      if (rec.t < 1.0) return;
      double rel = std::abs(energy_n2_cubic(diagonal_state(st)) - e0) /
                   std::abs(e0);
      worst_rate = std::max(worst_rate, rel / rec.t);
    });
    // |E(t) - E(0)| / E(0) <= C A B t with a modest constant.
    REQUIRE(worst_rate <= 20.0 * A * B);
  }
}

TEST_CASE("norm proxies") {
  Grid g(128);
  SECTION("bmo: constants vanish, translation invariance, 2 sup bound") {
    REQUIRE(bmo_proxy(constant_field(g, Complex(3, -2))) == 0.0);
    Rng rng(5);
    SpectralField f(g);
    for (int k = -30; k <= 30; ++k) f.set_coeff(k, rng.complex_box());
    double b = bmo_proxy(f);
    REQUIRE(b <= 2.0 * sup_norm(f));
    REQUIRE(bmo_proxy(add_constant(f, Complex(7, -1))) == Approx(b));
    REQUIRE(b > 0.0);
  }
  SECTION("sobolev norm example") {
    REQUIRE(sobolev_norm(mode_field(g, -4, 1.0), 0.5) ==
            Approx(2.0 * std::sqrt(2.0 * std::numbers::pi)));
    REQUIRE(sobolev_norm(constant_field(g, 2.0), 0.5) == 0.0);
  }
  SECTION("sobolev norm agrees with quadrature of ||D|^s f|^2") {
    Rng rng(9);
    SpectralField f(g);
    for (int k = -40; k <= 40; ++k)
      f.set_coeff(k, rng.complex_box() / double(std::max(1, std::abs(k))));
    double s = 0.75;
    auto vals = to_physical(frac_deriv(f, s));
    double quad = 0.0;
    for (const auto& v : vals) quad += std::norm(v);
    quad = std::sqrt(quad * g.period() / g.n_modes());
    REQUIRE(sobolev_norm(f, s) == Approx(quad).epsilon(1e-10));
  }
  SECTION("besov proxy on a single mode equals its sup") {
    REQUIRE(besov_proxy(mode_field(g, -4, 0.3)) == Approx(0.3));
  }
  SECTION("control norms on the flat state") {
    DiffState flat{HoloField::zero(g), HoloField::zero(g), 0.0};
    REQUIRE(norm_A(flat) == 0.0);
    REQUIRE(norm_B(flat) == 0.0);
  }
  SECTION("control norm A on a single bold W mode") {
    // bold W = 0.1 e^{-ia}: ||bold W||_inf = 0.1, ||Y||_inf ~ 0.1/0.9.
    SpectralField Wa = mode_field(g, -1, 0.1);
    DiffState d{HoloField::project(Wa), HoloField::zero(g), 0.0};
    double A = norm_A(d);
    REQUIRE(A == Approx(0.1 + 0.1 / 0.9).epsilon(1e-3));
  }
  SECTION("|D|^{1/2} R contribution for a single mode") {
    double eps = 0.05;
    SpectralField R = mode_field(g, -4, eps);
    DiffState d{HoloField::zero(g), HoloField::project(R), 0.0};
    REQUIRE(norm_A(d) == Approx(2.0 * eps).epsilon(1e-12));
  }
}

TEST_CASE("frequency envelopes") {
  Grid g(256);
  SECTION("single dyadic block has the closed-form envelope") {
    SpectralField f = mode_field(g, -8, 2.0);  // block 3
    Envelope env = frequency_envelope(f, 0.1);
    double base = l2_norm(f);
    for (size_t k = 0; k < env.values.size(); ++k) {
      double expect =
          base * std::pow(2.0, -0.1 * std::abs(double(k) - 3.0));
      REQUIRE(env.values[k] == Approx(expect).epsilon(1e-12));
    }
  }
  SECTION("majorization and slow variation hold by construction") {
    Rng rng(11);
    SpectralField f(g);
    for (int k = -80; k <= -1; ++k)
      f.set_coeff(k, rng.complex_box() / std::sqrt(std::abs(double(k))));
    Envelope env = frequency_envelope(f, 0.25);
    auto norms = lp_block_l2(f);
    for (size_t k = 0; k < norms.size(); ++k)
      REQUIRE(env.values[k] >= norms[k] - 1e-15);
    for (size_t k = 0; k + 1 < env.values.size(); ++k) {
      double ratio = env.values[k + 1] / env.values[k];
      REQUIRE(ratio <= std::pow(2.0, 0.25) + 1e-12);
      REQUIRE(ratio >= std::pow(2.0, -0.25) - 1e-12);
    }
  }
  SECTION("enveloping an envelope is the identity") {
    SpectralField f(g);
    Rng rng(12);
    for (int k = -60; k <= -1; ++k) f.set_coeff(k, rng.complex_box());
    Envelope env = frequency_envelope(f, 0.1);
    Envelope env2 = envelope_from_norms(env.values, 0.1);
    for (size_t k = 0; k < env.values.size(); ++k)
      REQUIRE(env2.values[k] == Approx(env.values[k]).epsilon(1e-12));
  }
  SECTION("delta is validated") {
    REQUIRE_THROWS_AS(frequency_envelope(SpectralField(g), 1.5),
                      std::invalid_argument);
  }
}
