// Acceptance gate: one test case per criterion, each printing a single
// PASS/FAIL line with the measured value, tolerance, and wall time.
// Run the binary directly for the whole table, or through ctest where each
// criterion is registered as its own test.

#include <catch2/catch.hpp>

#include <chrono>
#include <cstdio>

#include "wavecrest/experiments.hpp"

using namespace wavecrest;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void line(int n, const char* name, bool pass, const std::string& detail) {
  std::printf("ACCEPTANCE %02d %-28s %s (%s)\n", n, name,
              pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

ExperimentSpec acceptance_verify_spec() {
  ExperimentSpec spec;
  spec.sim.n_modes = 256;
  spec.sim.seed = 1;
  spec.verify_count = 100;
  spec.verify_amp = 1e-4;
  spec.tolerance = 1e-10;
  return spec;
}

WaveState traveling_mode(const Grid& g, int k, double eps) {
  SpectralField W = mode_field(g, k, Complex(eps, 0.0));
  SpectralField Q = mode_field(
      g, k, Complex(-eps / std::sqrt(std::abs(g.wavenumber(k))), 0.0));
  return WaveState::make(W, Q);
}

}  // namespace

TEST_CASE("criterion 01: identity suite") {
  Stopwatch clock;
  VerifyReport rep = verify_suite(acceptance_verify_spec());
  double worst = 0.0;
  bool pass = true;
  for (const auto& c : rep.checks) {
    if (c.name == "taylor_min_1plusa" || c.name == "nf_crosscheck") continue;
    worst = std::max(worst, c.max_residual);
    pass = pass && c.pass;
  }
  double elapsed = clock.seconds();
  bool in_time = elapsed < 30.0;
  line(1, "identity suite", pass && in_time,
       "max residual " + fmt(worst) + " <= 1e-10 over 100 states, " +
           fmt(elapsed) + " s");
  REQUIRE(pass);
  REQUIRE(in_time);
}

TEST_CASE("criterion 02: taylor sign") {
  ExperimentSpec spec = acceptance_verify_spec();
  const Grid g = spec.sim.grid();
  double min_seen = 2.0;
  for (int i = 0; i < spec.verify_count; ++i) {
    WaveState s = random_state(g, spec.sim.seed + i, g.n_modes() / 6,
                               spec.verify_amp);
    min_seen = std::min(min_seen, taylor_sign(s));
  }
  bool pass = min_seen >= 1.0 - 1e-10;
  line(2, "taylor sign", pass,
       "min(1+a) = " + fmt(min_seen) + " >= 1 - 1e-10");
  REQUIRE(pass);
}

TEST_CASE("criterion 03: dispersion relation") {
  Grid g(128);
  LinBackground bg = LinBackground::flat(g);
  double worst = 0.0;
  for (int k = 1; k <= 32; ++k) {
    LinState e1 = LinState::make(mode_field(g, -k, 1.0), SpectralField(g));
    LinState e2 = LinState::make(SpectralField(g), mode_field(g, -k, 1.0));
    LinRhs r1 = rhs_linearized(bg, e1);
    LinRhs r2 = rhs_linearized(bg, e2);
    Complex a = r1.wt.coeff(-k), b = r2.wt.coeff(-k);
    Complex c = r1.rt.coeff(-k), d = r2.rt.coeff(-k);
    Complex tr = a + d, det = a * d - b * c;
    Complex disc = std::sqrt(tr * tr - 4.0 * det);
    Complex l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    double om = std::sqrt(double(k));
    double err = std::min(std::abs(l1 - Complex(0, om)),
                          std::abs(l1 - Complex(0, -om))) +
                 std::min(std::abs(l2 - Complex(0, om)),
                          std::abs(l2 - Complex(0, -om)));
    worst = std::max(worst, err);
  }
  bool pass = worst <= 1e-10;
  line(3, "dispersion omega^2 = |k|", pass,
       "worst eigenvalue error " + fmt(worst) + " <= 1e-10, |k| <= 32");
  REQUIRE(pass);
}

TEST_CASE("criterion 04: energy conservation") {
  Stopwatch clock;
  Grid g(256);
  WaveState s0 = traveling_mode(g, -1, 0.05);
  double E0v = energy_E(s0);
  SimConfig cfg;
  cfg.dt = 1e-3;
  cfg.t_end = 10.0;
  cfg.output_every = 200;
  double drift = 0.0;
  RunResult rr =
      run(s0, cfg, [&](const DiagnosticsRecord& rec, const WaveState&) {
        drift = std::max(drift, std::abs(rec.E - E0v) / std::abs(E0v));
      });
  double elapsed = clock.seconds();
  bool pass = !rr.blew_up && drift < 1e-8 && elapsed < 120.0;
  line(4, "energy conservation", pass,
       "relative drift " + fmt(drift) + " < 1e-8 over T=10, " + fmt(elapsed) +
           " s");
  REQUIRE(!rr.blew_up);
  REQUIRE(drift < 1e-8);
  REQUIRE(elapsed < 120.0);
}

TEST_CASE("criterion 05: derivation consistency") {
  Grid g(256);
  SpectralField W(g), Q(g);
  W.set_coeff(-1, Complex(0.03, 0.01));
  W.set_coeff(-2, Complex(-0.01, 0.02));
  Q.set_coeff(-1, Complex(-0.02, 0.015));
  Q.set_coeff(-3, Complex(0.005, -0.01));
  WaveState base = WaveState::make(W, Q);
  DiffRhs rd = rhs_diff(diagonal_state(base));
  auto fd_error = [&](double dt) {
    auto flow = [&](double t) {
      WaveState s = base;
      double h = t / 16;
      for (int i = 0; i < 16; ++i) s = step_rk4(s, h);
      return s;
    };
    DiffState dp = diagonal_state(flow(dt));
    DiffState dm = diagonal_state(flow(-dt));
    SpectralField fdW = (dp.Wa.field() - dm.Wa.field()) * Complex(0.5 / dt, 0);
    SpectralField fdR = (dp.R.field() - dm.R.field()) * Complex(0.5 / dt, 0);
    return sup_norm(fdW - rd.Wat) + sup_norm(fdR - rd.Rt);
  };
  double ratio = fd_error(2e-2) / fd_error(1e-2);
  bool pass = std::abs(ratio - 4.0) <= 0.3;
  line(5, "rhs_diff consistency", pass,
       "FD error ratio " + fmt(ratio) + " in 4.0 +- 0.3");
  REQUIRE(pass);
}

TEST_CASE("criterion 06: linearization consistency") {
  Grid g(256);
  SpectralField W(g), Q(g);
  W.set_coeff(-1, Complex(0.03, 0.01));
  W.set_coeff(-2, Complex(-0.01, 0.02));
  Q.set_coeff(-1, Complex(-0.02, 0.015));
  Q.set_coeff(-3, Complex(0.005, -0.01));
  WaveState base = WaveState::make(W, Q);
  LinState p = random_linstate(g, 9, 20, 1.0);
  const double T = 0.5, dt = 5e-3;
  WaveState s = base;
  LinState pl = p;
  while (s.t < T - 1e-12) {
    auto [sn, pn] = step_rk4_coupled(s, pl, dt);
    s = sn;
    pl = pn;
  }
  DiffState d0 = diagonal_state(base);
  DiffState dT = diagonal_state(s);
  auto fd_error = [&](double h) {
    SpectralField dW = p.w.field();
    SpectralField dQ = p.r.field() + product(d0.R.field(), p.w.field());
    WaveState sh = WaveState::make(base.W.field() + Complex(h, 0) * dW,
                                   base.Q.field() + Complex(h, 0) * dQ);
    while (sh.t < T - 1e-12) sh = step_rk4(sh, dt);
    SpectralField wfd = (sh.W.field() - s.W.field()) * Complex(1 / h, 0);
    SpectralField qfd = (sh.Q.field() - s.Q.field()) * Complex(1 / h, 0);
    SpectralField rfd = qfd - product(dT.R.field(), wfd);
    return sup_norm(wfd - pl.w.field()) + sup_norm(rfd - pl.r.field());
  };
  double ratio = fd_error(1e-2) / fd_error(5e-3);
  bool pass = std::abs(ratio - 2.0) <= 0.3;
  line(6, "linearization consistency", pass,
       "directional FD ratio " + fmt(ratio) + " in 2.0 +- 0.3");
  REQUIRE(pass);
}

TEST_CASE("criterion 07: normal-form cubic cancellation") {
  Stopwatch clock;
  ExperimentSpec spec;
  spec.sim.n_modes = 256;
  spec.eps_list = {0.1, 0.05, 0.025, 0.0125};
  NfScanResult res = nf_scan(spec);
  double worst_cross = 0.0;
  for (double c : res.crosscheck) worst_cross = std::max(worst_cross, c);
  double elapsed = clock.seconds();
  bool pass = std::abs(res.fit.slope - 3.0) <= 0.1 && worst_cross < 1e-9 &&
              elapsed < 60.0;
  line(7, "normal-form cancellation", pass,
       "slope " + fmt(res.fit.slope) + " in 3.0 +- 0.1, crosscheck " +
           fmt(worst_cross) + " < 1e-9, " + fmt(elapsed) + " s");
  REQUIRE(std::abs(res.fit.slope - 3.0) <= 0.1);
  REQUIRE(worst_cross < 1e-9);
  REQUIRE(elapsed < 60.0);
}

TEST_CASE("criterion 08: cubic lifespan scaling") {
  Stopwatch clock;
  ExperimentSpec spec;
  spec.kind = ExperimentSpec::Kind::lifespan;
  spec.sim.n_modes = 256;
  spec.sim.dt = 0.01;
  spec.eps_list = {0.2, 0.1, 0.05};
  spec.lifespan_t_max_factor = 20.0;  // t_max = 20 / eps^2 per run
  LifespanResult res = lifespan_scan(spec);
  double elapsed = clock.seconds();
  int censored = 0;
  std::string runs;
  for (const auto& r : res.runs) {
    censored += r.censored;
    runs += " eps=" + fmt(r.eps) +
            (r.censored ? " censored>=" : " T=") + fmt(r.t_double) +
            " maxratio=" + fmt(r.max_ratio);
  }
  bool pass = res.fit_valid && std::abs(res.fit.slope + 2.0) <= 0.3 &&
              elapsed < 900.0;
  std::string detail =
      res.fit_valid
          ? "slope " + fmt(res.fit.slope) + " in -2.0 +- 0.3"
          : "no fit: " + std::to_string(censored) +
                "/3 runs censored (norm never doubles;" + runs + ")";
  line(8, "cubic lifespan scaling", pass, detail + ", " + fmt(elapsed) + " s");
  INFO(
      "The H1-type pair norm is invariant under the linear flow and moves "
      "only through nonlinear effects, which stay bounded-oscillatory at "
      "size O(eps^2) for this equation; doubling is never reached, so the "
      "doubling-time proxy cannot exhibit the eps^-2 scaling. See the "
      "lifespan scan table above: max norm ratios stay near 1.");
  REQUIRE(res.fit_valid);
  REQUIRE(std::abs(res.fit.slope + 2.0) <= 0.3);
  REQUIRE(elapsed < 900.0);
}

TEST_CASE("criterion 09: dispersive decay") {
  Stopwatch clock;
  ExperimentSpec spec;
  spec.kind = ExperimentSpec::Kind::decay;
  spec.sim.n_modes = 16384;
  spec.sim.period = 400.0 * std::numbers::pi;
  spec.sim.dt = 0.05;
  spec.sim.output_every = 10;
  spec.data.kind = DataSpec::Kind::localized;
  spec.data.eps = 0.01;
  spec.data.width = 1.0;
  spec.fit_t0 = 5.0;
  spec.fit_t1 = 50.0;
  DecayResult res = decay_probe(spec);
  double elapsed = clock.seconds();
  bool pass = std::abs(res.fit_R.slope + 0.5) <= 0.15 && !res.truncated &&
              elapsed < 1200.0;
  line(9, "dispersive decay", pass,
       "sup|R| exponent " + fmt(res.fit_R.slope) + " in -0.5 +- 0.15, " +
           fmt(elapsed) + " s");
  REQUIRE(std::abs(res.fit_R.slope + 0.5) <= 0.15);
  REQUIRE(!res.truncated);
  REQUIRE(elapsed < 1200.0);
}

TEST_CASE("criterion 10: energy equivalence") {
  Grid g(256);
  // |E3/E0 - 1| - 5A must stay <= 0 for every sample.
  double worst_excess = -std::numeric_limits<double>::infinity();
  double min_e2 = std::numeric_limits<double>::infinity();
  double max_A = 0.0;
  for (int i = 0; i < 25; ++i) {
    WaveState s = random_state(g, 1000 + i, 20, 0.012);
    DiffState dd = diagonal_state(s);
    double A = norm_A(dd);
    if (A > 0.1) {
      // rescale into the admissible range A <= 0.1
      double lam = 0.09 / A;
      s = WaveState::make(Complex(lam, 0) * s.W.field(),
                          Complex(lam, 0) * s.Q.field());
      dd = diagonal_state(s);
      A = norm_A(dd);
    }
    REQUIRE(A <= 0.1);
    max_A = std::max(max_A, A);
    DerivedFields d = derive_all(s);
    LinEnergyBackground bg = LinEnergyBackground::from(d);
    for (int j = 0; j < 4; ++j) {
      LinState p = random_linstate(g, 5000 + 4 * i + j, 20, 1.0);
      double e3 = energy_E3lin(bg, p.w.field(), p.r.field());
      double e0 = energy_quadratic(p.w.field(), p.r.field());
      double e2 = energy_E2lin(bg, p.w.field(), p.r.field());
      worst_excess =
          std::max(worst_excess, std::abs(e3 / e0 - 1.0) - 5.0 * A);
      min_e2 = std::min(min_e2, e2);
    }
  }
  bool pass = worst_excess <= 0.0 && min_e2 >= 0.0;
  line(10, "energy equivalence", pass,
       "|E3/E0-1| - 5A <= " + fmt(worst_excess) + ", min E2 = " +
           fmt(min_e2) + ", max A = " + fmt(max_A));
  REQUIRE(worst_excess <= 0.0);
  REQUIRE(min_e2 >= 0.0);
}

TEST_CASE("criterion 11: integrator order") {
  Grid g(256);
  WaveState base = traveling_mode(g, -1, 0.05);
  auto evolve = [&](double dt) {
    WaveState s = base;
    while (s.t < 1.0 - 1e-12) s = step_rk4(s, dt);
    return s;
  };
  WaveState s1 = evolve(4e-3), s2 = evolve(2e-3), s3 = evolve(1e-3);
  double d12 = sup_norm(s1.W.field() - s2.W.field()) +
               sup_norm(s1.Q.field() - s2.Q.field());
  double d23 = sup_norm(s2.W.field() - s3.W.field()) +
               sup_norm(s2.Q.field() - s3.Q.field());
  double order = std::log2(d12 / d23);
  bool pass = std::abs(order - 4.0) <= 0.2;
  line(11, "integrator order", pass, "self-convergence order " + fmt(order) +
                                         " in 4.0 +- 0.2");
  REQUIRE(pass);
}
