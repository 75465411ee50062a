#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>

#include "wavecrest/fit.hpp"
#include "wavecrest/initial_data.hpp"
#include "wavecrest/normal_form.hpp"
#include "wavecrest/output.hpp"
#include "wavecrest/parallel.hpp"
#include "wavecrest/rng.hpp"
#include "wavecrest/snapshot.hpp"

namespace wavecrest {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_blow_up = 3;

namespace detail {

inline void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory " + dir);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

inline int run_simulate(const ExperimentSpec& spec) {
  const Grid g = spec.sim.grid();
  WaveState s0 = make_initial_data(g, spec.data);
  detail::ensure_dir(spec.output_dir);
  detail::ensure_dir(spec.output_dir + "/snapshots");

  DiagnosticsWriter diag(spec.output_dir + "/diagnostics.jsonl", spec);
  double E_first = 0.0;
  bool have_first = false;
  double max_drift = 0.0;
  DiagnosticsSink sink = [&](const DiagnosticsRecord& rec,
                             const WaveState& st) {
    diag.write(rec);
    write_snapshot(snapshot_path(spec.output_dir + "/snapshots", rec.t), st);
    if (!have_first) {
      E_first = rec.E;
      have_first = true;
    } else if (E_first != 0.0) {
      max_drift = std::max(max_drift, std::abs(rec.E - E_first) /
                                          std::abs(E_first));
    }
  };
  RunResult rr = run(s0, spec.sim, sink);

  CsvWriter summary(spec.output_dir + "/summary.csv", spec,
                    {"quantity", "value"});
  summary.row({"final_t", format_double(rr.last_good_t)});
  summary.row({"steps", std::to_string(rr.steps)});
  summary.row({"blew_up", rr.blew_up ? "1" : "0"});
  summary.row({"blow_up_reason", rr.reason.empty() ? "none" : rr.reason});
  summary.row({"energy_rel_drift", format_double(max_drift)});
  summary.row({"max_holo_leak", format_double(rr.max_holo_leak)});
  summary.row({"cfl_warning", rr.cfl_warning ? "1" : "0"});

  if (rr.blew_up) {
    std::cerr << "blow-up detected: " << rr.reason
              << " (last good t = " << format_double(rr.last_good_t) << ")\n";
    return exit_blow_up;
  }
  return exit_ok;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyCheck {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Seeded randomized verification of the identity ledger, Taylor sign,
/// paraproduct reconstruction, projector algebra, and the normal-form
/// cross-check. A corrupt_b offset is a negative-control hook: it is added
/// to the derived b before checking, so a nonzero value must flag
/// identity (i).
inline VerifyReport verify_suite(const ExperimentSpec& spec,
                                 double corrupt_b = 0.0) {
  const Grid g = spec.sim.grid();
  const double tol = spec.tolerance;
  const int kmax = g.n_modes() / 6;

  double r_bdec = 0.0, r_mforms = 0.0, r_bpoly = 0.0, r_aforms = 0.0;
  double r_real = 0.0, r_rf = 0.0, taylor_min = 1.0, r_nf = 0.0;
  double r_para = 0.0, r_proj = 0.0;

  for (int i = 0; i < spec.verify_count; ++i) {
    std::uint64_t seed = static_cast<std::uint64_t>(spec.sim.seed) + i;
    WaveState s = random_state(g, seed, kmax, spec.verify_amp);
    DerivedFields d = derive_all(s, spec.sim.c_min);
    if (corrupt_b != 0.0) d.b = add_constant(d.b, corrupt_b);
    IdentityReport rep = verify_identities(d, spec.sim.c_min, tol);
    r_bdec = std::max(r_bdec, rep.b_decomposition);
    r_mforms = std::max(r_mforms, rep.M_two_forms);
    r_bpoly = std::max(r_bpoly, rep.b_polynomial);
    r_aforms = std::max(r_aforms, rep.a_two_forms);
    r_real = std::max({r_real, rep.realness_a, rep.realness_b,
                       rep.realness_M});
    r_rf = std::max(r_rf, rep.r_minus_f);
    taylor_min = std::min(taylor_min, taylor_sign(s, spec.sim.c_min));
    r_nf = std::max(r_nf, nf_residual(s, spec.sim.c_min).crosscheck);

    // Paraproduct reconstruction and projector algebra on general
    // (non-holomorphic) random fields.
    Rng rng(seed ^ 0x5eedULL);
    SpectralField f(g), h(g);
    for (int kk = -kmax; kk <= kmax; ++kk) {
      double decay = 1.0 / std::max(1, std::abs(kk));
      f.set_coeff(kk, decay * rng.complex_box());
      h.set_coeff(kk, decay * rng.complex_box());
    }
    Paraproducts pp = paraproducts(f, h);
    r_para = std::max(
        r_para, max_abs_coeff(pp.low_high + pp.high_low + pp.resonant -
                              product(f, h)));
    // P + Pbar = I;  Pi = -i Pr i;  Pi Pbar_r = 0;  I = Pi + Pbar_r.
    SpectralField sum_check = project_P(f) + project_Pbar(f) - f;
    SpectralField pi_from_pr =
        Complex(0.0, -1.0) * project_Pr(Complex(0.0, 1.0) * f) -
        project_Pi(f);
    SpectralField annihilation = project_Pi(project_Pbar_r(f));
    SpectralField split_check = project_Pi(f) + project_Pbar_r(f) - f;
    r_proj = std::max({r_proj, max_abs_coeff(sum_check),
                       max_abs_coeff(pi_from_pr),
                       max_abs_coeff(annihilation),
                       max_abs_coeff(split_check)});
  }

  VerifyReport report;
  auto add = [&](const std::string& name, double value, double tolerance,
                 bool pass) {
    report.checks.push_back({name, value, tolerance, pass});
  };
  add("b_decomposition", r_bdec, tol, r_bdec <= tol);
  add("M_two_forms", r_mforms, tol, r_mforms <= tol);
  add("b_polynomial", r_bpoly, tol, r_bpoly <= tol);
  add("a_two_forms", r_aforms, tol, r_aforms <= tol);
  add("realness_abM", r_real, tol, r_real <= tol);
  add("r_minus_f", r_rf, tol, r_rf <= tol);
  add("taylor_min_1plusa", taylor_min, 1.0 - tol, taylor_min >= 1.0 - tol);
  add("paraproduct_reconstruction", r_para, tol, r_para <= tol);
  add("projector_relations", r_proj, tol, r_proj <= tol);
  add("nf_crosscheck", r_nf, 1e-9, r_nf <= 1e-9);
  return report;
}

inline int run_verify(const ExperimentSpec& spec) {
  VerifyReport report = verify_suite(spec);
  detail::ensure_dir(spec.output_dir);
  CsvWriter csv(spec.output_dir + "/verify_report.csv", spec,
                {"check", "max_residual", "tolerance", "pass"});
  for (const auto& c : report.checks) {
    csv.row({c.name, format_double(c.max_residual),
             format_double(c.tolerance), c.pass ? "1" : "0"});
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " "
              << format_double(c.max_residual) << "\n";
  }
  return report.all_pass() ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------------------
// nf-scan
// ---------------------------------------------------------------------------

inline DataSpec default_nf_shape() {
  DataSpec d;
  d.kind = DataSpec::Kind::multi_mode;
  d.traveling = true;
  d.modes = {{-1, 0.608, 0.165}, {-2, 0.269, 2.77}, {-3, 0.094, 1.01}};
  return d;
}

struct NfScanResult {
  std::vector<double> eps;
  std::vector<double> normG;
  std::vector<double> normK;
  std::vector<double> crosscheck;
  LineFit fit;  // log(normG+normK) vs log(eps)
};

inline NfScanResult nf_scan(const ExperimentSpec& spec) {
  const Grid g = spec.sim.grid();
  DataSpec shape = spec.data.kind == DataSpec::Kind::multi_mode &&
                           !spec.data.modes.empty()
                       ? spec.data
                       : default_nf_shape();
  NfScanResult res;
  std::vector<double> totals;
  for (double eps : spec.eps_list_or_default()) {
    DataSpec scaled = shape;
    for (auto& m : scaled.modes) m.amp *= eps;
    WaveState s = make_initial_data(g, scaled);
    NfResidual nr = nf_residual(s, spec.sim.c_min);
    res.eps.push_back(eps);
    res.normG.push_back(nr.normG);
    res.normK.push_back(nr.normK);
    res.crosscheck.push_back(nr.crosscheck);
    totals.push_back(nr.normG + nr.normK);
  }
  res.fit = loglog_fit(res.eps, totals);
  return res;
}

inline int run_nf_scan(const ExperimentSpec& spec) {
  NfScanResult res = nf_scan(spec);
  detail::ensure_dir(spec.output_dir);
  CsvWriter csv(spec.output_dir + "/nf_scan.csv", spec,
                {"epsilon", "normG", "normK", "crosscheck_residual"});
  for (size_t i = 0; i < res.eps.size(); ++i) {
    csv.row({format_double(res.eps[i]), format_double(res.normG[i]),
             format_double(res.normK[i]), format_double(res.crosscheck[i])});
  }
  CsvWriter summary(spec.output_dir + "/summary.csv", spec,
                    {"quantity", "value"});
  summary.row({"loglog_slope", format_double(res.fit.slope)});
  summary.row({"fit_residual_rms", format_double(res.fit.residual_rms)});
  std::cout << "nf-scan slope = " << format_double(res.fit.slope) << "\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------
// lifespan
// ---------------------------------------------------------------------------

struct LifespanRun {
  double eps = 0.0;
  double t_double = 0.0;  // doubling time, or the reached t_max if censored
  bool censored = false;
  bool blew_up = false;
  double max_ratio = 1.0;
};

struct LifespanResult {
  std::vector<LifespanRun> runs;
  bool fit_valid = false;
  LineFit fit;  // log T_double vs log eps over uncensored runs
};

inline DataSpec default_lifespan_shape() {
  DataSpec d;
  d.kind = DataSpec::Kind::multi_mode;
  d.traveling = false;
  d.modes = {{-1, 1.0, 0.0}, {-2, 0.4, 0.2}};
  return d;
}

/// Evolves scaled data until the monitored norm doubles or t_max is hit.
inline LifespanRun lifespan_run(const Grid& g, const DataSpec& shape,
                                double eps, const SimConfig& sim,
                                double t_max) {
  WaveState s = scale_to_h1_norm(g, shape, eps, sim.c_min);
  const double n0 = h1_pair_norm(diagonal_state(s, sim.c_min));
  LifespanRun out{eps, t_max, true, false, 1.0};
  double prev_t = 0.0, prev_n = n0;
  const int check_every = 25;
  try {
    while (s.t < t_max) {
      for (int i = 0; i < check_every && s.t < t_max; ++i)
        s = step_rk4(s, sim.dt, sim.c_min);
      double nn = h1_pair_norm(diagonal_state(s, sim.c_min));
      out.max_ratio = std::max(out.max_ratio, nn / n0);
      if (nn >= 2.0 * n0) {
        double frac = (2.0 * n0 - prev_n) / (nn - prev_n);
        out.t_double = prev_t + frac * (s.t - prev_t);
        out.censored = false;
        return out;
      }
      prev_t = s.t;
      prev_n = nn;
    }
  } catch (const DegenerateSurfaceError&) {
    // Surface degenerated before a sampled doubling: censor at the last
    // good time and flag it.
    out.blew_up = true;
    out.t_double = prev_t;
    return out;
  }
  out.t_double = s.t;  // lower bound
  return out;
}

inline LifespanResult lifespan_scan(const ExperimentSpec& spec) {
  const Grid g = spec.sim.grid();
  DataSpec shape = spec.data.kind == DataSpec::Kind::multi_mode &&
                           !spec.data.modes.empty()
                       ? spec.data
                       : default_lifespan_shape();
  std::vector<double> eps = spec.eps_list_or_default();
  LifespanResult res;
  res.runs.resize(eps.size());
  parallel_for_index(static_cast<int>(eps.size()), [&](int i) {
    double t_max = spec.lifespan_t_max_factor / (eps[i] * eps[i]);
    res.runs[i] = lifespan_run(g, shape, eps[i], spec.sim, t_max);
  });
  std::vector<double> xs, ys;
  for (const auto& r : res.runs) {
    if (!r.censored) {
      xs.push_back(r.eps);
      ys.push_back(r.t_double);
    }
  }
  if (xs.size() >= 2) {
    res.fit = loglog_fit(xs, ys);
    res.fit_valid = true;
  }
  return res;
}

inline int run_lifespan(const ExperimentSpec& spec) {
  LifespanResult res = lifespan_scan(spec);
  detail::ensure_dir(spec.output_dir);
  CsvWriter csv(spec.output_dir + "/lifespan.csv", spec,
                {"epsilon", "t_double", "censored", "blew_up",
                 "max_norm_ratio"});
  for (const auto& r : res.runs) {
    csv.row({format_double(r.eps), format_double(r.t_double),
             r.censored ? "1" : "0", r.blew_up ? "1" : "0",
             format_double(r.max_ratio)});
  }
  CsvWriter summary(spec.output_dir + "/summary.csv", spec,
                    {"quantity", "value"});
  summary.row({"fit_valid", res.fit_valid ? "1" : "0"});
  summary.row({"loglog_slope",
               res.fit_valid ? format_double(res.fit.slope) : "nan"});
  int censored = 0;
  for (const auto& r : res.runs) censored += r.censored;
  summary.row({"censored_runs", std::to_string(censored)});
  if (res.fit_valid)
    std::cout << "lifespan slope = " << format_double(res.fit.slope) << "\n";
  else
    std::cout << "lifespan: no uncensored runs, no fit\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------
// decay
// ---------------------------------------------------------------------------

struct DecaySample {
  double t = 0.0;
  double sup_W = 0.0;
  double sup_Wa = 0.0;
  double sup_halfWa = 0.0;  // sup ||D|^{1/2} W_alpha|
  double sup_R = 0.0;
  double sup_Ra = 0.0;
};

struct DecayResult {
  std::vector<DecaySample> samples;
  double horizon = 0.0;  // wrap-around time L / (2 * max group speed)
  bool truncated = false;
  LineFit fit_R;   // log sup|R| vs log t on the fit window
  LineFit fit_W;
  LineFit fit_Ra;
};

inline DecayResult decay_probe(const ExperimentSpec& spec) {
  const Grid g = spec.sim.grid();
  DataSpec data = spec.data;
  if (data.kind != DataSpec::Kind::localized)
    throw ConfigError("decay: data descriptor must be localized");
  WaveState s = make_initial_data(g, data);

  DecayResult res;
  // Fastest group speed on the grid is at the lowest nonzero wavenumber:
  // c_g = 1/(2 sqrt(kappa_min)), so the horizon L/(2 c_g) = sqrt(2 pi L).
  res.horizon = std::sqrt(two_pi * g.period());
  double t1 = spec.fit_t1;
  if (t1 > res.horizon) {
    res.truncated = true;
    t1 = res.horizon;
  }
  while (s.t < t1 - 1e-9) {
    for (int i = 0; i < spec.sim.output_every && s.t < t1 - 1e-9; ++i)
      s = step_rk4(s, spec.sim.dt, spec.sim.c_min);
    if (s.t >= spec.fit_t0 - 1e-9) {
      DiffState d = diagonal_state(s, spec.sim.c_min);
      DecaySample sm;
      sm.t = s.t;
      sm.sup_W = sup_norm(s.W.field());
      sm.sup_Wa = sup_norm(d.Wa.field());
      sm.sup_halfWa = sup_norm(frac_deriv(d.Wa.field(), 0.5));
      sm.sup_R = sup_norm(d.R.field());
      sm.sup_Ra = sup_norm(deriv(d.R.field()));
      res.samples.push_back(sm);
    }
  }
  std::vector<double> ts, rs, ws, ras;
  double largest = 0.0;
  for (const auto& sm : res.samples) {
    ts.push_back(sm.t);
    rs.push_back(sm.sup_R);
    ws.push_back(sm.sup_W);
    ras.push_back(sm.sup_Ra);
    largest = std::max({largest, sm.sup_R, sm.sup_W, sm.sup_Ra});
  }
  if (largest == 0.0) return res;  // flat data: nothing to fit
  res.fit_R = loglog_fit(ts, rs);
  res.fit_W = loglog_fit(ts, ws);
  res.fit_Ra = loglog_fit(ts, ras);
  return res;
}

inline int run_decay(const ExperimentSpec& spec) {
  DecayResult res = decay_probe(spec);
  detail::ensure_dir(spec.output_dir);
  CsvWriter csv(spec.output_dir + "/decay.csv", spec,
                {"t", "sup_W", "sup_Wa", "sup_D12Wa", "sup_R", "sup_Ra"});
  for (const auto& sm : res.samples) {
    csv.row({format_double(sm.t), format_double(sm.sup_W),
             format_double(sm.sup_Wa), format_double(sm.sup_halfWa),
             format_double(sm.sup_R), format_double(sm.sup_Ra)});
  }
  CsvWriter summary(spec.output_dir + "/summary.csv", spec,
                    {"quantity", "value"});
  summary.row({"exponent_sup_R", format_double(res.fit_R.slope)});
  summary.row({"exponent_sup_W", format_double(res.fit_W.slope)});
  summary.row({"exponent_sup_Ra", format_double(res.fit_Ra.slope)});
  summary.row({"fit_residual_rms_R", format_double(res.fit_R.residual_rms)});
  summary.row({"wrap_horizon", format_double(res.horizon)});
  summary.row({"truncation_warning", res.truncated ? "1" : "0"});
  if (res.truncated)
    std::cerr << "decay: fit window truncated at the wrap-around horizon "
              << format_double(res.horizon) << "\n";
  std::cout << "decay exponent (sup|R|) = " << format_double(res.fit_R.slope)
            << "\n";
  return exit_ok;
}

// ---------------------------------------------------------------------------
// envelope
// ---------------------------------------------------------------------------

inline int run_envelope(const ExperimentSpec& spec) {
  const Grid g = spec.sim.grid();
  WaveState s0 = make_initial_data(g, spec.data);
  detail::ensure_dir(spec.output_dir);

  std::vector<std::string> cols{"t"};
  for (int j = 0; j <= lp_max_block(g); ++j)
    cols.push_back("c" + std::to_string(j));
  CsvWriter csv(spec.output_dir + "/envelope.csv", spec, cols);
  DiagnosticsSink sink = [&](const DiagnosticsRecord& rec,
                             const WaveState& st) {
    DiffState d = diagonal_state(st, spec.sim.c_min);
    auto bw = lp_block_l2(d.Wa.field());
    auto br = lp_block_l2(frac_deriv(d.R.field(), 0.5));
    std::vector<double> norms(bw.size());
    for (size_t i = 0; i < bw.size(); ++i) norms[i] = std::hypot(bw[i], br[i]);
    Envelope env = envelope_from_norms(norms, spec.envelope_delta);
    std::vector<std::string> cells{format_double(rec.t)};
    for (double c : env.values) cells.push_back(format_double(c));
    csv.row(cells);
  };
  RunResult rr = run(s0, spec.sim, sink);
  CsvWriter summary(spec.output_dir + "/summary.csv", spec,
                    {"quantity", "value"});
  summary.row({"final_t", format_double(rr.last_good_t)});
  summary.row({"blew_up", rr.blew_up ? "1" : "0"});
  return rr.blew_up ? exit_blow_up : exit_ok;
}

// ---------------------------------------------------------------------------

inline int run_experiment(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentSpec::Kind::simulate:
      return run_simulate(spec);
    case ExperimentSpec::Kind::verify:
      return run_verify(spec);
    case ExperimentSpec::Kind::nf_scan:
      return run_nf_scan(spec);
    case ExperimentSpec::Kind::lifespan:
      return run_lifespan(spec);
    case ExperimentSpec::Kind::decay:
      return run_decay(spec);
    case ExperimentSpec::Kind::envelope:
      return run_envelope(spec);
  }
  return exit_validation;
}

}  // namespace wavecrest
