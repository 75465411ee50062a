#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavecrest/energies.hpp"
#include "wavecrest/envelope.hpp"
#include "wavecrest/normal_form.hpp"
#include "wavecrest/norms.hpp"
#include "wavecrest/rhs.hpp"

namespace wavecrest {

struct SimConfig {
  int n_modes = 256;
  double period = two_pi;
  double dt = 1e-3;
  double t_end = 10.0;
  double c_min = default_c_min;
  Integrator integrator = Integrator::rk4;
  bool dealias = true;
  ZeroModePolicy zero_mode_policy = ZeroModePolicy::appendix_a;
  int output_every = 100;
  long seed = 1;

  Grid grid() const { return Grid(n_modes, period); }
};


// ---------------------------------------------------------------------------
// Diagnostics and the run loop.
// ---------------------------------------------------------------------------

struct DiagnosticsRecord {
  double t = 0.0;
  double E = 0.0;
  double E0 = 0.0;      // E0 of the diagonal pair (bold W, R)
  double E2lin = 0.0;   // linearized energies of (bold W, R) on itself
  double E3lin = 0.0;
  double E2_high = 0.0; // n=2 modified energy
  double normA = 0.0;
  double normB = 0.0;
  double minJ = 0.0;
  double min1plusA = 0.0;
  double meanW_re = 0.0;
  double meanQ_im = 0.0;
  double sup_Wa = 0.0;
  double sup_R = 0.0;
  double holo_leak = 0.0;
  double nf_residual_G = 0.0;  // L2 norms of the normal-form defect
  double nf_residual_K = 0.0;
  std::vector<double> envelope;  // H^1-weighted dyadic block envelope
};

inline DiagnosticsRecord make_diagnostics(const WaveState& s,
                                          double c_min = default_c_min,
                                          double envelope_delta = 0.1) {
  DiagnosticsRecord rec;
  rec.t = s.t;
  DiffState d = diagonal_state(s, c_min);
  DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), c_min);

  rec.E = energy_E(s);
  rec.E0 = energy_E0(d.Wa.field(), d.R.field());
  LinEnergyBackground bg{dd.a, d.R.field(), d.Wa.field()};
  rec.E2lin = energy_E2lin(bg, d.Wa.field(), d.R.field());
  rec.E3lin = energy_E3lin(bg, d.Wa.field(), d.R.field());
  rec.E2_high = energy_n2_cubic(d, c_min);
  rec.normA = norm_A(d.Wa.field(), d.R.field(), dd.Y.field());
  rec.normB = norm_B(d.Wa.field(), d.R.field());

  double minJ = std::numeric_limits<double>::infinity();
  for (const auto& v : to_physical(dd.J))
    minJ = std::min(minJ, v.real());
  rec.minJ = minJ;
  double min_a = std::numeric_limits<double>::infinity();
  for (const auto& v : to_physical(dd.a)) min_a = std::min(min_a, v.real());
  rec.min1plusA = 1.0 + min_a;

  rec.meanW_re = mean(s.W.field()).real();
  rec.meanQ_im = mean(s.Q.field()).imag();
  rec.sup_Wa = sup_norm(d.Wa.field());
  rec.sup_R = sup_norm(d.R.field());
  rec.holo_leak = std::max(s.W.leak(), s.Q.leak());

  NfResidual nr = nf_residual(s, c_min);
  rec.nf_residual_G = nr.normG;
  rec.nf_residual_K = nr.normK;

  // Envelope of the block norms of (bold W, R) in the L2 x H^{1/2} pairing.
  auto bw = lp_block_l2(d.Wa.field());
  auto br = lp_block_l2(frac_deriv(d.R.field(), 0.5));
  std::vector<double> norms(bw.size());
  for (size_t i = 0; i < bw.size(); ++i)
    norms[i] = std::hypot(bw[i], br[i]);
  rec.envelope = envelope_from_norms(norms, envelope_delta).values;
  return rec;
}

struct RunResult {
  WaveState final_state;
  bool blew_up = false;
  double last_good_t = 0.0;
  std::string reason;
  bool cfl_warning = false;
  double max_holo_leak = 0.0;
  long steps = 0;
};

/// Reason a state is no longer evolvable, if any.
inline std::optional<std::string> blow_up_reason(const WaveState& s,
                                                 double c_min) {
  if (!finite(s.W.field()) || !finite(s.Q.field()))
    return "non-finite field values";
  SpectralField u = add_constant(deriv(s.W.field()), 1.0);
  double sup_wa = sup_norm(deriv(s.W.field()));
  if (sup_wa > 10.0)
    return "sup |bold W| = " + std::to_string(sup_wa) + " > 10";
  double lo = min_abs_padded(u);
  if (lo < c_min)
    return "min |1 + bold W| = " + std::to_string(lo) + " < c_min";
  return std::nullopt;
}

using DiagnosticsSink =
    std::function<void(const DiagnosticsRecord&, const WaveState&)>;

/// Fixed-step RK4 loop. Emits diagnostics every output_every steps (and at
/// t = 0 and the final time). Never clamps: on blow-up the last good state
/// and time are reported.
inline RunResult run(const WaveState& s0, const SimConfig& cfg,
                     const DiagnosticsSink& sink = {}) {
  DealiasScope dealias_scope(cfg.dealias);
  WaveState s = s0;
  RunResult res{s, false, s0.t, "", false, 0.0, 0};

  // Transport CFL guard: dt * max|kappa| * sup|b| should stay below 1/2.
  {
    DiffState d = diagonal_state(s, cfg.c_min);
    DiffDerived dd = derive_from_diff(d.Wa.field(), d.R.field(), cfg.c_min);
    double kappa_max =
        std::abs(s.grid().wavenumber(s.grid().dealias_limit()));
    res.cfl_warning = cfg.dt * kappa_max * sup_norm(dd.b) > 0.5;
  }

  const long nsteps =
      static_cast<long>(std::ceil((cfg.t_end - s0.t) / cfg.dt - 1e-12));
  if (sink) sink(make_diagnostics(s, cfg.c_min), s);
  for (long step = 0; step < nsteps; ++step) {
    WaveState next = s;
    try {
      next = step_rk4(s, cfg.dt, cfg.c_min);
    } catch (const DegenerateSurfaceError& e) {
      res.blew_up = true;
      res.reason = e.what();
      break;
    }
    if (auto why = blow_up_reason(next, cfg.c_min)) {
      res.blew_up = true;
      res.reason = *why;
      break;
    }
    s = next;
    res.last_good_t = s.t;
    res.max_holo_leak =
        std::max(res.max_holo_leak, std::max(s.W.leak(), s.Q.leak()));
    res.steps = step + 1;
    if (sink && ((step + 1) % cfg.output_every == 0 || step + 1 == nsteps)) {
      sink(make_diagnostics(s, cfg.c_min), s);
    }
  }
  res.final_state = s;
  return res;
}

}  // namespace wavecrest
