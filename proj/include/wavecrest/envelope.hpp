#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wavecrest/littlewood_paley.hpp"

namespace wavecrest {

/// Slowly varying dyadic majorant: c_j / c_k <= 2^{delta |j - k|} and
/// c_k >= ||P_k f|| for every block. Built as the minimal admissible
/// envelope c_k = sup_j 2^{-delta |j-k|} ||P_j f||, which satisfies both
/// properties by construction and is idempotent.
struct Envelope {
  double delta = 0.1;
  std::vector<double> values;
};

inline Envelope envelope_from_norms(const std::vector<double>& block_norms,
                                    double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("envelope: delta must lie in (0,1)");
  Envelope env;
  env.delta = delta;
  env.values.assign(block_norms.size(), 0.0);
  for (size_t k = 0; k < block_norms.size(); ++k) {
    double best = 0.0;
    for (size_t j = 0; j < block_norms.size(); ++j) {
      double decay = std::pow(
          2.0, -delta * std::abs(static_cast<double>(j) -
                                 static_cast<double>(k)));
      best = std::max(best, decay * block_norms[j]);
    }
    env.values[k] = best;
  }
  return env;
}

/// Minimal envelope over the L^2 norms of the dyadic blocks of f.
inline Envelope frequency_envelope(const SpectralField& f,
                                   double delta = 0.1) {
  return envelope_from_norms(lp_block_l2(f), delta);
}

}  // namespace wavecrest
