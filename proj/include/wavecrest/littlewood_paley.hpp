#pragma once

#include <array>
#include <cmath>
#include <tuple>
#include <vector>

#include "wavecrest/spectral_ops.hpp"

namespace wavecrest {

// ---------------------------------------------------------------------------
// Littlewood-Paley blocks with sharp dyadic cutoffs on the integer mode
// index: block 0 holds |m| <= 1, block j holds 2^{j-1} < |m| <= 2^j.
// Sharp indicators make the tiling exact, so sums of blocks reconstruct the
// field coefficientwise.
// ---------------------------------------------------------------------------

/// Dyadic block index of integer mode m.
inline int lp_block_of(int m) {
  int a = std::abs(m);
  if (a <= 1) return 0;
  int j = 0;
  int top = 1;
  while (top < a) {
    top *= 2;
    ++j;
  }
  return j;
}

/// Largest block index present on the grid (block of mode n/2).
inline int lp_max_block(const Grid& grid) {
  return lp_block_of(grid.n_modes() / 2);
}

inline SpectralField lp_block(const SpectralField& f, int j) {
  SpectralField out(f.grid());
  for (int i = 0; i < f.n(); ++i) {
    if (lp_block_of(f.mode_of(i)) == j) out.coeffs()[i] = f.coeffs()[i];
  }
  return out;
}

/// Modes in blocks strictly below j (the paraproduct low part f_{<j}).
inline SpectralField lp_below(const SpectralField& f, int j) {
  SpectralField out(f.grid());
  for (int i = 0; i < f.n(); ++i) {
    if (lp_block_of(f.mode_of(i)) < j) out.coeffs()[i] = f.coeffs()[i];
  }
  return out;
}

inline std::vector<SpectralField> lp_decompose(const SpectralField& f) {
  std::vector<SpectralField> blocks;
  const int kmax = lp_max_block(f.grid());
  blocks.reserve(kmax + 1);
  for (int j = 0; j <= kmax; ++j) blocks.push_back(lp_block(f, j));
  return blocks;
}

/// period-weighted L2 norm of each dyadic block.
inline std::vector<double> lp_block_l2(const SpectralField& f) {
  const int kmax = lp_max_block(f.grid());
  std::vector<double> out(kmax + 1, 0.0);
  for (int i = 0; i < f.n(); ++i) {
    out[lp_block_of(f.mode_of(i))] += std::norm(f.coeffs()[i]);
  }
  for (auto& v : out) v = std::sqrt(f.grid().period() * v);
  return out;
}

// ---------------------------------------------------------------------------
// Paraproducts with 4-band frequency separation:
//   fg = T_f g + T_g f + Pi(f, g),
//   T_f g = sum_k f_{<k-4} g_k,  Pi(f,g) = sum_{|k-l| <= 4} f_k g_l.
// The three pieces partition the frequency pairs exactly, so the
// reconstruction identity holds coefficientwise on the dealias band.
// ---------------------------------------------------------------------------

struct Paraproducts {
  SpectralField low_high;   // T_f g
  SpectralField high_low;   // T_g f
  SpectralField resonant;   // Pi(f, g)
};

inline Paraproducts paraproducts(const SpectralField& f,
                                 const SpectralField& g) {
  const int kmax = lp_max_block(f.grid());
  Paraproducts out{SpectralField(f.grid()), SpectralField(f.grid()),
                   SpectralField(f.grid())};
  auto f_blocks = lp_decompose(f);
  auto g_blocks = lp_decompose(g);
  for (int k = 0; k <= kmax; ++k) {
    if (k - 4 > 0) {
      out.low_high += product(lp_below(f, k - 4), g_blocks[k]);
      out.high_low += product(lp_below(g, k - 4), f_blocks[k]);
    }
    for (int l = std::max(0, k - 4); l <= std::min(kmax, k + 4); ++l) {
      out.resonant += product(f_blocks[k], g_blocks[l]);
    }
  }
  return out;
}

/// [P, g] f = P(gf) - g P(f), with dealiased products.
inline SpectralField commutator_P(const SpectralField& g,
                                  const SpectralField& f) {
  return project_P(product(g, f)) - product(g, project_P(f));
}

}  // namespace wavecrest
