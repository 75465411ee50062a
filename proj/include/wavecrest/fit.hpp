#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wavecrest {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
inline LineFit ols_fit(const std::vector<double>& x,
                       const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ols_fit: need >= 2 matching points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("ols_fit: degenerate x");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double rss = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - fit.slope * x[i] - fit.intercept;
    rss += e * e;
  }
  fit.residual_rms = std::sqrt(rss / n);
  return fit;
}

/// Log-log slope of y against x (both must be positive).
inline LineFit loglog_fit(const std::vector<double>& x,
                          const std::vector<double>& y) {
  std::vector<double> lx(x.size()), ly(y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw std::invalid_argument("loglog_fit: nonpositive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  return ols_fit(lx, ly);
}

}  // namespace wavecrest
