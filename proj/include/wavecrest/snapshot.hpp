#pragma once

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "json.hpp"
#include "wavecrest/state.hpp"

namespace wavecrest {

inline constexpr int snapshot_format_version = 1;

namespace detail {

inline void require_little_endian() {
  const std::uint32_t probe = 1;
  unsigned char byte0;
  std::memcpy(&byte0, &probe, 1);
  if (byte0 != 1)
    throw std::runtime_error("snapshot IO requires a little-endian host");
}

inline void write_field_bits(std::ofstream& out, const SpectralField& f) {
  for (const auto& c : f.coeffs()) {
    double re = c.real(), im = c.imag();
    out.write(reinterpret_cast<const char*>(&re), sizeof(double));
    out.write(reinterpret_cast<const char*>(&im), sizeof(double));
  }
}

inline SpectralField read_field_bits(std::ifstream& in, const Grid& grid) {
  SpectralField f(grid);
  for (auto& c : f.coeffs()) {
    double re = 0.0, im = 0.0;
    in.read(reinterpret_cast<char*>(&re), sizeof(double));
    in.read(reinterpret_cast<char*>(&im), sizeof(double));
    c = Complex(re, im);
  }
  if (!in) throw std::runtime_error("snapshot: truncated payload");
  return f;
}

}  // namespace detail

/// Snapshot file: one JSON header line (keys: format_version, n_modes,
/// period, t), then the complex coefficients of W and Q as little-endian
/// IEEE-754 doubles, re/im interleaved, modes ascending from -n/2.
inline void write_snapshot(const std::string& path, const WaveState& s) {
  detail::require_little_endian();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("snapshot: cannot open " + path);
  char header[256];
  std::snprintf(header, sizeof(header),
                "{\"format_version\":%d,\"n_modes\":%d,\"period\":%.17g,"
                "\"t\":%.17g}\n",
                snapshot_format_version, s.grid().n_modes(),
                s.grid().period(), s.t);
  out << header;
  detail::write_field_bits(out, s.W.field());
  detail::write_field_bits(out, s.Q.field());
  if (!out) throw std::runtime_error("snapshot: write failed for " + path);
}

inline WaveState read_snapshot(const std::string& path) {
  detail::require_little_endian();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("snapshot: cannot open " + path);
  std::string header;
  std::getline(in, header);
  auto j = nlohmann::json::parse(header);
  if (j.at("format_version").get<int>() != snapshot_format_version)
    throw std::runtime_error("snapshot: unsupported format_version");
  Grid grid(j.at("n_modes").get<int>(), j.at("period").get<double>());
  double t = j.at("t").get<double>();
  SpectralField W = detail::read_field_bits(in, grid);
  SpectralField Q = detail::read_field_bits(in, grid);
  return WaveState::make(W, Q, t, 1e-9);
}

}  // namespace wavecrest
