#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "wavecrest/config.hpp"
#include "wavecrest/version.hpp"

namespace wavecrest {

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Provenance header carried by every output file (config hash, grid,
/// version). No timestamps: identical (seed, config) must give identical
/// bytes.
inline std::string provenance_comment(const ExperimentSpec& spec) {
  return "# wavecrest " + std::string(version_string) +
         " config_hash=" + config_hash(spec) +
         " grid=" + std::to_string(spec.sim.n_modes) + "x" +
         format_double(spec.sim.period) +
         " seed=" + std::to_string(spec.sim.seed);
}

inline std::string provenance_json(const ExperimentSpec& spec) {
  return std::string("{\"provenance\":{\"version\":\"") + version_string +
         "\",\"config_hash\":\"" + config_hash(spec) +
         "\",\"n_modes\":" + std::to_string(spec.sim.n_modes) +
         ",\"period\":" + format_double(spec.sim.period) +
         ",\"seed\":" + std::to_string(spec.sim.seed) + "}}";
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const ExperimentSpec& spec,
            const std::vector<std::string>& columns) {
    out_.open(path);
    if (!out_) throw std::runtime_error("cannot open " + path);
    out_ << provenance_comment(spec) << "\n";
    for (size_t i = 0; i < columns.size(); ++i)
      out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
  }

  void row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i)
      out_ << (i ? "," : "") << cells[i];
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

/// JSON-lines diagnostics stream with the pinned key set.
class DiagnosticsWriter {
 public:
  DiagnosticsWriter(const std::string& path, const ExperimentSpec& spec) {
    out_.open(path);
    if (!out_) throw std::runtime_error("cannot open " + path);
    out_ << provenance_json(spec) << "\n";
  }

  void write(const DiagnosticsRecord& r) {
    auto f = format_double;
    out_ << "{\"t\":" << f(r.t) << ",\"E\":" << f(r.E) << ",\"E0\":" << f(r.E0)
         << ",\"E2lin\":" << f(r.E2lin) << ",\"E3lin\":" << f(r.E3lin)
         << ",\"normA\":" << f(r.normA) << ",\"normB\":" << f(r.normB)
         << ",\"minJ\":" << f(r.minJ) << ",\"min1plusA\":" << f(r.min1plusA)
         << ",\"meanW_re\":" << f(r.meanW_re) << ",\"meanQ_im\":"
         << f(r.meanQ_im) << ",\"sup_Wa\":" << f(r.sup_Wa)
         << ",\"sup_R\":" << f(r.sup_R) << "}\n";
  }

 private:
  std::ofstream out_;
};

inline std::string snapshot_path(const std::string& dir, double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "t_%.6f.bin", t);
  return dir + "/" + buf;
}

}  // namespace wavecrest
