#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wavecrest/dynamics.hpp"

namespace wavecrest {

/// Initial-data descriptor. `traveling` pairs each W mode with the Q mode of
/// the right-moving linear eigenfunction (Q_k = -W_k / sqrt|kappa_k|).
struct DataSpec {
  enum class Kind { single_mode, multi_mode, localized, from_graph };

  struct Mode {
    int k = -1;
    double amp = 0.0;
    double phase = 0.0;
  };

  Kind kind = Kind::single_mode;
  int k = -1;
  double eps = 0.05;
  std::vector<Mode> modes;           // multi_mode
  double width = 1.0;                // localized
  double center = -1.0;              // localized; < 0 means period/2
  bool traveling = true;
  double eta_amp = 0.01;             // from_graph
  int eta_k = 1;
  double psi_amp = 0.0;
  int psi_k = 1;
};

struct ExperimentSpec {
  enum class Kind { simulate, verify, nf_scan, lifespan, decay, envelope };

  Kind kind = Kind::simulate;
  SimConfig sim;
  DataSpec data;
  std::string output_dir = "out";

  int verify_count = 100;
  double verify_amp = 1e-4;
  double tolerance = 1e-10;

  std::vector<double> eps_list;      // nf-scan / lifespan
  double lifespan_t_max_factor = 50.0;  // t_max = factor / eps^2
  double fit_t0 = 5.0;               // decay fit window
  double fit_t1 = 50.0;
  double envelope_delta = 0.1;

  std::vector<double> eps_list_or_default() const {
    if (!eps_list.empty()) return eps_list;
    if (kind == Kind::lifespan) return {0.2, 0.1, 0.05};
    return {0.1, 0.05, 0.025, 0.0125};
  }
};

// ---------------------------------------------------------------------------
// Flat key = value config files. '#' starts a comment. Keys mirror the
// field names above; unknown keys are errors.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (...) {
    throw ConfigError("config: bad numeric value for " + key + ": " + v);
  }
}

inline long parse_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (...) {
    throw ConfigError("config: bad integer value for " + key + ": " + v);
  }
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean value for " + key + ": " + v);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace detail

inline void apply_config_entry(ExperimentSpec& spec, const std::string& key,
                               const std::string& value) {
  using detail::parse_bool;
  using detail::parse_double;
  using detail::parse_long;
  if (key == "kind") {
    static const std::map<std::string, ExperimentSpec::Kind> kinds{
        {"simulate", ExperimentSpec::Kind::simulate},
        {"verify", ExperimentSpec::Kind::verify},
        {"nf-scan", ExperimentSpec::Kind::nf_scan},
        {"nf_scan", ExperimentSpec::Kind::nf_scan},
        {"lifespan", ExperimentSpec::Kind::lifespan},
        {"decay", ExperimentSpec::Kind::decay},
        {"envelope", ExperimentSpec::Kind::envelope}};
    auto it = kinds.find(value);
    if (it == kinds.end()) throw ConfigError("config: unknown kind " + value);
    spec.kind = it->second;
  } else if (key == "n_modes") {
    spec.sim.n_modes = static_cast<int>(parse_long(key, value));
  } else if (key == "period") {
    spec.sim.period = parse_double(key, value);
  } else if (key == "dt") {
    spec.sim.dt = parse_double(key, value);
  } else if (key == "t_end") {
    spec.sim.t_end = parse_double(key, value);
  } else if (key == "c_min") {
    spec.sim.c_min = parse_double(key, value);
  } else if (key == "integrator") {
    if (value != "rk4") throw ConfigError("config: unknown integrator " + value);
    spec.sim.integrator = Integrator::rk4;
  } else if (key == "dealias") {
    spec.sim.dealias = parse_bool(key, value);
  } else if (key == "zero_mode_policy") {
    if (value == "appendix_a")
      spec.sim.zero_mode_policy = ZeroModePolicy::appendix_a;
    else if (value == "projector_p")
      spec.sim.zero_mode_policy = ZeroModePolicy::projector_p;
    else
      throw ConfigError("config: unknown zero_mode_policy " + value);
  } else if (key == "output_every") {
    spec.sim.output_every = static_cast<int>(parse_long(key, value));
    if (spec.sim.output_every <= 0)
      throw ConfigError("config: output_every must be positive");
  } else if (key == "seed") {
    spec.sim.seed = parse_long(key, value);
  } else if (key == "data") {
    if (value == "single_mode")
      spec.data.kind = DataSpec::Kind::single_mode;
    else if (value == "multi_mode")
      spec.data.kind = DataSpec::Kind::multi_mode;
    else if (value == "localized")
      spec.data.kind = DataSpec::Kind::localized;
    else if (value == "from_graph")
      spec.data.kind = DataSpec::Kind::from_graph;
    else
      throw ConfigError("config: unknown data descriptor " + value);
  } else if (key == "data_k") {
    spec.data.k = static_cast<int>(parse_long(key, value));
  } else if (key == "data_eps") {
    spec.data.eps = parse_double(key, value);
  } else if (key == "data_modes") {
    spec.data.modes.clear();
    for (const auto& part : detail::split(value, ',')) {
      auto bits = detail::split(part, ':');
      if (bits.size() != 3)
        throw ConfigError("config: data_modes entries are k:amp:phase");
      DataSpec::Mode m;
      m.k = static_cast<int>(parse_long(key, bits[0]));
      m.amp = parse_double(key, bits[1]);
      m.phase = parse_double(key, bits[2]);
      spec.data.modes.push_back(m);
    }
  } else if (key == "data_width") {
    spec.data.width = parse_double(key, value);
  } else if (key == "data_center") {
    spec.data.center = parse_double(key, value);
  } else if (key == "data_traveling") {
    spec.data.traveling = parse_bool(key, value);
  } else if (key == "data_eta_amp") {
    spec.data.eta_amp = parse_double(key, value);
  } else if (key == "data_eta_k") {
    spec.data.eta_k = static_cast<int>(parse_long(key, value));
  } else if (key == "data_psi_amp") {
    spec.data.psi_amp = parse_double(key, value);
  } else if (key == "data_psi_k") {
    spec.data.psi_k = static_cast<int>(parse_long(key, value));
  } else if (key == "output_dir") {
    spec.output_dir = value;
  } else if (key == "verify_count") {
    spec.verify_count = static_cast<int>(parse_long(key, value));
  } else if (key == "verify_amp") {
    spec.verify_amp = parse_double(key, value);
  } else if (key == "tolerance") {
    spec.tolerance = parse_double(key, value);
  } else if (key == "eps_list") {
    spec.eps_list.clear();
    for (const auto& part : detail::split(value, ','))
      spec.eps_list.push_back(parse_double(key, part));
  } else if (key == "lifespan_t_max_factor") {
    spec.lifespan_t_max_factor = parse_double(key, value);
  } else if (key == "fit_t0") {
    spec.fit_t0 = parse_double(key, value);
  } else if (key == "fit_t1") {
    spec.fit_t1 = parse_double(key, value);
  } else if (key == "envelope_delta") {
    spec.envelope_delta = parse_double(key, value);
  } else {
    throw ConfigError("config: unknown key " + key);
  }
}

inline void apply_config_line(ExperimentSpec& spec, const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  body = detail::trim(body);
  if (body.empty()) return;
  size_t eq = body.find('=');
  if (eq == std::string::npos)
    throw ConfigError("config: expected key = value, got: " + line);
  apply_config_entry(spec, detail::trim(body.substr(0, eq)),
                     detail::trim(body.substr(eq + 1)));
}

inline ExperimentSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: missing config file " + path);
  ExperimentSpec spec;
  std::string line;
  while (std::getline(in, line)) apply_config_line(spec, line);
  return spec;
}

/// Canonical dump of every resolved setting; hashing this gives the
/// provenance config hash.
inline std::string dump_config(const ExperimentSpec& spec) {
  std::ostringstream out;
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  static const char* kind_names[] = {"simulate", "verify",  "nf-scan",
                                     "lifespan", "decay",   "envelope"};
  static const char* data_names[] = {"single_mode", "multi_mode", "localized",
                                     "from_graph"};
  out << "kind = " << kind_names[static_cast<int>(spec.kind)] << "\n";
  out << "n_modes = " << spec.sim.n_modes << "\n";
  out << "period = " << num(spec.sim.period) << "\n";
  out << "dt = " << num(spec.sim.dt) << "\n";
  out << "t_end = " << num(spec.sim.t_end) << "\n";
  out << "c_min = " << num(spec.sim.c_min) << "\n";
  out << "integrator = rk4\n";
  out << "dealias = " << (spec.sim.dealias ? "true" : "false") << "\n";
  out << "zero_mode_policy = "
      << (spec.sim.zero_mode_policy == ZeroModePolicy::appendix_a
              ? "appendix_a"
              : "projector_p")
      << "\n";
  out << "output_every = " << spec.sim.output_every << "\n";
  out << "seed = " << spec.sim.seed << "\n";
  out << "data = " << data_names[static_cast<int>(spec.data.kind)] << "\n";
  out << "data_k = " << spec.data.k << "\n";
  out << "data_eps = " << num(spec.data.eps) << "\n";
  if (!spec.data.modes.empty()) {
    out << "data_modes = ";
    for (size_t i = 0; i < spec.data.modes.size(); ++i) {
      if (i) out << ", ";
      out << spec.data.modes[i].k << ":" << num(spec.data.modes[i].amp) << ":"
          << num(spec.data.modes[i].phase);
    }
    out << "\n";
  }
  out << "data_width = " << num(spec.data.width) << "\n";
  out << "data_center = " << num(spec.data.center) << "\n";
  out << "data_traveling = " << (spec.data.traveling ? "true" : "false")
      << "\n";
  out << "data_eta_amp = " << num(spec.data.eta_amp) << "\n";
  out << "data_eta_k = " << spec.data.eta_k << "\n";
  out << "data_psi_amp = " << num(spec.data.psi_amp) << "\n";
  out << "data_psi_k = " << spec.data.psi_k << "\n";
  out << "output_dir = " << spec.output_dir << "\n";
  out << "verify_count = " << spec.verify_count << "\n";
  out << "verify_amp = " << num(spec.verify_amp) << "\n";
  out << "tolerance = " << num(spec.tolerance) << "\n";
  if (!spec.eps_list.empty()) {
    out << "eps_list = ";
    for (size_t i = 0; i < spec.eps_list.size(); ++i) {
      if (i) out << ", ";
      out << num(spec.eps_list[i]);
    }
    out << "\n";
  }
  out << "lifespan_t_max_factor = " << num(spec.lifespan_t_max_factor) << "\n";
  out << "fit_t0 = " << num(spec.fit_t0) << "\n";
  out << "fit_t1 = " << num(spec.fit_t1) << "\n";
  out << "envelope_delta = " << num(spec.envelope_delta) << "\n";
  return out.str();
}

/// FNV-1a of the canonical config dump.
inline std::string config_hash(const ExperimentSpec& spec) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump_config(spec)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace wavecrest
