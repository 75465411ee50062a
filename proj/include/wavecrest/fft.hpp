#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wavecrest::detail {

// Thin synchronized wrapper around FFTW. Plans are cached per size and are
// created once under a lock; fftw_execute_dft on caller-owned arrays is
// thread-safe. All plans use FFTW_ESTIMATE so planning is deterministic.
class FftEngine {
 public:
  static void forward(std::vector<std::complex<double>>& data) {
    execute(data, FFTW_FORWARD);
  }

  static void backward(std::vector<std::complex<double>>& data) {
    execute(data, FFTW_BACKWARD);
  }

 private:
  struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
  };

  static void execute(std::vector<std::complex<double>>& data, int sign) {
    const PlanPair& p = plans(static_cast<int>(data.size()));
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(sign == FFTW_FORWARD ? p.fwd : p.bwd, buf, buf);
  }

  static const PlanPair& plans(int n) {
    static std::mutex mu;
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    PlanPair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, flags);
    if (!p.fwd || !p.bwd) throw std::runtime_error("fftw plan creation failed");
    return cache.emplace(n, p).first->second;
  }
};

}  // namespace wavecrest::detail
