#include "bellpos/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace bellpos::fft {
namespace {

// Plans are cached per size. FFTW_UNALIGNED lets the cached plan execute on
// any caller buffer; plan creation is serialized (execution is thread-safe).
struct PlanCache {
  std::mutex mutex;
  std::map<int, fftw_plan> fwd, bwd;

  fftw_plan get(int n, bool forward) {
    std::lock_guard<std::mutex> lock(mutex);
    auto& table = forward ? fwd : bwd;
    auto it = table.find(n);
    if (it != table.end()) return it->second;
    std::vector<fftw_complex> scratch(n);
    fftw_plan p = fftw_plan_dft_1d(
        n, scratch.data(), scratch.data(),
        forward ? FFTW_FORWARD : FFTW_BACKWARD,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    table.emplace(n, p);
    return p;
  }
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void forward(std::complex<double>* data, int n) {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(cache().get(n, true), raw, raw);
}

void backward(std::complex<double>* data, int n) {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(cache().get(n, false), raw, raw);
}

}  // namespace bellpos::fft
