#include "fft_backend.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

namespace cif::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

  PlanPair get(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(n); it != plans_.end()) return it->second;
    // FFTW_ESTIMATE keeps planning deterministic; UNALIGNED lets the plans
    // run on arbitrary std::vector storage via the new-array interface.
    const int ni = static_cast<int>(n);
    auto* a = fftw_alloc_complex(n * n);
    auto* b = fftw_alloc_complex(n * n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.forward = fftw_plan_dft_2d(ni, ni, a, b, FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft_2d(ni, ni, a, b, FFTW_BACKWARD, flags);
    fftw_free(a);
    fftw_free(b);
    plans_.emplace(n, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void fft2_forward(const Grid& grid, const double* in, std::complex<double>* out) {
  const std::size_t size = grid.size();
  std::vector<std::complex<double>> buf(in, in + size);
  fftw_execute_dft(cache().get(grid.n()).forward, as_fftw(buf.data()), as_fftw(out));
  const double scale = 1.0 / static_cast<double>(size);
  for (std::size_t i = 0; i < size; ++i) out[i] *= scale;
}

void fft2_inverse(const Grid& grid, const std::complex<double>* in, double* out) {
  const std::size_t size = grid.size();
  std::vector<std::complex<double>> src(in, in + size);
  std::vector<std::complex<double>> dst(size);
  fftw_execute_dft(cache().get(grid.n()).backward, as_fftw(src.data()), as_fftw(dst.data()));
  for (std::size_t i = 0; i < size; ++i) out[i] = dst[i].real();
}

}  // namespace cif::detail
