#pragma once

#include <complex>
#include <memory>

#include "tunnelflow/aligned.hpp"

namespace tflow {

/// In-place complex-to-complex FFT of fixed length, backed by FFTW.
/// Plans are created with FFTW_ESTIMATE so identical builds produce
/// identical plans (and bit-identical outputs run to run).
class Fft1d {
 public:
  explicit Fft1d(int n);
  ~Fft1d();
  Fft1d(Fft1d&&) noexcept;
  Fft1d& operator=(Fft1d&&) noexcept;
  Fft1d(const Fft1d&) = delete;
  Fft1d& operator=(const Fft1d&) = delete;

  int size() const { return n_; }

  /// Unnormalized forward transform. Buffer must be 64-byte aligned (use cvector).
  void forward(std::complex<double>* data) const;
  /// Inverse transform scaled by 1/n.
  void inverse(std::complex<double>* data) const;

 private:
  int n_ = 0;
  void* fwd_ = nullptr;  // fftw_plan
  void* bwd_ = nullptr;
  cvector stencil_;      // planning buffer, sets the alignment contract
};

}  // namespace tflow
