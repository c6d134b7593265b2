#include "tunnelflow/fft.hpp"

#include <fftw3.h>

#include <stdexcept>

namespace tflow {

Fft1d::Fft1d(int n) : n_(n), stencil_(n) {
  if (n < 2) throw std::invalid_argument("Fft1d: need at least two points");
  auto* buf = reinterpret_cast<fftw_complex*>(stencil_.data());
  fwd_ = fftw_plan_dft_1d(n_, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_1d(n_, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!fwd_ || !bwd_) throw std::runtime_error("Fft1d: planning failed");
}

Fft1d::~Fft1d() {
  if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
  if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

Fft1d::Fft1d(Fft1d&& other) noexcept
    : n_(other.n_), fwd_(other.fwd_), bwd_(other.bwd_), stencil_(std::move(other.stencil_)) {
  other.fwd_ = other.bwd_ = nullptr;
}

Fft1d& Fft1d::operator=(Fft1d&& other) noexcept {
  if (this != &other) {
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (bwd_) fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
    n_ = other.n_;
    fwd_ = other.fwd_;
    bwd_ = other.bwd_;
    stencil_ = std::move(other.stencil_);
    other.fwd_ = other.bwd_ = nullptr;
  }
  return *this;
}

void Fft1d::forward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(fwd_), p, p);
}

void Fft1d::inverse(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(bwd_), p, p);
  const double scale = 1.0 / n_;
  for (int i = 0; i < n_; ++i) data[i] *= scale;
}

}  // namespace tflow
