#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tflow {

/// Uniform 1D spatial lattice with the matching discrete Fourier spectrum.
class Grid {
 public:
  Grid(double x_min_um, double x_max_um, int n) : x_min_(x_min_um), x_max_(x_max_um), n_(n) {
    if (n < 2) throw std::invalid_argument("Grid: need at least two points");
    if (!(x_max_um > x_min_um)) throw std::invalid_argument("Grid: x_max must exceed x_min");
    dx_ = (x_max_ - x_min_) / n_;
    wavenumbers_.resize(n_);
    const double dk = 2.0 * std::numbers::pi / (n_ * dx_);
    for (int j = 0; j < n_; ++j) {
      const int m = (j < n_ / 2 + n_ % 2) ? j : j - n_;
      wavenumbers_[j] = dk * m;
    }
  }

  int n() const { return n_; }
  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  double dx() const { return dx_; }
  double x(int i) const { return x_min_ + i * dx_; }

  /// FFT-ordered wavenumbers in rad/um; max magnitude is pi/dx.
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }

  bool power_of_two() const { return (n_ & (n_ - 1)) == 0; }

  bool contains(double x_um) const { return x_um >= x_min_ && x_um <= x_max_; }

  bool operator==(const Grid& other) const {
    return n_ == other.n_ && x_min_ == other.x_min_ && x_max_ == other.x_max_;
  }

 private:
  double x_min_;
  double x_max_;
  double dx_;
  int n_;
  std::vector<double> wavenumbers_;
};

}  // namespace tflow
