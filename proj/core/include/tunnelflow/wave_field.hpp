#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "tunnelflow/aligned.hpp"
#include "tunnelflow/grid.hpp"

namespace tflow {

/// One- or two-channel complex amplitude array on a Grid.
class WaveField {
 public:
  WaveField(Grid grid, int channels) : grid_(std::move(grid)) {
    if (channels != 1 && channels != 2)
      throw std::invalid_argument("WaveField: channels must be 1 or 2");
    amps_.resize(channels);
    for (auto& a : amps_) a.assign(grid_.n(), {0.0, 0.0});
  }

  const Grid& grid() const { return grid_; }
  int channels() const { return static_cast<int>(amps_.size()); }

  std::span<std::complex<double>> channel(int c) { return {amps_.at(c).data(), amps_.at(c).size()}; }
  std::span<const std::complex<double>> channel(int c) const {
    return {amps_.at(c).data(), amps_.at(c).size()};
  }

  cvector& raw(int c) { return amps_.at(c); }

  /// Integral of the summed channel densities, dx * sum |psi|^2.
  double total_norm() const {
    double s = 0.0;
    for (const auto& a : amps_)
      for (const auto& z : a) s += std::norm(z);
    return s * grid_.dx();
  }

 private:
  Grid grid_;
  std::vector<cvector> amps_;
};

}  // namespace tflow
