#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tunnelflow/fft.hpp"
#include "tunnelflow/scenario.hpp"
#include "tunnelflow/wave_field.hpp"

namespace tflow {

enum class DerivativeMode { Spectral, FiniteDifference };

struct ProbeSample {
  double rho = 0.0;
  double v = 0.0;      // km/s; NaN when masked
  double q = 0.0;      // meV;  NaN when masked
  double v_eff = 0.0;  // meV;  NaN when masked
};

struct ChannelFields {
  std::vector<double> rho;    // |psi|^2
  std::vector<double> j;      // (hbar/m) Im(psi* dpsi/dx)
  std::vector<double> v;      // j / rho on the unmasked set, NaN elsewhere
  std::vector<double> q;      // quantum potential, meV
  std::vector<double> v_eff;  // q + real channel potential, meV
  std::vector<std::uint8_t> defined;  // velocity/q mask
};

struct ObservableFrame {
  double t_ns = 0.0;
  std::vector<ChannelFields> channels;
  std::vector<std::vector<ProbeSample>> probes;  // [channel][probe]
};

/// Dwell-time estimate tau = N / j_in; flagged divergent when the entrance
/// current sits below the noise floor.
struct DwellEstimate {
  double n_probability = 0.0;  // integrated density over the barrier region
  double j_in = 0.0;           // entrance-plane total current
  double tau_ns = 0.0;
  bool divergent = false;
};

/// Computes density, current, Bohmian velocity, quantum potential and the
/// effective potential from a wave field. Owns the FFT workspace, so reuse
/// one engine per grid.
class ObservableEngine {
 public:
  static constexpr double kMaskEps = 1.0e-8;

  ObservableEngine(const Grid& grid, const PhysicalConstants& c,
                   DerivativeMode mode = DerivativeMode::Spectral, double mask_eps = kMaskEps);

  std::vector<double> density(const WaveField& f, int ch) const;
  std::vector<double> current(const WaveField& f, int ch) const;
  /// j / rho where rho >= mask_eps * max(rho) over the frame, NaN elsewhere.
  std::vector<double> bohmian_velocity(const WaveField& f, int ch) const;
  std::vector<double> quantum_potential(const WaveField& f, int ch) const;
  std::vector<double> effective_potential(const WaveField& f, int ch, const PotentialSpec& spec) const;

  /// Full frame: all fields plus cubic-interpolated probe samples.
  void compute_frame(const WaveField& f, double t_ns, const PotentialSpec* spec,
                     std::span<const double> probes_um, ObservableFrame& out) const;

  const Grid& grid() const { return grid_; }
  double mask_eps() const { return mask_eps_; }
  DerivativeMode mode() const { return mode_; }

 private:
  double frame_max_density(const WaveField& f) const;
  void derivative(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) const;
  void derivative_real(std::span<const double> in, std::span<double> d1, std::span<double> d2) const;

  Grid grid_;
  PhysicalConstants constants_;
  DerivativeMode mode_;
  double mask_eps_;
  mutable Fft1d fft_;
  mutable cvector work_, work2_;
};

/// rho2 / (rho1 + rho2), NaN where the summed density is below the mask.
std::vector<double> relative_density(std::span<const double> rho1, std::span<const double> rho2,
                                     double mask_eps = ObservableEngine::kMaskEps);

/// N, j_in and tau over [x_lo, x_hi]; rho/j are the channel-summed arrays.
/// The floor scale multiplies max(rho) * v0 to give the smallest trustworthy current.
DwellEstimate dwell_estimate(const Grid& grid, std::span<const double> rho_total,
                             std::span<const double> j_total, double x_lo, double x_hi,
                             double v0_um_ns, double j_floor_scale = 1.0e-12);

}  // namespace tflow
