#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "tunnelflow/fft.hpp"
#include "tunnelflow/scenario.hpp"
#include "tunnelflow/wave_field.hpp"

namespace tflow {

struct PropagationError : std::runtime_error {
  PropagationError(std::int64_t step, double t_ns, const std::string& what)
      : std::runtime_error(what), step(step), t_ns(t_ns) {}
  std::int64_t step;
  double t_ns;
};

/// Spectral multipliers exp(-i hbar k^2 dt / 4m) (half step) and the full-step square.
class KineticPhase {
 public:
  static KineticPhase build(const Grid& grid, double dt_ns, const PhysicalConstants& c);
  std::span<const std::complex<double>> half() const { return {half_.data(), half_.size()}; }
  std::span<const std::complex<double>> full() const { return {full_.data(), full_.size()}; }
  double dt() const { return dt_; }

 private:
  cvector half_, full_;
  double dt_ = 0.0;
};

/// Channel-space entries of the potential Hamiltonian at one point, meV.
/// Diagonals carry V_c - hbar*C - i(hbar*Gamma/2 + W); the off-diagonal is hbar*C.
struct PotentialMatrix {
  std::complex<double> d1{0.0, 0.0};
  std::complex<double> d2{0.0, 0.0};
  double off = 0.0;
};

PotentialMatrix potential_matrix(double x_um, const PotentialSpec& spec, const PhysicalConstants& c);

/// Pointwise-exact exponential exp(-i H_pot dt / hbar), tabulated per grid point.
class PotentialStepTable {
 public:
  static PotentialStepTable build(const Grid& grid, const PotentialSpec& spec,
                                  const PhysicalConstants& c, double dt_ns);

  int channels() const { return channels_; }
  double dt() const { return dt_; }
  void apply(WaveField& field) const;

  // Step-operator entries at one point (m21 == m12).
  struct Entry {
    std::complex<double> m11, m12, m22;
  };
  Entry entry(int i) const {
    if (channels_ == 1) return {scalar_[i], {0.0, 0.0}, {0.0, 0.0}};
    return {m11_[i], m12_[i], m22_[i]};
  }

 private:
  int channels_ = 1;
  double dt_ = 0.0;
  cvector scalar_;            // one channel
  cvector m11_, m12_, m22_;   // two channels
};

/// Second-order Strang stepper for one scenario: half kinetic, full potential, half kinetic.
class Propagator {
 public:
  explicit Propagator(const ScenarioConfig& config);

  /// One full Strang step; local error O(dt^3).
  void step(WaveField& field);

  const KineticPhase& kinetic() const { return kinetic_; }
  const PotentialStepTable& potential_table() const { return table_; }

  /// Runs the configured span from the freshly built initial field.
  /// The observer fires at t = 0 and after every frame_stride steps.
  using FrameCallback = std::function<void(const WaveField&, double t_ns, std::int64_t step)>;
  WaveField evolve(const FrameCallback& on_frame = {});

 private:
  void apply_phase(WaveField& field, std::span<const std::complex<double>> phase);
  void kinetic_block(WaveField& field, int steps);  // merged half steps inside a block
  void check_finite(const WaveField& field, std::int64_t step, double t_ns) const;

  ScenarioConfig config_;
  Fft1d fft_;
  KineticPhase kinetic_;
  PotentialStepTable table_;
};

/// Convenience wrapper: validates nothing, just builds a Propagator and runs it.
WaveField evolve(const ScenarioConfig& config, const Propagator::FrameCallback& on_frame = {});

}  // namespace tflow
