#include "tunnelflow/propagator.hpp"

#include <cmath>
#include <cstdio>

#include "tunnelflow/envelope.hpp"

namespace tflow {

KineticPhase KineticPhase::build(const Grid& grid, double dt_ns, const PhysicalConstants& c) {
  KineticPhase kp;
  kp.dt_ = dt_ns;
  kp.half_.resize(grid.n());
  kp.full_.resize(grid.n());
  const double coeff = c.hbar * dt_ns / (4.0 * c.mass);
  const auto& ks = grid.wavenumbers();
  for (int j = 0; j < grid.n(); ++j) {
    const double theta = coeff * ks[j] * ks[j];
    kp.half_[j] = std::polar(1.0, -theta);
    kp.full_[j] = std::polar(1.0, -2.0 * theta);
  }
  return kp;
}

PotentialMatrix potential_matrix(double x_um, const PotentialSpec& spec, const PhysicalConstants& c) {
  PotentialMatrix m;
  const double hc = spec.two_channel() ? spec.coupling_energy_at(x_um) : 0.0;
  const double damp = 0.5 * c.hbar * spec.gamma_at(x_um) + spec.cap_w(x_um);
  m.off = hc;
  m.d1 = {spec.v1(x_um) - hc, -damp};
  m.d2 = {spec.v2(x_um) - hc, -damp};
  return m;
}

PotentialStepTable PotentialStepTable::build(const Grid& grid, const PotentialSpec& spec,
                                             const PhysicalConstants& c, double dt_ns) {
  PotentialStepTable t;
  t.channels_ = spec.two_channel() ? 2 : 1;
  t.dt_ = dt_ns;
  const double tau = dt_ns / c.hbar;  // 1/meV
  const int n = grid.n();

  if (t.channels_ == 1) {
    t.scalar_.resize(n);
    for (int i = 0; i < n; ++i) {
      const PotentialMatrix m = potential_matrix(grid.x(i), spec, c);
      const double decay = std::exp(m.d1.imag() * tau);
      t.scalar_[i] = decay * std::polar(1.0, -m.d1.real() * tau);
    }
    return t;
  }

  t.m11_.resize(n);
  t.m12_.resize(n);
  t.m22_.resize(n);
  for (int i = 0; i < n; ++i) {
    const PotentialMatrix m = potential_matrix(grid.x(i), spec, c);
    // Both diagonals share the anti-Hermitian shift, so it factors out as a
    // scalar decay and the remaining 2x2 is real symmetric.
    const double decay = std::exp(m.d1.imag() * tau);
    const double mu = 0.5 * (m.d1.real() + m.d2.real());
    const double delta = 0.5 * (m.d1.real() - m.d2.real());
    const double r = std::hypot(delta, m.off);
    const double theta = r * tau;
    const double sinc = (r > 0.0) ? std::sin(theta) / r : tau;
    const std::complex<double> phase = decay * std::polar(1.0, -mu * tau);
    const double ct = std::cos(theta);
    t.m11_[i] = phase * std::complex<double>(ct, -delta * sinc);
    t.m22_[i] = phase * std::complex<double>(ct, delta * sinc);
    t.m12_[i] = phase * std::complex<double>(0.0, -m.off * sinc);
  }
  return t;
}

void PotentialStepTable::apply(WaveField& field) const {
  if (field.channels() != channels_)
    throw std::invalid_argument("PotentialStepTable: channel count mismatch");
  const int n = field.grid().n();
  if (channels_ == 1) {
    auto a = field.channel(0);
    for (int i = 0; i < n; ++i) a[i] *= scalar_[i];
    return;
  }
  auto a1 = field.channel(0);
  auto a2 = field.channel(1);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> u = a1[i];
    const std::complex<double> w = a2[i];
    a1[i] = m11_[i] * u + m12_[i] * w;
    a2[i] = m12_[i] * u + m22_[i] * w;
  }
}

Propagator::Propagator(const ScenarioConfig& config)
    : config_(config),
      fft_(config.grid.n()),
      kinetic_(KineticPhase::build(config.grid, config.dt_ns, config.constants)),
      table_(PotentialStepTable::build(config.grid, config.potential, config.constants, config.dt_ns)) {}

void Propagator::apply_phase(WaveField& field, std::span<const std::complex<double>> phase) {
  for (int ch = 0; ch < field.channels(); ++ch) {
    auto a = field.channel(ch);
    fft_.forward(a.data());
    for (size_t i = 0; i < a.size(); ++i) a[i] *= phase[i];
    fft_.inverse(a.data());
  }
}

void Propagator::step(WaveField& field) {
  apply_phase(field, kinetic_.half());
  table_.apply(field);
  apply_phase(field, kinetic_.half());
}

void Propagator::kinetic_block(WaveField& field, int steps) {
  // Adjacent half steps between potential kicks merge into full steps;
  // the composed operator is identical to `steps` Strang steps.
  apply_phase(field, kinetic_.half());
  table_.apply(field);
  for (int s = 1; s < steps; ++s) {
    apply_phase(field, kinetic_.full());
    table_.apply(field);
  }
  apply_phase(field, kinetic_.half());
}

void Propagator::check_finite(const WaveField& field, std::int64_t step, double t_ns) const {
  if (!std::isfinite(field.total_norm()))
    throw PropagationError(step, t_ns,
                           [&] {
                             char buf[128];
                             std::snprintf(buf, sizeof(buf),
                                           "non-finite amplitudes at step %lld (t = %g ns)",
                                           static_cast<long long>(step), t_ns);
                             return std::string(buf);
                           }());
}

WaveField Propagator::evolve(const FrameCallback& on_frame) {
  WaveField field = make_initial_field(config_);
  const std::int64_t total = config_.step_count();
  const int stride = config_.frame_stride;

  if (on_frame) on_frame(field, 0.0, 0);
  std::int64_t step = 0;
  while (step < total) {
    const int m = static_cast<int>(std::min<std::int64_t>(stride, total - step));
    kinetic_block(field, m);
    step += m;
    const double t = static_cast<double>(step) * config_.dt_ns;
    check_finite(field, step, t);
    if (on_frame) on_frame(field, t, step);
  }
  return field;
}

WaveField evolve(const ScenarioConfig& config, const Propagator::FrameCallback& on_frame) {
  Propagator prop(config);
  return prop.evolve(on_frame);
}

}  // namespace tflow
