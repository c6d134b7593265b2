#include "tunnelflow/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tunnelflow/interpolate.hpp"

namespace tflow {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ObservableEngine::ObservableEngine(const Grid& grid, const PhysicalConstants& c, DerivativeMode mode,
                                   double mask_eps)
    : grid_(grid), constants_(c), mode_(mode), mask_eps_(mask_eps), fft_(grid.n()) {
  work_.resize(grid.n());
  work2_.resize(grid.n());
}

double ObservableEngine::frame_max_density(const WaveField& f) const {
  double m = 0.0;
  for (int ch = 0; ch < f.channels(); ++ch)
    for (const auto& z : f.channel(ch)) m = std::max(m, std::norm(z));
  return m;
}

void ObservableEngine::derivative(std::span<const std::complex<double>> in,
                                  std::span<std::complex<double>> out) const {
  const int n = grid_.n();
  if (mode_ == DerivativeMode::FiniteDifference) {
    const double h = 0.5 / grid_.dx();
    for (int i = 0; i < n; ++i) {
      const int ip = (i + 1) % n;
      const int im = (i + n - 1) % n;
      out[i] = (in[ip] - in[im]) * h;
    }
    return;
  }
  std::copy(in.begin(), in.end(), work_.begin());
  fft_.forward(work_.data());
  const auto& ks = grid_.wavenumbers();
  for (int j = 0; j < n; ++j) {
    // The Nyquist mode has no well-defined sign for odd derivatives.
    const double k = (j == n / 2) ? 0.0 : ks[j];
    work_[j] *= std::complex<double>(0.0, k);
  }
  fft_.inverse(work_.data());
  std::copy(work_.begin(), work_.end(), out.begin());
}

void ObservableEngine::derivative_real(std::span<const double> in, std::span<double> d1,
                                       std::span<double> d2) const {
  const int n = grid_.n();
  if (mode_ == DerivativeMode::FiniteDifference) {
    const double h = 0.5 / grid_.dx();
    const double h2 = 1.0 / (grid_.dx() * grid_.dx());
    for (int i = 0; i < n; ++i) {
      const int ip = (i + 1) % n;
      const int im = (i + n - 1) % n;
      d1[i] = (in[ip] - in[im]) * h;
      d2[i] = (in[ip] - 2.0 * in[i] + in[im]) * h2;
    }
    return;
  }
  for (int i = 0; i < n; ++i) work_[i] = {in[i], 0.0};
  fft_.forward(work_.data());
  const auto& ks = grid_.wavenumbers();
  for (int j = 0; j < n; ++j) {
    const double k1 = (j == n / 2) ? 0.0 : ks[j];
    work2_[j] = work_[j] * std::complex<double>(0.0, k1);
    work_[j] *= -ks[j] * ks[j];
  }
  fft_.inverse(work2_.data());
  for (int i = 0; i < n; ++i) d1[i] = work2_[i].real();
  fft_.inverse(work_.data());
  for (int i = 0; i < n; ++i) d2[i] = work_[i].real();
}

std::vector<double> ObservableEngine::density(const WaveField& f, int ch) const {
  auto a = f.channel(ch);
  std::vector<double> rho(a.size());
  for (size_t i = 0; i < a.size(); ++i) rho[i] = std::norm(a[i]);
  return rho;
}

std::vector<double> ObservableEngine::current(const WaveField& f, int ch) const {
  auto a = f.channel(ch);
  const int n = grid_.n();
  std::vector<double> j(n);
  cvector dpsi(n);
  derivative(a, {dpsi.data(), dpsi.size()});
  const double scale = constants_.hbar / constants_.mass;
  for (int i = 0; i < n; ++i) j[i] = scale * std::imag(std::conj(a[i]) * dpsi[i]);
  return j;
}

std::vector<double> ObservableEngine::bohmian_velocity(const WaveField& f, int ch) const {
  const std::vector<double> rho = density(f, ch);
  const std::vector<double> j = current(f, ch);
  const double thr = mask_eps_ * frame_max_density(f);
  std::vector<double> v(rho.size());
  for (size_t i = 0; i < rho.size(); ++i)
    v[i] = (rho[i] >= thr && rho[i] > 0.0) ? j[i] / rho[i] : kNaN;
  return v;
}

std::vector<double> ObservableEngine::quantum_potential(const WaveField& f, int ch) const {
  const std::vector<double> rho = density(f, ch);
  const int n = grid_.n();
  std::vector<double> d1(n), d2(n), q(n);
  derivative_real(rho, d1, d2);
  const double thr = mask_eps_ * frame_max_density(f);
  const double coeff = -constants_.hbar * constants_.hbar / (2.0 * constants_.mass);
  for (int i = 0; i < n; ++i) {
    if (!(rho[i] >= thr && rho[i] > 0.0)) {
      q[i] = kNaN;
      continue;
    }
    // d^2 sqrt(rho) / sqrt(rho), written in terms of rho to stay smooth
    // through the deep interference minima.
    const double rr = d2[i] / (2.0 * rho[i]) - d1[i] * d1[i] / (4.0 * rho[i] * rho[i]);
    q[i] = coeff * rr;
  }
  return q;
}

std::vector<double> ObservableEngine::effective_potential(const WaveField& f, int ch,
                                                          const PotentialSpec& spec) const {
  std::vector<double> q = quantum_potential(f, ch);
  for (int i = 0; i < grid_.n(); ++i) {
    const double x = grid_.x(i);
    q[i] += (ch == 0) ? spec.v1(x) : spec.v2(x);
  }
  return q;
}

void ObservableEngine::compute_frame(const WaveField& f, double t_ns, const PotentialSpec* spec,
                                     std::span<const double> probes_um, ObservableFrame& out) const {
  const int n = grid_.n();
  const int nch = f.channels();
  out.t_ns = t_ns;
  out.channels.resize(nch);
  out.probes.assign(nch, std::vector<ProbeSample>(probes_um.size()));

  const double thr = mask_eps_ * frame_max_density(f);
  cvector dpsi(n);
  std::vector<double> d1(n), d2(n);
  const double jscale = constants_.hbar / constants_.mass;
  const double qcoeff = -constants_.hbar * constants_.hbar / (2.0 * constants_.mass);

  for (int ch = 0; ch < nch; ++ch) {
    auto a = f.channel(ch);
    ChannelFields& cf = out.channels[ch];
    cf.rho.resize(n);
    cf.j.resize(n);
    cf.v.resize(n);
    cf.q.resize(n);
    cf.v_eff.resize(n);
    cf.defined.resize(n);

    for (int i = 0; i < n; ++i) cf.rho[i] = std::norm(a[i]);
    derivative(a, {dpsi.data(), dpsi.size()});
    for (int i = 0; i < n; ++i) cf.j[i] = jscale * std::imag(std::conj(a[i]) * dpsi[i]);
    derivative_real(cf.rho, d1, d2);

    for (int i = 0; i < n; ++i) {
      const bool ok = cf.rho[i] >= thr && cf.rho[i] > 0.0;
      cf.defined[i] = ok;
      if (ok) {
        cf.v[i] = cf.j[i] / cf.rho[i];
        const double rr = d2[i] / (2.0 * cf.rho[i]) - d1[i] * d1[i] / (4.0 * cf.rho[i] * cf.rho[i]);
        cf.q[i] = qcoeff * rr;
      } else {
        cf.v[i] = kNaN;
        cf.q[i] = kNaN;
      }
      double vpot = 0.0;
      if (spec) vpot = (ch == 0) ? spec->v1(grid_.x(i)) : spec->v2(grid_.x(i));
      cf.v_eff[i] = cf.q[i] + vpot;
    }

    for (size_t p = 0; p < probes_um.size(); ++p) {
      const double x = probes_um[p];
      ProbeSample& s = out.probes[ch][p];
      s.rho = interpolate_cubic(grid_, cf.rho, x);
      const double jp = interpolate_cubic(grid_, cf.j, x);
      s.v = (s.rho >= thr && s.rho > 0.0) ? jp / s.rho : kNaN;
      s.q = interpolate_cubic(grid_, cf.q, x);
      double vpot = 0.0;
      if (spec) vpot = (ch == 0) ? spec->v1(x) : spec->v2(x);
      s.v_eff = s.q + vpot;
    }
  }
}

std::vector<double> relative_density(std::span<const double> rho1, std::span<const double> rho2,
                                     double mask_eps) {
  std::vector<double> r(rho1.size());
  double m = 0.0;
  for (size_t i = 0; i < rho1.size(); ++i) m = std::max(m, rho1[i] + rho2[i]);
  const double thr = mask_eps * m;
  for (size_t i = 0; i < rho1.size(); ++i) {
    const double total = rho1[i] + rho2[i];
    r[i] = (total >= thr && total > 0.0) ? rho2[i] / total : kNaN;
  }
  return r;
}

DwellEstimate dwell_estimate(const Grid& grid, std::span<const double> rho_total,
                             std::span<const double> j_total, double x_lo, double x_hi,
                             double v0_um_ns, double j_floor_scale) {
  DwellEstimate d;
  double max_rho = 0.0;
  for (double r : rho_total) max_rho = std::max(max_rho, r);
  for (int i = 0; i < grid.n(); ++i) {
    const double x = grid.x(i);
    if (x >= x_lo && x < x_hi) d.n_probability += rho_total[i];
  }
  d.n_probability *= grid.dx();
  d.j_in = interpolate_cubic(grid, j_total, x_lo);
  const double floor = j_floor_scale * max_rho * v0_um_ns;
  if (std::abs(d.j_in) < floor) {
    d.divergent = true;
    d.tau_ns = std::numeric_limits<double>::infinity();
  } else {
    d.tau_ns = d.n_probability / d.j_in;
  }
  return d;
}

}  // namespace tflow
