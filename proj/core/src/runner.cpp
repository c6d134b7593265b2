#include "tunnelflow/runner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tunnelflow/propagator.hpp"

namespace tflow {

RunResult run_scenario(const RunRequest& request) {
  const ScenarioConfig& cfg = request.config;
  const auto violations = validate(cfg);
  if (!violations.empty()) {
    std::string msg = "scenario does not validate:";
    for (const auto& v : violations) msg += "\n  " + v.field + ": " + v.message;
    throw std::invalid_argument(msg);
  }

  const int nch = cfg.channels();
  RunResult result;
  result.probes.reserve(cfg.probes_um.size() * nch);
  for (int ch = 0; ch < nch; ++ch)
    for (double x : cfg.probes_um) result.probes.push_back({ch, x});

  const auto& pot = cfg.potential;
  result.dwell.x_lo_um = pot.barrier_start_um;
  result.dwell.x_hi_um = pot.semi_infinite()
                             ? (pot.cap.enabled ? pot.cap.onset_um : cfg.grid.x_max())
                             : pot.barrier_start_um + *pot.barrier_width_um;

  // Snapshot and fit requests snap to the nearest emitted frame.
  struct Capture {
    double want_t;
    double best_dt = std::numeric_limits<double>::infinity();
    bool for_fit = false;
  };
  std::vector<Capture> captures;
  for (double t : request.snapshot_times_ns) captures.push_back({t});
  if (request.fit_time_ns) {
    if (nch != 2) throw std::invalid_argument("relative-density fit needs a two-channel scenario");
    captures.push_back({*request.fit_time_ns, std::numeric_limits<double>::infinity(), true});
    result.fit_time_ns = *request.fit_time_ns;
  }
  result.snapshots.resize(captures.size());

  ObservableEngine engine(cfg.grid, cfg.constants);
  ObservableFrame frame;
  const double v0 = cfg.pulse.group_speed(cfg.constants);
  std::vector<double> rho_total, j_total;

  Propagator prop(cfg);
  bool first = true;
  WaveField final_field = prop.evolve([&](const WaveField& field, double t, std::int64_t) {
    if (first) {
      result.initial_norm = field.total_norm();
      first = false;
    }
    engine.compute_frame(field, t, &pot, cfg.probes_um, frame);
    result.frame_t_ns.push_back(t);

    size_t track = 0;
    for (int ch = 0; ch < nch; ++ch)
      for (size_t p = 0; p < cfg.probes_um.size(); ++p, ++track) {
        const ProbeSample& s = frame.probes[ch][p];
        result.probes[track].rho.push_back(s.rho);
        result.probes[track].v.push_back(s.v);
        result.probes[track].q.push_back(s.q);
        result.probes[track].v_eff.push_back(s.v_eff);
      }

    const int n = cfg.grid.n();
    rho_total.assign(n, 0.0);
    j_total.assign(n, 0.0);
    for (int ch = 0; ch < nch; ++ch)
      for (int i = 0; i < n; ++i) {
        rho_total[i] += frame.channels[ch].rho[i];
        j_total[i] += frame.channels[ch].j[i];
      }
    const DwellEstimate d =
        dwell_estimate(cfg.grid, rho_total, j_total, result.dwell.x_lo_um, result.dwell.x_hi_um, v0);
    result.dwell.n_probability.push_back(d.n_probability);
    result.dwell.j_in.push_back(d.j_in);
    result.dwell.tau_ns.push_back(d.tau_ns);
    result.dwell.divergent.push_back(d.divergent);

    for (size_t c = 0; c < captures.size(); ++c) {
      const double dt = std::abs(t - captures[c].want_t);
      if (dt < captures[c].best_dt) {
        captures[c].best_dt = dt;
        DensitySnapshot& snap = result.snapshots[c];
        snap.t_ns = t;
        snap.rho.resize(nch);
        for (int ch = 0; ch < nch; ++ch) snap.rho[ch] = frame.channels[ch].rho;
      }
    }

    if (request.frame_sink) request.frame_sink(frame, cfg.grid);
  });

  result.final_norm = final_field.total_norm();

  if (request.fit_time_ns) {
    const DensitySnapshot& snap = result.snapshots.back();
    std::vector<double> x(cfg.grid.n());
    for (int i = 0; i < cfg.grid.n(); ++i) x[i] = cfg.grid.x(i);
    const std::vector<double> rel = relative_density(snap.rho[0], snap.rho[1]);
    const FitWindow window = request.fit_window
                                 ? *request.fit_window
                                 : default_fit_window(x, rel, pot.coupling_onset_um);
    result.fit = fit_relative_density(x, rel, pot.coupling_energy_mev / cfg.constants.hbar, window);
    result.fit_time_ns = snap.t_ns;
    // The fit capture was appended last; drop it from the plain snapshots.
    result.snapshots.pop_back();
  }

  return result;
}

}  // namespace tflow
