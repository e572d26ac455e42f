#include "core/time_domain.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/mass_sensing.hpp"
#include "core/rk45.hpp"

namespace omit {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

} // namespace

void SimulationConfig::validate() const {
  if (!(duration > transient_cut))
    throw config_error("sim_duration", "must exceed the transient cut");
  if (transient_cut < 0.0)
    throw config_error("sim_transient_cut", "must be non-negative");
  if (record_stride < 4)
    throw config_error("record_stride", "needs at least 4 samples per period");
  if (!(solver_rel_tol > 0.0) || !(solver_abs_tol > 0.0))
    throw config_error("solver_tol", "tolerances must be positive");
}

Trajectory simulate(const SystemParams& p, const DriveFields& drives,
                    double omega_m_actual, const SimulationConfig& sim) {
  p.validate();
  sim.validate();
  if (!(omega_m_actual > 0.0))
    throw config_error("omega_m_actual", "must be positive");
  if (!(drives.beat_freq > 0.0))
    throw config_error("beat_freq", "must be positive");

  const double period = k_two_pi / drives.beat_freq;
  const std::size_t n_periods =
      static_cast<std::size_t>(std::floor((sim.duration - sim.transient_cut) / period));
  if (n_periods < 1)
    throw numeric_error("record window shorter than one beat period");

  const double t_end = sim.transient_cut + n_periods * period;
  const double dt = period / sim.record_stride;
  // grid anchored at t_end so the analysis window is bin-exact
  const std::size_t total = static_cast<std::size_t>(std::ceil(t_end / dt));

  Trajectory traj;
  traj.times.resize(total);
  traj.a.resize(total);
  traj.x.resize(total);
  traj.v.resize(total);
  traj.omega_beat = drives.beat_freq;
  traj.stride = sim.record_stride;
  traj.beat_periods = n_periods;
  traj.record_begin = total - n_periods * sim.record_stride;
  for (std::size_t j = 0; j < total; ++j)
    traj.times[j] = t_end - static_cast<double>(total - 1 - j) * dt;

  const double G = p.g_coupling;
  const double force_coef = k_hbar * G / p.m_eff;
  const double om2 = omega_m_actual * omega_m_actual;
  const double root_kex = std::sqrt(p.kappa_ex);
  const double delta = drives.pump_detuning;

  auto rhs = [&](double t, const std::array<double, 4>& y,
                 std::array<double, 4>& dy) {
    const std::complex<double> a(y[0], y[1]);
    const std::complex<double> drive =
        root_kex * (drives.eps_pump +
                    drives.eps_probe * std::exp(-kI * drives.beat_freq * t));
    const std::complex<double> da =
        (kI * (delta - G * y[2]) - p.kappa / 2.0) * a + drive;
    dy[0] = da.real();
    dy[1] = da.imag();
    dy[2] = y[3];
    dy[3] = -om2 * y[2] - p.gamma_m * y[3] - force_coef * std::norm(a);
  };

  Dopri5<4> solver;
  solver.rel_tol = sim.solver_rel_tol;
  solver.abs_tol = sim.solver_abs_tol;
  solver.max_step = std::min(1.0, period / 4.0);

  std::size_t next = 0;
  auto sampler = [&](double t0, double t1, auto&& interpolate) {
    std::array<double, 4> yi;
    while (next < total && traj.times[next] <= t1) {
      if (traj.times[next] >= t0) {
        interpolate(traj.times[next], yi);
        traj.a[next] = {yi[0], yi[1]};
        traj.x[next] = yi[2];
        traj.v[next] = yi[3];
      }
      ++next;
    }
  };

  solver.integrate(rhs, 0.0, t_end, {0.0, 0.0, 0.0, 0.0}, sampler);
  if (next < total)
    throw numeric_error("integration ended before the record grid was filled");
  return traj;
}

FieldSpectrum spectrum(const Trajectory& traj, const SimulationConfig& sim) {
  (void)sim;
  const std::size_t n = traj.times.size() - traj.record_begin;
  if (traj.beat_periods < 1 || n == 0)
    throw numeric_error("record window shorter than one beat period");

  const double dt = k_two_pi / traj.omega_beat / traj.stride;
  const double t0 = traj.times[traj.record_begin];

  std::vector<std::complex<double>> in(traj.a.begin() + traj.record_begin,
                                       traj.a.end());
  std::vector<std::complex<double>> out(n);
  fftw_plan plan = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  FieldSpectrum spec;
  spec.omega_beat = traj.omega_beat;
  spec.freqs.resize(n);
  spec.amps.resize(n);
  const double dnu = k_two_pi / (static_cast<double>(n) * dt);
  const long half = static_cast<long>(n) / 2;
  for (std::size_t k = 0; k < n; ++k) {
    long m = static_cast<long>(k);
    if (2 * m >= static_cast<long>(n)) m -= static_cast<long>(n);
    const double nu = dnu * static_cast<double>(m);
    const std::size_t idx = static_cast<std::size_t>(m + half);
    spec.freqs[idx] = nu;
    // absolute-time phase so amplitudes match e^{-i nu t} tone coefficients
    spec.amps[idx] = out[k] / static_cast<double>(n) * std::exp(-kI * nu * t0);
  }
  return spec;
}

std::complex<double> project_tone(const Trajectory& traj, double nu) {
  const std::size_t n = traj.times.size() - traj.record_begin;
  if (n == 0) throw numeric_error("empty record window");
  std::complex<double> acc = 0.0;
  for (std::size_t j = traj.record_begin; j < traj.times.size(); ++j)
    acc += traj.a[j] * std::exp(-kI * nu * traj.times[j]);
  return acc / static_cast<double>(n);
}

std::pair<double, double> extract_peaks(const FieldSpectrum& spec,
                                        double omega_beat) {
  if (spec.freqs.empty()) throw numeric_error("empty spectrum");
  if (omega_beat > spec.freqs.back() || -omega_beat < spec.freqs.front())
    throw config_error("omega_beat", "outside the spectral range");
  auto bin_at = [&](double target) {
    const auto it = std::min_element(
        spec.freqs.begin(), spec.freqs.end(), [&](double a, double b) {
          return std::abs(a - target) < std::abs(b - target);
        });
    const double mismatch = std::abs(*it - target);
    if (mismatch > 1e-6 * std::max(1.0, std::abs(target)))
      throw config_error("omega_beat", "not aligned with a spectral bin");
    return static_cast<std::size_t>(it - spec.freqs.begin());
  };
  const double homodyne = std::abs(spec.amps[bin_at(-omega_beat)]);
  const double stokes = std::abs(spec.amps[bin_at(+omega_beat)]);
  return {homodyne, stokes};
}

double settling_time(const Trajectory& traj, double tol) {
  const std::size_t stride = static_cast<std::size_t>(traj.stride);
  const std::size_t total = traj.a.size();
  const std::size_t n_per = total / stride;
  if (n_per < 4) throw numeric_error("trajectory too short for settling analysis");
  const std::size_t first = total - n_per * stride;  // whole periods, end-aligned
  const double period = k_two_pi / traj.omega_beat;

  std::vector<double> hi(n_per), lo(n_per);
  for (std::size_t j = 0; j < n_per; ++j) {
    double mx = 0.0, mn = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < stride; ++i) {
      const double m = std::abs(traj.a[first + j * stride + i]);
      mx = std::max(mx, m);
      mn = std::min(mn, m);
    }
    hi[j] = mx;
    lo[j] = mn;
  }
  const std::size_t tail = std::min<std::size_t>(20, n_per / 2);
  double ref_hi = 0.0, ref_lo = 0.0;
  for (std::size_t j = n_per - tail; j < n_per; ++j) {
    ref_hi += hi[j];
    ref_lo += lo[j];
  }
  ref_hi /= tail;
  ref_lo /= tail;

  std::size_t settled_from = 0;
  for (std::size_t j = 0; j + 1 < n_per; ++j) {
    const bool ok = std::abs(hi[j] - ref_hi) <= tol * ref_hi &&
                    std::abs(lo[j] - ref_lo) <= tol * ref_lo;
    if (!ok) settled_from = j + 1;
  }
  const double t_first_period = traj.times[first] - period / traj.stride;
  return t_first_period + static_cast<double>(settled_from) * period;
}

std::vector<SensingReport> sense_mass_pipeline(const SystemParams& p,
                                               std::span<const double> masses,
                                               const SimulationConfig& sim) {
  if (masses.empty() || masses[0] != 0.0)
    throw config_error("mass_list", "first entry must be the zero-mass baseline");
  for (double m : masses)
    if (m < 0.0) throw config_error("mass_list", "masses must be non-negative");

  const SteadyState state = operating_state(p);
  const DriveFields drives = make_drives(p, p.omega_m);

  std::vector<SensingReport> reports;
  reports.reserve(masses.size());
  for (double m : masses) {
    const double om_act = p.omega_m * (1.0 - m / (2.0 * p.m_eff));
    const Trajectory traj = simulate(p, drives, om_act, sim);
    SensingReport rep;
    rep.mass_true = m;
    rep.homodyne_amp = std::abs(project_tone(traj, -p.omega_m));
    rep.stokes_amp = std::abs(project_tone(traj, +p.omega_m));
    rep.kst_sim = rep.homodyne_amp / rep.stokes_amp;
    reports.push_back(rep);
  }

  const double baseline = reports.front().kst_sim;
  for (auto& rep : reports) {
    rep.mass_recovered =
        rep.kst_sim >= baseline
            ? invert_mass(p, state, rep.kst_sim, baseline)
            : 0.0;
    rep.relative_error =
        rep.mass_true > 0.0
            ? (rep.mass_recovered - rep.mass_true) / rep.mass_true
            : 0.0;
  }
  return reports;
}

} // namespace omit
