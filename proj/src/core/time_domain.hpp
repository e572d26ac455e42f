#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "core/steady_state.hpp"

namespace omit {

struct SimulationConfig {
  double duration = 2000.0;       // ns
  double transient_cut = 200.0;   // ns
  double solver_rel_tol = 1e-9;
  double solver_abs_tol = 1e-12;
  int record_stride = 64;         // samples per beat period

  void validate() const;
};

/// Uniformly sampled nonlinear trajectory. The grid is anchored at the end
/// of the run so the post-cut window spans an exact integer number of beat
/// periods; samples before `record_begin` cover the transient.
struct Trajectory {
  std::vector<double> times;           // ns
  std::vector<std::complex<double>> a; // photons^1/2, pump frame
  std::vector<double> x;               // pm
  std::vector<double> v;               // pm/ns
  double omega_beat = 0.0;             // rad/ns
  int stride = 0;                      // samples per beat period
  std::size_t record_begin = 0;        // start of the analysis window
  std::size_t beat_periods = 0;        // periods inside the window
};

/// Discrete spectrum of the windowed trajectory; offsets from the pump
/// frequency with the e^{-i nu t} sign convention (probe beat at -Omega).
struct FieldSpectrum {
  std::vector<double> freqs;                // rad/ns, ascending
  std::vector<std::complex<double>> amps;   // tone amplitudes
  double omega_beat = 0.0;
};

struct SensingReport {
  double stokes_amp = 0.0;
  double homodyne_amp = 0.0;
  double kst_sim = 0.0;
  double mass_true = 0.0;       // pg
  double mass_recovered = 0.0;  // pg
  double relative_error = 0.0;  // vs truth; 0 when truth is zero
};

/// Integrates the pump-frame c-number equations from a cold start with an
/// adaptive RK45 scheme, resampled to the uniform record grid by dense
/// interpolation. omega_m_actual is the (possibly mass-loaded) resonance.
Trajectory simulate(const SystemParams& params, const DriveFields& drives,
                    double omega_m_actual, const SimulationConfig& sim);

/// DFT of the post-cut window; a pure tone c e^{-i W t} yields |amp| = |c|
/// at the -W bin. Parseval-consistent with the windowed samples.
FieldSpectrum spectrum(const Trajectory& traj, const SimulationConfig& sim);

/// Exact projection of the post-cut window onto e^{-i nu t}.
std::complex<double> project_tone(const Trajectory& traj, double nu);

/// (homodyne, stokes) amplitudes at the -/+ beat offsets. The window holds
/// an integer number of beat periods, so the bins coincide with the exact
/// projections.
std::pair<double, double> extract_peaks(const FieldSpectrum& spec,
                                        double omega_beat);

/// Earliest time after which the per-period upper and lower envelopes of
/// |a(t)| stay within `tol` (relative) of their final values.
double settling_time(const Trajectory& traj, double tol = 0.01);

/// Baseline plus loaded runs; masses in pg, first entry must be zero.
std::vector<SensingReport> sense_mass_pipeline(const SystemParams& params,
                                               std::span<const double> masses,
                                               const SimulationConfig& sim);

} // namespace omit
