#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/params.hpp"

namespace omit {

/// One steady-state branch of the driven cavity + resonator.
struct SteadyState {
  std::complex<double> a_bar;  // photons^1/2
  double x_bar = 0.0;          // pm
  double delta_bar = 0.0;      // rad/ns, effective detuning at this branch
  bool stable = false;
};

struct BistabilityCurve {
  struct Point {
    double power = 0.0;  // aJ/ns
    std::vector<SteadyState> states;
  };
  std::vector<Point> points;
};

/// Displacement of the reference (unloaded) device at the operating pump
/// power, where the effective detuning equals `delta_bar_target` exactly.
double reference_displacement(const SystemParams& params,
                              double delta_bar_target);

/// Pump detuning from the bare cavity resonance implied by the reference
/// tuning; held fixed across power scans.
double bare_detuning(const SystemParams& params, double delta_bar_target);

/// All real branches at the given scan power, ascending in |x_bar|. The pump
/// laser stays tuned to the reference condition at params.pump_power.
std::vector<SteadyState> steady_states(const SystemParams& params,
                                       double pump_power,
                                       double delta_bar_target);

/// Linear stability of a branch: all eigenvalues of the 4x4 linearization
/// (field quadratures, displacement, velocity) in the left half plane.
bool classify_stability(const SystemParams& params, const SteadyState& state);

BistabilityCurve bistability_scan(const SystemParams& params,
                                  std::span<const double> powers);

/// Lowest stable branch at the operating power and nominal detuning target.
SteadyState operating_state(const SystemParams& params);

/// Pump/probe drive set for the time-domain equations, probe at beat `omega`.
DriveFields make_drives(const SystemParams& params, double omega_beat);

} // namespace omit
