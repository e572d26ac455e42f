#pragma once

#include <complex>
#include <span>
#include <vector>

#include "core/steady_state.hpp"

namespace omit {

using complexd = std::complex<double>;

/// First-order sideband amplitudes about a steady state.
struct SidebandSolution {
  complexd a_minus;      // probe-frequency (anti-Stokes) component
  complexd a_plus_conj;  // conjugated Stokes component
  complexd x_amp;        // mechanical beat amplitude
};

struct Transmissions {
  complexd t_plus;   // Stokes transmission
  complexd t_minus;  // probe (OMIT) transmission
  complexd t_hom;    // homodyne signal, 1 - t_minus
};

struct ResponseSpectrum {
  std::vector<double> delta_prime;  // rad/ns, beat offset from omega_m
  std::vector<complexd> t_plus;
  std::vector<complexd> t_minus;
  std::vector<complexd> t_hom;
  double max_abs_t_minus = 0.0;  // gain guardrail, flagged above 1.5
};

/// Mechanical susceptibility 1/(m (W^2 - omega^2 - i omega Gamma)) with
/// resonance W = omega_m_actual (the unloaded omega_m when omitted).
complexd mech_susceptibility(const SystemParams& params, double omega,
                             double omega_m_actual);
complexd mech_susceptibility(const SystemParams& params, double omega);

/// Optomechanical response factor
///   f = hbar G^2 |a|^2 chi(omega) / (i(delta_bar - omega) + kappa/2),
/// the Stokes-side denominator required by the sideband elimination.
complexd response_factor(const SystemParams& params, const SteadyState& state,
                         double omega, double omega_m_actual);
complexd response_factor(const SystemParams& params, const SteadyState& state,
                         double omega);

/// Direct solution of the 3x3 linear sideband system; the in-repo ground
/// truth the closed forms are validated against.
SidebandSolution solve_sidebands(const SystemParams& params,
                                 const SteadyState& state, double probe_amp,
                                 double omega, double omega_m_actual);
SidebandSolution solve_sidebands(const SystemParams& params,
                                 const SteadyState& state, double probe_amp,
                                 double omega);

/// Closed-form sideband amplitudes (validation route).
SidebandSolution closed_form_sidebands(const SystemParams& params,
                                       const SteadyState& state,
                                       double probe_amp, double omega,
                                       double omega_m_actual);

/// Relative residual of the linear system at a candidate solution.
double sideband_residual(const SystemParams& params, const SteadyState& state,
                         double probe_amp, double omega, double omega_m_actual,
                         const SidebandSolution& sol);

/// Stokes / OMIT / homodyne transmissions from the direct sideband solve.
Transmissions transmissions(const SystemParams& params, const SteadyState& state,
                            double omega, double omega_m_actual);
Transmissions transmissions(const SystemParams& params, const SteadyState& state,
                            double omega);

/// Transmissions over a grid of beat offsets Delta' = omega - omega_m.
ResponseSpectrum spectrum_sweep(const SystemParams& params,
                                const SteadyState& state, double probe_amp,
                                std::span<const double> delta_prime_grid);

} // namespace omit
