#pragma once

#include <span>
#include <vector>

#include "core/linear_response.hpp"

namespace omit {

/// K_st as a function of frequency shift or deposited mass.
struct SensingCurve {
  std::vector<double> shifts;  // rad/ns (downshift magnitudes) or pg
  std::vector<double> kst;
};

/// beta over a (kappa x G*eps) grid, row-major in kappa.
struct SensitivityMap {
  std::vector<double> kappa_grid;  // rad/ns
  std::vector<double> g_eps_grid;  // |G * eps_pump|, internal units
  std::vector<double> beta;        // per pg, kappa-major
};

struct LinearityScan {
  std::vector<double> kappa;  // rad/ns
  std::vector<double> r;      // pg
};

/// K_st = |1 + 1/(i f)| with the mechanical resonance at omega_m_actual and
/// the probe beat held at omega_probe. Throws numeric_error without a pump.
double relative_intensity(const SystemParams& params, const SteadyState& state,
                          double omega_probe, double omega_m_actual);

/// Added mass for a downward resonance shift: m_d = 2 (m_eff/omega_m) dW.
double mass_from_shift(const SystemParams& params, double delta_omega_m);
/// Exact inverse; positive mass lowers the resonance by the returned amount.
double shift_from_mass(const SystemParams& params, double mass);

/// K_st(m_d) with the probe at the unloaded resonance. Accepts small negative
/// m_d so the slope stencils at zero are central.
double kst_of_mass(const SystemParams& params, const SteadyState& state,
                   double mass);

/// Slope of K_st(m_d) at zero deposited mass (per pg); central differences
/// with one Richardson refinement (step 1e-3 fg).
double sensitivity_beta(const SystemParams& params, const SteadyState& state);

/// |K'|/|K''| at zero mass; the mass scale where nonlinearity sets in (pg).
/// +inf when the curvature underflows.
double linearity_ratio(const SystemParams& params, const SteadyState& state);

/// Solves kst_of_mass(m)/kst_of_mass(0) = kst_measured/kst_baseline on
/// [0, m_eff/10] by bracketed bisection seeded from the beta-linear estimate.
double invert_mass(const SystemParams& params, const SteadyState& state,
                   double kst_measured, double kst_baseline);

SensingCurve kst_curve(const SystemParams& params, const SteadyState& state,
                       std::span<const double> shifts);

/// Fig-5-style map: kappa varied with kappa_ex held, drive coupling scaled.
SensitivityMap beta_map(const SystemParams& params,
                        std::span<const double> kappas,
                        std::span<const double> g_eps_scales);

/// Fig-6-style sweep under critical coupling (kappa_ex = kappa/2).
LinearityScan linearity_scan(const SystemParams& params,
                             std::span<const double> kappas);

} // namespace omit
