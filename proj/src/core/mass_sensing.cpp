#include "core/mass_sensing.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/numerics.hpp"

namespace omit {
namespace {

constexpr double k_beta_step = 1e-6;  // pg (= 1e-3 fg)

double loaded_frequency(const SystemParams& p, double mass) {
  return p.omega_m * (1.0 - mass / (2.0 * p.m_eff));
}

} // namespace

double relative_intensity(const SystemParams& p, const SteadyState& s,
                          double omega_probe, double omega_m_actual) {
  if (!(omega_m_actual > 0.0))
    throw config_error("omega_m_actual", "must be positive");
  const complexd f = response_factor(p, s, omega_probe, omega_m_actual);
  if (std::abs(f) == 0.0)
    throw numeric_error("undefined ratio: Stokes vanishes (no pump field)");
  return std::abs(1.0 + 1.0 / (complexd(0.0, 1.0) * f));
}

double mass_from_shift(const SystemParams& p, double delta_omega_m) {
  return 2.0 * p.m_eff / p.omega_m * delta_omega_m;
}

double shift_from_mass(const SystemParams& p, double mass) {
  return 0.5 * p.omega_m / p.m_eff * mass;
}

double kst_of_mass(const SystemParams& p, const SteadyState& s, double mass) {
  if (std::abs(mass) > p.m_eff / 10.0)
    throw config_error("mass", "outside the small-shift regime (|m_d| <= m_eff/10)");
  return relative_intensity(p, s, p.omega_m, loaded_frequency(p, mass));
}

double sensitivity_beta(const SystemParams& p, const SteadyState& s) {
  return central_derivative(
      [&](double m) { return kst_of_mass(p, s, m); }, 0.0, k_beta_step);
}

double linearity_ratio(const SystemParams& p, const SteadyState& s) {
  return derivative_ratio(
      [&](double m) { return kst_of_mass(p, s, m); }, 0.0, k_beta_step);
}

double invert_mass(const SystemParams& p, const SteadyState& s,
                   double kst_measured, double kst_baseline) {
  if (!(kst_baseline > 0.0) || kst_measured < kst_baseline)
    throw inversion_error("requires kst_measured >= kst_baseline > 0");
  const double k0 = kst_of_mass(p, s, 0.0);
  const double target = kst_measured / kst_baseline;
  auto g = [&](double m) { return kst_of_mass(p, s, m) / k0 - target; };

  if (g(0.0) >= 0.0) return 0.0;
  double lo = 0.0;
  double hi = p.m_eff / 10.0;

  // beta-linear estimate narrows the initial bracket when it is consistent
  const double beta = sensitivity_beta(p, s);
  if (beta > 0.0) {
    const double est = (kst_measured - kst_baseline) * k0 / kst_baseline / beta;
    const double cand = std::min(hi, 4.0 * est + 1e-9);
    if (cand > 0.0 && g(cand) >= 0.0) hi = cand;
  }
  if (g(hi) < 0.0) throw inversion_error("mass out of sensing range");

  for (int it = 0; it < 200 && (hi - lo) > 1e-16 * p.m_eff; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SensingCurve kst_curve(const SystemParams& p, const SteadyState& s,
                       std::span<const double> shifts) {
  SensingCurve out;
  out.shifts.assign(shifts.begin(), shifts.end());
  out.kst.reserve(shifts.size());
  for (double dw : shifts)
    out.kst.push_back(relative_intensity(p, s, p.omega_m, p.omega_m - dw));
  return out;
}

SensitivityMap beta_map(const SystemParams& p, std::span<const double> kappas,
                        std::span<const double> g_eps_scales) {
  SensitivityMap map;
  map.kappa_grid.assign(kappas.begin(), kappas.end());
  const double eps = drive_amplitude(p.pump_power, p.pump_wavelength);
  for (double sc : g_eps_scales)
    map.g_eps_grid.push_back(std::abs(p.g_coupling) * sc * eps);
  map.beta.reserve(kappas.size() * g_eps_scales.size());
  for (double kap : kappas) {
    for (double sc : g_eps_scales) {
      const SystemParams q = p.with_kappa(kap, false).with_g_scale(sc);
      const SteadyState st = operating_state(q);
      map.beta.push_back(sensitivity_beta(q, st));
    }
  }
  return map;
}

LinearityScan linearity_scan(const SystemParams& p,
                             std::span<const double> kappas) {
  LinearityScan scan;
  scan.kappa.assign(kappas.begin(), kappas.end());
  scan.r.reserve(kappas.size());
  for (double kap : kappas) {
    const SystemParams q = p.with_kappa(kap, true);
    const SteadyState st = operating_state(q);
    scan.r.push_back(linearity_ratio(q, st));
  }
  return scan;
}

} // namespace omit
