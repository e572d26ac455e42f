#include "core/params.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace omit {

void SystemParams::validate() const {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw config_error(key, "must be positive");
  };
  positive(m_eff, "m_eff");
  positive(omega_m, "omega_m");
  positive(gamma_m, "gamma_m");
  positive(kappa, "kappa");
  positive(pump_wavelength, "pump_wavelength");
  if (!(kappa_ex > 0.0))
    throw config_error("kappa_ex", "must be positive");
  if (kappa_ex > kappa * (1.0 + 1e-12))
    throw config_error("kappa_ex",
                       "must not exceed kappa (intrinsic loss would be negative)");
  if (g_coupling == 0.0 || !std::isfinite(g_coupling))
    throw config_error("g_coupling", "must be nonzero");
  if (pump_power < 0.0)
    throw config_error("pump_power", "must be non-negative");
  if (probe_power < 0.0)
    throw config_error("probe_power", "must be non-negative");
  if (pump_power > 0.0 && probe_power > 1e-2 * pump_power)
    throw config_error("probe_power",
                       "perturbation validity requires probe_power <= 1e-2 * pump_power");
  if (!std::isfinite(detuning_bar_target))
    throw config_error("detuning_bar_target", "must be finite");
}

SystemParams SystemParams::with_kappa(double kappa_new, bool critical_coupling) const {
  SystemParams p = *this;
  p.kappa = kappa_new;
  if (critical_coupling) p.kappa_ex = kappa_new / 2.0;
  p.validate();
  return p;
}

SystemParams SystemParams::with_g_scale(double scale) const {
  SystemParams p = *this;
  p.g_coupling *= scale;
  p.validate();
  return p;
}

double drive_amplitude(double power, double wavelength) {
  if (!(wavelength > 0.0))
    throw config_error("wavelength", "must be positive");
  if (power < 0.0)
    throw config_error("power", "must be non-negative");
  const double omega = k_two_pi * k_clight / wavelength;
  return std::sqrt(power * k_power_to_internal / (k_hbar * omega));
}

} // namespace omit
