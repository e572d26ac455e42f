#pragma once

#include <complex>

#include "core/constants.hpp"

namespace omit {

struct PhysicalConstants {
  static constexpr double hbar = k_hbar;       // pg*pm^2/ns
  static constexpr double c_light = k_clight;  // pm/ns
};

/// Device and drive constants, all in internal units. Immutable once built;
/// the with_* helpers return validated copies for parameter sweeps.
struct SystemParams {
  double m_eff = 0.0;                // pg
  double omega_m = 0.0;              // rad/ns
  double gamma_m = 0.0;              // rad/ns
  double kappa = 0.0;                // rad/ns
  double kappa_ex = 0.0;             // rad/ns
  double g_coupling = 0.0;           // rad/ns per pm
  double pump_wavelength = 0.0;      // pm
  double pump_power = 0.0;           // aJ/ns (= nW)
  double probe_power = 0.0;          // aJ/ns
  double detuning_bar_target = 0.0;  // rad/ns, nominal effective detuning

  double kappa0() const { return kappa - kappa_ex; }

  /// Throws config_error naming the offending field.
  void validate() const;

  SystemParams with_kappa(double kappa_new, bool critical_coupling) const;
  SystemParams with_g_scale(double scale) const;
};

/// sqrt(P / (hbar * 2*pi*c/lambda)); photons^1/2 / ns^1/2.
double drive_amplitude(double power, double wavelength);

/// Pump/probe amplitudes and frame frequencies for a beat drive.
struct DriveFields {
  double eps_pump = 0.0;       // photons^1/2/ns^1/2, real positive gauge
  double eps_probe = 0.0;
  double beat_freq = 0.0;      // rad/ns, probe minus pump
  double pump_detuning = 0.0;  // rad/ns, pump minus bare cavity resonance
};

} // namespace omit
