#include "core/steady_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/numerics.hpp"

namespace omit {

double reference_displacement(const SystemParams& p, double delta_bar_target) {
  const double eps2 = std::pow(drive_amplitude(p.pump_power, p.pump_wavelength), 2);
  const double lorentz = delta_bar_target * delta_bar_target + p.kappa * p.kappa / 4.0;
  // force balance: m O^2 x = -hbar G |a|^2
  return -k_hbar * p.g_coupling * p.kappa_ex * eps2 /
         (p.m_eff * p.omega_m * p.omega_m * lorentz);
}

double bare_detuning(const SystemParams& p, double delta_bar_target) {
  return delta_bar_target + p.g_coupling * reference_displacement(p, delta_bar_target);
}

std::vector<SteadyState> steady_states(const SystemParams& p, double pump_power,
                                       double delta_bar_target) {
  p.validate();
  if (pump_power < 0.0) throw config_error("pump_power", "must be non-negative");

  const double eps = drive_amplitude(pump_power, p.pump_wavelength);
  const double G = p.g_coupling;
  const double D = bare_detuning(p, delta_bar_target);
  const double kq = p.kappa * p.kappa / 4.0;
  const double C = -k_hbar * G * p.kappa_ex * eps * eps /
                   (p.m_eff * p.omega_m * p.omega_m);

  // x ((D - G x)^2 + kappa^2/4) = C, expanded to a cubic in x
  std::vector<double> roots;
  if (C == 0.0) {
    roots.push_back(0.0);
  } else {
    std::array<double, 3> r{};
    const int n = solve_cubic_real(-2.0 * D / G, (D * D + kq) / (G * G),
                                   -C / (G * G), r);
    roots.assign(r.begin(), r.begin() + n);
  }

  // Newton polish against the original implicit form
  auto F = [&](double x) { return x * ((D - G * x) * (D - G * x) + kq) - C; };
  auto dF = [&](double x) {
    const double d = D - G * x;
    return d * d + kq - 2.0 * x * G * d;
  };
  for (double& x : roots) {
    for (int it = 0; it < 50; ++it) {
      const double den = dF(x);
      if (den == 0.0) break;
      const double step = F(x) / den;
      x -= step;
      if (std::abs(step) <= 1e-14 * std::max(std::abs(x), 1e-30)) break;
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });

  // fold points: coincident roots reported once, flagged marginal
  const double scale = std::max(1e-12, std::abs(roots.back()));
  std::vector<std::pair<double, bool>> unique;  // value, marginal
  for (double x : roots) {
    if (!unique.empty() && std::abs(x - unique.back().first) < 1e-7 * scale)
      unique.back().second = true;
    else
      unique.emplace_back(x, false);
  }

  std::vector<SteadyState> out;
  for (auto [x, marginal] : unique) {
    SteadyState s;
    s.x_bar = x;
    s.delta_bar = D - G * x;
    s.a_bar = std::sqrt(p.kappa_ex) * eps /
              std::complex<double>(p.kappa / 2.0, -s.delta_bar);
    s.stable = marginal ? false : classify_stability(p, s);
    out.push_back(s);
  }
  return out;
}

bool classify_stability(const SystemParams& p, const SteadyState& s) {
  const double Ar = s.a_bar.real();
  const double Ai = s.a_bar.imag();
  const double G = p.g_coupling;
  Eigen::Matrix4d J;
  J << -p.kappa / 2.0, -s.delta_bar, G * Ai, 0.0,
       s.delta_bar, -p.kappa / 2.0, -G * Ar, 0.0,
       0.0, 0.0, 0.0, 1.0,
       -2.0 * k_hbar * G * Ar / p.m_eff, -2.0 * k_hbar * G * Ai / p.m_eff,
       -p.omega_m * p.omega_m, -p.gamma_m;
  const auto ev = J.eigenvalues();
  for (int i = 0; i < 4; ++i)
    if (ev[i].real() >= 0.0) return false;
  return true;
}

BistabilityCurve bistability_scan(const SystemParams& p,
                                  std::span<const double> powers) {
  if (powers.empty()) throw config_error("powers", "empty power list");
  if (!std::is_sorted(powers.begin(), powers.end()))
    throw config_error("powers", "must be ascending");
  BistabilityCurve curve;
  curve.points.reserve(powers.size());
  for (double pw : powers) {
    BistabilityCurve::Point pt;
    pt.power = pw;
    pt.states = steady_states(p, pw, p.detuning_bar_target);
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

SteadyState operating_state(const SystemParams& p) {
  const auto states = steady_states(p, p.pump_power, p.detuning_bar_target);
  for (const auto& s : states)
    if (s.stable) return s;
  return states.front();
}

DriveFields make_drives(const SystemParams& p, double omega_beat) {
  DriveFields d;
  d.eps_pump = drive_amplitude(p.pump_power, p.pump_wavelength);
  d.eps_probe = drive_amplitude(p.probe_power, p.pump_wavelength);
  d.beat_freq = omega_beat;
  d.pump_detuning = bare_detuning(p, p.detuning_bar_target);
  return d;
}

} // namespace omit
