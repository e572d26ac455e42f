#include "core/linear_response.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace omit {
namespace {

constexpr complexd kI{0.0, 1.0};

Eigen::Matrix3cd system_matrix(const SystemParams& p, const SteadyState& s,
                               double omega, double om_act) {
  const complexd a = s.a_bar;
  const double G = p.g_coupling;
  Eigen::Matrix3cd M;
  M << complexd(p.kappa / 2.0, -(s.delta_bar + omega)), 0.0, kI * G * a,
       0.0, complexd(p.kappa / 2.0, s.delta_bar - omega), -kI * G * std::conj(a),
       k_hbar * G * std::conj(a), k_hbar * G * a,
       p.m_eff * complexd(om_act * om_act - omega * omega, -omega * p.gamma_m);
  return M;
}

} // namespace

complexd mech_susceptibility(const SystemParams& p, double omega,
                             double om_act) {
  if (omega < 0.0) throw config_error("omega", "must be non-negative");
  return 1.0 / (p.m_eff * complexd(om_act * om_act - omega * omega,
                                   -omega * p.gamma_m));
}

complexd mech_susceptibility(const SystemParams& p, double omega) {
  return mech_susceptibility(p, omega, p.omega_m);
}

complexd response_factor(const SystemParams& p, const SteadyState& s,
                         double omega, double om_act) {
  const double a2 = std::norm(s.a_bar);
  const complexd chi = mech_susceptibility(p, omega, om_act);
  return k_hbar * p.g_coupling * p.g_coupling * a2 * chi /
         complexd(p.kappa / 2.0, s.delta_bar - omega);
}

complexd response_factor(const SystemParams& p, const SteadyState& s,
                         double omega) {
  return response_factor(p, s, omega, p.omega_m);
}

SidebandSolution solve_sidebands(const SystemParams& p, const SteadyState& s,
                                 double probe_amp, double omega,
                                 double om_act) {
  if (!(probe_amp > 0.0)) throw config_error("probe_amp", "must be positive");
  const Eigen::Matrix3cd M = system_matrix(p, s, omega, om_act);
  if (std::abs(M.determinant()) < 1e-300)
    throw numeric_error("sideband system is singular (degenerate parameters)");
  Eigen::Vector3cd b;
  b << std::sqrt(p.kappa_ex) * probe_amp, 0.0, 0.0;
  const Eigen::Vector3cd sol = M.partialPivLu().solve(b);
  return {sol[0], sol[1], sol[2]};
}

SidebandSolution solve_sidebands(const SystemParams& p, const SteadyState& s,
                                 double probe_amp, double omega) {
  return solve_sidebands(p, s, probe_amp, omega, p.omega_m);
}

SidebandSolution closed_form_sidebands(const SystemParams& p,
                                       const SteadyState& s, double probe_amp,
                                       double omega, double om_act) {
  const complexd f = response_factor(p, s, omega, om_act);
  const complexd den =
      complexd(p.kappa / 2.0, -(s.delta_bar + omega)) + 2.0 * s.delta_bar * f;
  const complexd drive = std::sqrt(p.kappa_ex) * probe_amp;
  SidebandSolution out;
  out.a_minus = (1.0 + kI * f) * drive / den;
  out.a_plus_conj = -kI * f * drive / den;
  // mechanical amplitude from the probe-side equation
  const complexd d_minus = complexd(p.kappa / 2.0, -(s.delta_bar + omega));
  out.x_amp = (drive - d_minus * out.a_minus) / (kI * p.g_coupling * s.a_bar);
  return out;
}

double sideband_residual(const SystemParams& p, const SteadyState& s,
                         double probe_amp, double omega, double om_act,
                         const SidebandSolution& sol) {
  const Eigen::Matrix3cd M = system_matrix(p, s, omega, om_act);
  Eigen::Vector3cd v, b;
  v << sol.a_minus, sol.a_plus_conj, sol.x_amp;
  b << std::sqrt(p.kappa_ex) * probe_amp, 0.0, 0.0;
  double scale = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      scale = std::max(scale, std::abs(M(r, c) * v[c]));
  scale = std::max(scale, std::abs(b[0]));
  return ((M * v - b).cwiseAbs().maxCoeff()) / scale;
}

Transmissions transmissions(const SystemParams& p, const SteadyState& s,
                            double omega, double om_act) {
  const double s_p = drive_amplitude(p.probe_power, p.pump_wavelength);
  const double root_kex = std::sqrt(p.kappa_ex);
  Transmissions t;
  if (s_p == 0.0 || std::abs(s.a_bar) == 0.0) {
    // decoupled cavity: bare input-output response
    const complexd d_minus = complexd(p.kappa / 2.0, -(s.delta_bar + omega));
    t.t_minus = 1.0 - p.kappa_ex / d_minus;
    t.t_hom = 1.0 - t.t_minus;
    t.t_plus = 0.0;
    return t;
  }
  const SidebandSolution sb = solve_sidebands(p, s, s_p, omega, om_act);
  t.t_minus = 1.0 - root_kex * sb.a_minus / s_p;
  t.t_hom = 1.0 - t.t_minus;
  t.t_plus = root_kex * sb.a_plus_conj / s_p;
  return t;
}

Transmissions transmissions(const SystemParams& p, const SteadyState& s,
                            double omega) {
  return transmissions(p, s, omega, p.omega_m);
}

ResponseSpectrum spectrum_sweep(const SystemParams& p, const SteadyState& s,
                                double probe_amp,
                                std::span<const double> grid) {
  if (grid.empty()) throw config_error("delta_prime_grid", "empty grid");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw config_error("delta_prime_grid", "must be ascending");
  ResponseSpectrum out;
  out.delta_prime.assign(grid.begin(), grid.end());
  out.t_plus.reserve(grid.size());
  out.t_minus.reserve(grid.size());
  out.t_hom.reserve(grid.size());
  for (double dp : grid) {
    const double omega = p.omega_m + dp;
    const SidebandSolution sb = solve_sidebands(p, s, probe_amp, omega, p.omega_m);
    const complexd tm = 1.0 - std::sqrt(p.kappa_ex) * sb.a_minus / probe_amp;
    out.t_minus.push_back(tm);
    out.t_hom.push_back(1.0 - tm);
    out.t_plus.push_back(std::sqrt(p.kappa_ex) * sb.a_plus_conj / probe_amp);
    out.max_abs_t_minus = std::max(out.max_abs_t_minus, std::abs(tm));
  }
  return out;
}

} // namespace omit
