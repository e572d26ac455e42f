#pragma once

#include <array>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace omit {

/// Adaptive Dormand-Prince 5(4) integrator with the classical dense-output
/// interpolant, fixed state dimension N.
template <std::size_t N>
class Dopri5 {
public:
  using State = std::array<double, N>;

  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double max_step = 1.0;

  /// Integrates rhs(t, y, dydt) from t0 to t1, calling
  /// sampler(t_prev, t_next, interpolate) after each accepted step, where
  /// interpolate(t, out) evaluates the dense solution inside the step.
  template <class RHS, class Sampler>
  State integrate(RHS&& rhs, double t0, double t1, State y, Sampler&& sampler) const {
    double t = t0;
    State k1, k2, k3, k4, k5, k6, k7, yt, y1;
    rhs(t, y, k1);
    double h = std::min(max_step, (t1 - t0) / 100.0);

    while (t < t1) {
      h = std::min(h, t1 - t);
      if (h < 1e-12 * std::max(1.0, std::abs(t)))
        throw numeric_error("step size underflow at t = " + std::to_string(t) + " ns");

      for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * a21 * k1[i];
      rhs(t + c2 * h, yt, k2);
      for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
      rhs(t + c3 * h, yt, k3);
      for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
      rhs(t + c4 * h, yt, k4);
      for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
      rhs(t + c5 * h, yt, k5);
      for (std::size_t i = 0; i < N; ++i)
        yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
      rhs(t + h, yt, k6);
      for (std::size_t i = 0; i < N; ++i)
        y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                            b5 * k5[i] + b6 * k6[i]);
      rhs(t + h, y1, k7);  // FSAL

      double err = 0.0;
      for (std::size_t i = 0; i < N; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                              e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
        err += (e / sc) * (e / sc);
      }
      err = std::sqrt(err / N);
      if (!std::isfinite(err))
        throw numeric_error("non-finite state at t = " + std::to_string(t) + " ns");

      if (err <= 1.0) {
        State r2, r3, r4, r5;
        for (std::size_t i = 0; i < N; ++i) {
          const double dy = y1[i] - y[i];
          r2[i] = dy;
          r3[i] = h * k1[i] - dy;
          r4[i] = dy - h * k7[i] - r3[i];
          r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                       d6 * k6[i] + d7 * k7[i]);
        }
        const double ts = t, hs = h;
        const State& y0 = y;
        auto interpolate = [&](double ti, State& out) {
          const double th = (ti - ts) / hs;
          const double th1 = 1.0 - th;
          for (std::size_t i = 0; i < N; ++i)
            out[i] = y0[i] +
                     th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
        };
        sampler(t, t + h, interpolate);
        t += h;
        y = y1;
        k1 = k7;
      }
      const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2),
                                    0.2, 5.0);
      h = std::min(h * fac, max_step);
    }
    return y;
  }

private:
  // Dormand-Prince tableau
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = b1 - 5179.0 / 57600, e3 = b3 - 7571.0 / 16695,
                          e4 = b4 - 393.0 / 640, e5 = b5 + 92097.0 / 339200,
                          e6 = b6 - 187.0 / 2100, e7 = -1.0 / 40;
  static constexpr double d1 = -12715105075.0 / 11282082432.0;
  static constexpr double d3 = 87487479700.0 / 32700410799.0;
  static constexpr double d4 = -10690763975.0 / 1880347072.0;
  static constexpr double d5 = 701980252875.0 / 199316789632.0;
  static constexpr double d6 = -1453857185.0 / 822651844.0;
  static constexpr double d7 = 69997945.0 / 29380423.0;
};

} // namespace omit
