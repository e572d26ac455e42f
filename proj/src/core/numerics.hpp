#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace omit {

/// Richardson-refined central first derivative, step h.
template <class F>
double central_derivative(F&& f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + h / 2) - f(x - h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

/// Richardson-refined central second derivative, step h.
template <class F>
double central_second_derivative(F&& f, double x, double h) {
  const double f0 = f(x);
  const double c1 = (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h);
  const double c2 = (f(x + h / 2) - 2.0 * f0 + f(x - h / 2)) / (h * h / 4.0);
  return (4.0 * c2 - c1) / 3.0;
}

/// |f'(x)| / |f''(x)|; +inf when the curvature underflows.
template <class F>
double derivative_ratio(F&& f, double x, double h) {
  const double d1 = central_derivative(f, x, h);
  const double d2 = central_second_derivative(f, x, h);
  if (std::abs(d2) < 1e-30) return std::numeric_limits<double>::infinity();
  return std::abs(d1) / std::abs(d2);
}

/// Real roots of the monic cubic x^3 + b x^2 + c x + d.
/// Returns the number of roots written (1, 2 or 3); a double root is
/// reported once with multiplicity folded out by the caller.
inline int solve_cubic_real(double b, double c, double d,
                            std::array<double, 3>& roots) {
  const double b2 = b * b;
  const double q = (b2 - 3.0 * c) / 9.0;
  const double r = (b * (2.0 * b2 - 9.0 * c) + 27.0 * d) / 54.0;
  const double r2 = r * r;
  const double q3 = q * q * q;
  if (r2 < q3) {
    double t = r / std::sqrt(q3);
    t = std::clamp(t, -1.0, 1.0);
    t = std::acos(t);
    const double s = -2.0 * std::sqrt(q);
    roots[0] = s * std::cos(t / 3.0) - b / 3.0;
    roots[1] = s * std::cos((t + 2.0943951023931955) / 3.0) - b / 3.0;
    roots[2] = s * std::cos((t - 2.0943951023931955) / 3.0) - b / 3.0;
    return 3;
  }
  const double u = std::cbrt(-r - std::copysign(std::sqrt(r2 - q3), r));
  const double v = (u == 0.0) ? 0.0 : q / u;
  roots[0] = (u + v) - b / 3.0;
  // complex pair collapses to a real double root when its imaginary part
  // vanishes (r2 == q3)
  const double im = 0.8660254037844386 * (u - v);
  if (std::abs(im) < 1e-14 * (std::abs(u) + std::abs(v) + 1e-300)) {
    roots[1] = -0.5 * (u + v) - b / 3.0;
    return 2;
  }
  return 1;
}

} // namespace omit
