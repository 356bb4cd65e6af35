#include "core/arc_length.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "core/quadrature.hpp"

namespace sq {

namespace {

constexpr double kPi = std::numbers::pi;

// At s = 1 the curve has corners at odd multiples of pi/4 (in both the polar
// angle and the parametric variable), where the derivative jumps.
double nearest_corner(double t) {
  return (std::round(t / (kPi / 2.0) - 0.5) + 0.5) * (kPi / 2.0);
}

// Central difference, switching to a one-sided second-order stencil when the
// window would straddle a corner. Keeps the quadrature integrand clean for
// s = 1 without special-casing smooth curves.
template <typename F>
double fd_derivative(const F& f, double t) {
  const double h = 1e-6 * std::max(1.0, std::abs(t));
  const double corner = nearest_corner(t);
  if (std::abs(t - corner) >= 2.0 * h)
    return (f(t + h) - f(t - h)) / (2.0 * h);
  const double dir = t >= corner ? 1.0 : -1.0;
  return dir * (-3.0 * f(t) + 4.0 * f(t + dir * h) - f(t + 2.0 * dir * h)) / (2.0 * h);
}

// Integrate f over [a, b] split at interior odd multiples of pi/4, so the
// adaptive rule never works across a derivative discontinuity.
template <typename F>
double integrate_split(const F& f, double a, double b, const QuadratureOptions& opt) {
  std::vector<double> cuts{a};
  const double quarter = kPi / 4.0;
  long k = static_cast<long>(std::ceil((a / quarter - 1.0) / 2.0));
  for (;; ++k) {
    const double c = (2.0 * k + 1.0) * quarter;
    if (c >= b - 1e-15) break;
    if (c > a + 1e-15) cuts.push_back(c);
  }
  cuts.push_back(b);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate(f, cuts[i], cuts[i + 1], opt);
  return total;
}

// Tolerance for the finite-difference routes sits above the ~1e-10 rounding
// noise the differences inject into the integrand.
constexpr QuadratureOptions kFdOptions{1e-9, 1e-9, 60};
constexpr QuadratureOptions kSmoothOptions{1e-10, 1e-10, 60};

}  // namespace

double arclength_cartesian(const SquircleParams& p, double x1, double x2) {
  validate(p);
  if (!(0.0 <= x1 && x1 <= x2 && x2 <= p.r))
    throw Error(ErrorCode::Argument, "need 0 <= x1 <= x2 <= r");
  const double s = p.s, r = p.r;
  const double one_m_s2 = (1.0 - s) * (1.0 + s);
  // With x = r sin(psi):
  //   l = r * integral sqrt(cos^2 psi + (1-s^2)^2 sin^2 psi / D^3) dpsi,
  //   D = cos^2 psi + (1-s^2) sin^2 psi,
  // which is bounded on [0, pi/2] for every s (at s = 1 the branch is flat
  // and the second term vanishes identically).
  const auto integrand = [s, one_m_s2](double psi) {
    const double c = std::cos(psi), sn = std::sin(psi);
    const double c2 = c * c, sn2 = sn * sn;
    double term = 0.0;
    if (s != 1.0) {
      const double d = c2 + one_m_s2 * sn2;
      term = one_m_s2 * one_m_s2 * sn2 / (d * d * d);
    }
    return std::sqrt(c2 + term);
  };
  const double psi1 = std::asin(std::min(x1 / r, 1.0));
  const double psi2 = std::asin(std::min(x2 / r, 1.0));
  return r * integrate(integrand, psi1, psi2, kSmoothOptions);
}

double arclength_parametric(const SquircleParams& p, CurveForm form, double t1,
                            double t2) {
  validate(p);
  if (!(t1 <= t2)) throw Error(ErrorCode::Argument, "need t1 <= t2");
  const auto x_of = [&](double t) { return param_point(p, form, t).x; };
  const auto y_of = [&](double t) { return param_point(p, form, t).y; };
  const auto speed = [&](double t) {
    return std::hypot(fd_derivative(x_of, t), fd_derivative(y_of, t));
  };
  return integrate_split(speed, t1, t2, kFdOptions);
}

double arclength_polar(const SquircleParams& p, double theta1, double theta2) {
  validate(p);
  if (!(theta1 <= theta2)) throw Error(ErrorCode::Argument, "need theta1 <= theta2");
  const auto rho = [&](double th) { return polar_radius(p, th); };
  const auto integrand = [&](double th) {
    const double value = rho(th);
    return std::hypot(value, fd_derivative(rho, th));
  };
  return integrate_split(integrand, theta1, theta2, kFdOptions);
}

double perimeter(const SquircleParams& p) {
  return arclength_polar(p, 0.0, 2.0 * kPi);
}

}  // namespace sq
