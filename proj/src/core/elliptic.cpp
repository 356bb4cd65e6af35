#include "core/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/quadrature.hpp"

namespace sq {

namespace {

void check_standard_form(double phi, double k) {
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2 + 1e-12))
    throw Error(ErrorCode::Domain, "amplitude must be in [0, pi/2]");
  if (!(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::Domain, "modulus must be in [0, 1] (standard form)");
}

}  // namespace

// Duplication-based evaluation after Carlson, Numerical Algorithms 10 (1995);
// error tolerances per the classic formulation (fractional error ~ tol^6).
double carlson_rf(double x, double y, double z) {
  constexpr double kErrTol = 0.0012;
  constexpr double kThird = 1.0 / 3.0;
  if (std::min({x, y, z}) < 0.0 || (x + y) == 0.0 || (y + z) == 0.0 || (x + z) == 0.0)
    throw Error(ErrorCode::Domain, "carlson_rf: arguments must be nonnegative, at most one zero");
  double xt = x, yt = y, zt = z, ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  do {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lambda = sx * (sy + sz) + sy * sz;
    xt = 0.25 * (xt + lambda);
    yt = 0.25 * (yt + lambda);
    zt = 0.25 * (zt + lambda);
    ave = kThird * (xt + yt + zt);
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
  } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kErrTol);
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
  constexpr double kErrTol = 0.0008;
  if (std::min(x, y) < 0.0 || (x + y) == 0.0 || z <= 0.0)
    throw Error(ErrorCode::Domain, "carlson_rd: needs x, y >= 0 (one may be zero) and z > 0");
  double xt = x, yt = y, zt = z, sum = 0.0, fac = 1.0;
  double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
  do {
    const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
    const double lambda = sx * (sy + sz) + sy * sz;
    sum += fac / (sz * (zt + lambda));
    fac *= 0.25;
    xt = 0.25 * (xt + lambda);
    yt = 0.25 * (yt + lambda);
    zt = 0.25 * (zt + lambda);
    ave = 0.2 * (xt + yt + 3.0 * zt);
    dx = (ave - xt) / ave;
    dy = (ave - yt) / ave;
    dz = (ave - zt) / ave;
  } while (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) > kErrTol);
  const double ea = dx * dy;
  const double eb = dz * dz;
  const double ec = ea - eb;
  const double ed = ea - 6.0 * eb;
  const double ee = ed + ec + ec;
  constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
  constexpr double c5 = 0.25 * c3, c6 = 1.5 * c4;
  return 3.0 * sum +
         fac *
             (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) +
              dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
             (ave * std::sqrt(ave));
}

double ellip_F(double phi, double k) {
  check_standard_form(phi, k);
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double q = 1.0 - k * k * sn * sn;
  if (q <= 0.0)
    throw Error(ErrorCode::Domain, "F(pi/2, 1) diverges");
  return sn * carlson_rf(cn * cn, q, 1.0);
}

double ellip_E_inc(double phi, double k) {
  check_standard_form(phi, k);
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double q = 1.0 - k * k * sn * sn;
  if (q <= 0.0) return sn;  // k = 1, phi = pi/2: E(phi, 1) = sin(phi)
  return sn * carlson_rf(cn * cn, q, 1.0) -
         (k * k) * (sn * sn * sn) / 3.0 * carlson_rd(cn * cn, q, 1.0);
}

double ellip_K(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    if (k == 1.0) throw Error(ErrorCode::Domain, "K(1) diverges");
    throw Error(ErrorCode::Domain, "modulus must be in [0, 1)");
  }
  return carlson_rf(0.0, 1.0 - k * k, 1.0);
}

double ellip_E(double k) {
  if (!(k >= 0.0 && k <= 1.0))
    throw Error(ErrorCode::Domain, "modulus must be in [0, 1]");
  if (k == 1.0) return 1.0;
  const double kp2 = 1.0 - k * k;
  return carlson_rf(0.0, kp2, 1.0) - (k * k) / 3.0 * carlson_rd(0.0, kp2, 1.0);
}

double area_complete(const SquircleParams& p) {
  validate(p);
  const double r2 = p.r * p.r;
  if (p.s == 1.0) return 4.0 * r2;
  // The bracket E(s) + (s^2-1)K(s) ~ pi s^2 / 4 as s -> 0; below 1e-8 the
  // cancellation swallows every significant digit, so use the limit.
  if (p.s < 1e-8) return std::numbers::pi * r2;
  const double s2 = p.s * p.s;
  return 4.0 * r2 / s2 * (ellip_E(p.s) + (s2 - 1.0) * ellip_K(p.s));
}

double area_incomplete(const SquircleParams& p) {
  validate(p);
  if (p.s == 0.0)
    throw Error(ErrorCode::Domain, "incomplete-type area needs s > 0; use the complete form");
  const double s = p.s;
  // sqrt((s^2 - t^2) / (1 - t^2)) / s, written so that s = 1 stays finite
  // as t -> 1 (both factors vanish together).
  const auto integrand = [s](double t) {
    const double num = std::max(s * s - t * t, 0.0);
    const double den = std::max(1.0 - t * t, 0.0);
    if (den == 0.0) return 1.0;  // only reachable at s = 1, t = 1
    return std::sqrt(num / den) / s;
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-11;
  opt.rel_tol = 1e-11;
  return 4.0 * p.r * p.r / s * integrate(integrand, 0.0, s, opt);
}

double area_quadrature(const SquircleParams& p) {
  validate(p);
  const double s = p.s, r = p.r;
  const auto upper_branch = [s, r](double x) {
    const double xr = x / r;
    const double num = std::max(1.0 - xr * xr, 0.0);
    const double den = 1.0 - s * s * xr * xr;
    return r * std::sqrt(num / den);
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-11;
  opt.rel_tol = 1e-11;
  return 4.0 * integrate(upper_branch, 0.0, r, opt);
}

ReciprocalModulusCheck reciprocal_modulus_check(double phi, double q) {
  if (!(q > 0.0 && q <= 1.0))
    throw Error(ErrorCode::Domain, "q must be in (0, 1]");
  if (!(phi >= 0.0 && phi <= std::numbers::pi / 2 + 1e-12))
    throw Error(ErrorCode::Domain, "amplitude must be in [0, pi/2]");
  const double sin_phi = std::sin(phi);
  if (sin_phi > q * (1.0 + 1e-14))
    throw Error(ErrorCode::Domain, "sin(phi) must not exceed q (beta would be complex)");

  ReciprocalModulusCheck out;
  const double inv_q = 1.0 / q;
  const auto integrand = [inv_q](double theta) {
    const double s = inv_q * std::sin(theta);
    return std::sqrt(std::max(1.0 - s * s, 0.0));
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-12;
  out.lhs = integrate(integrand, 0.0, phi, opt);

  const double beta = std::asin(std::min(sin_phi / q, 1.0));
  out.rhs = inv_q * (ellip_E_inc(beta, q) - (1.0 - q * q) * ellip_F(beta, q));
  return out;
}

}  // namespace sq
