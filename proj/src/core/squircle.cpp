#include "core/squircle.hpp"

#include <cmath>

namespace sq {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
}

void validate(const SquircleParams& p) {
  if (!(p.s >= 0.0 && p.s <= 1.0))
    throw Error(ErrorCode::Argument, "squareness must be in [0, 1]");
  if (!(p.r > 0.0)) throw Error(ErrorCode::Argument, "radius must be positive");
}

void validate(const RectellipseParams& q) {
  if (!(q.a > 0.0 && q.b > 0.0))
    throw Error(ErrorCode::Argument, "rectellipse semi-axes must be positive");
  if (!(q.s >= 0.0 && q.s <= 1.0))
    throw Error(ErrorCode::Argument, "squareness must be in [0, 1]");
}

double implicit_residual(const SquircleParams& p, Point2 pt) {
  validate(p);
  const double x2 = pt.x * pt.x;
  const double y2 = pt.y * pt.y;
  const double k = p.s / p.r;
  return x2 + y2 - k * k * x2 * y2 - p.r * p.r;
}

bool contains(const SquircleParams& p, Point2 pt) {
  // Boundary counts as inside.
  return std::abs(pt.x) <= p.r && std::abs(pt.y) <= p.r &&
         implicit_residual(p, pt) <= 0.0;
}

double squareness_from_blend(double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw Error(ErrorCode::Domain, "blend parameter must be in [0, 1]");
  // Both factors of the radicand are nonnegative on [0, 1].
  const double radicand = (3.0 - 2.0 * kSqrt2) * tau * tau - (2.0 - 2.0 * kSqrt2) * tau;
  const double denom = 1.0 - (1.0 - kSqrt2) * tau;
  const double s = 2.0 * std::sqrt(std::max(radicand, 0.0)) / (denom * denom);
  return std::min(s, 1.0);
}

double blend_from_squareness(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw Error(ErrorCode::Domain, "squareness must be in [0, 1]");
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 1.0;
  // squareness_from_blend is strictly increasing, so plain bisection is
  // reliable all the way to the endpoints.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (squareness_from_blend(mid) < s ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double squareness_from_point(Point2 pt, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::Argument, "radius must be positive");
  if (pt.x == 0.0 || pt.y == 0.0)
    throw Error(ErrorCode::Singular, "point on a coordinate axis has no unique squareness");
  if (std::abs(pt.x) > r || std::abs(pt.y) > r)
    throw Error(ErrorCode::Domain, "point lies outside the clip box");
  double radicand = pt.x * pt.x + pt.y * pt.y - r * r;
  if (radicand < 0.0) {
    if (radicand < -1e-14)
      throw Error(ErrorCode::Domain, "point lies inside the circle of radius r");
    radicand = 0.0;  // numerically on the circle
  }
  return r / std::abs(pt.x * pt.y) * std::sqrt(radicand);
}

double rectellipse_residual(const RectellipseParams& q, Point2 pt) {
  validate(q);
  const double xa = pt.x / q.a;
  const double yb = pt.y / q.b;
  return xa * xa + yb * yb - q.s * q.s * xa * xa * yb * yb - 1.0;
}

}  // namespace sq
