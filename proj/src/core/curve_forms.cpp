#include "core/curve_forms.hpp"

#include <cmath>
#include <numbers>

namespace sq {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

double clamped_sqrt(double v) { return std::sqrt(std::max(v, 0.0)); }

// Shared factor sqrt(1 - s^2 sin^2 2t) of the polar and FG-squircular forms.
double diagonal_factor(double s, double t) {
  const double sig = s * std::sin(2.0 * t);
  return clamped_sqrt(1.0 - sig * sig);
}

}  // namespace

double polar_radius(const SquircleParams& p, double theta) {
  validate(p);
  return p.r * kSqrt2 / std::sqrt(1.0 + diagonal_factor(p.s, theta));
}

Point2 param_point(const SquircleParams& p, CurveForm form, double t) {
  validate(p);
  const double s = p.s, r = p.r;
  const double ct = std::cos(t), st = std::sin(t);
  switch (form) {
    case CurveForm::EllipticGrid1: {
      // x = r/(2s) [sqrt(2 + 2 s sqrt2 cos t + s^2 cos 2t) - sqrt(2 - ...)],
      // multiplied through by the conjugate to cancel the 1/s.
      const double c2t = std::cos(2.0 * t);
      const double xs = 2.0 * kSqrt2 * s * ct;
      const double ys = 2.0 * kSqrt2 * s * st;
      const double dx = clamped_sqrt(2.0 + xs + s * s * c2t) + clamped_sqrt(2.0 - xs + s * s * c2t);
      const double dy = clamped_sqrt(2.0 + ys - s * s * c2t) + clamped_sqrt(2.0 - ys - s * s * c2t);
      return {2.0 * kSqrt2 * r * ct / dx, 2.0 * kSqrt2 * r * st / dy};
    }
    case CurveForm::EllipticGrid2: {
      // sgn-form rewritten as 2 r cos t / sqrt(P + sqrt(P^2 - 8 s^2 cos^2 t)).
      const double c2t = std::cos(2.0 * t);
      const double px = 2.0 + s * s * c2t;
      const double py = 2.0 - s * s * c2t;
      const double qx = clamped_sqrt(px * px - 8.0 * s * s * ct * ct);
      const double qy = clamped_sqrt(py * py - 8.0 * s * s * st * st);
      return {2.0 * r * ct / std::sqrt(px + qx), 2.0 * r * st / std::sqrt(py + qy)};
    }
    case CurveForm::FGSquircular: {
      // Radial form: the point sits at polar angle t.
      const double rho = r * kSqrt2 / std::sqrt(1.0 + diagonal_factor(s, t));
      return {rho * ct, rho * st};
    }
  }
  throw Error(ErrorCode::Argument, "unknown curve form");
}

std::vector<Point2> sample_curve(const SquircleParams& p, CurveForm form, int n) {
  validate(p);
  if (n < 4) throw Error(ErrorCode::Argument, "need at least 4 samples for a closed curve");
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(n));
  const double step = 2.0 * std::numbers::pi / n;
  for (int i = 0; i < n; ++i) pts.push_back(param_point(p, form, step * i));
  return pts;
}

}  // namespace sq
