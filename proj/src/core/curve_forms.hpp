#pragma once

#include <vector>

#include "core/squircle.hpp"

namespace sq {

// The three parametric representations of the FG-squircle. The first two
// come from the elliptical-grid disc-to-square mapping (two algebraic
// spellings of the same curve point), the third from the FG-squircular
// mapping; in the third form the parameter t is the polar angle itself.
enum class CurveForm {
  EllipticGrid1,
  EllipticGrid2,
  FGSquircular,
};

// Polar radius rho(theta) of the curve. Singularities of the textbook
// expression at multiples of pi/2 are removed by evaluating the
// algebraically equivalent form rho = r*sqrt(2)/sqrt(1 + sqrt(1 - s^2
// sin^2(2 theta))), which is exact for every theta.
double polar_radius(const SquircleParams& p, double theta);

// Point on the curve at parameter t. All three forms are evaluated through
// conjugate-factored expressions, so axis points and s = 0 need no special
// casing and the residual stays at rounding level.
Point2 param_point(const SquircleParams& p, CurveForm form, double t);

// n >= 4 points at t = 2*pi*i/n, i = 0..n-1 (closed-loop order).
std::vector<Point2> sample_curve(const SquircleParams& p, CurveForm form, int n);

}  // namespace sq
