#pragma once

#include "core/error.hpp"

namespace sq {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Squareness/radius pair of the FG-squircle
//   x^2 + y^2 - (s^2/r^2) x^2 y^2 = r^2
// which sweeps from the circle of radius r (s = 0) to the axis-aligned
// square of side 2r (s = 1). The curve proper is its restriction to the
// clip box |x| <= r, |y| <= r; branches outside the box are ignored.
struct SquircleParams {
  double s = 0.0;  // squareness, in [0, 1]
  double r = 1.0;  // radius, > 0
};

// Throws Error(Argument) unless 0 <= s <= 1 and r > 0.
void validate(const SquircleParams& p);

// Stretched squircle with semi-axes a, b:
//   x^2/a^2 + y^2/b^2 - s^2 x^2 y^2 / (a^2 b^2) = 1.
struct RectellipseParams {
  double a = 1.0;
  double b = 1.0;
  double s = 0.0;
};

void validate(const RectellipseParams& q);

// Left-hand side minus right-hand side of the curve equation. Zero exactly
// on the curve, negative inside, positive outside (within the clip box).
double implicit_residual(const SquircleParams& p, Point2 pt);

// Closed-region membership: residual <= 0 and the point is in the clip box.
bool contains(const SquircleParams& p, Point2 pt);

// Squareness for the blend parameter tau in [0, 1] under which the corner
// point of the curve moves linearly from the circle to the square corner.
double squareness_from_blend(double tau);

// Numerical inverse of squareness_from_blend (monotone bisection).
double blend_from_squareness(double s);

// The unique squareness whose radius-r squircle passes through pt.
// Requires x*y != 0 and x^2 + y^2 >= r^2; pt must be inside the clip box.
double squareness_from_point(Point2 pt, double r);

double rectellipse_residual(const RectellipseParams& q, Point2 pt);

}  // namespace sq
