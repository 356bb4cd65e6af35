#pragma once

#include "core/curve_forms.hpp"
#include "core/squircle.hpp"

namespace sq {

// Numerical arc length of the FG-squircle by three independent routes.
// None of these integrals has a known closed form; each is evaluated by
// adaptive Gauss-Kronrod quadrature.

// Length along the upper branch y = f(x) for 0 <= x1 <= x2 <= r. The
// integrand is regularized with x = r sin(psi), which removes the
// 1/sqrt(r^2 - x^2) endpoint blow-up before quadrature.
double arclength_cartesian(const SquircleParams& p, double x1, double x2);

// Length of the parametric curve between t1 <= t2, with dx/dt and dy/dt by
// finite differences (h = 1e-6 * max(1, |t|)).
double arclength_parametric(const SquircleParams& p, CurveForm form, double t1,
                            double t2);

// Length in polar form between theta1 <= theta2 using polar_radius and a
// finite-difference d(rho)/d(theta).
double arclength_polar(const SquircleParams& p, double theta1, double theta2);

// Full perimeter: the polar route over [0, 2*pi].
double perimeter(const SquircleParams& p);

}  // namespace sq
