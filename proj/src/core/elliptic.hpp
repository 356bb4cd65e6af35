#pragma once

#include "core/squircle.hpp"

namespace sq {

// Legendre elliptic integrals in standard form (amplitude phi in [0, pi/2],
// modulus k in [0, 1]), computed through Carlson symmetric forms.

// Carlson R_F(x, y, z): at most one of x, y, z may be zero.
double carlson_rf(double x, double y, double z);

// Carlson R_D(x, y, z): z > 0, at most one of x, y zero.
double carlson_rd(double x, double y, double z);

// Incomplete integral of the 1st kind F(phi, k). Diverges at phi = pi/2,
// k = 1 (throws Error(Domain)).
double ellip_F(double phi, double k);

// Incomplete integral of the 2nd kind E(phi, k).
double ellip_E_inc(double phi, double k);

// Complete integrals K(k) = F(pi/2, k) and E(k) = E(pi/2, k).
// K(1) diverges (throws); E(1) = 1.
double ellip_K(double k);
double ellip_E(double k);

// Area of the FG-squircle via the complete-integral formula
//   A = 4 r^2 / s^2 * [E(s) + (s^2 - 1) K(s)],
// with the analytic limits A = pi r^2 at s -> 0 and A = 4 r^2 at s = 1
// substituted where the formula is numerically singular.
double area_complete(const SquircleParams& p);

// Same area through the incomplete-type route: direct quadrature of
//   A = (4 r^2 / s) * integral_0^s sqrt(1 - t^2/s^2) / sqrt(1 - t^2) dt.
// The equivalent standard-form evaluation would need modulus 1/s > 1,
// which ellip_E_inc rejects. Requires s > 0.
double area_incomplete(const SquircleParams& p);

// Area by adaptive quadrature of 4 * integral_0^r y(x) dx on the upper
// branch. Slow reference route exposed for cross-checking and the CLI.
double area_quadrature(const SquircleParams& p);

struct ReciprocalModulusCheck {
  double lhs = 0.0;  // quadrature of E(phi, 1/q), modulus in non-standard form
  double rhs = 0.0;  // (1/q) [E(beta, q) - (1 - q^2) F(beta, q)], sin beta = sin(phi)/q
};

// Evaluates both sides of the reciprocal-modulus identity (DLMF 19.7).
// Requires 0 < q <= 1 and sin(phi) <= q.
ReciprocalModulusCheck reciprocal_modulus_check(double phi, double q);

}  // namespace sq
