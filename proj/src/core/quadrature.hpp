#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace sq {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// abscissae/weights). Neither rule evaluates the interval endpoints, so
// integrands with endpoint derivative singularities stay finite.
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
void gauss_kronrod_15(const F& f, double a, double b, double* kronrod,
                      double* gauss) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_mid = f(mid);
  double gk = kKronrodWeights[7] * f_mid;
  double gg = kGaussWeights[3] * f_mid;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(mid - dx) + f(mid + dx);
    gk += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gg += kGaussWeights[i / 2] * sum;
  }
  *kronrod = gk * half;
  *gauss = gg * half;
}

template <typename F>
double adapt(const F& f, double a, double b, double tol, int depth,
             int max_depth) {
  double gk = 0.0, gg = 0.0;
  gauss_kronrod_15(f, a, b, &gk, &gg);
  if (depth >= max_depth || std::abs(gk - gg) <= tol) return gk;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. The tolerance for
// each bisected half is split evenly, which keeps the total error near
// max(abs_tol, rel_tol * |integral|).
template <typename F>
double integrate(const F& f, double a, double b,
                 QuadratureOptions opt = QuadratureOptions{}) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  double gk = 0.0, gg = 0.0;
  detail::gauss_kronrod_15(f, a, b, &gk, &gg);
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(gk));
  if (std::abs(gk - gg) <= tol) return sign * gk;
  const double mid = 0.5 * (a + b);
  return sign * (detail::adapt(f, a, mid, 0.5 * tol, 1, opt.max_depth) +
                 detail::adapt(f, mid, b, 0.5 * tol, 1, opt.max_depth));
}

}  // namespace sq
