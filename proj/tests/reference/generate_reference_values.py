#!/usr/bin/env python3
"""Regenerates the frozen reference constants used by the C++ test suite.

Every value is computed with mpmath at 40 significant digits, using only
defining integrals and closed forms -- never the library code under test.
Output is meant to be pasted into tests/reference_values.hpp.
"""

import mpmath as mp

mp.mp.dps = 40


def fmt(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(mp.mpf(value), 20)};")


# --- blend parameter -------------------------------------------------------
s_mid = mp.sqrt(736 * mp.sqrt(2) - 1040)
fmt("kMidwaySquareness", s_mid)

# --- elliptic integrals (defining-integral quadrature) ---------------------
def ellip_F(phi, k):
    return mp.quad(lambda t: 1 / mp.sqrt(1 - k**2 * mp.sin(t) ** 2), [0, phi])


def ellip_E(phi, k):
    return mp.quad(lambda t: mp.sqrt(1 - k**2 * mp.sin(t) ** 2), [0, phi])


fmt("kF_halfpi_k05", ellip_F(mp.pi / 2, mp.mpf("0.5")))
fmt("kEinc_pi3_k08", ellip_E(mp.pi / 3, mp.mpf("0.8")))
fmt("kEcomp_k0928", ellip_E(mp.pi / 2, mp.mpf("0.928")))
fmt("kKcomp_k0928", ellip_F(mp.pi / 2, mp.mpf("0.928")))
fmt("kEcomp_k05", ellip_E(mp.pi / 2, mp.mpf("0.5")))
fmt("kKcomp_k05", ellip_F(mp.pi / 2, mp.mpf("0.5")))

# --- squircle areas via 4 * integral of y(x) -------------------------------
def area(s, r=1):
    s = mp.mpf(s)
    if s == 0:
        return mp.pi * r * r
    f = lambda x: r * mp.sqrt((1 - (x / r) ** 2) / (1 - (s * x / r) ** 2))
    return 4 * mp.quad(f, [0, r])


for tag, s in [
    ("01", "0.1"),
    ("03", "0.3"),
    ("05", "0.5"),
    ("07", "0.7"),
    ("09", "0.9"),
    ("099", "0.99"),
]:
    fmt(f"kArea_s{tag}", area(s))
fmt("kArea_smidway", area(s_mid))
fmt("kArea_s0928", area("0.928"))

# --- arc lengths ------------------------------------------------------------
def cart_integrand(s, r=1):
    def f(x):
        fp = r**3 * x * (s**2 - 1) / (mp.sqrt(r**2 - x**2) * (r**2 - s**2 * x**2) ** mp.mpf("1.5"))
        return mp.sqrt(1 + fp**2)

    return f


s = mp.mpf("0.928")
fmt("kArcCart_s0928_0_05", mp.quad(cart_integrand(s), [0, mp.mpf("0.5")]))


def polar_rho(s, theta, r=1):
    g = mp.sqrt(1 - s**2 * mp.sin(2 * theta) ** 2)
    return r * mp.sqrt(2) / mp.sqrt(1 + g)


def perimeter(s, r=1):
    s = mp.mpf(s)
    if s == 0:
        return 2 * mp.pi * r
    rho = lambda th: polar_rho(s, th, r)
    f = lambda th: mp.sqrt(rho(th) ** 2 + mp.diff(rho, th) ** 2)
    # D4 symmetry: eight copies of the first octant, which is kink-free.
    return 8 * mp.quad(f, [0, mp.pi / 4])


for tag, s in [("01", "0.1"), ("05", "0.5"), ("09", "0.9"), ("099", "0.99")]:
    fmt(f"kPerimeter_s{tag}", perimeter(s))
fmt("kPerimeter_s0928", perimeter("0.928"))

# quarter arc for s=0.5 (polar angle 0..pi/2)
s = mp.mpf("0.5")
rho = lambda th: polar_rho(s, th)
f = lambda th: mp.sqrt(rho(th) ** 2 + mp.diff(rho, th) ** 2)
fmt("kQuarterArc_s05", mp.quad(f, [0, mp.pi / 4, mp.pi / 2]))

# --- polar radius spot value -------------------------------------------------
fmt("kPolarRadius_s08_th06", polar_rho(mp.mpf("0.8"), mp.mpf("0.6")))

# --- squareness through a point ---------------------------------------------
x = y = mp.mpf("0.9")
fmt("kSquareness_09_09", 1 / (x * y) * mp.sqrt(x * x + y * y - 1))

# --- elliptical grid disc -> square -----------------------------------------
u, v = mp.mpf("0.4"), mp.mpf("-0.2")
x = mp.mpf("0.5") * (mp.sqrt(2 + u * u - v * v + 2 * mp.sqrt(2) * u) - mp.sqrt(2 + u * u - v * v - 2 * mp.sqrt(2) * u))
y = mp.mpf("0.5") * (mp.sqrt(2 - u * u + v * v + 2 * mp.sqrt(2) * v) - mp.sqrt(2 - u * u + v * v - 2 * mp.sqrt(2) * v))
fmt("kEgDiscToSquare_x", x)
fmt("kEgDiscToSquare_y", y)

# --- reciprocal modulus identity φ=0.3, q=0.7 -------------------------------
phi, q = mp.mpf("0.3"), mp.mpf("0.7")
lhs = mp.quad(lambda t: mp.sqrt(1 - mp.sin(t) ** 2 / q**2), [0, phi])
beta = mp.asin(mp.sin(phi) / q)
rhs = (ellip_E(beta, q) - (1 - q * q) * ellip_F(beta, q)) / q
fmt("kRecipMod_phi03_q07", lhs)
print(f"// identity residual: {mp.nstr(lhs - rhs, 5)}")
