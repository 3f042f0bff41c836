"""Exact Catalan-number machinery and the binomial identities behind it.

The k-th price bid series is driven by Catalan numbers
C_l = binom(2l, l)/(l+1) through the coefficients

    theta(n, k, l) = binom(n-2, k-3-l) * C_l / 2**l,    l = 0..k-3,

and their alternating sum

    Omega(n, k) = sum_l (-1)**l * theta(n, k, l) / 2**(l+1),

which is the slope premium of the equilibrium bid under a triangle
value density. Positivity of Omega and the sandwich

    binom(n-3, k-3)/2 <= Omega(n, k) <= 7*binom(n-3, k-3)/8   (n+4 > 2k)

are exact rational statements, so everything feeding them is an int or
a Fraction. Floating point appears in exactly two places: the
real-argument binomial evaluators for the Jensen / Hagen-Rothe /
shifted-Jensen convolution identities, and the quadrature check of the
integral representation

    C_l = (2**(2l+1) / pi) * int_0^1 t**l * sqrt((1-t)/t) dt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .quadrature import QuadratureConfig, integrate

__all__ = [
    "catalan",
    "catalan_recurrence_holds",
    "catalan_integral",
    "binom_real",
    "jensen_sides",
    "hagen_rothe_sides",
    "shifted_jensen_sides",
    "ThetaTable",
    "theta_coeff",
    "theta_table",
    "theta_step_recurrence_holds",
    "theta_index_identity_holds",
    "omega",
    "omega_bounds_hold",
]


def catalan(l: int) -> int:
    """l-th Catalan number binom(2l, l) / (l + 1), exact."""
    if l < 0:
        raise ValueError("catalan: index must be >= 0")
    # (l+1) always divides binom(2l, l); // keeps the result an int
    return math.comb(2 * l, l) // (l + 1)


def catalan_recurrence_holds(l_max: int) -> bool:
    """Check C_l == 2(2l-1)/(l+1) * C_{l-1} exactly for l = 1..l_max."""
    if l_max < 1:
        raise ValueError("catalan_recurrence_holds: l_max must be >= 1")
    c = Fraction(1)  # C_0
    for l in range(1, l_max + 1):
        c = c * Fraction(2 * (2 * l - 1), l + 1)
        if c != catalan(l):
            return False
    return True


def catalan_integral(l: int, quad: QuadratureConfig | None = None) -> float:
    """Evaluate C_l from its integral representation by quadrature.

    Substituting t = sin(u)**2 removes both endpoint singularities of
    sqrt((1-t)/t) and leaves the smooth integrand
    (2**(2l+2)/pi) * sin(u)**(2l) * cos(u)**2 on [0, pi/2].
    """
    if l < 0:
        raise ValueError("catalan_integral: index must be >= 0")
    if quad is None:
        quad = QuadratureConfig(tol=1e-10)
    scale = 2.0 ** (2 * l + 2) / math.pi

    def integrand(u):
        s = np.sin(u)
        c = np.cos(u)
        return s ** (2 * l) * c * c

    return scale * integrate(integrand, 0.0, math.pi / 2.0, quad)


def binom_real(r: float, s: int) -> float:
    """Generalized binomial r(r-1)...(r-s+1)/s! for real r, integer s >= 0.

    Falling-factorial definition: total on the reals, no gamma poles.
    """
    if s < 0:
        raise ValueError("binom_real: lower index must be >= 0")
    out = 1.0
    for i in range(s):
        out *= (r - i) / (i + 1)
    return out


def _binom_falling(x: Fraction, s: int) -> Fraction:
    out = Fraction(1)
    for i in range(s):
        out *= Fraction(x - i, i + 1)
    return out


# The convolution sums below are brutally ill-conditioned in float64:
# at s = 12 individual terms reach ~1e8 while the sides can cancel down
# to ~1e-5, losing up to 13 digits. Each side is therefore accumulated
# in exact rational arithmetic over the binary values of the float
# inputs and rounded exactly once at return, which keeps the returned
# pair within one ulp of the true (equal) sides.

def jensen_sides(m: float, r: float, z: float, s: int) -> tuple[float, float]:
    """Both sides of Jensen's convolution identity.

    sum_l binom(m+z*l, l) binom(r-z*l, s-l) == sum_l binom(m+r-l, s-l) z**l
    """
    if s < 0:
        raise ValueError("jensen_sides: s must be >= 0")
    mf, rf, zf = Fraction(m), Fraction(r), Fraction(z)
    lhs = sum((_binom_falling(mf + zf * l, l)
               * _binom_falling(rf - zf * l, s - l) for l in range(s + 1)),
              Fraction(0))
    rhs = sum((_binom_falling(mf + rf - l, s - l) * zf ** l
               for l in range(s + 1)), Fraction(0))
    return float(lhs), float(rhs)


def hagen_rothe_sides(m: float, r: float, z: float, s: int) -> tuple[float, float]:
    """Both sides of the Hagen-Rothe convolution identity.

    sum_l m/(m+z*l) binom(m+z*l, l) binom(r-z*l, s-l) == binom(m+r, s)
    """
    if s < 0:
        raise ValueError("hagen_rothe_sides: s must be >= 0")
    mf, rf, zf = Fraction(m), Fraction(r), Fraction(z)
    for l in range(s + 1):
        if mf + zf * l == 0:
            raise ValueError(f"hagen_rothe_sides: m + z*l vanishes at l={l}")
    lhs = sum((mf / (mf + zf * l)
               * _binom_falling(mf + zf * l, l)
               * _binom_falling(rf - zf * l, s - l) for l in range(s + 1)),
              Fraction(0))
    return float(lhs), float(_binom_falling(mf + rf, s))


def shifted_jensen_sides(r: float, z: float, s: int) -> tuple[float, float]:
    """Both sides of the shifted variant used to telescope the bid series.

    sum_l binom(r-l, s-l) z**l == sum_l binom(r+1, s-l) (z-1)**l
    """
    if s < 0:
        raise ValueError("shifted_jensen_sides: s must be >= 0")
    rf, zf = Fraction(r), Fraction(z)
    lhs = sum((_binom_falling(rf - l, s - l) * zf ** l for l in range(s + 1)),
              Fraction(0))
    rhs = sum((_binom_falling(rf + 1, s - l) * (zf - 1) ** l
               for l in range(s + 1)), Fraction(0))
    return float(lhs), float(rhs)


@dataclass(frozen=True)
class ThetaTable:
    """Catalan-weighted binomial coefficients theta(n, k, l), l = 0..k-3."""

    n: int
    k: int
    entries: tuple[Fraction, ...]


def theta_coeff(n: int, k: int, l: int) -> Fraction:
    """theta(n, k, l) = binom(n-2, k-3-l) * C_l / 2**l, exact.

    Defined for k >= 3 and 0 <= l <= k-3; the binomial is simply zero
    once k-3-l exceeds n-2, which is what the k-step recurrence checks
    rely on at the table edge.
    """
    if n < 3:
        raise ValueError("theta_coeff: need n >= 3")
    if k < 3:
        raise ValueError("theta_coeff: need k >= 3")
    if not 0 <= l <= k - 3:
        raise ValueError("theta_coeff: index l must lie in 0..k-3")
    return Fraction(math.comb(n - 2, k - 3 - l) * catalan(l), 2 ** l)


def theta_table(n: int, k: int) -> ThetaTable:
    if not 3 <= k <= n:
        raise ValueError("theta_table: need 3 <= k <= n")
    return ThetaTable(n, k, tuple(theta_coeff(n, k, l) for l in range(k - 2)))


def theta_step_recurrence_holds(n: int, k: int) -> bool:
    """Check theta(n, k+1, l) == (2l-1)/(l+1) * theta(n, k, l-1) exactly.

    Verified for l = 1..k-2, the full range on which both sides exist.
    """
    if not 3 <= k <= n:
        raise ValueError("theta_step_recurrence_holds: need 3 <= k <= n")
    for l in range(1, k - 1):
        lhs = theta_coeff(n, k + 1, l)
        rhs = Fraction(2 * l - 1, l + 1) * theta_coeff(n, k, l - 1)
        if lhs != rhs:
            return False
    return True


def theta_index_identity_holds(n: int, k: int) -> bool:
    """Check (n-k+l+1) * theta(n,k,l) == (k-2-l) * theta(n,k+1,l) exactly."""
    if not 3 <= k <= n:
        raise ValueError("theta_index_identity_holds: need 3 <= k <= n")
    for l in range(k - 2):
        lhs = (n - k + l + 1) * theta_coeff(n, k, l)
        rhs = (k - 2 - l) * theta_coeff(n, k + 1, l)
        if lhs != rhs:
            return False
    return True


def omega(n: int, k: int) -> Fraction:
    """Alternating Catalan sum Omega(n, k), the triangle bid's slope premium.

    Omega(n, k) = sum_{l=0}^{k-3} (-1)**l * theta(n, k, l) / 2**(l+1).
    Strictly positive for all 3 <= k <= n.
    """
    if not 3 <= k <= n:
        raise ValueError("omega: need 3 <= k <= n")
    total = Fraction(0)
    for l in range(k - 2):
        term = theta_coeff(n, k, l) / 2 ** (l + 1)
        total += -term if l % 2 else term
    return total


def omega_bounds_hold(n: int, k: int) -> bool:
    """Exact check of binom(n-3,k-3)/2 <= Omega(n,k) <= 7*binom(n-3,k-3)/8.

    Only claimed on the wedge n + 4 > 2k; parameters outside it are
    rejected. For k = 3 the lower bound is attained with equality.
    """
    if not 3 <= k <= n:
        raise ValueError("omega_bounds_hold: need 3 <= k <= n")
    if not n + 4 > 2 * k:
        raise ValueError("omega_bounds_hold: bounds are only claimed for n + 4 > 2k")
    anchor = math.comb(n - 3, k - 3)
    value = omega(n, k)
    return Fraction(anchor, 2) <= value <= Fraction(7 * anchor, 8)
