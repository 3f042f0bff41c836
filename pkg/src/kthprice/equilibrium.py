"""Equilibrium bid functions for k-th price auctions.

With n bidders, i.i.d. linear-density values and the winner paying the
k-th highest bid, the symmetric increasing equilibrium is pinned down by
revenue equivalence: the expected payment of a bidder with value x must
equal the second-price benchmark int_0^x y F(y)**(n-2) f(y) dy times
(n-1). Differentiating that integral identity once per price level and
dividing by the density each time gives the ladder

    psi_0(x)   = int_0^x y F(y)**(n-2) f(y) dy,
    psi_{t+1}  = psi_t' / f,
    beta_k(x)  = psi_{k-1}(x) / (binom(n-2, k-2) (k-2)! F(x)**(n-k)).

Because f' = a is constant here, the ladder telescopes into a finite
series with Catalan-weighted coefficients theta(n, k, l):

    beta_k(x) = x + binom(n-2, k-2)**-1 *
                sum_{l=0}^{k-3} (-1)**l theta(n,k,l) a**l F**(l+1) / f**(2l+1).

Special cases: beta_2(x) = x (bid your value), beta_3(x) = x +
F(x)/((n-2) f(x)), uniform values give beta_k = x (n-1)/(n-k+1), and the
triangle density gives the linear bid beta_k = x (1 + Omega_k /
binom(n-2, k-2)), shaded *upward*: in a k-th price auction with k >= 3
you bid above your value.

The ladder is also run symbolically over exact rational functions
(psi_ladder_oracle), which makes the series formula checkable as a
polynomial identity with no floating point anywhere in the loop.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import combinatorics
from .distributions import AuctionConfig, LinearDensityDistribution
from .polynomials import Polynomial, RationalFunction

__all__ = [
    "BidKind",
    "BidFunction",
    "MonotonicityResult",
    "bid_second_price",
    "bid_third_price",
    "bid_kth_uniform",
    "bid_kth_triangle",
    "bid_kth_series",
    "series_coefficients",
    "psi_ladder_oracle",
    "psi_closed_form",
    "bid_from_psi_ladder",
    "phi_ladder_check",
    "monotonicity_certificate",
    "bid_bounds_check",
]


class BidKind(enum.Enum):
    SECOND_PRICE = "second-price"
    THIRD_PRICE_GENERAL = "third-price"
    UNIFORM_CLOSED_FORM = "uniform"
    TRIANGLE_CLOSED_FORM = "triangle"
    LINEAR_DENSITY_SERIES = "series"


def _uniform_slope(n: int, k: int) -> Fraction:
    return 1 + Fraction(k - 2, n - k + 1)


def _triangle_slope(n: int, k: int) -> Fraction:
    if k == 2:
        return Fraction(1)
    return 1 + combinatorics.omega(n, k) / math.comb(n - 2, k - 2)


@lru_cache(maxsize=None)
def series_coefficients(n: int, k: int) -> tuple[Fraction, ...]:
    """Exact coefficients c_l = (-1)**l theta(n,k,l) / binom(n-2,k-2)."""
    if not 3 <= k <= n:
        raise ValueError("series_coefficients: need 3 <= k <= n")
    denom = math.comb(n - 2, k - 2)
    out = []
    for l in range(k - 2):
        c = combinatorics.theta_coeff(n, k, l) / denom
        out.append(-c if l % 2 else c)
    return tuple(out)


# ---------------------------------------------------------------------------
# scalar bid functions

def bid_second_price(x):
    """beta_2(x) = x: truthful bidding is the second-price equilibrium."""
    return x


def bid_third_price(dist: LinearDensityDistribution, n: int, x: float) -> float:
    """beta_3(x) = x + F(x) / ((n-2) f(x)) for n >= 3.

    Rejects x = 0 when f(0) = 0 (a 0/0 form; BidFunction evaluators use
    the continuity limit beta_3(0) = 0 instead).
    """
    if n < 3:
        raise ValueError(f"bid_third_price: need n >= 3, got {n}")
    if not 0.0 <= x <= dist.omega:
        raise ValueError("bid_third_price: x must lie in [0, omega]")
    f = dist.pdf(x)
    if f == 0.0:
        raise ValueError("bid_third_price: f(x) = 0, use the limit value 0 at x = 0")
    return x + dist.cdf(x) / ((n - 2) * f)


def bid_kth_uniform(n: int, k: int, x: float) -> float:
    """Uniform-values closed form beta_k(x) = x + (k-2)/(n-k+1) x."""
    if not 2 <= k <= n:
        raise ValueError(f"bid_kth_uniform: need 2 <= k <= n, got n={n}, k={k}")
    return float(_uniform_slope(n, k)) * x


def bid_kth_triangle(n: int, k: int, omega: float, x: float) -> float:
    """Triangle-density closed form beta_k(x) = x (1 + Omega_k / binom(n-2,k-2))."""
    if not 3 <= k <= n:
        raise ValueError(f"bid_kth_triangle: need 3 <= k <= n, got n={n}, k={k}")
    if not 0.0 <= x <= omega:
        raise ValueError("bid_kth_triangle: x must lie in [0, omega]")
    return float(_triangle_slope(n, k)) * x


def bid_kth_series(dist: LinearDensityDistribution, n: int, k: int,
                   x: float) -> float:
    """General linear-density series bid.

    beta_k(x) = x + sum_l c_l a**l F(x)**(l+1) / f(x)**(2l+1) with the
    exact coefficients from series_coefficients; beta_k(0) = 0 by
    continuity (for the triangle density the x = 0 term is a 0/0 form).
    """
    if not 3 <= k <= n:
        raise ValueError(f"bid_kth_series: need 3 <= k <= n, got n={n}, k={k}")
    if not 0.0 <= x <= dist.omega:
        raise ValueError("bid_kth_series: x must lie in [0, omega]")
    if x == 0.0:
        return 0.0
    return float(_series_eval(dist, n, k, np.asarray([x]))[0])


def _series_eval(dist: LinearDensityDistribution, n: int, k: int,
                 x: np.ndarray) -> np.ndarray:
    """Vectorized series bid; x = 0 maps to 0 by continuity."""
    cs = [float(c) for c in series_coefficients(n, k)]
    big_f = np.asarray(dist.cdf(x))
    f = np.asarray(dist.pdf(x))
    pos = f > 0.0
    f_safe = np.where(pos, f, 1.0)
    base = big_f / f_safe                      # F/f
    factor = dist.a * big_f / (f_safe * f_safe)  # a F / f^2
    # sum_l c_l a^l F^(l+1) / f^(2l+1) = base * Horner(factor; c_l)
    acc = np.zeros_like(base)
    for c in reversed(cs):
        acc = acc * factor + c
    return np.where(pos, x + base * acc, 0.0)


# ---------------------------------------------------------------------------
# bid function objects

@dataclass(frozen=True)
class BidFunction:
    """A bid profile beta(x), evaluable on scalars or arrays.

    slope is the exact rational slope for the structurally linear kinds
    (second-price, uniform and triangle closed forms) and None otherwise.
    """

    kind: BidKind
    config: AuctionConfig
    dist: LinearDensityDistribution
    slope: Fraction | None = None

    @classmethod
    def second_price(cls, config: AuctionConfig,
                     dist: LinearDensityDistribution) -> "BidFunction":
        return cls(BidKind.SECOND_PRICE, config, dist, Fraction(1))

    @classmethod
    def third_price(cls, config: AuctionConfig,
                    dist: LinearDensityDistribution) -> "BidFunction":
        if config.n < 3:
            raise ValueError("third_price bid needs n >= 3")
        return cls(BidKind.THIRD_PRICE_GENERAL, config, dist)

    @classmethod
    def uniform_closed_form(cls, config: AuctionConfig,
                            dist: LinearDensityDistribution) -> "BidFunction":
        if dist.a != 0.0:
            raise ValueError("uniform closed form needs a uniform distribution (a = 0)")
        return cls(BidKind.UNIFORM_CLOSED_FORM, config, dist,
                   _uniform_slope(config.n, config.k))

    @classmethod
    def triangle_closed_form(cls, config: AuctionConfig,
                             dist: LinearDensityDistribution) -> "BidFunction":
        if dist.b != 0.0:
            raise ValueError("triangle closed form needs a triangle distribution (b = 0)")
        return cls(BidKind.TRIANGLE_CLOSED_FORM, config, dist,
                   _triangle_slope(config.n, config.k))

    @classmethod
    def series(cls, config: AuctionConfig,
               dist: LinearDensityDistribution) -> "BidFunction":
        if config.k < 3:
            raise ValueError("series bid needs k >= 3 (k = 2 is second price)")
        return cls(BidKind.LINEAR_DENSITY_SERIES, config, dist)

    @classmethod
    def equilibrium(cls, config: AuctionConfig,
                    dist: LinearDensityDistribution) -> "BidFunction":
        """The natural equilibrium kind for (config, dist)."""
        if config.k == 2:
            return cls.second_price(config, dist)
        if dist.a == 0.0:
            return cls.uniform_closed_form(config, dist)
        if dist.b == 0.0:
            return cls.triangle_closed_form(config, dist)
        return cls.series(config, dist)

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        scalar = arr.ndim == 0
        out = self._evaluate(np.atleast_1d(arr))
        return float(out[0]) if scalar else out

    def _evaluate(self, x: np.ndarray) -> np.ndarray:
        n, k = self.config.n, self.config.k
        if self.slope is not None:
            return float(self.slope) * x
        if self.kind is BidKind.THIRD_PRICE_GENERAL:
            big_f = np.asarray(self.dist.cdf(x))
            f = np.asarray(self.dist.pdf(x))
            pos = f > 0.0
            f_safe = np.where(pos, f, 1.0)
            return np.where(pos, x + big_f / ((n - 2) * f_safe), 0.0)
        if self.kind is BidKind.LINEAR_DENSITY_SERIES:
            return _series_eval(self.dist, n, k, x)
        raise AssertionError(f"unhandled bid kind {self.kind}")


# ---------------------------------------------------------------------------
# symbolic ladders

def _dist_polys(dist: LinearDensityDistribution) -> tuple[Polynomial, Polynomial]:
    a, b = Fraction(dist.a), Fraction(dist.b)
    return Polynomial([0, b, a / 2]), Polynomial([b, a])


def psi_ladder_oracle(dist: LinearDensityDistribution, n: int,
                      k: int) -> RationalFunction:
    """Run the differentiation ladder symbolically and return psi_{k-1}.

    psi_0 is the exact antiderivative of x F**(n-2) f (zero at 0); each
    step differentiates and divides by f in exact rational-function
    arithmetic. Independent of the series formula by construction: the
    only shared input is the distribution.
    """
    if not 3 <= k <= n:
        raise ValueError("psi_ladder_oracle: need 3 <= k <= n")
    big_f, f = _dist_polys(dist)
    x = Polynomial.variable()
    psi = RationalFunction((x * big_f ** (n - 2) * f).antiderivative())
    f_rf = RationalFunction(f)
    for _ in range(k - 1):
        psi = psi.derivative() / f_rf
    return psi


def psi_closed_form(dist: LinearDensityDistribution, n: int,
                    k: int) -> RationalFunction:
    """Telescoped form of psi_{k-1}, as an exact rational function.

    psi_{k-1} / (k-2)! = binom(n-2,k-2) x F**(n-k)
                         + sum_l (-1)**l theta(n,k,l) a**l F**(n-k+l+1) / f**(2l+1)
    """
    if not 3 <= k <= n:
        raise ValueError("psi_closed_form: need 3 <= k <= n")
    big_f, f = _dist_polys(dist)
    a = Fraction(dist.a)
    x = Polynomial.variable()
    total = RationalFunction(math.comb(n - 2, k - 2) * x * big_f ** (n - k))
    for l in range(k - 2):
        coeff = combinatorics.theta_coeff(n, k, l) * a ** l
        if l % 2:
            coeff = -coeff
        total = total + RationalFunction(coeff * big_f ** (n - k + l + 1),
                                         f ** (2 * l + 1))
    return math.factorial(k - 2) * total


def bid_from_psi_ladder(dist: LinearDensityDistribution, n: int,
                        k: int) -> RationalFunction:
    """beta_k as a rational function, straight from the symbolic ladder."""
    big_f, _ = _dist_polys(dist)
    scale = math.comb(n - 2, k - 2) * math.factorial(k - 2)
    return psi_ladder_oracle(dist, n, k) / RationalFunction(scale * big_f ** (n - k))


def phi_ladder_check(dist: LinearDensityDistribution, n: int, k: int) -> bool:
    """Exact check of the expected-payment ladder against the bid.

    Starting from gamma_l(x) = int_0^x beta_k(y) F(y)**(n-k+l) f(y) dy and

        Phi_t = sum_{l=0}^{k-t} (-1)**l binom(k-t, l) F**(k-t-l) gamma_l,

    verifies (i) Phi_t' = (k-t) Phi_{t+1} f as polynomial identities for
    t = 2..k-1, and (ii) that applying the divide-by-f derivative ladder
    k-1 times to Phi_2 lands exactly on (k-2)! beta_k F**(n-k). Requires
    a uniform or triangle distribution so every gamma_l is a polynomial.
    """
    if not 3 <= k <= n:
        raise ValueError("phi_ladder_check: need 3 <= k <= n")
    if dist.a == 0.0:
        slope = _uniform_slope(n, k)
    elif dist.b == 0.0:
        slope = _triangle_slope(n, k)
    else:
        raise ValueError("phi_ladder_check: distribution must be uniform or "
                         "triangle so the payment integrals stay polynomial")
    big_f, f = _dist_polys(dist)
    beta = Polynomial([0, slope])
    gammas = [(beta * big_f ** (n - k + l) * f).antiderivative()
              for l in range(k - 1)]

    def phi(t: int) -> Polynomial:
        out = Polynomial()
        for l in range(k - t + 1):
            term = math.comb(k - t, l) * big_f ** (k - t - l) * gammas[l]
            out = out - term if l % 2 else out + term
        return out

    for t in range(2, k):
        if phi(t).derivative() != (k - t) * phi(t + 1) * f:
            return False

    ladder = RationalFunction(phi(2))
    f_rf = RationalFunction(f)
    for _ in range(k - 1):
        ladder = ladder.derivative() / f_rf
    target = RationalFunction(math.factorial(k - 2) * beta * big_f ** (n - k))
    return ladder == target


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class MonotonicityResult:
    """Outcome of a strict-increase check; truthy iff the bid is increasing."""

    increasing: bool
    witness: tuple[float, float] | None = None
    slope: Fraction | None = None

    def __bool__(self) -> bool:
        return self.increasing


def monotonicity_certificate(bid: BidFunction, grid_size: int = 256) -> MonotonicityResult:
    """Certify that a bid function is strictly increasing.

    Linear kinds are certified exactly (rational slope > 0); the other
    kinds are checked on a grid over (0, omega], and a failing adjacent
    pair is returned as the witness.
    """
    if grid_size < 2:
        raise ValueError("monotonicity_certificate: grid_size must be >= 2")
    if bid.slope is not None:
        return MonotonicityResult(bid.slope > 0, slope=bid.slope)
    omega = bid.dist.omega
    xs = omega * np.arange(1, grid_size + 1) / grid_size
    vals = bid(xs)
    diffs = np.diff(vals)
    bad = np.nonzero(diffs <= 0.0)[0]
    if bad.size:
        i = int(bad[0])
        return MonotonicityResult(False, witness=(float(xs[i]), float(xs[i + 1])))
    return MonotonicityResult(True)


def bid_bounds_check(n: int, k: int) -> bool:
    """Exact slope sandwich for the triangle bid on the wedge n + 4 > 2k.

    Checks (k-2)/(2(n-2)) <= Omega_k/binom(n-2,k-2) <= 7(k-2)/(8(n-2))
    in rational arithmetic; equivalent to the Catalan-sum bounds via
    binom(n-3,k-3)/binom(n-2,k-2) = (k-2)/(n-2).
    """
    if not 3 <= k <= n:
        raise ValueError(f"bid_bounds_check: need 3 <= k <= n, got n={n}, k={k}")
    if not n + 4 > 2 * k:
        raise ValueError("bid_bounds_check: bounds only claimed for n + 4 > 2k")
    premium = combinatorics.omega(n, k) / math.comb(n - 2, k - 2)
    return Fraction(k - 2, 2 * (n - 2)) <= premium <= Fraction(7 * (k - 2), 8 * (n - 2))
