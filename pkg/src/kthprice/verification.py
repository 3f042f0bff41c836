"""Independent checks that a bid profile is (or is not) an equilibrium.

Three routes to the same expected payment, none sharing code with the
bid formulas they test:

* expected_payment_benchmark: the revenue-equivalence target
  int_0^x y g(y) dy with g = (n-1) F**(n-2) f, computed from an exact
  polynomial antiderivative (floats appear only in the final cast);
* expected_payment_quadrature: the k-th price payment formula
  (n-1) binom(n-2,k-2) int_0^x beta(y) (F(x)-F(y))**(k-2) F(y)**(n-k) f(y) dy
  under the candidate bid, by adaptive Gauss-Legendre quadrature;
* monte_carlo_expected_payment: simulated auctions, sharded so the
  result is a pure function of (seed, shard layout) and therefore
  byte-reproducible no matter how the shards are scheduled.

A bid passes revenue_equivalence_check when routes one and two agree on
a grid; truthful bidding with k >= 3 is the canonical negative control.
best_response_profile scans the interim payoff G(z) x - m(z) over
deviations z in [0, omega]; at equilibrium the argmax sits at z = x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .distributions import LinearDensityDistribution
from .equilibrium import BidFunction
from .polynomials import Polynomial
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, integrate

__all__ = [
    "SHARD_SIZE",
    "MonteCarloResult",
    "VerificationReport",
    "expected_payment_benchmark",
    "expected_payment_quadrature",
    "revenue_equivalence_check",
    "monte_carlo_expected_payment",
    "expected_revenue",
    "best_response_profile",
]

# Monte Carlo streams are consumed in fixed-size shards; shard i uses the
# generator seeded by SeedSequence(seed, spawn_key=(i,)). Results depend
# only on (seed, SHARD_SIZE), never on how shards are executed.
SHARD_SIZE = 1 << 16


@dataclass(frozen=True)
class MonteCarloResult:
    """Point estimate with its standard error (sample std / sqrt(samples))."""

    estimate: float
    standard_error: float
    samples: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "standard_error": self.standard_error,
            "samples": self.samples,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Result of one named check over a grid; passed == (max_error <= tolerance)."""

    check: str
    n: int
    k: int
    dist: LinearDensityDistribution
    grid: tuple[float, ...]
    errors: tuple[float, ...]
    max_error: float
    tolerance: float
    passed: bool
    seed: int | None = None

    @classmethod
    def from_errors(cls, check, n, k, dist, grid, errors, tolerance,
                    seed=None) -> "VerificationReport":
        grid = tuple(float(g) for g in grid)
        errors = tuple(float(e) for e in errors)
        max_error = max(errors) if errors else 0.0
        return cls(check=check, n=n, k=k, dist=dist, grid=grid, errors=errors,
                   max_error=max_error, tolerance=float(tolerance),
                   passed=max_error <= tolerance, seed=seed)

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": {
                "n": self.n,
                "k": self.k,
                "dist": {"a": self.dist.a, "b": self.dist.b,
                         "omega": self.dist.omega},
            },
            "grid": list(self.grid),
            "errors": list(self.errors),
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@lru_cache(maxsize=None)
def _benchmark_antiderivative(dist: LinearDensityDistribution,
                              n: int) -> Polynomial:
    a, b = Fraction(dist.a), Fraction(dist.b)
    big_f = Polynomial([0, b, a / 2])
    f = Polynomial([b, a])
    x = Polynomial.variable()
    return ((n - 1) * x * big_f ** (n - 2) * f).antiderivative()


def expected_payment_benchmark(dist: LinearDensityDistribution, n: int,
                               x: float) -> float:
    """Revenue-equivalence target m(x) = int_0^x y (n-1) F**(n-2) f dy.

    Evaluated from the exact antiderivative at the exact binary value of
    x; the only rounding is the final cast to float.
    """
    if n < 2:
        raise ValueError(f"expected_payment_benchmark: need n >= 2, got {n}")
    if not 0.0 <= x <= dist.omega:
        raise ValueError("expected_payment_benchmark: x must lie in [0, omega]")
    return float(_benchmark_antiderivative(dist, n)(Fraction(x)))


def expected_payment_quadrature(bid: BidFunction,
                                dist: LinearDensityDistribution,
                                n: int, k: int, x: float,
                                quad: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Expected payment of a value-x bidder under an arbitrary bid profile.

    m(x) = (n-1) binom(n-2, k-2) *
           int_0^x bid(y) (F(x)-F(y))**(k-2) F(y)**(n-k) f(y) dy
    """
    if not 2 <= k <= n:
        raise ValueError(f"expected_payment_quadrature: need 2 <= k <= n, "
                         f"got n={n}, k={k}")
    if not 0.0 < x <= dist.omega:
        raise ValueError("expected_payment_quadrature: x must lie in (0, omega]")
    fx = dist.cdf(x)
    const = (n - 1) * math.comb(n - 2, k - 2)

    def integrand(y):
        return (bid(y) * (fx - dist.cdf(y)) ** (k - 2)
                * dist.cdf(y) ** (n - k) * dist.pdf(y))

    return const * integrate(integrand, 0.0, x, quad)


def revenue_equivalence_check(bid: BidFunction,
                              dist: LinearDensityDistribution,
                              n: int, k: int, grid_size: int = 20,
                              tol: float = 1e-8,
                              quad: QuadratureConfig = DEFAULT_QUADRATURE
                              ) -> VerificationReport:
    """Compare payment-by-quadrature against the benchmark on a grid.

    Grid points are omega * i / grid_size for i = 1..grid_size, all in
    (0, omega]. An equilibrium bid passes; truthful bidding with k >= 3
    must fail (it pays too little).
    """
    if grid_size < 2:
        raise ValueError("revenue_equivalence_check: grid_size must be >= 2")
    if tol <= 0.0:
        raise ValueError("revenue_equivalence_check: tol must be positive")
    grid = [dist.omega * i / grid_size for i in range(1, grid_size + 1)]
    errors = [
        abs(expected_payment_quadrature(bid, dist, n, k, x, quad)
            - expected_payment_benchmark(dist, n, x))
        for x in grid
    ]
    return VerificationReport.from_errors(
        "revenue-equivalence", n, k, dist, grid, errors, tol)


def _shards(samples: int):
    index = 0
    done = 0
    while done < samples:
        size = min(SHARD_SIZE, samples - done)
        yield index, size
        index += 1
        done += size


def _shard_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _mc_accumulate(samples: int, seed: int, payoff_for_shard) -> MonteCarloResult:
    total = 0.0
    total_sq = 0.0
    for index, size in _shards(samples):
        pay = payoff_for_shard(_shard_rng(seed, index), size)
        total += float(pay.sum())
        total_sq += float((pay * pay).sum())
    mean = total / samples
    if samples > 1:
        var = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
        se = math.sqrt(var / samples)
    else:
        se = 0.0
    return MonteCarloResult(mean, se, samples, seed)


def monte_carlo_expected_payment(bid: BidFunction,
                                 dist: LinearDensityDistribution,
                                 n: int, k: int, x: float,
                                 samples: int, seed: int) -> MonteCarloResult:
    """Simulate the expected payment of a bidder with value x.

    Each trial draws the n-1 opponent values; if their maximum is below
    x the bidder wins and pays bid(Y_{k-1}), the bid at the (k-1)-th
    highest opponent value, else pays 0.
    """
    if samples < 1:
        raise ValueError("monte_carlo_expected_payment: samples must be >= 1")
    if not 2 <= k <= n:
        raise ValueError(f"monte_carlo_expected_payment: need 2 <= k <= n, "
                         f"got n={n}, k={k}")
    if not 0.0 < x <= dist.omega:
        raise ValueError("monte_carlo_expected_payment: x must lie in (0, omega]")
    m = n - 1
    pivot = n - k  # ascending index of the (k-1)-th highest of n-1 values

    def shard(rng, size):
        vals = dist.inverse_cdf(rng.random((size, m)))
        highest = vals.max(axis=1)
        price_base = np.partition(vals, pivot, axis=1)[:, pivot]
        return np.where(highest < x, bid(price_base), 0.0)

    return _mc_accumulate(samples, seed, shard)


def expected_revenue(bid: BidFunction, dist: LinearDensityDistribution,
                     n: int, k: int, samples: int, seed: int) -> MonteCarloResult:
    """Simulate the seller's expected revenue: the k-th highest of n bids.

    For an increasing bid the k-th highest bid is the bid at the k-th
    highest value. At equilibrium this is independent of k (revenue
    equivalence), equal to the expected second-highest value.
    """
    if samples < 1:
        raise ValueError("expected_revenue: samples must be >= 1")
    if not 2 <= k <= n:
        raise ValueError(f"expected_revenue: need 2 <= k <= n, got n={n}, k={k}")
    pivot = n - k

    def shard(rng, size):
        vals = dist.inverse_cdf(rng.random((size, n)))
        kth_value = np.partition(vals, pivot, axis=1)[:, pivot]
        return np.asarray(bid(kth_value))

    return _mc_accumulate(samples, seed, shard)


def best_response_profile(bid: BidFunction, dist: LinearDensityDistribution,
                          n: int, k: int, x: float, z_grid,
                          quad: QuadratureConfig = DEFAULT_QUADRATURE):
    """Interim payoff pi(z) = F(z)**(n-1) x - m(z) over deviation values z.

    The bidder pretends their value is z while it is really x; only
    deviations inside [0, omega] are scanned (higher bids are dominated).
    Returns (argmax z*, payoff array); at equilibrium z* == x up to the
    grid resolution.
    """
    if not 0.0 < x <= dist.omega:
        raise ValueError("best_response_profile: x must lie in (0, omega]")
    z_arr = np.asarray(z_grid, dtype=float)
    if z_arr.ndim != 1 or z_arr.size < 2:
        raise ValueError("best_response_profile: z_grid must be a 1-d grid")
    if np.any(z_arr < 0.0) or np.any(z_arr > dist.omega):
        raise ValueError("best_response_profile: z_grid must lie in [0, omega]")
    payments = np.array([
        0.0 if z == 0.0 else expected_payment_quadrature(bid, dist, n, k, z, quad)
        for z in z_arr
    ])
    payoff = np.asarray(dist.cdf(z_arr)) ** (n - 1) * x - payments
    z_star = float(z_arr[int(np.argmax(payoff))])
    return z_star, payoff
