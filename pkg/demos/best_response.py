"""Why the equilibrium bid is a fixed point: deviation payoffs.

A bidder with value x who pretends to have value z wins with
probability F(z)**(n-1) and pays the expected k-th price conditional on
winning. At the equilibrium bid the payoff peaks exactly at z = x; under
truthful bidding (with k >= 3) it pays to overstate.
"""

import numpy as np

from kthprice import (AuctionConfig, BidFunction, best_response_profile,
                      make_uniform)

n, k, x = 5, 4, 0.5
u = make_uniform(1.0)
grid = np.linspace(0.0, 1.0, 101)

eq = BidFunction.equilibrium(AuctionConfig(n, k), u)
truthful = BidFunction.second_price(AuctionConfig(n, k), u)

z_eq, payoff_eq = best_response_profile(eq, u, n, k, x, grid)
z_tr, payoff_tr = best_response_profile(truthful, u, n, k, x, grid)

print(f"n={n}, k={k}, own value x={x}")
print(f"best deviation against equilibrium opponents: z* = {z_eq}")
print(f"best deviation against truthful opponents:    z* = {z_tr}")
print()

# the payoff surface is shallow near the top, so show the window
# around the peak with bars scaled inside the window
window = slice(30, 71, 4)
vals = payoff_eq[window]
lo, span = vals.min(), vals.max() - vals.min()
print("payoff against equilibrium opponents, z in [0.30, 0.70]:")
for z, p in zip(grid[window], vals):
    bar = "#" * (1 + int(39 * (p - lo) / span))
    mark = "  <- z* = x" if abs(z - z_eq) < 1e-12 else ""
    print(f"  z={z:4.2f}  {p:9.6f} {bar}{mark}")
print()

# argmax sits at x for every value, not just this one
for val in (0.2, 0.5, 0.8):
    z_star, _ = best_response_profile(eq, u, n, k, val, grid)
    print(f"x={val}: argmax z*={z_star}")
