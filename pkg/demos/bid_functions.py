"""Equilibrium bids across price ranks, for the three density families."""

import numpy as np

from kthprice import (AuctionConfig, BidFunction, make_linear, make_triangle,
                      make_uniform, monotonicity_certificate)

n = 6
xs = np.linspace(0.0, 1.0, 6)

for name, dist in [("uniform", make_uniform(1.0)),
                   ("triangle", make_triangle(1.0)),
                   ("linear a=1", make_linear(1.0, 1.0))]:
    print(f"--- {name}, n={n} ---")
    header = "x".rjust(6) + "".join(f"   beta_{k}" for k in range(2, n + 1))
    print(header)
    bids = [BidFunction.equilibrium(AuctionConfig(n, k), dist)
            for k in range(2, n + 1)]
    for x in xs:
        cells = "".join(f" {bid(float(x)):8.4f}" for bid in bids)
        print(f"{x:6.2f}{cells}")
    # the higher the price rank, the more you shade your bid upward
    slopes = [bid.slope for bid in bids]
    print("exact slopes:", [str(s) if s is not None else "series" for s in slopes])
    print("all strictly increasing:",
          all(bool(monotonicity_certificate(bid)) for bid in bids))
    print()

# in a k-th price auction with k >= 3, bidding above omega is routine:
# the winner never pays their own bid, so overbidding costs nothing
# against the equilibrium opponents
t = make_triangle(1.0)
for k in (3, 4, 5):
    bid = BidFunction.equilibrium(AuctionConfig(n, k), t)
    print(f"triangle n={n} k={k}: beta({t.omega}) = {bid(t.omega):.6f} > omega")
