"""Monte Carlo auctions against the revenue-equivalence benchmark."""

from kthprice import (AuctionConfig, BidFunction, expected_payment_benchmark,
                      expected_revenue, make_triangle, make_uniform,
                      monte_carlo_expected_payment, revenue_equivalence_check)

SEED = 20250815
SAMPLES = 400_000

u = make_uniform(1.0)
t = make_triangle(1.0)

# a bidder's expected payment, three ways: simulation, quadrature
# (inside revenue_equivalence_check) and the exact benchmark
print("expected payment of a value-0.7 bidder, uniform values:")
print(f"{'n':>3} {'k':>3} {'simulated':>12} {'benchmark':>12} {'se':>10}")
for n, k in [(4, 2), (4, 3), (4, 4), (6, 3), (6, 5)]:
    bid = BidFunction.equilibrium(AuctionConfig(n, k), u)
    mc = monte_carlo_expected_payment(bid, u, n, k, 0.7, SAMPLES, SEED)
    bench = expected_payment_benchmark(u, n, 0.7)
    print(f"{n:3d} {k:3d} {mc.estimate:12.6f} {bench:12.6f} "
          f"{mc.standard_error:10.2g}")
print()

# seller revenue does not depend on k at equilibrium
print("seller revenue, n=5, triangle values (target: the expected")
print("second-highest value, identical for every k):")
for k in range(2, 6):
    bid = BidFunction.equilibrium(AuctionConfig(5, k), t)
    rev = expected_revenue(bid, t, 5, k, SAMPLES, SEED)
    print(f"  k={k}: {rev.estimate:.5f} +- {rev.standard_error:.5f}")
print()

# the quadrature route, reported as a machine-checkable document
rep = revenue_equivalence_check(BidFunction.equilibrium(AuctionConfig(5, 4), t),
                                t, 5, 4)
print(f"revenue-equivalence check n=5 k=4 triangle: pass={rep.passed}, "
      f"max error {rep.max_error:.2e} over {len(rep.grid)} grid points")

# truthful bidding is NOT an equilibrium once the price drops to the
# third-highest bid; the same check rejects it
bad = revenue_equivalence_check(
    BidFunction.second_price(AuctionConfig(5, 4), t), t, 5, 4)
print(f"same check for truthful bidding: pass={bad.passed}, "
      f"max error {bad.max_error:.3f}")
