#!/usr/bin/env python3
"""Walkthrough: products of collinear points form star configurations.

Take m points on a generic line and multiply all r-element subsets
coordinatewise.  The binom(m, r) products are exactly the r-fold
intersection points of the m hyperplanes p_i * L^(r-1) inside the power
M = L^r: a star configuration, constructed here with small exact
coordinates and verified from first principles.
"""

from math import comb

from hadamard_spaces import (PointSet, build_star, line_through, PPoint,
                             squarefree_power, verify_general_position,
                             verify_star)

m, r = 5, 3
print("Five points on a generic line in P^4, products over all 3-subsets:")
a, b = [1, 3, 7, 13, 29], [2, 5, 11, 17, 31]
line = line_through(PPoint(a), PPoint(b))
# Small integer parameters (s, t) keep every product coordinate small too;
# that is the virtue of this construction over intersecting random spaces.
params = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]
points = [PPoint([s * x + t * y for x, y in zip(a, b)]) for s, t in params]
zset = PointSet(points)

products = squarefree_power(zset, r)
print("  distinct products: %d (binom(%d, %d) = %d)" % (len(products), m, r, comb(m, r)))

witness = build_star(zset, line, r)
print("  ambient space M = L^%d has dimension %d" % (r, witness.ambient_space.dim))
print("  hyperplanes H_i = p_i * L^%d:" % (r - 1), len(witness.hyperplanes))

ok, certificate = verify_general_position(witness.hyperplanes, witness.ambient_space)
print("  linear general position:", ok)
print("  full star verification (all r-fold intersections equal the products):",
      verify_star(witness))

print("\nEach product point remembers which subset generated it:")
for point, subset in list(zip(witness.points, witness.origin_subsets))[:4]:
    print("   subset %s -> %s" % (subset, point))
print("   ... (%d points total, all with small exact coordinates)" % len(witness.points))
