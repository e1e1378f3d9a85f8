"""Poincare series and the exhaustive property sweeps, including a planted bug."""

import random

from wpp import GeneratorSpec, WeightedAlgebra, closure, exhaustive_check, make_algebra, poincare_series
from wpp.oracle import PROPERTIES, splitting_series
from wpp.sequences import random_power_sequence

rng = random.Random(1)
K = closure(4, [[1, 2, 3], [3, 4], [2, 4]])
gens = GeneratorSpec(((1,), (2, 3), (4,), (5,)))
c = random_power_sequence(4, rng, (1, 2, 3, 6))
A = make_algebra(gens, c, K)

series = poincare_series(A, 14)
print("Poincare series:", series)
print("face-sum formula:", splitting_series(gens, K, 14))

for prop in PROPERTIES:
    n = len(A.basis)
    samples = 5000 if prop == "associativity" and n**3 > 10**6 else None
    print(exhaustive_check(A, prop, samples=samples))


class Broken(WeightedAlgebra):
    """Doubles one structure constant."""

    def _basis_product(self, a, b):
        r = super()._basis_product(a, b)
        if r is not None and (a.face, b.face) == ((1,), (2,)):
            return 2 * r[0], r[1]
        return r


bad = Broken(gens, c, K)
print(exhaustive_check(bad, "associativity"))
