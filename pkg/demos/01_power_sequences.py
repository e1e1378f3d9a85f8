"""Power sequences: building, validating, comparing faces, multiplying."""

from wpp import PowerSequence, ViolationError, minimal_power_sequence, ones_power_sequence
from wpp.sequences import ratio

# the minimal sequence generated by vertex values 2, 3, 5
c = minimal_power_sequence(3, [2, 3, 5])
print(c)
print("valid:", c.is_valid, " minimal:", c.is_minimal(), " vertices normalized:", c.in_ps)

# ratio c^sigma / c^tau for nested faces
print("c^(1,2,3) / c^(1,3) =", ratio(c, (1, 3), (1, 2, 3)))

# bump the entries above face (2,3); still a power sequence, no longer minimal
table = dict(c.table)
table[(2, 3)] = (1, 3, 35)
table[(1, 2, 3)] = (2, 3, 70)
c2 = PowerSequence(3, table)
print("non-minimal variant:", c2.is_minimal(), ratio(c2, (1, 3), (1, 2, 3)))

# a broken table reports every offending (tau, sigma, i)
table[(1, 2, 3)] = (3, 3, 70)
try:
    PowerSequence(3, table)
except ViolationError as exc:
    for v in exc.violations:
        print("  ", v)

# pointwise product: the monoid structure, with the all-ones sequence as unit
print("c * c =", c * c)
print("unit:", ones_power_sequence(3) * c == c)

# JSON form used by the command line tool
print(c.to_json())
