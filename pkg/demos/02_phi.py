"""The map phi from normalized power sequences to coefficient sequences,
and why it is neither injective nor surjective."""

from wpp import CoefficientSequence, PowerSequence, phi, phi_preimage_search

p = 2
c = PowerSequence(3, {
    (): (1, 1, 1), (1,): (1, 1, 1), (2,): (1, 1, 1), (3,): (1, 1, 1),
    (1, 2): (p, 1, 1), (1, 3): (p, 1, 1), (2, 3): (1, p, 1), (1, 2, 3): (p, p, 1)})
table = dict(c.table)
table[(1, 2)] = (1, p, 1)          # move the p on edge (1,2) to the other vertex
cbar = PowerSequence(3, table)

print("phi(c)    =", phi(c))
print("phi(cbar) =", phi(cbar))
print("c == cbar:", c == cbar, "  phi(c) == phi(cbar):", phi(c) == phi(cbar))

# 2 on every edge and on the triangle: a legal coefficient sequence ...
C = CoefficientSequence(3, {s: 2 if len(s) >= 2 else 1 for s in c.table})
print("valid coefficient sequence:", C.is_valid)
# ... but no power sequence maps to it; the search is exhaustive
res = phi_preimage_search(C)
print("preimage search:", res, f"({res.nodes} nodes)")

# on one edge everything is realizable: split n between the two vertices
for n in (1, 6, 12, 97):
    cs = CoefficientSequence(2, {(): 1, (1,): 1, (2,): 1, (1, 2): n})
    w = phi_preimage_search(cs).witness
    print(f"C(1,2) = {n:3d}  ->  c^(1,2) = {w[(1, 2)]}")
