"""Weighted algebras: products, the sphere algebra of phi(c), and eta*."""

from wpp import (GeneratorSpec, PowerSequence, boundary, eta_star, full_simplex, make_algebra,
                 phi, sphere_algebra, structure_constants_match)

c = PowerSequence(3, {
    (): (1, 1, 1), (1,): (1, 1, 1), (2,): (1, 1, 1), (3,): (1, 1, 1),
    (1, 2): (2, 6, 1), (1, 3): (2, 1, 1), (2, 3): (1, 3, 1), (1, 2, 3): (4, 6, 5)})

# three spheres of dimensions 1, 3, 2 glued along the full simplex
A = make_algebra(GeneratorSpec.spheres((1, 3, 2)), c, full_simplex(3))
y1, y2, y3 = A.gen(1), A.gen(2), A.gen(3)
print("basis:", [b.label() for b in A.basis])
print("y1*y2 =", y1 * y2, "   y2*y1 =", y2 * y1)      # odd classes anticommute
print("y1*y2*y3 =", y1 * y2 * y3)
print("y1*y1 =", y1 * y1)

# the same table comes out of the coefficient sequence phi(c)
S = sphere_algebra(phi(c), (1, 3, 2))
print("A(phi(c)) matches:", structure_constants_match(S, A).ok)

# eta* into the unweighted algebra scales y_t by prod c_i^top / c_i^t
print("eta*(y1) =", eta_star(A, y1), "  eta*(y(1,2)) =", eta_star(A, A.element((1, 2))))

# on the boundary of the triangle the top class is killed
B = A.on_complex(boundary((1, 2, 3)))
print("on the boundary, y(1,2)*y3 =", B.element((1, 2)) * B.gen(3))

print(A.table_csv())
