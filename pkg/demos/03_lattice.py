"""Group completion: p-adic exponent vectors and the distinguished generators."""

from wpp import (check_mobius_decomposition, generator_c, generator_d, generator_frak_c,
                 lattice_rank, phi_extended, to_exponent_vector)
from wpp.sequences import all_faces

m, p = 3, 2
c = generator_c(m, (1, 2), 1, p)      # p in slot 1 on every face containing (1,2)
d = generator_d(m, (1, 2), 1, p)      # p in slot 1 on (1,2) only
print("c((1,2),1) =", c, " in PS:", c.in_ps)
print("d((1,2),1) =", d, " valid:", d.is_valid)   # not in the monoid, only its completion

# phi, extended to the completion, sends c(t, j) to C(t) whatever j is
for j in (1, 2, 3):
    print(f"phi(c((1,2),{j})) == C((1,2)):", phi_extended(generator_c(m, (1, 2), j, p)) == generator_frak_c(m, (1, 2), p))

# d(t, j) is the alternating product of c(s, j) over faces s containing t
print("exponent vector of d:", to_exponent_vector(d, p))
ok = all(check_mobius_decomposition(m, t, j, p).ok for t in all_faces(m) for j in range(1, m + 1))
print("alternating-product identity for all (t, j):", ok)

# both families span a lattice of rank m * 2^m
cs = [to_exponent_vector(generator_c(m, t, j, p), p) for t in all_faces(m) for j in range(1, m + 1)]
print("rank of the c(t, j):", lattice_rank(cs), "=", m * 2**m)
