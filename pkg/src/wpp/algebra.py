"""Weighted graded-commutative algebras with exact rational coefficients.

``WeightedAlgebra`` models the quotient of the weighted algebra on the
generators ``y_{i,j}`` (vertex ``i``, generator ``j`` of that vertex) by the
ideal spanned by basis elements on non-faces of ``K``.  Its basis elements
``y_{t,u}`` are indexed by a face ``t`` of ``K`` and one generator index per
vertex of ``t``; the product of two of them is::

    y_{t,u} * y_{w,v} = sign * lam * y_{t+w, u.v}    (t, w disjoint, t+w in K)
    lam = prod_{i in t} c_i^{t+w} / c_i^t  *  prod_{i in w} c_i^{t+w} / c_i^w

and zero otherwise.  ``sign`` is the Koszul sign of merging the two generator
lists into increasing vertex order.  With ``c`` identically 1 this is the
ordinary (star product) cohomology ring of the polyhedral product.

``SphereAlgebra`` is the algebra on ``a_s`` (one per subset ``s``) with
``a_s * a_w = sign * C[s+w] / (C[s] C[w]) * a_{s+w}`` for a coefficient
sequence ``C``.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from typing import Iterable, NamedTuple, Sequence

from .complex import SimplicialComplex, face_key, full_simplex, full_subcomplex, simplex
from .sequences import (CoefficientRing, CoefficientSequence, PowerSequence, Z,
                        ones_power_sequence)


class AlgebraError(ValueError):
    pass


def fmt_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    return Fraction(str(text))


@dataclass(frozen=True)
class GeneratorSpec:
    """Degrees of the generators attached to each vertex.

    ``degrees[i - 1]`` lists the degrees of ``y_{i,0}, y_{i,1}, ...``.
    """

    degrees: tuple

    def __post_init__(self):
        degs = tuple(tuple(d) for d in self.degrees)
        for i, ds in enumerate(degs, 1):
            if not ds:
                raise AlgebraError(f"vertex {i} has no generators")
            if any(not isinstance(d, int) or d < 1 for d in ds):
                raise AlgebraError(f"vertex {i}: generator degrees must be positive integers")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def spheres(cls, degrees: Iterable[int]) -> GeneratorSpec:
        """One generator per vertex, as for a product of spheres."""
        return cls(tuple((d,) for d in degrees))

    @property
    def m(self) -> int:
        return len(self.degrees)

    def degree(self, i: int, j: int) -> int:
        return self.degrees[i - 1][j]


class BasisElement(NamedTuple):
    face: tuple
    index: tuple

    def label(self, letter: str = "y") -> str:
        if not self.face:
            return "1"
        f = ",".join(map(str, self.face))
        if all(j == 0 for j in self.index):
            return f"{letter}({f})"
        return f"{letter}({f};{','.join(map(str, self.index))})"


def koszul_sign(left: Sequence[tuple], right: Sequence[tuple]) -> int:
    """Sign of shuffling two vertex-sorted (vertex, degree) lists together.

    Each pair with the left vertex larger than the right one has to be swapped
    past each other; the swap contributes -1 when both degrees are odd.
    """
    odd_swaps = 0
    for a, da in left:
        for b, db in right:
            if a > b and da % 2 and db % 2:
                odd_swaps += 1
    return -1 if odd_swaps % 2 else 1


class AlgebraElement:
    """A finite rational combination of basis elements of ``parent``."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: GradedAlgebra, terms=None):
        self.parent = parent
        clean = {}
        for b, q in (terms or {}).items():
            q = Fraction(q)
            if q:
                clean[BasisElement(*b)] = q
        self.terms = clean

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.parent != self.parent:
            raise AlgebraError("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for b, q in other.terms.items():
            out[b] = out.get(b, 0) + q
        return AlgebraElement(self.parent, out)

    def __neg__(self):
        return AlgebraElement(self.parent, {b: -q for b, q in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.parent.mul(self, other)
        return AlgebraElement(self.parent, {b: q * other for b, q in self.terms.items()})

    def __rmul__(self, scalar):
        return AlgebraElement(self.parent, {b: scalar * q for b, q in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement) and self.parent == other.parent
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, b) -> Fraction:
        return self.terms.get(BasisElement(*b), Fraction(0))

    def items(self) -> list:
        """Terms in canonical basis order."""
        pos = self.parent.basis_position
        return sorted(self.terms.items(), key=lambda kv: pos[kv[0]])

    def degrees(self) -> set:
        return {self.parent.degree(b) for b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def in_ring(self) -> bool:
        return all(self.parent.ring.contains(q) for q in self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "0"
        letter = self.parent.letter
        return " + ".join(f"{fmt_rational(q)}*{b.label(letter)}" for b, q in self.items())

    def to_json(self) -> list:
        return [{"face": list(b.face), "index": list(b.index), "coeff": fmt_rational(q)}
                for b, q in self.items()]


class GradedAlgebra:
    """Shared machinery: canonical basis, bilinear product, tables.

    Subclasses provide ``_basis_product(a, b)`` returning ``(coefficient,
    basis element)`` or ``None`` for a zero product.
    """

    letter = "y"

    def __init__(self, gens: GeneratorSpec, K: SimplicialComplex, ring: CoefficientRing = Z):
        if gens.m != K.m:
            raise AlgebraError(f"generator spec has m={gens.m} but complex has m={K.m}")
        self.gens = gens
        self.K = K
        self.ring = ring
        self._cache = {}

    @property
    def m(self) -> int:
        return self.K.m

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @cached_property
    def basis(self) -> list[BasisElement]:
        """Basis in (degree, face, index) order; the unit comes first."""
        out = []
        for t in self.K.sorted_faces():
            out.extend(BasisElement(t, u) for u in _index_tuples(self.gens, t))
        out.sort(key=lambda b: (self.degree(b), face_key(b.face), b.index))
        return out

    @cached_property
    def basis_position(self) -> dict:
        return {b: n for n, b in enumerate(self.basis)}

    def degree(self, b: BasisElement) -> int:
        return sum(self.gens.degree(i, j) for i, j in zip(b.face, b.index))

    def basis_in_degree(self, n: int) -> list[BasisElement]:
        return [b for b in self.basis if self.degree(b) == n]

    def element(self, face=(), index=None, coeff=1) -> AlgebraElement:
        face = simplex(face, self.m)
        index = tuple(index) if index is not None else (0,) * len(face)
        b = BasisElement(face, index)
        if b not in self.basis_position:
            raise AlgebraError(f"{b} is not a basis element of this algebra")
        return AlgebraElement(self, {b: coeff})

    def one(self) -> AlgebraElement:
        return self.element(())

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def gen(self, i: int, j: int = 0) -> AlgebraElement:
        if (i,) not in self.K:
            raise AlgebraError(f"vertex {i} is a ghost vertex; its generators are zero")
        return self.element((i,), (j,))

    def _basis_product(self, a: BasisElement, b: BasisElement):
        raise NotImplementedError

    def basis_product(self, a: BasisElement, b: BasisElement):
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = self._basis_product(a, b)
        return self._cache[key]

    def mul(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.parent != self or y.parent != self:
            raise AlgebraError("element is not over this algebra")
        out = defaultdict(Fraction)
        for a, qa in x.terms.items():
            for b, qb in y.terms.items():
                r = self.basis_product(a, b)
                if r is not None:
                    out[r[1]] += qa * qb * r[0]
        return AlgebraElement(self, out)

    def product(self, *xs: AlgebraElement) -> AlgebraElement:
        """Left-nested product of several elements."""
        acc = self.one()
        for x in xs:
            acc = acc * x
        return acc

    def _merge(self, a: BasisElement, b: BasisElement):
        """Disjointness, the merged basis element and the Koszul sign, or None."""
        if set(a.face) & set(b.face):
            return None
        union = tuple(sorted(a.face + b.face))
        if union not in self.K:
            return None
        gens_a = [(i, self.gens.degree(i, j)) for i, j in zip(a.face, a.index)]
        gens_b = [(i, self.gens.degree(i, j)) for i, j in zip(b.face, b.index)]
        where = dict(zip(a.face, a.index))
        where.update(zip(b.face, b.index))
        merged = BasisElement(union, tuple(where[i] for i in union))
        return merged, koszul_sign(gens_a, gens_b)

    def structure_constants(self) -> dict:
        """Nonzero products of basis pairs: (a, b) -> (coefficient, basis element)."""
        out = {}
        for a in self.basis:
            for b in self.basis:
                r = self.basis_product(a, b)
                if r is not None and r[0]:
                    out[(a, b)] = r
        return out

    def table_csv(self) -> str:
        """Deterministic CSV of the multiplication table over basis ids."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["left", "right", "left_label", "right_label", "product"])
        pos = self.basis_position
        for a in self.basis:
            for b in self.basis:
                r = self.basis_product(a, b)
                if r is None or not r[0]:
                    prod_text = "0"
                else:
                    prod_text = f"{fmt_rational(r[0])}*[{pos[r[1]]}]"
                w.writerow([pos[a], pos[b], a.label(self.letter), b.label(self.letter), prod_text])
        return buf.getvalue()

    def element_from_json(self, data: list) -> AlgebraElement:
        terms = {}
        for t in data:
            b = BasisElement(tuple(t["face"]), tuple(t["index"]))
            if b not in self.basis_position:
                raise AlgebraError(f"{b} is not a basis element of this algebra")
            terms[b] = terms.get(b, 0) + parse_rational(t["coeff"])
        return AlgebraElement(self, terms)


def _index_tuples(gens: GeneratorSpec, face: tuple):
    tuples = [()]
    for i in face:
        tuples = [u + (j,) for u in tuples for j in range(len(gens.degrees[i - 1]))]
    return tuples


class WeightedAlgebra(GradedAlgebra):
    """The weighted algebra on ``gens`` twisted by the power sequence ``c``, modulo I_K."""

    def __init__(self, gens: GeneratorSpec, c: PowerSequence, K: SimplicialComplex,
                 ring: CoefficientRing = Z):
        super().__init__(gens, K, ring)
        if c.m != K.m:
            raise AlgebraError(f"power sequence has m={c.m} but complex has m={K.m}")
        if not c.is_valid:
            raise AlgebraError("c is not a valid power sequence")
        self.c = c

    def _key(self):
        return (self.gens, self.c, self.K, self.ring)

    def __repr__(self):
        return f"WeightedAlgebra(m={self.m}, degrees={self.gens.degrees}, K={self.K!r}, ring={self.ring})"

    def weight(self, t: tuple, w: tuple) -> int:
        """The integer lam for disjoint faces t, w."""
        c = self.c
        union = tuple(sorted(t + w))
        lam = 1
        for i in t:
            lam *= c.entry(union, i) // c.entry(t, i)
        for i in w:
            lam *= c.entry(union, i) // c.entry(w, i)
        return lam

    def _basis_product(self, a, b):
        merged = self._merge(a, b)
        if merged is None:
            return None
        target, sign = merged
        return sign * self.weight(a.face, b.face), target

    def ordinary(self) -> WeightedAlgebra:
        """The same algebra with c identically 1 (no weights)."""
        return WeightedAlgebra(self.gens, ones_power_sequence(self.m), self.K, self.ring)

    def on_complex(self, L: SimplicialComplex) -> WeightedAlgebra:
        return WeightedAlgebra(self.gens, self.c, L, self.ring)


def make_algebra(gens: GeneratorSpec, c: PowerSequence, K: SimplicialComplex,
                 ring: CoefficientRing = Z) -> WeightedAlgebra:
    return WeightedAlgebra(gens, c, K, ring)


class SphereAlgebra(GradedAlgebra):
    """The weighted sphere product algebra of a coefficient sequence."""

    letter = "a"

    def __init__(self, cs: CoefficientSequence, degrees: Iterable[int], ring: CoefficientRing | None = None):
        ring = cs.ring if ring is None else ring
        degrees = tuple(degrees)
        if len(degrees) != cs.m:
            raise AlgebraError(f"need {cs.m} degrees, got {len(degrees)}")
        if not cs.is_valid:
            raise AlgebraError("not a valid coefficient sequence")
        if ring != cs.ring:
            cs = CoefficientSequence(cs.m, cs.table, ring)
        super().__init__(GeneratorSpec.spheres(degrees), full_simplex(cs.m), ring)
        self.cs = cs

    def _key(self):
        return (self.gens, self.cs, self.ring)

    def __repr__(self):
        return f"SphereAlgebra(m={self.m}, degrees={[d[0] for d in self.gens.degrees]}, ring={self.ring})"

    def _basis_product(self, a, b):
        merged = self._merge(a, b)
        if merged is None:
            return None
        target, sign = merged
        cs = self.cs
        num, den = cs[target.face], cs[a.face] * cs[b.face]
        return sign * (num // den), target


def sphere_algebra(cs: CoefficientSequence, degrees: Iterable[int], ring: CoefficientRing | None = None):
    return SphereAlgebra(cs, degrees, ring)


# ---------- comparisons and homomorphisms ----------

@dataclass
class MatchReport:
    ok: bool
    checked: int
    mismatch: tuple | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def structure_constants_match(A: GradedAlgebra, B: GradedAlgebra, correspondence: dict | None = None) -> MatchReport:
    """Compare all pairwise basis products of A and B under a basis bijection.

    ``correspondence`` maps basis elements of A to basis elements of B; by
    default elements with the same (face, index) correspond.
    """
    if correspondence is None:
        correspondence = {b: b for b in A.basis}
    if (set(correspondence) != set(A.basis) or set(correspondence.values()) != set(B.basis)
            or len(set(correspondence.values())) != len(correspondence)):
        raise AlgebraError("correspondence is not a bijection between the two bases")
    for a in A.basis:
        if A.degree(a) != B.degree(correspondence[a]):
            return MatchReport(False, 0, (a, correspondence[a]), "degree mismatch")
    checked = 0
    for a in A.basis:
        for b in A.basis:
            checked += 1
            ra = A.basis_product(a, b)
            rb = B.basis_product(correspondence[a], correspondence[b])
            left = (0, None) if ra is None or not ra[0] else (ra[0], correspondence[ra[1]])
            right = (0, None) if rb is None or not rb[0] else (rb[0], rb[1])
            if left != right:
                return MatchReport(False, checked, (a, b, left, right), "product mismatch")
    return MatchReport(True, checked)


def eta_star(A: WeightedAlgebra, x: AlgebraElement) -> AlgebraElement:
    """Pull back along the comparison map into the unweighted algebra.

    ``A`` must live on a single simplex s; then
    ``y_{t,u} -> prod_{i in t} (c_i^s / c_i^t) x_{t,u}``.
    """
    if not A.K.is_simplex():
        raise AlgebraError("eta_star needs an algebra over a single simplex")
    if x.parent != A:
        raise AlgebraError("element is not over this algebra")
    (top,) = A.K.maximal_faces()
    c = A.c
    terms = {}
    for b, q in x.terms.items():
        terms[b] = q * prod(c.entry(top, i) // c.entry(b.face, i) for i in b.face)
    return AlgebraElement(A.ordinary(), terms)


def restrict(A: WeightedAlgebra, L: SimplicialComplex, x: AlgebraElement) -> AlgebraElement:
    """Restriction to a subcomplex: drop the terms on faces outside L."""
    if not L.is_subcomplex_of(A.K):
        raise AlgebraError("L is not a subcomplex of K")
    if x.parent != A:
        raise AlgebraError("element is not over this algebra")
    return AlgebraElement(A.on_complex(L), {b: q for b, q in x.terms.items() if b.face in L})


def include_full_subcomplex(A: WeightedAlgebra, vertex_set: Iterable[int], x: AlgebraElement) -> AlgebraElement:
    """Split inclusion of the algebra over the full subcomplex K_I back into A."""
    KI = full_subcomplex(A.K, vertex_set)
    if x.parent != A.on_complex(KI):
        raise AlgebraError("element is not over the full subcomplex algebra")
    return AlgebraElement(A, dict(x.terms))


def poincare_series(A: GradedAlgebra, max_degree: int) -> list[int]:
    """Ranks of A in degrees 0..max_degree, counted off the basis."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    out = [0] * (max_degree + 1)
    for b in A.basis:
        d = A.degree(b)
        if d <= max_degree:
            out[d] += 1
    return out
