"""Brute-force reference computations for checking the algebra engine.

Nothing here calls the engine's product.  Basis elements are treated as words
in the generators, products are concatenations, and the sign comes from
bubble-sorting the word into vertex order one adjacent swap at a time.
Weighted coefficients are read off the closed k-fold generator formula
rather than the pairwise rule the engine uses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian

from sympy import Matrix

from .algebra import (AlgebraElement, BasisElement, GradedAlgebra, SphereAlgebra, WeightedAlgebra,
                      eta_star, include_full_subcomplex, restrict)
from .complex import SimplicialComplex, closure, full_subcomplex, subsets


MAX_BASIS = 512


@dataclass
class OracleReport:
    instance: str
    prop: str
    ok: bool
    checked: int = 0
    counterexample: dict | None = None

    def __post_init__(self):
        if self.ok != (self.counterexample is None):
            raise ValueError("a counterexample is present exactly when the check fails")

    def __bool__(self):
        return self.ok

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        line = f"[{status}] {self.prop} on {self.instance} ({self.checked} cases)"
        if self.counterexample:
            line += f"\n    counterexample: {self.counterexample}"
        return line

    def to_json(self) -> dict:
        return {"instance": self.instance, "property": self.prop, "pass": self.ok,
                "checked": self.checked,
                "counterexample": {k: str(v) for k, v in self.counterexample.items()}
                if self.counterexample else None}


def _sort_word(word, degree):
    """Bubble sort generators (vertex, index) by vertex; returns (sorted word, sign)."""
    word = list(word)
    sign = 1
    for end in range(len(word) - 1, 0, -1):
        for k in range(end):
            if word[k][0] > word[k + 1][0]:
                if degree(*word[k]) % 2 and degree(*word[k + 1]) % 2:
                    sign = -sign
                word[k], word[k + 1] = word[k + 1], word[k]
    return word, sign


def _word_of(b: BasisElement):
    return list(zip(b.face, b.index))


def _basis_words(gens, K: SimplicialComplex):
    out = []
    for face in sorted(K.faces, key=lambda f: (len(f), f)):
        ranges = [range(len(gens.degrees[i - 1])) for i in face]
        for idx in cartesian(*ranges):
            out.append(BasisElement(face, tuple(idx)))
    return out


def ordinary_star_algebra(gens, K: SimplicialComplex) -> dict:
    """Reference multiplication table of the unweighted algebra.

    Maps each basis pair (a, b) with a nonzero product to ``(sign, target)``.
    Products with a repeated vertex, or whose vertices do not span a face of
    K, vanish.
    """
    basis = _basis_words(gens, K)
    table = {}
    for a in basis:
        for b in basis:
            word = _word_of(a) + _word_of(b)
            verts = [v for v, _ in word]
            if len(set(verts)) < len(verts):
                continue
            if tuple(sorted(verts)) not in K.faces:
                continue
            ordered, sign = _sort_word(word, gens.degree)
            table[(a, b)] = (sign, BasisElement(tuple(v for v, _ in ordered),
                                                tuple(j for _, j in ordered)))
    return table


def generator_monomial_coefficient(A: GradedAlgebra, face: tuple) -> Fraction:
    """Coefficient k with y_{i1} ... y_{ik} = k * y_face for sorted distinct vertices."""
    if isinstance(A, SphereAlgebra):
        return Fraction(A.cs[face])
    if isinstance(A, WeightedAlgebra):
        c = A.c
        k = Fraction(1)
        for i in face:
            k *= Fraction(c.entry(face, i), c.entry((i,), i))
        return k
    raise TypeError(f"no generator formula for {type(A).__name__}")


def kary_generator_expansion(A: GradedAlgebra, refs) -> AlgebraElement:
    """Evaluate a product of generators y_{i,j} directly from the k-fold formula."""
    refs = [tuple(r) if isinstance(r, (tuple, list)) else (r, 0) for r in refs]
    if not refs:
        return AlgebraElement(A, {BasisElement((), ()): 1})
    verts = [i for i, _ in refs]
    if len(set(verts)) < len(verts):
        return AlgebraElement(A, {})
    ordered, sign = _sort_word(refs, A.gens.degree)
    face = tuple(i for i, _ in ordered)
    if face not in A.K.faces:
        return AlgebraElement(A, {})
    coeff = sign * generator_monomial_coefficient(A, face)
    return AlgebraElement(A, {BasisElement(face, tuple(j for _, j in ordered)): coeff})


def generator_route_product(A: GradedAlgebra, a: BasisElement, b: BasisElement) -> AlgebraElement:
    """Product of two basis elements computed by expanding both into generators.

    Each y_t equals (generator monomial on t) / k(t), so
    y_t * y_w = k(t + w) * sign / (k(t) k(w)) * y_{t+w}.
    """
    ka = generator_monomial_coefficient(A, a.face)
    kb = generator_monomial_coefficient(A, b.face)
    word = _word_of(a) + _word_of(b)
    return (Fraction(1) / (ka * kb)) * kary_generator_expansion(A, word)


def splitting_series(gens, K: SimplicialComplex, max_degree: int) -> list[int]:
    """Sum over faces t of K of the product of the reduced vertex series on t."""
    total = [0] * (max_degree + 1)
    for face in K.faces:
        poly = [1] + [0] * max_degree
        for i in face:
            vertex = [0] * (max_degree + 1)
            for d in gens.degrees[i - 1]:
                if d <= max_degree:
                    vertex[d] += 1
            new = [0] * (max_degree + 1)
            for p, x in enumerate(poly):
                if x:
                    for q, y in enumerate(vertex):
                        if y and p + q <= max_degree:
                            new[p + q] += x * y
            poly = new
        total = [s + x for s, x in zip(total, poly)]
    return total


# ---------- exhaustive property sweeps ----------

PROPERTIES = ("associativity", "graded-commutativity", "eta-ring-hom", "restriction-ring-hom",
              "eta-injective", "integrality", "generator-route", "restrict-include")


def _elem(A, b):
    return AlgebraElement(A, {b: 1})


def _describe(A) -> str:
    return repr(A)


def check_associativity(A, triples=None) -> OracleReport:
    basis = A.basis
    triples = triples if triples is not None else cartesian(basis, basis, basis)
    n = 0
    for a, b, c in triples:
        n += 1
        x, y, z = _elem(A, a), _elem(A, b), _elem(A, c)
        left, right = (x * y) * z, x * (y * z)
        if left != right:
            return OracleReport(_describe(A), "associativity", False, n,
                                {"triple": (a, b, c), "(xy)z": left, "x(yz)": right})
    return OracleReport(_describe(A), "associativity", True, n)


def check_graded_commutativity(A) -> OracleReport:
    n = 0
    for a in A.basis:
        for b in A.basis:
            n += 1
            x, y = _elem(A, a), _elem(A, b)
            sign = -1 if (A.degree(a) * A.degree(b)) % 2 else 1
            if x * y != sign * (y * x):
                return OracleReport(_describe(A), "graded-commutativity", False, n,
                                    {"pair": (a, b), "xy": x * y, "yx": y * x})
    return OracleReport(_describe(A), "graded-commutativity", True, n)


def _simplex_pieces(A: WeightedAlgebra):
    if A.K.is_simplex():
        yield A
        return
    for top in A.K.maximal_faces():
        yield A.on_complex(closure(A.m, [top]))


def check_eta_ring_hom(A: WeightedAlgebra) -> OracleReport:
    n = 0
    for B in _simplex_pieces(A):
        for a in B.basis:
            for b in B.basis:
                n += 1
                x, y = _elem(B, a), _elem(B, b)
                left, right = eta_star(B, x * y), eta_star(B, x) * eta_star(B, y)
                if left != right:
                    return OracleReport(_describe(A), "eta-ring-hom", False, n,
                                        {"simplex": B.K.maximal_faces()[0], "pair": (a, b),
                                         "eta(xy)": left, "eta(x)eta(y)": right})
    return OracleReport(_describe(A), "eta-ring-hom", True, n)


def check_eta_injective(A: WeightedAlgebra) -> OracleReport:
    """Full column rank of the matrix of eta* in every degree, by exact elimination."""
    n = 0
    for B in _simplex_pieces(A):
        O = B.ordinary()
        for d in sorted({B.degree(b) for b in B.basis}):
            cols = B.basis_in_degree(d)
            rows = O.basis_in_degree(d)
            M = Matrix([[eta_star(B, _elem(B, col)).coefficient(row) for col in cols] for row in rows])
            n += 1
            if M.rank() != len(cols):
                return OracleReport(_describe(A), "eta-injective", False, n,
                                    {"simplex": B.K.maximal_faces()[0], "degree": d,
                                     "rank": M.rank(), "columns": len(cols)})
    return OracleReport(_describe(A), "eta-injective", True, n)


def restriction_targets(K: SimplicialComplex) -> list[SimplicialComplex]:
    """Every full subcomplex, plus K with each maximal face removed."""
    out = {full_subcomplex(K, I) for I in subsets(range(1, K.m + 1))}
    for top in K.maximal_faces():
        if top:
            out.add(SimplicialComplex(K.m, K.faces - {top}))
    return sorted(out, key=lambda L: (len(L.faces), sorted(L.faces)))


def check_restriction_ring_hom(A: WeightedAlgebra) -> OracleReport:
    n = 0
    for L in restriction_targets(A.K):
        for a in A.basis:
            for b in A.basis:
                n += 1
                x, y = _elem(A, a), _elem(A, b)
                left = restrict(A, L, x * y)
                right = restrict(A, L, x) * restrict(A, L, y)
                if left != right:
                    return OracleReport(_describe(A), "restriction-ring-hom", False, n,
                                        {"L": L, "pair": (a, b), "r(xy)": left, "r(x)r(y)": right})
    return OracleReport(_describe(A), "restriction-ring-hom", True, n)


def check_restrict_include(A: WeightedAlgebra) -> OracleReport:
    """For every vertex set I: restriction after inclusion of A(K_I) is the identity,
    and inclusion is multiplicative."""
    n = 0
    for I in subsets(range(1, A.m + 1)):
        KI = full_subcomplex(A.K, I)
        B = A.on_complex(KI)
        for a in B.basis:
            x = _elem(B, a)
            n += 1
            back = restrict(A, KI, include_full_subcomplex(A, I, x))
            if back != x:
                return OracleReport(_describe(A), "restrict-include", False, n,
                                    {"I": I, "element": x, "round trip": back})
            for b in B.basis:
                y = _elem(B, b)
                left = include_full_subcomplex(A, I, x * y)
                right = include_full_subcomplex(A, I, x) * include_full_subcomplex(A, I, y)
                if left != right:
                    return OracleReport(_describe(A), "restrict-include", False, n,
                                        {"I": I, "pair": (a, b), "i(xy)": left, "i(x)i(y)": right})
    return OracleReport(_describe(A), "restrict-include", True, n)


def check_integrality(A) -> OracleReport:
    n = 0
    for a in A.basis:
        for b in A.basis:
            n += 1
            r = A.basis_product(a, b)
            if r is not None and (Fraction(r[0]).denominator != 1 or not A.ring.contains(Fraction(r[0]))):
                return OracleReport(_describe(A), "integrality", False, n,
                                    {"pair": (a, b), "coefficient": r[0]})
    return OracleReport(_describe(A), "integrality", True, n)


def check_generator_route(A) -> OracleReport:
    """Engine products against the expansion through generator monomials."""
    n = 0
    for a in A.basis:
        for b in A.basis:
            n += 1
            engine = _elem(A, a) * _elem(A, b)
            ref = generator_route_product(A, a, b)
            if engine != ref:
                return OracleReport(_describe(A), "generator-route", False, n,
                                    {"pair": (a, b), "engine": engine, "oracle": ref})
    return OracleReport(_describe(A), "generator-route", True, n)


def exhaustive_check(A: GradedAlgebra, prop: str, samples: int | None = None,
                     seed: int = 0) -> OracleReport:
    """Run one property sweep over every basis pair or triple of A.

    With ``samples`` the associativity sweep draws that many random triples
    instead of all of them.
    """
    if prop not in PROPERTIES:
        raise ValueError(f"unknown property {prop!r}; choose from {PROPERTIES}")
    if len(A.basis) > MAX_BASIS:
        raise ValueError(f"basis has {len(A.basis)} elements; exhaustive checks allow at most {MAX_BASIS}")
    if prop == "associativity":
        triples = None
        if samples is not None:
            rng = random.Random(seed)
            triples = [tuple(rng.choice(A.basis) for _ in range(3)) for _ in range(samples)]
        return check_associativity(A, triples)
    if prop == "graded-commutativity":
        return check_graded_commutativity(A)
    if prop == "integrality":
        return check_integrality(A)
    if prop == "generator-route":
        return check_generator_route(A)
    if not isinstance(A, WeightedAlgebra):
        raise ValueError(f"{prop} needs a WeightedAlgebra")
    if prop == "eta-ring-hom":
        return check_eta_ring_hom(A)
    if prop == "eta-injective":
        return check_eta_injective(A)
    if prop == "restrict-include":
        return check_restrict_include(A)
    return check_restriction_ring_hom(A)


def engine_table(A: GradedAlgebra) -> dict:
    """The engine's nonzero structure constants in the oracle's table format."""
    return {k: v for k, v in A.structure_constants().items()}


def compare_with_ordinary(A: WeightedAlgebra) -> OracleReport:
    """Engine table of A against the unweighted reference table."""
    ref = ordinary_star_algebra(A.gens, A.K)
    eng = engine_table(A)
    n = len(A.basis) ** 2
    for key in sorted(set(ref) | set(eng), key=lambda k: (A.basis_position[k[0]], A.basis_position[k[1]])):
        if ref.get(key) != eng.get(key):
            return OracleReport(_describe(A), "ordinary-star-table", False, n,
                                {"pair": key, "engine": eng.get(key), "oracle": ref.get(key)})
    return OracleReport(_describe(A), "ordinary-star-table", True, n)
