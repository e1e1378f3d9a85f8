"""p-adic exponent vectors: the group completions of PS(p) and CS(p).

Taking p-adic valuations entrywise turns the pointwise product of sequences
into addition of integer vectors, so the monoids embed in free abelian groups
and the distinguished generators can be compared by lattice arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping

from .complex import face_key, simplex, supersets
from .sequences import (CoefficientSequence, PowerSequence, all_faces, generator_c,
                        generator_d, generator_frak_c, generator_frak_d)


def valuation(n: int, p: int) -> int:
    """Exponent k with n == p**k; raises if n is not a power of p."""
    if n < 1:
        raise ValueError(f"{n} is not a positive integer")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise ValueError(f"entry {n * p**k} is not a power of {p}")
    return k


@dataclass(frozen=True)
class ExponentVector:
    """Finitely supported integer vector.

    ``kind`` is ``"ps"`` (keys are (face, vertex) pairs) or ``"cs"`` (keys are
    faces).  Zero entries are never stored.
    """

    kind: str
    p: int
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: v for k, v in self.entries.items() if v})

    def _check(self, other):
        if (self.kind, self.p) != (other.kind, other.p):
            raise ValueError("exponent vectors of different kinds or primes")

    def __add__(self, other: ExponentVector) -> ExponentVector:
        self._check(other)
        total = Counter(self.entries)
        total.update(other.entries)
        return ExponentVector(self.kind, self.p, dict(total))

    def __neg__(self) -> ExponentVector:
        return ExponentVector(self.kind, self.p, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: ExponentVector) -> ExponentVector:
        return self + (-other)

    def __rmul__(self, n: int) -> ExponentVector:
        return ExponentVector(self.kind, self.p, {k: n * v for k, v in self.entries.items()})

    def __eq__(self, other):
        return (isinstance(other, ExponentVector) and (self.kind, self.p) == (other.kind, other.p)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.kind, self.p, frozenset(self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def sorted_items(self) -> list:
        if self.kind == "ps":
            return sorted(self.entries.items(), key=lambda kv: (face_key(kv[0][0]), kv[0][1]))
        return sorted(self.entries.items(), key=lambda kv: face_key(kv[0]))

    def to_json(self) -> list:
        if self.kind == "ps":
            return [{"face": list(f), "vertex": i, "exp": e} for (f, i), e in self.sorted_items()]
        return [{"face": list(f), "exp": e} for f, e in self.sorted_items()]

    def __repr__(self):
        return f"ExponentVector({self.kind}, p={self.p}, {self.sorted_items()})"


def to_exponent_vector(x, p: int) -> ExponentVector:
    """Entrywise p-adic valuation of a sequence whose entries are all powers of p."""
    if isinstance(x, PowerSequence):
        return ExponentVector("ps", p, {(s, i): valuation(x[s][i - 1], p)
                                        for s in all_faces(x.m) for i in range(1, x.m + 1)})
    if isinstance(x, CoefficientSequence):
        return ExponentVector("cs", p, {s: valuation(x[s], p) for s in all_faces(x.m)})
    raise TypeError(f"cannot take exponent vector of {type(x).__name__}")


def from_exponent_vector(vec: ExponentVector, m: int):
    """Inverse of to_exponent_vector for nonnegative vectors (unchecked table)."""
    if any(v < 0 for v in vec.entries.values()):
        raise ValueError("negative exponents have no sequence representative")
    p = vec.p
    if vec.kind == "ps":
        return PowerSequence.raw(m, {s: tuple(p ** vec.entries.get((s, i), 0) for i in range(1, m + 1))
                                     for s in all_faces(m)})
    return CoefficientSequence.raw(m, {s: p ** vec.entries.get(s, 0) for s in all_faces(m)})


@dataclass
class MobiusReport:
    m: int
    tau: tuple
    j: int
    p: int
    ps_signed_sum: ExponentVector
    ps_target: ExponentVector
    cs_signed_sum: ExponentVector
    cs_target: ExponentVector

    @property
    def ps_ok(self) -> bool:
        return self.ps_signed_sum == self.ps_target

    @property
    def cs_ok(self) -> bool:
        return self.cs_signed_sum == self.cs_target

    @property
    def ok(self) -> bool:
        return self.ps_ok and self.cs_ok


def check_mobius_decomposition(m: int, tau, j: int, p: int) -> MobiusReport:
    """Compare d(tau, j) with the alternating product of c(s, j) over s containing tau.

    Works in the exponent lattice, where the alternating product becomes the
    signed sum of exponent vectors; the same is done for D(tau) and C(s).
    """
    tau = simplex(tau, m)
    ps_sum = ExponentVector("ps", p)
    cs_sum = ExponentVector("cs", p)
    for s in supersets(tau, m):
        sign = -1 if (len(s) - len(tau)) % 2 else 1
        ps_sum = ps_sum + sign * to_exponent_vector(generator_c(m, s, j, p), p)
        cs_sum = cs_sum + sign * to_exponent_vector(generator_frak_c(m, s, p), p)
    return MobiusReport(m, tau, j, p,
                        ps_sum, to_exponent_vector(generator_d(m, tau, j, p), p),
                        cs_sum, to_exponent_vector(generator_frak_d(m, tau, p), p))


def lattice_rank(vectors: list[ExponentVector]) -> int:
    """Rank over Q of a list of exponent vectors (exact elimination)."""
    from sympy import Matrix

    keys = sorted({k for v in vectors for k in v.entries}, key=repr)
    if not keys:
        return 0
    return Matrix([[v.entries.get(k, 0) for k in keys] for v in vectors]).rank()
