"""Power sequences, coefficient sequences and the map Phi between them.

A power sequence on [m] assigns to every face ``s`` of the full simplex a
vector ``(c_1^s, ..., c_m^s)`` of positive integers with ``c_i^s = 1`` off
``s`` and ``c_i^t | c_i^s`` whenever ``t`` is a subface of ``s``.  A
coefficient sequence assigns a positive integer to every face, normalized to
1 on the empty face and on vertices, with ``C[s'] * C[s''] | C[s]`` for every
disjoint decomposition ``s = s' + s''`` and no factor invertible in the
coefficient ring.

Both families are commutative monoids under the pointwise product and
``phi(c)[s] = prod(c_i^s for i in s)`` is a monoid map.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Mapping, NamedTuple, Union

from sympy import divisors, factorint, isprime

from .complex import Simplex, check_m, face_key, facets_of, is_subface, simplex, subsets


class SequenceError(ValueError):
    """Malformed input: missing faces, wrong shapes, non-positive entries."""


class Violation(NamedTuple):
    kind: str
    small: Simplex | None
    big: Simplex | None
    vertex: int | None
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


class ViolationError(ValueError):
    """A well-formed table that breaks one of the defining conditions."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"{len(self.violations)} violation(s):\n{lines}")


def all_faces(m: int) -> list[Simplex]:
    return list(subsets(range(1, m + 1)))


def _fmt(face) -> str:
    return "(" + ",".join(map(str, face)) + ")"


# ---------- coefficient rings ----------

ALL = "all"


@dataclass(frozen=True)
class CoefficientRing:
    """The subring Z[S^-1] of Q for a finite prime set S, or Q itself.

    ``CoefficientRing()`` is Z, ``CoefficientRing(ALL)`` is Q.
    """

    inverted_primes: Union[frozenset, str] = frozenset()

    def __post_init__(self):
        if self.inverted_primes == ALL:
            return
        ps = frozenset(self.inverted_primes)
        for p in ps:
            if not isinstance(p, int) or not isprime(p):
                raise ValueError(f"{p!r} is not a prime")
        object.__setattr__(self, "inverted_primes", ps)

    @property
    def is_rational_field(self) -> bool:
        return self.inverted_primes == ALL

    def is_unit(self, n: int) -> bool:
        if n == 0:
            return False
        if self.is_rational_field:
            return True
        return all(p in self.inverted_primes for p in factorint(abs(n)))

    def unit_part(self, n: int) -> int:
        """Largest positive divisor of ``n`` that is a unit of the ring."""
        if self.is_rational_field:
            return abs(n)
        return prod(p**e for p, e in factorint(abs(n)).items() if p in self.inverted_primes)

    def contains(self, q) -> bool:
        """Membership of a rational number: its denominator must be a unit."""
        return self.is_unit(q.denominator)

    def __str__(self):
        if self.is_rational_field:
            return "Q"
        if not self.inverted_primes:
            return "Z"
        return "Z[" + ",".join(f"1/{p}" for p in sorted(self.inverted_primes)) + "]"

    def to_json(self) -> dict:
        if self.is_rational_field:
            return {"inverted_primes": ALL}
        return {"inverted_primes": sorted(self.inverted_primes)}

    @classmethod
    def from_json(cls, data: dict) -> CoefficientRing:
        ip = data.get("inverted_primes") if isinstance(data, dict) else None
        if ip == ALL:
            return cls(ALL)
        if not isinstance(ip, list):
            raise SequenceError('ring JSON needs "inverted_primes": list of primes or "all"')
        return cls(frozenset(ip))

    @classmethod
    def parse(cls, text: str) -> CoefficientRing:
        """Parse ``Z``, ``Q`` or ``Z[1/2,1/3]``."""
        t = text.replace(" ", "")
        if t == "Z":
            return cls()
        if t == "Q":
            return cls(ALL)
        mt = re.fullmatch(r"Z\[((?:1/\d+)(?:,1/\d+)*)\]", t)
        if not mt:
            raise ValueError(f"cannot parse ring {text!r}; expected Z, Q or Z[1/p,...]")
        return cls(frozenset(int(part[2:]) for part in mt.group(1).split(",")))


Z = CoefficientRing()
Q = CoefficientRing(ALL)


# ---------- power sequences ----------

def _check_table_faces(m: int, table: Mapping) -> None:
    expected = set(all_faces(m))
    missing = expected - set(table)
    extra = set(table) - expected
    if missing:
        raise SequenceError(f"missing entries for faces {[list(f) for f in sorted(missing, key=face_key)]}")
    if extra:
        raise SequenceError(f"entries for faces outside [1..{m}]: {[list(f) for f in extra]}")


def check_power_sequence(m: int, table: Mapping[Simplex, tuple]) -> list[Violation]:
    """Violations of the power-sequence conditions, empty if ``table`` is valid.

    Divisibility is only checked between a face and its facets; transitivity
    covers every other nested pair.
    """
    check_m(m)
    _check_table_faces(m, table)
    for f, vec in table.items():
        if len(vec) != m:
            raise SequenceError(f"face {list(f)}: expected {m} entries, got {len(vec)}")
        for v in vec:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise SequenceError(f"face {list(f)}: entry {v!r} is not a positive integer")
    out = []
    for s in sorted(table, key=face_key):
        vec = table[s]
        for i in range(1, m + 1):
            if i not in s and vec[i - 1] != 1:
                out.append(Violation("off-face", None, s, i,
                                     f"c_{i}^{_fmt(s)} = {vec[i - 1]} but {i} is not in the face"))
        for t in sorted(facets_of(s), key=face_key):
            for i in s:
                a, b = table[t][i - 1], vec[i - 1]
                if b % a:
                    out.append(Violation("divisibility", t, s, i,
                                         f"c_{i}^{_fmt(t)} = {a} does not divide c_{i}^{_fmt(s)} = {b}"))
    return out


@dataclass(frozen=True, eq=False)
class PowerSequence:
    m: int
    table: Mapping[Simplex, tuple]

    def __post_init__(self):
        table = {simplex(f, self.m): tuple(v) for f, v in self.table.items()}
        violations = check_power_sequence(self.m, table)
        if violations:
            raise ViolationError(violations)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_valid", True)

    @classmethod
    def raw(cls, m: int, table: Mapping) -> PowerSequence:
        """An unchecked table, e.g. a generator of the group completion."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "table", {tuple(f): tuple(v) for f, v in table.items()})
        object.__setattr__(obj, "_valid", None)
        return obj

    def violations(self) -> list[Violation]:
        return check_power_sequence(self.m, self.table)

    @property
    def is_valid(self) -> bool:
        if self._valid is None:
            object.__setattr__(self, "_valid", not self.violations())
        return self._valid

    def __getitem__(self, face) -> tuple:
        return self.table[tuple(face)]

    def entry(self, face, i: int) -> int:
        return self.table[tuple(face)][i - 1]

    def __eq__(self, other):
        return isinstance(other, PowerSequence) and self.m == other.m and self.table == other.table

    def __hash__(self):
        return hash((self.m, tuple(self.table[f] for f in all_faces(self.m))))

    def __mul__(self, other: PowerSequence) -> PowerSequence:
        return monoid_mul(self, other)

    @property
    def in_ps(self) -> bool:
        """Whether this is a valid power sequence with c_i^{i} = 1, the domain of phi."""
        return (all(self.table[(i,)][i - 1] == 1 for i in range(1, self.m + 1))
                and self.is_valid)

    def is_minimal(self) -> bool:
        base = [self.table[(i,)][i - 1] for i in range(1, self.m + 1)]
        return self == minimal_power_sequence(self.m, base)

    def __repr__(self):
        rows = ", ".join(f"{_fmt(f)}:{self.table[f]}" for f in all_faces(self.m) if f)
        return f"PowerSequence(m={self.m}, {rows})"

    def to_json(self) -> dict:
        return {"m": self.m,
                "entries": {_face_key_text(f): list(self.table[f]) for f in all_faces(self.m)}}

    @classmethod
    def from_json(cls, data: dict) -> PowerSequence:
        m, entries = _parse_entries(data)
        return cls(m, entries)


def validate_power_sequence(m: int, table: Mapping) -> PowerSequence:
    """Build a PowerSequence, raising ViolationError listing every offending (t, s, i)."""
    return PowerSequence(m, table)


def minimal_power_sequence(m: int, base: Iterable[int]) -> PowerSequence:
    base = list(base)
    check_m(m)
    if len(base) != m or any(b < 1 for b in base):
        raise ValueError(f"base must hold {m} positive integers")
    table = {s: tuple(base[i - 1] if i in s else 1 for i in range(1, m + 1)) for s in all_faces(m)}
    return PowerSequence(m, table)


def ones_power_sequence(m: int) -> PowerSequence:
    return minimal_power_sequence(m, [1] * m)


def ratio(ps: PowerSequence, small, big) -> tuple:
    """The componentwise quotient c^big / c^small for nested faces."""
    small, big = simplex(small, ps.m), simplex(big, ps.m)
    if not is_subface(small, big):
        raise ValueError(f"{list(small)} is not a subface of {list(big)}")
    return tuple(b // a for a, b in zip(ps[small], ps[big]))


# ---------- coefficient sequences ----------

def check_coefficient_sequence(m: int, table: Mapping[Simplex, int],
                               ring: CoefficientRing = Z) -> list[Violation]:
    check_m(m)
    _check_table_faces(m, table)
    for f, v in table.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise SequenceError(f"face {list(f)}: value {v!r} is not a positive integer")
    out = []
    for s in [()] + [(i,) for i in range(1, m + 1)]:
        if table[s] != 1:
            out.append(Violation("condition-1", None, s, None,
                                 f"C{_fmt(s)} = {table[s]} must equal 1"))
    faces = sorted(table, key=face_key)
    for s in faces:
        if len(s) < 2:
            continue
        # every unordered split {a, s - a} with a the part holding min(s)
        first, rest = s[0], s[1:]
        for part in subsets(rest):
            a = (first,) + part
            b = tuple(v for v in s if v not in a)
            if not b:
                continue
            if table[s] % (table[a] * table[b]):
                out.append(Violation("condition-2", a, s, None,
                                     f"C{_fmt(a)}*C{_fmt(b)} = {table[a] * table[b]} "
                                     f"does not divide C{_fmt(s)} = {table[s]}"))
    if ring.is_rational_field:
        bad = [s for s in faces if table[s] != 1]
    else:
        bad = [s for s in faces if any(table[s] % p == 0 for p in ring.inverted_primes)]
    for s in bad:
        out.append(Violation("condition-3", None, s, None,
                             f"C{_fmt(s)} = {table[s]} shares a factor with a unit of {ring}"))
    return out


@dataclass(frozen=True, eq=False)
class CoefficientSequence:
    m: int
    table: Mapping[Simplex, int]
    ring: CoefficientRing = Z

    def __post_init__(self):
        table = {simplex(f, self.m): v for f, v in self.table.items()}
        violations = check_coefficient_sequence(self.m, table, self.ring)
        if violations:
            raise ViolationError(violations)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_valid", True)

    @classmethod
    def raw(cls, m: int, table: Mapping, ring: CoefficientRing = Z) -> CoefficientSequence:
        obj = object.__new__(cls)
        object.__setattr__(obj, "m", m)
        object.__setattr__(obj, "table", {tuple(f): v for f, v in table.items()})
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "_valid", None)
        return obj

    def violations(self) -> list[Violation]:
        return check_coefficient_sequence(self.m, self.table, self.ring)

    @property
    def is_valid(self) -> bool:
        if self._valid is None:
            object.__setattr__(self, "_valid", not self.violations())
        return self._valid

    def __getitem__(self, face) -> int:
        return self.table[tuple(face)]

    def __eq__(self, other):
        return (isinstance(other, CoefficientSequence) and self.m == other.m
                and self.table == other.table)

    def __hash__(self):
        return hash((self.m, tuple(self.table[f] for f in all_faces(self.m))))

    def __mul__(self, other: CoefficientSequence) -> CoefficientSequence:
        return monoid_mul(self, other)

    def sort_key(self) -> tuple:
        return tuple(self.table[f] for f in all_faces(self.m))

    def __repr__(self):
        rows = ", ".join(f"{_fmt(f)}:{self.table[f]}" for f in all_faces(self.m) if len(f) > 1)
        return f"CoefficientSequence(m={self.m}, {rows})"

    def to_json(self) -> dict:
        return {"m": self.m,
                "entries": {_face_key_text(f): self.table[f] for f in all_faces(self.m)}}

    @classmethod
    def from_json(cls, data: dict, ring: CoefficientRing = Z) -> CoefficientSequence:
        m, entries = _parse_entries(data)
        return cls(m, entries, ring)


def validate_coefficient_sequence(m: int, table: Mapping, ring: CoefficientRing = Z) -> CoefficientSequence:
    return CoefficientSequence(m, table, ring)


def coefficient_sequence_from_rule(m: int, rule, ring: CoefficientRing = Z) -> CoefficientSequence:
    """Build a coefficient sequence from a callable face -> value."""
    return CoefficientSequence(m, {s: rule(s) for s in all_faces(m)}, ring)


def phi(ps: PowerSequence) -> CoefficientSequence:
    """The coefficient sequence s -> prod_{i in s} c_i^s.

    Only defined on power sequences with c_i^{i} = 1 for every vertex i.
    """
    if not ps.is_valid:
        raise ViolationError(ps.violations())
    bad = [Violation("phi-domain", None, (i,), i, f"c_{i}^({i}) = {ps.entry((i,), i)} must equal 1")
           for i in range(1, ps.m + 1) if ps.entry((i,), i) != 1]
    if bad:
        raise ViolationError(bad)
    return CoefficientSequence(ps.m, {s: prod(ps.entry(s, i) for i in s) for s in all_faces(ps.m)})


def normalize(m: int, table: Mapping, ring: CoefficientRing):
    """Split each value as unit * rest with the rest coprime to every unit.

    Returns ``(sequence, units)`` where ``sequence`` is a valid coefficient
    sequence over ``ring`` giving an isomorphic sphere product algebra.  Over Q
    every value is a unit, so the normalized sequence is identically 1.
    """
    table = {simplex(f, m): v for f, v in table.items()}
    pre = [v for v in check_coefficient_sequence(m, table, Z)]
    if pre:
        raise ViolationError(pre)
    units = {s: ring.unit_part(v) for s, v in table.items()}
    rest = {s: table[s] // units[s] for s in table}
    return CoefficientSequence(m, rest, ring), units


def monoid_mul(a, b):
    """Pointwise product of two power sequences or two coefficient sequences."""
    if type(a) is not type(b):
        raise TypeError("cannot multiply a power sequence with a coefficient sequence")
    if a.m != b.m:
        raise ValueError(f"mismatched m: {a.m} vs {b.m}")
    # valid inputs give a valid product; group-completion generators stay unchecked
    checked = a.is_valid and b.is_valid
    if isinstance(a, PowerSequence):
        table = {s: tuple(x * y for x, y in zip(a[s], b[s])) for s in a.table}
        return PowerSequence(a.m, table) if checked else PowerSequence.raw(a.m, table)
    if a.ring != b.ring:
        raise ValueError("coefficient sequences over different rings")
    table = {s: a[s] * b[s] for s in a.table}
    return CoefficientSequence(a.m, table, a.ring) if checked else CoefficientSequence.raw(a.m, table, a.ring)


# ---------- distinguished generators ----------
#
# These generate the group completions of PS(p) and CS(p) but mostly lie
# outside the monoids: d(t, j) and D(t) break divisibility unless t = [m], and
# c(t, j) with j not in t puts p off the face.  They are returned unchecked;
# ``is_valid`` / ``in_ps`` report membership.

def generator_c(m: int, tau, j: int, p: int) -> PowerSequence:
    """p in slot j on every face containing tau; 1 elsewhere."""
    tau = simplex(tau, m)
    return PowerSequence.raw(m, {s: tuple(p if i == j and is_subface(tau, s) else 1
                                          for i in range(1, m + 1)) for s in all_faces(m)})


def generator_d(m: int, tau, j: int, p: int) -> PowerSequence:
    """p in slot j on the face tau alone."""
    tau = simplex(tau, m)
    return PowerSequence.raw(m, {s: tuple(p if i == j and s == tau else 1
                                          for i in range(1, m + 1)) for s in all_faces(m)})


def generator_frak_c(m: int, tau, p: int) -> CoefficientSequence:
    tau = simplex(tau, m)
    return CoefficientSequence.raw(m, {s: p if is_subface(tau, s) else 1 for s in all_faces(m)})


def generator_frak_d(m: int, tau, p: int) -> CoefficientSequence:
    tau = simplex(tau, m)
    return CoefficientSequence.raw(m, {s: p if s == tau else 1 for s in all_faces(m)})


def phi_extended(ps: PowerSequence) -> CoefficientSequence:
    """Product over all m slots, with no validation.

    Agrees with ``phi`` on genuine power sequences (off-face slots are 1) and
    extends it to the unchecked group-completion generators.
    """
    return CoefficientSequence.raw(ps.m, {s: prod(ps[s]) for s in all_faces(ps.m)})


# ---------- random instances ----------

def random_power_sequence(m: int, rng: random.Random, values: Iterable[int] = (1, 2, 3, 4, 6, 12),
                          normalized: bool = True) -> PowerSequence:
    """A random valid power sequence with every entry drawn from ``values``.

    ``values`` must be divisor-closed (closed under taking divisors and lcm),
    e.g. ``divisors(n)``.  With ``normalized`` the vertex entries are 1, so
    the result lies in the domain of phi.
    """
    values = sorted(set(values))
    vs = set(values)
    for a in values:
        for b in values:
            if lcm(a, b) not in vs or gcd(a, b) not in vs:
                raise ValueError("values must be closed under gcd and lcm")
    table = {(): (1,) * m}
    for s in all_faces(m)[1:]:
        vec = [1] * m
        for i in s:
            need = 1
            for t in facets_of(s):
                need = lcm(need, table[t][i - 1])
            if normalized and len(s) == 1:
                vec[i - 1] = 1
            else:
                vec[i - 1] = rng.choice([v for v in values if v % need == 0])
        table[s] = tuple(vec)
    return PowerSequence(m, table)


def divisor_closed(n: int) -> list[int]:
    return [int(d) for d in divisors(n)]


# ---------- JSON ----------

def _face_key_text(face: Simplex) -> str:
    return json.dumps(list(face), separators=(",", ":"))


def _parse_entries(data) -> tuple[int, dict]:
    if not isinstance(data, dict) or "m" not in data or "entries" not in data:
        raise SequenceError('sequence JSON needs keys "m" and "entries"')
    m = data["m"]
    if not isinstance(m, int):
        raise SequenceError(f"m must be an integer, got {m!r}")
    check_m(m)
    entries = {}
    for key, value in data["entries"].items():
        try:
            face = json.loads(key)
        except json.JSONDecodeError as exc:
            raise SequenceError(f"bad face key {key!r}") from exc
        if not isinstance(face, list):
            raise SequenceError(f"face key {key!r} is not a JSON array")
        try:
            face = simplex(face, m)
        except ValueError as exc:
            raise SequenceError(str(exc)) from exc
        if face in entries:
            raise SequenceError(f"face {list(face)} listed twice")
        entries[face] = tuple(value) if isinstance(value, list) else value
    return m, entries
