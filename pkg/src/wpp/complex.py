"""Simplices and simplicial complexes on the vertex set [m] = {1, ..., m}.

A simplex is a sorted tuple of 1-based vertices; ``()`` is the empty face.
Every enumeration yields faces in (cardinality, lexicographic) order so that
downstream tables and CLI output are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Simplex = tuple  # tuple[int, ...], strictly increasing

MAX_M = 20


def face_key(face: Simplex) -> tuple:
    return (len(face), face)


def simplex(vertices: Iterable[int], m: int | None = None) -> Simplex:
    """Canonicalize ``vertices`` into a simplex, rejecting repeats and bad labels."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise ValueError(f"duplicate vertex in face {vs}")
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"vertex {v!r} is not an integer")
        if v < 1 or (m is not None and v > m):
            raise ValueError(f"vertex {v} out of range 1..{m}")
    return tuple(sorted(vs))


def check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    if m > MAX_M:
        raise ValueError(f"m={m} exceeds the supported maximum {MAX_M}")


def subsets(vertices: Sequence[int]) -> Iterator[Simplex]:
    """All subsets of a sorted vertex tuple, in (cardinality, lex) order."""
    vertices = tuple(vertices)
    for k in range(len(vertices) + 1):
        yield from combinations(vertices, k)


def supersets(face: Simplex, m: int) -> Iterator[Simplex]:
    """Faces of the full simplex on [m] that contain ``face``, in canonical order."""
    rest = [v for v in range(1, m + 1) if v not in face]
    yield from sorted((tuple(sorted(face + e)) for e in subsets(rest)), key=face_key)


def is_subface(small: Simplex, big: Simplex) -> bool:
    return set(small) <= set(big)


def facets_of(face: Simplex) -> list[Simplex]:
    """Codimension-one faces of ``face`` (empty for the empty face)."""
    return [face[:k] + face[k + 1:] for k in range(len(face))]


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of faces of the simplex on [m].

    Vertices i <= m with ``(i,)`` not a face are ghost vertices.
    """

    m: int
    faces: frozenset

    def __post_init__(self):
        check_m(self.m)
        for f in self.faces:
            if f and (f[0] < 1 or f[-1] > self.m):
                raise ValueError(f"face {list(f)} not on vertex set [1..{self.m}]")
            for g in facets_of(f):
                if g not in self.faces:
                    raise ValueError(f"not downward closed: {list(f)} present, {list(g)} missing")
        if () not in self.faces:
            raise ValueError("the empty face must belong to the complex")

    def __contains__(self, face) -> bool:
        return tuple(face) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.sorted_faces())

    def sorted_faces(self) -> list[Simplex]:
        return sorted(self.faces, key=face_key)

    def vertices(self) -> list[int]:
        return [f[0] for f in self.sorted_faces() if len(f) == 1]

    def ghost_vertices(self) -> list[int]:
        return [i for i in range(1, self.m + 1) if (i,) not in self.faces]

    def maximal_faces(self) -> list[Simplex]:
        out = []
        for f in self.sorted_faces():
            if not any(len(g) > len(f) and is_subface(f, g) for g in self.faces):
                out.append(f)
        return out

    def is_subcomplex_of(self, other: SimplicialComplex) -> bool:
        return self.m == other.m and self.faces <= other.faces

    def is_simplex(self) -> bool:
        """True when the complex is the closure of a single face."""
        return len(self.maximal_faces()) == 1

    def __repr__(self):
        mf = [list(f) for f in self.maximal_faces()]
        return f"SimplicialComplex(m={self.m}, maximal_faces={mf})"

    def to_json(self) -> dict:
        return {"m": self.m, "maximal_faces": [list(f) for f in self.maximal_faces()]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        if not isinstance(data, dict) or "m" not in data or "maximal_faces" not in data:
            raise ValueError('complex JSON needs keys "m" and "maximal_faces"')
        return from_maximal_faces(data["m"], data["maximal_faces"])


def closure(m: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    check_m(m)
    out = {()}
    for f in faces:
        out.update(subsets(simplex(f, m)))
    return SimplicialComplex(m, frozenset(out))


def from_maximal_faces(m: int, maximal: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of the listed faces, plus the empty face."""
    return closure(m, maximal)


def full_simplex(m: int) -> SimplicialComplex:
    check_m(m)
    return SimplicialComplex(m, frozenset(subsets(range(1, m + 1))))


def boundary(face: Simplex, m: int | None = None) -> SimplicialComplex:
    """All proper subsets of a nonempty face."""
    face = simplex(face, m)
    if not face:
        raise ValueError("the empty simplex has no boundary")
    m = face[-1] if m is None else m
    check_m(m)
    return SimplicialComplex(m, frozenset(f for f in subsets(face) if f != face))


def full_subcomplex(K: SimplicialComplex, vertex_set: Iterable[int]) -> SimplicialComplex:
    """Faces of K lying in ``vertex_set``; other vertices of [m] become ghosts."""
    I = set(simplex(vertex_set, K.m))
    return SimplicialComplex(K.m, frozenset(f for f in K.faces if set(f) <= I))


def loads_complex(text: str) -> SimplicialComplex:
    return SimplicialComplex.from_json(json.loads(text))
