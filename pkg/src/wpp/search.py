"""Realizability of coefficient sequences by power sequences.

``phi_preimage_search`` decides whether a single coefficient sequence lies in
the image of phi by exhaustive backtracking; ``enumerate_phi_image`` lists the
whole image over PS(p) tables with bounded exponents.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import lcm, prod

from sympy import factorint

from .complex import facets_of
from .sequences import CoefficientSequence, PowerSequence, all_faces


@dataclass
class SearchResult:
    witness: PowerSequence | None
    complete: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.witness is not None

    def __str__(self):
        if self.witness is None:
            return "NONE (search complete)" if self.complete else "NONE (search aborted)"
        return f"witness after {self.nodes} nodes"


def _compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``, lex ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def ordered_factorizations(n: int, k: int) -> tuple:
    """Ordered k-tuples of positive ints with product n.

    Sorted lexicographically by the per-slot exponent tuples over the primes
    of n taken in increasing order.
    """
    primes = sorted(factorint(n).items())
    per_prime = [list(_compositions(a, k)) for _, a in primes]
    out = []
    for combo in product(*per_prime):
        key = tuple(tuple(comp[slot] for comp in combo) for slot in range(k))
        factors = tuple(prod(p ** comp[slot] for (p, _), comp in zip(primes, combo))
                        for slot in range(k))
        out.append((key, factors))
    out.sort()
    return tuple(f for _, f in out)


def phi_preimage_search(cs: CoefficientSequence, max_nodes: int | None = None) -> SearchResult:
    """Find a power sequence c with phi(c) == cs, or certify that none exists.

    Faces are filled in (cardinality, lex) order.  On a face s the entries
    c_i^s must be multiples of the lcm of c_i over the facets of s and must
    multiply to cs[s]; every such split is tried in a fixed order, so the
    search is complete and the witness it returns is the first one in that
    order.
    """
    m = cs.m
    faces = [s for s in all_faces(m) if len(s) >= 2]
    table = {s: (1,) * m for s in all_faces(m) if len(s) < 2}
    nodes = 0
    aborted = False

    def fill(k: int) -> bool:
        nonlocal nodes, aborted
        if k == len(faces):
            return True
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            aborted = True
            return False
        s = faces[k]
        need = [1] * len(s)
        for t in facets_of(s):
            row = table[t]
            need = [lcm(a, row[i - 1]) for a, i in zip(need, s)]
        floor = prod(need)
        if cs[s] % floor:
            return False
        for split in ordered_factorizations(cs[s] // floor, len(s)):
            vec = [1] * m
            for i, a, e in zip(s, need, split):
                vec[i - 1] = a * e
            table[s] = tuple(vec)
            if fill(k + 1):
                return True
            if aborted:
                return False
        del table[s]
        return False

    if fill(0):
        return SearchResult(PowerSequence(m, dict(table)), True, nodes)
    return SearchResult(None, not aborted, nodes)


# ---------- image enumeration ----------

MAX_IMAGE_M = 4
MAX_TABLE_BOUND = 2**28


def table_count_bound(m: int, max_exponent: int) -> int:
    """Upper bound on the number of PS(p) tables: free choice in every slot."""
    slots = sum(len(s) for s in all_faces(m) if len(s) >= 2)
    return (max_exponent + 1) ** slots


def _image_from(m: int, max_exponent: int, prefix: dict) -> set:
    faces = [s for s in all_faces(m) if len(s) >= 2]
    exps = {s: (0,) * m for s in all_faces(m) if len(s) < 2}
    exps.update(prefix)
    start = len(prefix)
    found = set()

    def fill(k: int):
        if k == len(faces):
            found.add(tuple(sum(exps[s]) for s in faces))
            return
        s = faces[k]
        lows = [max(exps[t][i - 1] for t in facets_of(s)) for i in s]
        for choice in product(*(range(lo, max_exponent + 1) for lo in lows)):
            vec = [0] * m
            for i, e in zip(s, choice):
                vec[i - 1] = e
            exps[s] = tuple(vec)
            fill(k + 1)
        exps.pop(s, None)

    fill(start)
    return found


def _image_worker(args):
    return _image_from(*args)


def enumerate_phi_image(m: int, p: int, max_exponent: int,
                        workers: int | None = None) -> list[CoefficientSequence]:
    """The image of phi on PS(p) tables with every entry in {1, p, ..., p**max_exponent}.

    Returned deduplicated and sorted by the value tuple in canonical face
    order.  ``workers`` (default: ``WPP_THREADS`` or 1) splits the search over
    the choices at the first edge; the result does not depend on it.
    """
    if max_exponent < 0:
        raise ValueError("max_exponent must be nonnegative")
    bound = table_count_bound(m, max_exponent)
    if m > MAX_IMAGE_M or bound > MAX_TABLE_BOUND:
        raise ValueError(f"refusing m={m}, max_exponent={max_exponent}: up to {bound:.3g} "
                         f"candidate tables (limits: {MAX_TABLE_BOUND:.3g} tables, m <= {MAX_IMAGE_M})")
    if workers is None:
        workers = int(os.environ.get("WPP_THREADS", "1"))
    faces = [s for s in all_faces(m) if len(s) >= 2]
    if not faces:
        sums = {()}
    elif workers <= 1:
        sums = _image_from(m, max_exponent, {})
    else:
        first = faces[0]
        jobs = []
        for choice in product(range(max_exponent + 1), repeat=len(first)):
            vec = [0] * m
            for i, e in zip(first, choice):
                vec[i - 1] = e
            jobs.append((m, max_exponent, {first: tuple(vec)}))
        sums = set()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_image_worker, jobs):
                sums |= part
    out = []
    for vals in sums:
        table = {s: 1 for s in all_faces(m) if len(s) < 2}
        table.update({s: p ** e for s, e in zip(faces, vals)})
        out.append(CoefficientSequence(m, table))
    out.sort(key=CoefficientSequence.sort_key)
    return out
