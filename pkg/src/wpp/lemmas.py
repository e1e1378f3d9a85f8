"""Machine checks of the statements about phi at a chosen (m, p).

Each check returns a ``LemmaResult``; ``run_all`` bundles them.  The m = 3
counterexamples are lifted to larger m by letting vertices beyond 3 act
trivially (c_i^s = c_i^{s & {1,2,3}} for i <= 3, 1 otherwise).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .lattice import check_mobius_decomposition
from .search import enumerate_phi_image, phi_preimage_search, table_count_bound, MAX_TABLE_BOUND
from .sequences import (CoefficientSequence, PowerSequence, all_faces, coefficient_sequence_from_rule,
                        generator_c, generator_d, generator_frak_c, generator_frak_d, phi,
                        phi_extended)


@dataclass
class LemmaResult:
    name: str
    ok: bool
    checked: int
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def __str__(self):
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.checked} checked)"

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.ok, "checked": self.checked, "detail": self.detail,
                "failures": [str(f) for f in self.failures[:10]]}


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _lift(m: int, table3: dict) -> PowerSequence:
    def entry(s):
        core = tuple(v for v in s if v <= 3)
        return tuple(table3[core][i - 1] if i <= 3 else 1 for i in range(1, m + 1))
    return PowerSequence(m, {s: entry(s) for s in all_faces(m)})


def non_injectivity_pair(m: int, p: int) -> tuple[PowerSequence, PowerSequence]:
    """Two distinct power sequences with the same image under phi (m >= 3)."""
    if m < 3:
        raise ValueError("the counterexample needs m >= 3")
    base = {
        (): (1, 1, 1), (1,): (1, 1, 1), (2,): (1, 1, 1), (3,): (1, 1, 1),
        (1, 2): (p, 1, 1), (1, 3): (p, 1, 1), (2, 3): (1, p, 1), (1, 2, 3): (p, p, 1),
    }
    swapped = dict(base)
    swapped[(1, 2)] = (1, p, 1)
    return _lift(m, base), _lift(m, swapped)


def non_surjectivity_sequence(m: int, p: int = 2) -> CoefficientSequence:
    """p on faces meeting {1,2,3} in at least two vertices; 1 elsewhere (m >= 3)."""
    if m < 3:
        raise ValueError("the counterexample needs m >= 3")
    return coefficient_sequence_from_rule(m, lambda s: p if len([v for v in s if v <= 3]) >= 2 else 1)


@_timed
def check_generators(m: int, p: int) -> LemmaResult:
    """phi(c(t, j)) = C(t) and phi(d(t, j)) = D(t) for every face t and vertex j."""
    n, bad = 0, []
    for tau in all_faces(m):
        for j in range(1, m + 1):
            n += 1
            if phi_extended(generator_c(m, tau, j, p)) != generator_frak_c(m, tau, p):
                bad.append(("c", tau, j))
            if phi_extended(generator_d(m, tau, j, p)) != generator_frak_d(m, tau, p):
                bad.append(("d", tau, j))
            gc = generator_c(m, tau, j, p)
            if gc.in_ps and phi(gc) != generator_frak_c(m, tau, p):
                bad.append(("c/phi", tau, j))
    return LemmaResult("generators", not bad, n, f"m={m}, p={p}, all (face, vertex) pairs", failures=bad)


@_timed
def check_mobius(m: int, p: int) -> LemmaResult:
    """d(t, j) is the alternating product of c(s, j) over s containing t."""
    n, bad = 0, []
    for tau in all_faces(m):
        for j in range(1, m + 1):
            n += 1
            if not check_mobius_decomposition(m, tau, j, p).ok:
                bad.append((tau, j))
    return LemmaResult("mobius-decomposition", not bad, n, f"m={m}, p={p}", failures=bad)


@_timed
def check_non_injectivity(m: int, p: int) -> LemmaResult:
    if m < 3:
        return LemmaResult("non-injectivity", True, 0, f"vacuous for m={m}")
    c, cbar = non_injectivity_pair(m, p)
    ok = c != cbar and phi(c) == phi(cbar)
    return LemmaResult("non-injectivity", ok, 1, f"m={m}, p={p}: c != cbar, phi(c) == phi(cbar)")


@_timed
def check_non_surjectivity(m: int, p: int) -> LemmaResult:
    if m < 3:
        return LemmaResult("non-surjectivity", True, 0, f"vacuous for m={m}")
    res = phi_preimage_search(non_surjectivity_sequence(m, p))
    ok = res.witness is None and res.complete
    return LemmaResult("non-surjectivity", ok, res.nodes, f"m={m}, C=p on |s & [3]| >= 2: {res}")


@_timed
def check_two_vertex_realizability(max_n: int = 100) -> LemmaResult:
    """Every C(1,2) = n, 1 <= n <= max_n, has a preimage c^(1,2) = (a, b) with ab = n."""
    bad = []
    for n in range(1, max_n + 1):
        cs = CoefficientSequence(2, {(): 1, (1,): 1, (2,): 1, (1, 2): n})
        res = phi_preimage_search(cs)
        w = res.witness
        if w is None or w.entry((1, 2), 1) * w.entry((1, 2), 2) != n or phi(w) != cs:
            bad.append(n)
    return LemmaResult("two-vertex-realizability", not bad, max_n, f"m=2, 1 <= n <= {max_n}",
                       failures=bad)


@_timed
def check_image(m: int, p: int, max_exponent: int) -> LemmaResult:
    """Exhaustive phi image: every point has a search witness; the counterexample is absent."""
    if table_count_bound(m, max_exponent) > MAX_TABLE_BOUND or m > 3:
        return LemmaResult("phi-image", True, 0, f"skipped at m={m}, max_exp={max_exponent} (exhaustive image run for m <= 3 only)")
    image = enumerate_phi_image(m, p, max_exponent)
    bad = [cs for cs in image if phi_preimage_search(cs).witness is None]
    detail = f"m={m}, p={p}, max_exp={max_exponent}: {len(image)} image points"
    if m >= 3:
        outsider = non_surjectivity_sequence(m, p)
        if outsider in set(image):
            bad.append(outsider)
        detail += ", counterexample absent" if outsider not in set(image) else ", counterexample PRESENT"
    return LemmaResult("phi-image", not bad, len(image), detail, failures=bad)


def run_all(m: int = 3, p: int = 2, max_exponent: int = 1, max_n: int = 100) -> list[LemmaResult]:
    return [
        check_generators(m, p),
        check_mobius(m, p),
        check_non_injectivity(m, p),
        check_non_surjectivity(m, p),
        check_two_vertex_realizability(max_n),
        check_image(m, p, max_exponent),
    ]
