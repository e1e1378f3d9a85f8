"""Command-line front end.

    wpp validate-ps FILE
    wpp validate-cs FILE [--ring R]
    wpp phi FILE
    wpp preimage FILE [--ring R]
    wpp ring COMPLEX PS --degrees 2,4,6 (--table | --poincare N | --check)
    wpp lemmas [--m 3] [--p 2] [--max-exp 1]

Exit codes: 0 ok, 1 semantic failure (violations, failed checks), 2 bad
input (unreadable file, malformed JSON, inconsistent arguments).  Output is
deterministic; JSON keys follow canonical face order.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .algebra import AlgebraError, GeneratorSpec, fmt_rational, make_algebra, poincare_series
from .complex import SimplicialComplex
from .oracle import MAX_BASIS, PROPERTIES, compare_with_ordinary, exhaustive_check, splitting_series
from .lemmas import run_all
from .search import phi_preimage_search
from .sequences import (CoefficientRing, CoefficientSequence, PowerSequence, SequenceError,
                        ViolationError, Z, _fmt, _parse_entries, phi, phi_extended)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
EXHAUSTIVE_TRIPLES = 10**6
SAMPLED_TRIPLES = 20000
_SCALAR_ARRAY = re.compile(r"\[\n\s+([^\[\]{}\"]*?)\n\s*\]")


class InputError(Exception):
    """Bad input; reported on stderr with exit code 2."""


# ---------- input ----------

def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def _ring(args, data=None) -> CoefficientRing:
    text = args.ring
    if text is None and isinstance(data, dict) and "ring" in data:
        text = data["ring"]
    if text is None:
        return Z
    try:
        return CoefficientRing.parse(str(text))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_table(data, kind: str):
    """(m, table) from sequence JSON without validating the sequence conditions."""
    try:
        m, table = _parse_entries(data)
    except (SequenceError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    for face, v in table.items():
        if kind == "ps":
            if not isinstance(v, tuple) or len(v) != m or not all(type(x) is int for x in v):
                raise InputError(f"entry for {list(face)} must be a list of {m} integers")
        elif type(v) is not int:
            raise InputError(f"entry for {list(face)} must be an integer")
    return m, table


def _build(cls, m, table, *extra):
    """Construct a sequence; ViolationError passes through, input errors become InputError."""
    try:
        return cls(m, table, *extra)
    except ViolationError:
        raise
    except (SequenceError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _load_ps(path: str) -> PowerSequence:
    m, table = _parse_table(_load_json(path), "ps")
    return _build(PowerSequence, m, table)


def _load_cs(path: str, args) -> CoefficientSequence:
    data = _load_json(path)
    m, table = _parse_table(data, "cs")
    return _build(CoefficientSequence, m, table, _ring(args, data))


def _parse_degrees(text: str) -> GeneratorSpec:
    """``2,4,6`` gives one generator per vertex; ``1/3,2`` gives vertex 1 two generators."""
    try:
        degrees = tuple(tuple(int(d) for d in part.split("/")) for part in text.split(","))
        return GeneratorSpec(degrees)
    except ValueError as exc:
        raise InputError(f"bad --degrees {text!r}: {exc}") from exc


# ---------- output ----------

def _violation_json(v) -> dict:
    return {"kind": v.kind, "small": None if v.small is None else list(v.small),
            "big": None if v.big is None else list(v.big), "vertex": v.vertex, "detail": v.detail}


def _violation_text(v) -> str:
    where = f"tau={_fmt(v.small)} " if v.small is not None else ""
    return f"  {v.kind}: {where}sigma={_fmt(v.big)} i={v.vertex}: {v.detail}"


def _emit(args, payload, text: str) -> None:
    if args.format == "json":
        out = _SCALAR_ARRAY.sub(lambda mt: "[" + ", ".join(x.strip() for x in mt.group(1).split(",")) + "]",
                                json.dumps(payload, indent=2)) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(out)


def _sequence_json(x) -> dict:
    data = x.to_json()
    if isinstance(x, CoefficientSequence) and x.ring != Z:
        data["ring"] = str(x.ring)
    return data


def _sequence_text(x) -> str:
    lines = [f"m = {x.m}"]
    for face, v in x.to_json()["entries"].items():
        lines.append(f"{face}\t{v if isinstance(v, int) else ' '.join(map(str, v))}")
    return "\n".join(lines)


# ---------- commands ----------

def cmd_validate_ps(args) -> int:
    try:
        ps = _load_ps(args.file)
    except ViolationError as exc:
        _emit(args, {"valid": False, "violations": [_violation_json(v) for v in exc.violations]},
              "INVALID power sequence\n" + "\n".join(_violation_text(v) for v in exc.violations))
        return EXIT_FAIL
    _emit(args, {"valid": True, "m": ps.m, "in_ps": ps.in_ps, "minimal": ps.is_minimal()},
          f"valid power sequence (m={ps.m}, normalized: {'yes' if ps.in_ps else 'no'}, "
          f"minimal: {'yes' if ps.is_minimal() else 'no'})")
    return EXIT_OK


def cmd_validate_cs(args) -> int:
    try:
        cs = _load_cs(args.file, args)
    except ViolationError as exc:
        _emit(args, {"valid": False, "violations": [_violation_json(v) for v in exc.violations]},
              "INVALID coefficient sequence\n" + "\n".join(_violation_text(v) for v in exc.violations))
        return EXIT_FAIL
    _emit(args, {"valid": True, "m": cs.m, "ring": str(cs.ring)},
          f"valid coefficient sequence (m={cs.m}, ring {cs.ring})")
    return EXIT_OK


def cmd_phi(args) -> int:
    try:
        ps = _load_ps(args.file)
        if args.any_power_sequence and not ps.in_ps:
            # product formula outside the domain; the result is not a coefficient sequence
            out = phi_extended(ps)
            _emit(args, dict(_sequence_json(out), coefficient_sequence=out.is_valid),
                  _sequence_text(out))
            return EXIT_OK
        cs = phi(ps)
    except ViolationError as exc:
        _emit(args, {"error": "not in the domain of phi",
                     "violations": [_violation_json(v) for v in exc.violations]},
              "input is not in the domain of phi\n" + "\n".join(_violation_text(v) for v in exc.violations))
        return EXIT_FAIL
    _emit(args, _sequence_json(cs), _sequence_text(cs))
    return EXIT_OK


def cmd_preimage(args) -> int:
    try:
        cs = _load_cs(args.file, args)
    except ViolationError as exc:
        _emit(args, {"error": "not a coefficient sequence",
                     "violations": [_violation_json(v) for v in exc.violations]},
              "INVALID coefficient sequence\n" + "\n".join(_violation_text(v) for v in exc.violations))
        return EXIT_FAIL
    res = phi_preimage_search(cs, max_nodes=args.max_nodes)
    if res.witness is not None:
        _emit(args, _sequence_json(res.witness), _sequence_text(res.witness))
        return EXIT_OK
    _emit(args, {"witness": None, "complete": res.complete, "nodes": res.nodes}, str(res))
    return EXIT_OK if res.complete else EXIT_FAIL


def _load_algebra(args):
    try:
        K = SimplicialComplex.from_json(_load_json(args.complex))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{args.complex}: {exc}") from exc
    c = _load_ps(args.ps)
    gens = _parse_degrees(args.degrees)
    ring = _ring(args)
    try:
        return make_algebra(gens, c, K, ring)
    except (AlgebraError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _table_json(A) -> dict:
    pos = A.basis_position
    basis = [{"id": pos[b], "label": b.label(A.letter), "face": list(b.face), "index": list(b.index),
              "degree": A.degree(b)} for b in A.basis]
    products = []
    for (a, b), (coeff, target) in A.structure_constants().items():
        products.append({"left": pos[a], "right": pos[b], "coeff": fmt_rational(coeff),
                         "product": pos[target]})
    products.sort(key=lambda r: (r["left"], r["right"]))
    return {"basis": basis, "products": products}


def _check_reports(A, seed: int) -> list:
    n = len(A.basis)
    if n > MAX_BASIS:
        raise InputError(f"basis has {n} elements; --check handles at most {MAX_BASIS}")
    reports = []
    for prop in PROPERTIES:
        samples = SAMPLED_TRIPLES if prop == "associativity" and n**3 > EXHAUSTIVE_TRIPLES else None
        reports.append(exhaustive_check(A, prop, samples=samples, seed=seed))
    reports.append(compare_with_ordinary(A.ordinary()))
    return reports


def cmd_ring(args) -> int:
    A = _load_algebra(args)
    if args.table:
        _emit(args, _table_json(A), A.table_csv())
        return EXIT_OK
    if args.poincare is not None:
        if args.poincare < 0:
            raise InputError("--poincare needs a nonnegative degree")
        series = poincare_series(A, args.poincare)
        formula = splitting_series(A.gens, A.K, args.poincare)
        trimmed = list(series)
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed.pop()
        _emit(args, {"max_degree": args.poincare, "series": series, "splitting_formula": formula,
                     "agree": series == formula},
              ",".join(map(str, trimmed)))
        return EXIT_OK if series == formula else EXIT_FAIL
    reports = _check_reports(A, args.seed)
    ok = all(reports)
    _emit(args, {"pass": ok, "reports": [r.to_json() for r in reports]},
          "\n".join(str(r) for r in reports) + f"\n{'ALL PASS' if ok else 'FAILURES'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_lemmas(args) -> int:
    if not 1 <= args.m <= 8:
        raise InputError("--m must be between 1 and 8")
    if args.p < 2 or any(args.p % q == 0 for q in range(2, int(args.p**0.5) + 1)):
        raise InputError(f"--p must be a prime, got {args.p}")
    results = run_all(args.m, args.p, args.max_exp, args.max_n)
    ok = all(r.ok for r in results)
    _emit(args, {"m": args.m, "p": args.p, "pass": ok, "results": [r.to_json() for r in results]},
          "\n".join(str(r) for r in results) + f"\n{'ALL PASS' if ok else 'FAILURES'}")
    return EXIT_OK if ok else EXIT_FAIL


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    ring_opt = argparse.ArgumentParser(add_help=False)
    ring_opt.add_argument("--ring", default=None, help='"Z", "Q" or "Z[1/2,1/3]" (default Z)')

    parser = argparse.ArgumentParser(prog="wpp", description="Power sequences, phi and weighted algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-ps", parents=[common], help="check a power sequence file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate_ps)

    p = sub.add_parser("validate-cs", parents=[common, ring_opt], help="check a coefficient sequence file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate_cs)

    p = sub.add_parser("phi", parents=[common], help="apply phi to a power sequence")
    p.add_argument("file")
    p.add_argument("--any-power-sequence", action="store_true",
                   help="also evaluate the product formula when some c_i^{i} != 1")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("preimage", parents=[common, ring_opt], help="search for a phi preimage")
    p.add_argument("file")
    p.add_argument("--max-nodes", type=int, default=None, help="abort the search after this many nodes")
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("ring", parents=[common, ring_opt], help="weighted algebra of (K, c)")
    p.add_argument("complex")
    p.add_argument("ps")
    p.add_argument("--degrees", required=True, help="2,4,6 (use 1/3 for two generators at a vertex)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--table", action="store_true")
    mode.add_argument("--poincare", type=int, metavar="N")
    mode.add_argument("--check", action="store_true")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled associativity sweeps")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("lemmas", parents=[common], help="reproduce the phi lemmas")
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=1, help="exponent bound for the image enumeration")
    p.add_argument("--max-n", type=int, default=100, help="range for the two-vertex realizability check")
    p.set_defaults(func=cmd_lemmas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"wpp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ViolationError as exc:
        print("wpp: invalid input sequence", file=sys.stderr)
        for v in exc.violations:
            print(_violation_text(v), file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
