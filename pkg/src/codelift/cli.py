"""Command-line front end.

Codes and patterns are loaded from small JSON documents; every command emits
a deterministic JSON report (sorted keys, fixed indentation), so identical
inputs produce byte-identical output. Exit codes: 0 success, 2 validation
error, 3 enumeration guard exceeded, 4 internal invariant violation.

Input formats:
  code file:    {"field": p, "n": n, "generator": [[...], ...]}
  pattern file: {"n": n, "facets": [[...], ...]}
Unknown fields are rejected.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .codes import LinearCode, code_equal, make_code
from .derived import derived_circuits, derived_equal, derived_rep, separating_pattern
from .equivalence import is_t_equivalent, standing_assumptions
from .errors import GuardExceeded, InvariantViolation, ValidationError
from .lifting import lift, lift_oracle
from .patterns import CollusionPattern, compromised_pattern, cyclic_pattern, make_pattern, t_collusion

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GUARD = 3
EXIT_INVARIANT = 4

COMMANDS = ("lift", "oracle-check", "derived", "separate", "equiv", "assumptions")


def _rational(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _sorted_sets(sets) -> list[list[int]]:
    return sorted(sorted(s) for s in sets)


def _load_json(path: str) -> tuple[dict, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    digest = hashlib.sha256(raw).hexdigest()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValidationError(f"{path} is not valid UTF-8 JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ValidationError(f"{path}: top-level value must be an object")
    return doc, digest


def _expect_int(doc: dict, key: str, path: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ValidationError(f"{path}: field '{key}' must be an integer")
    return v


def _expect_int_rows(doc: dict, key: str, path: str) -> list[list[int]]:
    rows = doc.get(key)
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise ValidationError(f"{path}: field '{key}' must be an array of arrays")
    for r in rows:
        for x in r:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ValidationError(f"{path}: entries of '{key}' must be integers")
    return rows


def load_code(path: str) -> tuple[LinearCode, str]:
    doc, digest = _load_json(path)
    extra = set(doc) - {"field", "n", "generator"}
    if extra:
        raise ValidationError(f"{path}: unknown fields {sorted(extra)}")
    p = _expect_int(doc, "field", path)
    n = _expect_int(doc, "n", path)
    rows = _expect_int_rows(doc, "generator", path)
    return make_code(p, n, rows), digest


def load_pattern(path: str) -> tuple[CollusionPattern, str]:
    doc, digest = _load_json(path)
    extra = set(doc) - {"n", "facets"}
    if extra:
        raise ValidationError(f"{path}: unknown fields {sorted(extra)}")
    n = _expect_int(doc, "n", path)
    facets = _expect_int_rows(doc, "facets", path)
    return make_pattern(n, facets), digest


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codelift",
        description="Analyze lifts of linear codes over collusion patterns.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument(
        "--code",
        action="append",
        default=[],
        metavar="PATH",
        help="code file; repeat for two-code commands",
    )
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--pattern", metavar="PATH", help="pattern file")
    group.add_argument("--t-collusion", type=int, metavar="T", help="all T-subsets of [n]")
    group.add_argument("--cyclic", type=int, metavar="T", help="n cyclic windows of length T")
    group.add_argument(
        "--compromised", type=int, metavar="E", help="all circuits through coordinate E"
    )
    parser.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    parser.add_argument(
        "--oracle",
        action="store_true",
        help="force a brute-force cross-check where guards permit",
    )
    return parser


def _resolve_pattern(args, code: LinearCode) -> tuple[CollusionPattern, dict]:
    if args.pattern is not None:
        pattern, digest = load_pattern(args.pattern)
        return pattern, {"path": args.pattern, "sha256": digest}
    if args.t_collusion is not None:
        return t_collusion(code.n, args.t_collusion), {"constructor": f"t-collusion:{args.t_collusion}"}
    if args.cyclic is not None:
        return cyclic_pattern(code.n, args.cyclic), {"constructor": f"cyclic:{args.cyclic}"}
    if args.compromised is not None:
        return compromised_pattern(code, args.compromised), {
            "constructor": f"compromised:{args.compromised}"
        }
    raise ValidationError(
        "a pattern is required: --pattern, --t-collusion, --cyclic, or --compromised"
    )


def _want_codes(args, count: int) -> list[tuple[LinearCode, dict]]:
    if len(args.code) != count:
        raise ValidationError(
            f"command '{args.command}' needs exactly {count} --code argument(s), got {len(args.code)}"
        )
    loaded = []
    for path in args.code:
        code, digest = load_code(path)
        loaded.append((code, {"path": path, "sha256": digest}))
    return loaded


def _generator_rows(code: LinearCode) -> list[list[int]]:
    return [list(r) for r in code.generator.rows]


def run(args) -> dict:
    """Dispatch a parsed invocation to the library and assemble the report."""
    command = args.command
    report: dict = {"command": command}

    if command == "separate":
        (c1, meta1), (c2, meta2) = _want_codes(args, 2)
        report["inputs"] = {"codes": [meta1, meta2]}
        report["field"] = c1.field.p
        report["n"] = c1.n
        pattern = separating_pattern(c1, c2)
        report["result"] = {
            "derived_equal": derived_equal(c1, c2),
            "separating_pattern": None
            if pattern is None
            else {"n": pattern.n, "facets": _sorted_sets(pattern.facets)},
        }
        return report

    (code, code_meta), = _want_codes(args, 1)
    report["field"] = code.field.p
    report["n"] = code.n

    if command == "derived":
        report["inputs"] = {"codes": [code_meta]}
        d = derived_rep(code)
        report["result"] = {
            "circuits": _sorted_sets(d.ground),
            "circuit_vectors": [list(r) for r in d.rep.rows],
            "derived_rank": d.rank,
            "derived_circuits": sorted(
                [_sorted_sets(fam) for fam in derived_circuits(d)]
            ),
        }
        return report

    pattern, pattern_meta = _resolve_pattern(args, code)
    report["inputs"] = {"codes": [code_meta], "pattern": pattern_meta}
    report["pattern_facets"] = _sorted_sets(pattern.facets)

    if command == "lift":
        result = lift(code, pattern)
        oracle_status = "SKIPPED"
        if args.oracle:
            oracle = lift_oracle(code, pattern)
            if not code_equal(oracle.lifted, result.lifted):
                raise InvariantViolation("algebraic and brute-force lifts disagree")
            oracle_status = "PASS"
        report["result"] = {
            "base_dimension": code.k,
            "observed_circuits": _sorted_sets(result.observed),
            "lifted_dimension": result.lifted.k,
            "lifted_generator": _generator_rows(result.lifted),
            "secrecy_rate": _rational(result.secrecy_rate),
            "oracle_check": oracle_status,
        }
    elif command == "oracle-check":
        algebraic = lift(code, pattern)
        oracle = lift_oracle(code, pattern)
        if not code_equal(oracle.lifted, algebraic.lifted):
            raise InvariantViolation("algebraic and brute-force lifts disagree")
        report["result"] = {
            "match": "PASS",
            "lifted_dimension": algebraic.lifted.k,
            "lifted_generator": _generator_rows(algebraic.lifted),
            "secrecy_rate": _rational(algebraic.secrecy_rate),
        }
    elif command == "equiv":
        eq = is_t_equivalent(code, pattern)
        if args.oracle:
            algebraic = lift(code, pattern)
            oracle = lift_oracle(code, pattern)
            if not code_equal(oracle.lifted, algebraic.lifted):
                raise InvariantViolation("algebraic and brute-force lifts disagree")
        certificate = None
        if eq.certificate is not None:
            certificate = {
                "ordering": [sorted(c) for c in eq.certificate.ordering],
                "witnesses": list(eq.certificate.witnesses),
            }
        report["result"] = {
            "is_equivalent": eq.is_equivalent,
            "method": eq.method,
            "certificate": certificate,
        }
    elif command == "assumptions":
        rep = standing_assumptions(code, pattern)
        report["result"] = {
            "pattern_connected": rep.pattern_connected,
            "no_isolated_elements": rep.no_isolated_elements,
            "facet_sizes_bounded": rep.facet_sizes_bounded,
            "isolated": list(rep.isolated),
            "oversized_facets": [list(f) for f in rep.oversized],
            "all_hold": rep.all_hold(),
        }
    else:  # pragma: no cover - argparse restricts choices
        raise ValidationError(f"unknown command {command}")
    return report


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = run(args)
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT

    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
