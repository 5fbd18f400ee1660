"""Command-line front end: construct, hilbert, tangent, classify, verify.

The tool is a pure function of its arguments: no environment variables, no
config files, byte-identical output for identical invocations.  Exit codes:
0 success, 1 domain or validation error, 2 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct as c_mod
from . import hilbert as h_mod
from . import ideals as i_mod
from . import tangent as t_mod
from .errors import AlgebraError
from .marked_reduction import audit_tangent

AUDIT_MAX_COLENGTH = 24
AUDIT_MAX_VARS = 3


def _parse_degrees(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise AlgebraError(f"cannot parse degree list {text!r}") from exc
    return h_mod.validate_degrees(degrees)


def _load_ideal(path: str) -> i_mod.MonomialIdeal:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise AlgebraError(f"cannot read ideal file {path}: {exc}") from exc
    return i_mod.ideal_from_json(data)


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args) -> int:
    degrees = _parse_degrees(args.degrees)
    J = c_mod.almost_revlex_ci(len(degrees), degrees)
    if args.format == "json":
        _emit(json.dumps(i_mod.ideal_to_json(J)))
    else:
        _emit(i_mod.ideal_to_text(J))
    return 0


def cmd_hilbert(args) -> int:
    if args.degrees:
        degrees = _parse_degrees(args.degrees)
        profile = h_mod.CIProfile.of(degrees)
        upto = args.upto if args.upto is not None else profile.m[-1]
        H = h_mod.ci_hilbert(degrees, len(degrees), upto)
        if args.format == "json":
            out = H.to_json()
            out["values"] = H.table(upto)
            _emit(json.dumps(out))
        else:
            _emit(",".join(str(v) for v in H.table(upto)))
            n = len(degrees)
            cs = [h_mod.c_index(H, s) for s in range(n)]
            _emit("c: " + ",".join(str(v) for v in cs))
            _emit("m: " + ",".join(str(v) for v in profile.m))
            _emit("u: " + ",".join(str(v) for v in profile.u_bar))
    else:
        J = _load_ideal(args.ideal)
        upto = args.upto
        if upto is None:
            # a default range only makes sense when the tail is known
            tagged = not J.is_zero and (
                J.is_artinian
                or (i_mod.is_strongly_stable(J) and i_mod.krull_dim(J) <= 1)
            )
            if not tagged:
                raise AlgebraError("--upto is required for this ideal")
            upto = 0  # hf_of_ideal extends through the socle or regularity
        H = h_mod.hf_of_ideal(J, upto)
        shown = max(upto, H.top) if args.upto is None else upto
        if args.format == "json":
            out = H.to_json()
            out["values"] = H.table(shown)
            _emit(json.dumps(out))
        else:
            _emit(",".join(str(v) for v in H.table(shown)))
    return 0


def _resolve_artinian_ideal(args) -> i_mod.MonomialIdeal:
    if args.degrees:
        degrees = _parse_degrees(args.degrees)
        return c_mod.almost_revlex_ci(len(degrees), degrees)
    J = _load_ideal(args.ideal)
    if J.is_zero or not J.is_artinian:
        raise AlgebraError("ideal is not Artinian: some variable has no pure power")
    if not i_mod.is_stable(J):
        raise AlgebraError(
            "ideal is not stable: quasi-stable="
            f"{i_mod.is_quasi_stable(J)}, stable=False"
        )
    return J


def cmd_tangent(args) -> int:
    J = _resolve_artinian_ideal(args)
    report = t_mod.tangent_dim(J)
    audit_line = None
    if args.audit:
        if J.n <= AUDIT_MAX_VARS and i_mod.colength(J) <= AUDIT_MAX_COLENGTH:
            if not audit_tangent(J):
                print("audit: FAILED", file=sys.stderr)
                return 2
            audit_line = "ok"
        else:
            audit_line = (
                f"skipped (oracle restricted to n <= {AUDIT_MAX_VARS}, "
                f"colength <= {AUDIT_MAX_COLENGTH})"
            )
    if args.out:
        with open(f"{args.out}.matrix.txt", "w") as fh:
            fh.write(t_mod.triplet_dump(J))
    if args.format == "json":
        out = report.to_json()
        if audit_line is not None:
            out["audit"] = audit_line
        _emit(json.dumps(out))
    else:
        for key, value in report.to_json().items():
            _emit(f"{key}: {value}")
        if audit_line is not None:
            _emit(f"audit: {audit_line}")
    return 0


def cmd_classify(args) -> int:
    degrees = _parse_degrees(args.degrees)
    verdict = t_mod.classify_ci(degrees, exact=not args.no_exact)
    if args.format == "json":
        _emit(json.dumps(verdict.to_json()))
    else:
        _emit(f"verdict: {verdict.verdict}")
        _emit(f"criterion: {verdict.criterion}")
        witness = " ".join(f"{k}={v}" for k, v in sorted(verdict.witness.items()))
        _emit(f"witness: {witness}")
    return 0


def cmd_verify(args) -> int:
    degrees = _parse_degrees(args.degrees)
    n = len(degrees)
    failures = 0

    def check(name: str, ok: bool, detail: str = ""):
        nonlocal failures
        status = "ok" if ok else "FAIL"
        _emit(f"{name}: {status}" + (f" ({detail})" if detail else ""))
        failures += 0 if ok else 1

    J = c_mod.almost_revlex_ci(n, degrees)
    check("almost-revlex", i_mod.is_almost_revlex(J))
    H = h_mod.ci_hilbert(degrees)
    check("hilbert-match", h_mod.hf_of_ideal(J, H.top).same_function(H))
    rc_ok = all(
        i_mod.reduction_number(J, s) == h_mod.c_index(H, s) for s in range(n)
    )
    check("reduction-numbers", rc_ok, "r_s = c_s for 0 <= s < n")
    direct = len(J.min_gens)
    formula = c_mod.mingen_count_formula(H, 0, n)
    double_sum = c_mod.mingen_count_ci(degrees)
    check(
        "mingen-count",
        direct == formula == double_sum,
        f"|B| = {direct} = {formula} = {double_sum}",
    )
    report = t_mod.tangent_dim(J)
    check(
        "bound-sandwich",
        report.lower_bound <= report.tangent_dim <= report.upper_bound,
        f"{report.lower_bound} <= {report.tangent_dim} <= {report.upper_bound}",
    )
    return 2 if failures else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arevlex",
        description=(
            "Exact combinatorics of almost revlex ideals with complete "
            "intersection Hilbert functions, and tangent-space singularity "
            "tests on punctual Hilbert schemes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="build the almost revlex ideal")
    p.add_argument("-d", "--degrees", required=True, help="comma-separated degrees")
    add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("hilbert", help="Hilbert function table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-d", "--degrees", help="comma-separated degrees")
    group.add_argument("--ideal", help="ideal JSON file")
    p.add_argument("--upto", type=int, default=None)
    add_format(p)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("tangent", help="tangent-space report at an Artinian stable ideal")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-d", "--degrees", help="comma-separated degrees")
    group.add_argument("--ideal", help="ideal JSON file")
    p.add_argument("--audit", action="store_true",
                   help="cross-check against the full symbolic reduction")
    p.add_argument("--out", default=None,
                   help="prefix for the sparse matrix dump file")
    add_format(p)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("classify", help="singularity cascade for a CI point")
    p.add_argument("-d", "--degrees", required=True)
    p.add_argument("--no-exact", action="store_true",
                   help="numeric criteria only, skip the tangent computation")
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the invariant battery for a degree list")
    p.add_argument("-d", "--degrees", required=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
