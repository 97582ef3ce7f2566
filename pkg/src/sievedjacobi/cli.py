"""Command-line interface: verification suites and value tables.

Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
3 invalid data (parameters outside the admissible region).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import SievedJacobiError, ValidityError
from .operators import eig_lambda, eig_lambda_tilde, eig_Lambda, eig_mu, eig_Xi
from .realline import (
    GENERALIZED_ULTRA,
    SIEVED_ULTRA_1,
    SIEVED_ULTRA_2,
    special_recurrence_u,
)
from .sieve import JacobiParams, psi_case, sieved_verblunsky
from .verify import run_suite

ENV_PREFIX = "SIEVEDJACOBI_"

SUITE_ORDER = [
    "eigen-l",
    "eigen-h",
    "eigen-q",
    "eigen-y",
    "ortho",
    "selfadjoint",
    "algebra",
    "identities",
    "cmv",
    "three-term",
]

TABLE_KINDS = ("verblunsky", "psi", "recurrence-u", "eigenvalues")


def _env_default(name, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"))
    if raw is None:
        return fallback
    return cast(raw)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sievedjacobi",
        description="Sieved Jacobi polynomials on the circle and the real line: "
        "verification suites and value tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--alpha", type=float, default=_env_default("alpha", float, 0.5))
        sp.add_argument("--beta", type=float, default=_env_default("beta", float, 1.5))
        sp.add_argument("--N", type=int, default=_env_default("n", int, 2))
        sp.add_argument("--nmax", type=int, default=_env_default("nmax", int, None))
        sp.add_argument(
            "--samples",
            type=int,
            default=_env_default("samples", int, None),
            help="sample count for identity checks (default 2*span+17)",
        )
        sp.add_argument("--tol", type=float, default=_env_default("tol", float, None))
        sp.add_argument("--seed", type=int, default=_env_default("seed", int, 42))
        sp.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default=_env_default("format", str, "text"),
        )
        sp.add_argument("--out", type=str, default=None, help="write output to a file")
        sp.add_argument(
            "--workers",
            type=int,
            default=_env_default("workers", int, 1),
            help="worker processes for 'check all'",
        )

    sp_check = sub.add_parser("check", help="run a verification suite")
    sp_check.add_argument("suite", choices=SUITE_ORDER + ["all"])
    common(sp_check)

    sp_table = sub.add_parser("table", help="emit a value table")
    sp_table.add_argument("kind", choices=TABLE_KINDS)
    common(sp_table)
    return parser


def _suite_kwargs(args):
    kwargs = {}
    if args.nmax is not None:
        kwargs["n_max"] = args.nmax
    if args.tol is not None:
        kwargs["tolerance"] = args.tol
    return kwargs


_SEEDED = {"eigen-y", "selfadjoint", "algebra", "identities"}
_SAMPLED = {"eigen-l", "eigen-h", "eigen-q", "eigen-y", "identities", "cmv"}
_NO_NMAX = {"selfadjoint", "identities", "algebra"}


def _run_one(name, p, N, args):
    kwargs = _suite_kwargs(args)
    if name in _NO_NMAX:
        kwargs.pop("n_max", None)
    if name in _SEEDED:
        kwargs["seed"] = args.seed
    if name in _SAMPLED and args.samples is not None:
        kwargs["samples"] = args.samples
    return run_suite(name, p, N, **kwargs)


def run_check(args):
    p = JacobiParams(args.alpha, args.beta)
    try:
        p.validate(((args.nmax or 40) // max(args.N, 1)) + 2)
    except ValidityError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 3
    names = SUITE_ORDER if args.suite == "all" else [args.suite]
    try:
        if args.suite == "all" and args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                futures = [pool.submit(_run_one, n, p, args.N, args) for n in names]
                reports = [f.result() for f in futures]
        else:
            reports = [_run_one(n, p, args.N, args) for n in names]
    except ValidityError as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return 3
    _emit(args, _render_reports(reports, args.format))
    return 0 if all(r.passed for r in reports) else 1


def _render_reports(reports, fmt):
    if fmt == "json":
        if len(reports) == 1:
            return reports[0].to_json() + "\n"
        return json.dumps([r.to_dict() for r in reports], indent=2, default=_js) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["suite", "alpha", "beta", "N", "max_residual", "tolerance", "pass"])
        for r in reports:
            writer.writerow(
                [
                    r.suite,
                    r.params.get("alpha"),
                    r.params.get("beta"),
                    r.params.get("N"),
                    f"{r.max_residual:.6e}",
                    f"{r.tolerance:.1e}",
                    r.passed,
                ]
            )
        return buf.getvalue()
    return "".join(r.summary_line() + "\n" for r in reports)


def _js(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    raise TypeError


def run_table(args):
    p = JacobiParams(args.alpha, args.beta)
    N = args.N
    n_max = args.nmax if args.nmax is not None else 12
    try:
        rows, header = _table_rows(args.kind, p, N, n_max)
    except (ValidityError, ValueError) as exc:
        print(f"invalid data: {exc}", file=sys.stderr)
        return 3
    _emit(args, _render_table(header, rows, args.format, args.kind))
    return 0


def _table_rows(kind, p, N, n_max):
    if kind == "verblunsky":
        header = ["n", "a_n"]
        rows = [[n, sieved_verblunsky(p, N, n)] for n in range(n_max + 1)]
    elif kind == "psi":
        header = ["n", "k", "j", "nu", "power_sign", "case"]
        rows = []
        for n in range(n_max + 1):
            c = psi_case(n, N)
            rows.append([n, c.k, c.j, c.nu, c.power_sign, c.case_id])
    elif kind == "recurrence-u":
        header = ["n", "family", "u_n"]
        rows = []
        families = []
        if N == 2:
            families.append(GENERALIZED_ULTRA)
        if p.alpha == p.beta:
            families.extend([SIEVED_ULTRA_1, SIEVED_ULTRA_2])
        if not families:
            raise ValueError(
                "no closed-form recurrence table applies (need N=2 or alpha=beta)"
            )
        for fam in families:
            for n in range(1, n_max + 1):
                u = special_recurrence_u(p.alpha, N, fam, n, beta=p.beta)
                rows.append([n, fam, u])
    else:
        header = ["n", "mu", "lambda", "lambda_tilde", "Lambda", "Xi"]
        rows = [
            [
                n,
                eig_mu(n, p),
                eig_lambda(n, N, p),
                eig_lambda_tilde(n, N, p),
                eig_Lambda(n, N, p),
                eig_Xi(n, N, p),
            ]
            for n in range(n_max + 1)
        ]
    return rows, header


def _render_table(header, rows, fmt, kind):
    if fmt == "json":
        return (
            json.dumps(
                [{h: v for h, v in zip(header, row)} for row in rows],
                indent=2,
                default=_js,
            )
            + "\n"
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(h)), max((len(_fmt(r[i])) for r in rows), default=0)) for i, h in enumerate(header)]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(_fmt(v).ljust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def _fmt(v):
    if isinstance(v, float):
        return f"{v + 0.0:.10g}"
    return str(v)


def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return run_check(args)
        return run_table(args)
    except SievedJacobiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
