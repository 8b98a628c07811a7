"""Command-line workbench.

Subcommands: `list` (registered structures), `check` (run a property suite),
`series` (certificate tests for a term expression), `algebra` (pseudonorm
laws for a structure-constant table).  Exit codes: 0 all checks pass, 1 at
least one violation, 2 usage/parse/value error, 3 a required capability is
missing, so the question could not be posed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields as dataclass_fields
from fractions import Fraction
from typing import Sequence

from . import algebra as _algebra
from .instances import lookup, registry
from .order import CapabilityError, StructureHandle, Violation, nat_mul, nat_pow
from .report import (
    PASS,
    VIOLATION,
    CheckRecord,
    exit_code,
    render_json_lines,
    render_text,
    violation_values,
)
from .sequences import (
    Seq,
    scanned_cauchy_cert,
    scanned_conv_cert,
    verify_cauchy_cert,
    verify_conv_cert,
)
from .series import (
    MonotoneKind,
    Series,
    alternating_cauchy,
    check_monotone,
    condense,
    geometric_cert,
)
from .suites import RunConfig, SUITE_NAMES, resolve_grid, run_suite, _first_metric
from .termexpr import EvalError, TermError, seq_from_expr

_CONFIG_KEYS = ("structure", "suite", "grid", "horizon", "seed")


def _load_config(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if "structure" in data and not isinstance(data["structure"], str):
        raise ValueError("config key 'structure' must be a string")
    if "suite" in data and not isinstance(data["suite"], str):
        raise ValueError("config key 'suite' must be a string")
    if "grid" in data:
        grid = data["grid"]
        if not (isinstance(grid, list) and all(isinstance(g, str) for g in grid)):
            raise ValueError("config key 'grid' must be a list of strings")
    for key in ("horizon", "seed"):
        if key in data and (isinstance(data[key], bool) or not isinstance(data[key], int)):
            raise ValueError(f"config key {key!r} must be an integer")
    return data


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordalab",
        description="exact-arithmetic workbench for ordered structures, "
                    "certificates, and series tests",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered structures")

    check = sub.add_parser("check", help="run a property suite")
    check.add_argument("structure", nargs="?", default=None,
                       help="structure key (see `ordalab list`)")
    check.add_argument("--suite", default=None,
                       choices=("all",) + SUITE_NAMES)
    check.add_argument("--grid", default=None,
                       help="comma-separated epsilon expressions, e.g. 1/2,1/4")
    check.add_argument("--horizon", type=int, default=None)
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--format", default="json", choices=("json", "text"))
    check.add_argument("--config", default=None,
                       help="JSON config file with keys "
                            "{structure, suite, grid, horizon, seed}")

    series = sub.add_parser("series", help="run a certificate test on a term expression")
    series.add_argument("expr", help="term expression, e.g. \"1/2^n\"")
    series.add_argument("--structure", required=True)
    series.add_argument("--test", required=True,
                        choices=("zero-limit", "condensation", "alternating", "geometric"))
    series.add_argument("--grid", default=None)
    series.add_argument("--horizon", type=int, default=64)
    series.add_argument("--format", default="json", choices=("json", "text"))

    algebra = sub.add_parser("algebra", help="check a structure-constant table")
    algebra.add_argument("table", help="JSON file {name, n, gamma (flat n^3), basis?}")
    algebra.add_argument("--suite", default="albert", choices=("albert",))
    algebra.add_argument("--seed", type=int, default=0)
    algebra.add_argument("--format", default="json", choices=("json", "text"))

    return parser


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_list() -> int:
    reg = registry()
    for key in sorted(reg):
        h = reg[key]
        flags = ",".join(
            f.name for f in dataclass_fields(h.flags) if getattr(h.flags, f.name)
        )
        aliases = ",".join(h.aliases) if h.aliases else "-"
        sys.stdout.write(
            f"{key}\tflags={flags or '-'}\taliases={aliases}"
            f"\tmetrics={len(h.metrics)} norms={len(h.norms)}"
            f" pnorms={len(h.pnorms)}\n"
        )
    return 0


def _cmd_check(args) -> tuple[list[CheckRecord], str]:
    config = _load_config(args.config) if args.config else {}
    structure = args.structure if args.structure is not None else config.get("structure")
    if structure is None:
        raise ValueError("a structure key is required (argument or config)")
    suite = args.suite if args.suite is not None else config.get("suite", "all")
    if args.grid is not None:
        grid = tuple(g.strip() for g in args.grid.split(",") if g.strip())
    else:
        grid = tuple(config.get("grid", ()))
    horizon = args.horizon if args.horizon is not None else config.get("horizon", 64)
    seed = args.seed if args.seed is not None else config.get("seed", 0)
    cfg = RunConfig(structure=structure, suite=suite, grid=grid,
                    horizon=horizon, seed=seed, format=args.format)
    return run_suite(cfg), args.format


def _cert_check(
    handle: StructureHandle,
    check_id: str,
    anchor: str,
    cert,
    grid,
    horizon: int,
    verify,
    mfmt,
) -> CheckRecord:
    """Echo the modulus at each grid epsilon, then re-verify the windows.

    A modulus that cannot be produced (the scan found no stable window) is
    a violation: the claim fails at that scale."""
    violations: list[Violation] = []
    echoes: list[str] = []
    good = []
    for eps in grid:
        try:
            n = cert.modulus(eps)
        except ValueError as exc:
            violations.append(Violation("modulus.window", (eps,), str(exc)))
            continue
        echoes.append(f"N({mfmt(eps)})={n}")
        good.append(eps)
    if good:
        violations.extend(verify(cert, good, horizon))
    if violations:
        return CheckRecord("series", handle.name, check_id, VIOLATION,
                           violation_values(violations, mfmt), anchor)
    return CheckRecord("series", handle.name, check_id, PASS,
                       tuple(echoes), anchor)


def _cmd_series(args) -> tuple[list[CheckRecord], str]:
    handle = lookup(args.structure)
    seq = seq_from_expr(args.expr, handle)
    space = _first_metric(handle)
    m = space.codomain
    grid_raw = tuple(g.strip() for g in args.grid.split(",") if g.strip()) if args.grid else ()
    grid = resolve_grid(m, grid_raw)
    h = args.horizon
    mfmt = m.fmt
    records: list[CheckRecord] = []

    if args.test == "zero-limit":
        c = scanned_conv_cert(space, seq, handle.identity, horizon=h)
        records.append(_cert_check(handle, "series.zero-limit", "limit.zero",
                                   c, grid, h, verify_conv_cert, mfmt))

    elif args.test == "condensation":
        handle.require("ring", "total_order")
        mono = check_monotone(handle, seq, MonotoneKind.DECREASING_POSITIVE, 32)
        partials = Series(handle, seq).partials
        base = scanned_cauchy_cert(space, partials, horizon=min(h, 16))
        fwd = condense(handle, space, seq, mono, base, "forward")
        records.append(_cert_check(handle, "series.condensation.forward",
                                   "series.condensation", fwd, grid, min(8, h),
                                   verify_cauchy_cert, mfmt))
        back = condense(handle, space, seq, mono, fwd, "backward")
        records.append(_cert_check(handle, "series.condensation.backward",
                                   "series.condensation", back, grid, h,
                                   verify_cauchy_cert, mfmt))

    elif args.test == "alternating":
        handle.require("ring", "total_order")
        mono = check_monotone(handle, seq,
                              MonotoneKind.STRICTLY_DECREASING_POSITIVE, 32)
        c0 = scanned_conv_cert(space, seq, handle.identity, horizon=h)
        alt = alternating_cauchy(handle, space, seq, mono, c0)
        records.append(_cert_check(handle, "series.alternating",
                                   "series.alternating", alt, grid, h,
                                   verify_cauchy_cert, mfmt))

    elif args.test == "geometric":
        handle.require("ring", "total_order")
        if handle.invert is None:
            raise CapabilityError(f"{handle.name} has no multiplicative inverses")
        r = seq(1)
        for k in range(1, 7):
            if not handle.eq(seq(k), nat_pow(handle, r, k)):
                raise ValueError(
                    f"{seq.name} is not the power sequence of {handle.fmt(r)} "
                    f"(index {k})"
                )
        inv = handle.invert(handle.sub(handle.one, r))
        c0 = scanned_conv_cert(space, seq, handle.identity, horizon=h)
        g = geometric_cert(handle, space, r, c0, inv)
        records.append(_cert_check(handle, "series.geometric",
                                   "series.geometric", g, grid, h,
                                   verify_conv_cert, mfmt))

    return sorted(records, key=lambda rec: rec.check_id), args.format


def _cmd_algebra(args) -> tuple[list[CheckRecord], str]:
    import random

    alg = _algebra.load_algebra_table(args.table)
    field = alg.field
    pn = _algebra.albert_pseudonorm(alg)
    rng = random.Random(f"{args.seed}:albert:{alg.name}")
    pairs = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(alg.n))
             for _ in range(32)]
    violations = _algebra.verify_pseudonorm(pn, pairs)
    bound = _algebra.structure_bound(alg)
    scale = nat_mul(field, alg.n, bound)
    if violations:
        record = CheckRecord("albert", field.name, f"albert.{alg.name}",
                             VIOLATION, violation_values(violations, field.fmt),
                             "algebra.pseudonorm")
    else:
        record = CheckRecord("albert", field.name, f"albert.{alg.name}", PASS,
                             (f"bound={field.fmt(bound)}",
                              f"scale={field.fmt(scale)}"),
                             "algebra.pseudonorm")
    return [record], args.format


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return _cmd_list()
        if args.command == "check":
            records, fmt = _cmd_check(args)
        elif args.command == "series":
            records, fmt = _cmd_series(args)
        else:
            records, fmt = _cmd_algebra(args)
    except CapabilityError as exc:
        print(f"unverifiable: {exc}", file=sys.stderr)
        return 3
    except (TermError, EvalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = render_json_lines(records) if fmt == "json" else render_text(records)
    sys.stdout.write(out)
    return exit_code(records)


if __name__ == "__main__":
    sys.exit(main())
