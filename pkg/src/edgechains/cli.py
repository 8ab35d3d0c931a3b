"""Command-line interface: one subcommand per library surface.

Every number printed here is produced by the corresponding library call;
the CLI only formats.  Output is deterministic byte-for-byte for a fixed
request: key=value lines for scalars, TSV with a header row for tables,
and JSON lines behind --format records.  Exit codes: 0 success, 1 property
violation, 2 input error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from . import linalg
from .asymptotics import asymptotic_depth, asymptotic_homology, asymptotic_regularity, stabilization_scan
from .chain import (
    ChainSeed,
    chain_invariants,
    format_chain_spec,
    generate_graph,
    load_chain_spec,
    normalize,
    parse_chain_spec,
)
from .complexes import DEFAULT_FACE_BUDGET, independence_complex, reduced_homology
from .errors import BudgetExceededError, ChainSpecError
from .oracle import DEFAULT_SUBSET_CAP, depth_via_links, hochster_betti
from .suites import REGISTRY, SuiteOptions, run_all, run_suite


def bundled_seeds() -> list[tuple[str, ChainSeed]]:
    """The chains shipped with the package, sorted by name."""
    root = resources.files("edgechains").joinpath("examples")
    out = []
    for entry in root.iterdir():
        if entry.name.endswith(".chain"):
            out.append((entry.name[: -len(".chain")], parse_chain_spec(entry.read_text())))
    return sorted(out)


def resolve_chain(arg: str) -> ChainSeed:
    """A filesystem path, or the name of a bundled chain."""
    path = Path(arg)
    if path.exists():
        return load_chain_spec(path)
    name = arg[: -len(".chain")] if arg.endswith(".chain") else arg
    for bundled_name, seed in bundled_seeds():
        if bundled_name == name:
            return seed
    raise ChainSpecError(f"chain spec not found: {arg}")


# -- output helpers ----------------------------------------------------------


def _emit_scalars(pairs, fmt, out):
    if fmt == "records":
        out.write(json.dumps(dict(pairs)) + "\n")
    else:
        for k, v in pairs:
            out.write(f"{k}={v}\n")


def _emit_table(header, rows, fmt, out):
    if fmt == "records":
        for row in rows:
            out.write(json.dumps(dict(zip(header, row))) + "\n")
    elif fmt == "kv":
        for row in rows:
            out.write(" ".join(f"{k}={v}" for k, v in zip(header, row)) + "\n")
    else:
        out.write("\t".join(header) + "\n")
        for row in rows:
            out.write("\t".join(str(v) for v in row) + "\n")


def _parse_range(args) -> tuple[int, int]:
    if args.range is not None:
        lo, _, hi = args.range.partition("..")
        try:
            bounds = int(lo), int(hi)
        except ValueError:
            raise ValueError(f"bad range {args.range!r}, expected A..B") from None
        if bounds[0] > bounds[1]:
            raise ValueError(f"range lower bound exceeds upper bound: {args.range}")
        return bounds
    if args.n is not None:
        return args.n, args.n
    raise ValueError("either --n or --range is required")


def _parse_field(text: str):
    if text == "rational":
        return linalg.RATIONAL
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"field must be 'rational' or a prime, got {text!r}") from None
    return linalg.validate_field(value)


# -- subcommand handlers -----------------------------------------------------


def _cmd_invariants(args, out):
    inv = chain_invariants(resolve_chain(args.chain))
    _emit_scalars(
        [
            ("i1", inv.i1),
            ("j_q", inv.j_q),
            ("p", inv.p),
            ("b", inv.b),
            ("B", inv.B),
            ("r_tilde", inv.r_tilde),
            ("spi", inv.spi),
        ],
        args.format,
        out,
    )
    return 0


def _cmd_normalize(args, out):
    nseed, shift = normalize(resolve_chain(args.chain))
    if args.format == "records":
        out.write(
            json.dumps(
                {
                    "r": nseed.r,
                    "edges": [list(e) for e in nseed.edges],
                    "variable_shift": shift.variable_shift,
                    "index_shift": shift.index_shift,
                }
            )
            + "\n"
        )
    else:
        out.write(
            format_chain_spec(
                nseed,
                comments=[
                    f"variable_shift={shift.variable_shift}",
                    f"index_shift={shift.index_shift}",
                ],
            )
        )
    return 0


def _cmd_generate(args, out):
    g = generate_graph(resolve_chain(args.chain), args.n)
    _emit_table(("i", "j"), g.edges(), args.format, out)
    return 0


def _cmd_depth(args, out):
    seed = resolve_chain(args.chain)
    value, valid_from = asymptotic_depth(seed)
    if args.n is None and args.range is None:
        if args.mode != "formula":
            raise ValueError("--n or --range is required unless --mode formula")
        _emit_scalars([("depth", value), ("valid_from", valid_from)], args.format, out)
        return 0
    lo, hi = _parse_range(args)
    header = ["n"]
    if args.mode in ("formula", "both"):
        header += ["formula", "status"]
    if args.mode in ("oracle", "both"):
        header += ["oracle"]
    rows = []
    for n in range(lo, hi + 1):
        row: list[object] = [n]
        if args.mode in ("formula", "both"):
            row += [value, "stable" if n >= valid_from else "pre-threshold"]
        if args.mode in ("oracle", "both"):
            row += [depth_via_links(generate_graph(seed, n), args.field, args.face_budget)]
        rows.append(tuple(row))
    _emit_table(tuple(header), rows, args.format, out)
    return 0


def _cmd_reg(args, out):
    seed = resolve_chain(args.chain)
    predicted = asymptotic_regularity(seed)
    if args.n is None and args.range is None:
        if args.mode != "formula":
            raise ValueError("--n or --range is required unless --mode formula")
        _emit_scalars([("reg", predicted)], args.format, out)
        return 0
    lo, hi = _parse_range(args)
    header = ["n"]
    if args.mode in ("formula", "both"):
        header += ["formula"]
    if args.mode in ("oracle", "both"):
        header += ["oracle"]
    rows = []
    for n in range(lo, hi + 1):
        row: list[object] = [n]
        if args.mode in ("formula", "both"):
            row += [predicted]
        if args.mode in ("oracle", "both"):
            result = hochster_betti(
                generate_graph(seed, n), args.field, n_cap=args.subset_cap,
                face_budget=args.face_budget,
            )
            row += [result.reg]
        rows.append(tuple(row))
    _emit_table(tuple(header), rows, args.format, out)
    return 0


def _cmd_homology(args, out):
    seed = resolve_chain(args.chain)
    if args.mode == "formula":
        report = asymptotic_homology(seed, field=args.field, face_budget=args.face_budget)
        _emit_scalars(
            [
                ("depth", report.depth_value),
                ("depth_valid_from", report.depth_valid_from),
                ("reg", report.reg_value),
                ("h2plus", report.h2plus_value),
                ("h2plus_from", report.h2plus_from),
                ("h0_rule", report.h0_rule),
                ("alpha", "none" if report.alpha is None else report.alpha),
                ("beta", report.beta),
                ("empirical", ",".join(sorted(report.empirical)) or "none"),
                ("variable_shift", report.variable_shift),
                ("index_shift", report.index_shift),
            ],
            args.format,
            out,
        )
        return 0
    lo, hi = _parse_range(args)
    rows = []
    for n in range(lo, hi + 1):
        profile = reduced_homology(
            independence_complex(generate_graph(seed, n)), args.field, args.face_budget
        )
        for d in sorted(profile.dims):
            rows.append((n, d, profile.dims[d]))
    _emit_table(("n", "d", "dim"), rows, args.format, out)
    return 0


def _cmd_scan(args, out):
    seed = resolve_chain(args.chain)
    result = stabilization_scan(
        seed,
        args.quantity,
        _parse_range(args),
        field=args.field,
        subset_cap=args.subset_cap,
        face_budget=args.face_budget,
    )
    rows = [
        (n, ",".join(map(str, v)) if isinstance(v, tuple) else v)
        for n, v in result.rows
    ]
    _emit_table(("n", "value"), rows, args.format, out)
    out.write(f"onset={result.onset if result.onset is not None else 'none'}\n")
    return 0


def _cmd_verify(args, out):
    options = SuiteOptions(
        seed=resolve_chain(args.chain) if args.chain else None,
        n=args.n,
        subset_cap=args.subset_cap,
        face_budget=args.face_budget,
        field=args.field,
    )
    results = run_all(options) if args.suite == "all" else [run_suite(args.suite, options)]
    total = 0
    bad = 0
    for res in results:
        total += res.checks
        bad += len(res.violations)
        if args.suite == "all":
            status = "ok" if res.ok else "fail"
            out.write(f"suite={res.name} status={status} checks={res.checks}\n")
        for violation in res.violations:
            out.write(f"violation: {res.name}: {violation}\n")
    if bad:
        out.write(f"fail violations={bad} checks={total}\n")
        return 1
    out.write(f"ok checks={total}\n")
    return 0


def _cmd_examples(args, out):
    rows = [
        (name, seed.r, ",".join(f"{i}-{j}" for i, j in seed.edges))
        for name, seed in bundled_seeds()
    ]
    _emit_table(("name", "r", "edges"), rows, args.format, out)
    return 0


# -- parser ------------------------------------------------------------------


def _add_common(sub, *, chain=True, member=False, field=False, budgets=False):
    sub.add_argument("--format", choices=("tsv", "kv", "records"), default=None)
    if chain:
        sub.add_argument("--chain", required=True, help="chain-spec path or bundled name")
    if member:
        sub.add_argument("--n", type=int, default=None)
        sub.add_argument("--range", default=None, metavar="A..B")
    if field:
        sub.add_argument("--field", type=_parse_field, default=linalg.RATIONAL)
    if budgets:
        sub.add_argument("--face-budget", type=int, default=DEFAULT_FACE_BUDGET)
        sub.add_argument("--subset-cap", type=int, default=DEFAULT_SUBSET_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgechains",
        description="Asymptotic depth, regularity, and homology of shift-invariant chains of edge ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", help="seed quantities of a chain")
    _add_common(s)
    s.set_defaults(handler=_cmd_invariants, default_format="kv")

    s = sub.add_parser("normalize", help="shift the seed support to start at 1")
    _add_common(s)
    s.set_defaults(handler=_cmd_normalize, default_format="kv")

    s = sub.add_parser("generate", help="edge list of a member graph")
    _add_common(s)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(handler=_cmd_generate, default_format="tsv")

    s = sub.add_parser("depth", help="eventual depth formula and link oracle")
    _add_common(s, member=True, field=True, budgets=True)
    s.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
    s.set_defaults(handler=_cmd_depth, default_format="tsv")

    s = sub.add_parser("reg", help="eventual regularity and subset oracle")
    _add_common(s, member=True, field=True, budgets=True)
    s.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
    s.set_defaults(handler=_cmd_reg, default_format="tsv")

    s = sub.add_parser("homology", help="reduced homology of member independence complexes")
    _add_common(s, member=True, field=True, budgets=True)
    s.add_argument("--mode", choices=("formula", "oracle"), default="oracle")
    s.set_defaults(handler=_cmd_homology, default_format="tsv")

    s = sub.add_parser("scan", help="per-member oracle values and stabilization onset")
    _add_common(s, member=True, field=True, budgets=True)
    s.add_argument(
        "--quantity", required=True, choices=("depth", "h0", "h1", "reg", "euler", "f")
    )
    s.set_defaults(handler=_cmd_scan, default_format="tsv")

    s = sub.add_parser("verify", help="run a property suite (or all of them)")
    _add_common(s, chain=False, field=True, budgets=True)
    s.add_argument("--suite", required=True, choices=("all", *sorted(REGISTRY)))
    s.add_argument("--chain", default=None, help="restrict a suite to one chain")
    s.add_argument("--n", type=int, default=None)
    s.set_defaults(handler=_cmd_verify, default_format="kv")
    # verify takes no default subset cap: suites pick their own
    s.set_defaults(subset_cap=None)

    s = sub.add_parser("examples", help="list the bundled chains")
    _add_common(s, chain=False)
    s.set_defaults(handler=_cmd_examples, default_format="tsv")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    out = sys.stdout
    try:
        code = args.handler(args, out)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ChainSpecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
