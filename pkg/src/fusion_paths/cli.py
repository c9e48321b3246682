"""Command-line front end.

Exit codes: 0 success, 1 a checked identity failed, 2 bad parameters,
3 an oracle result did not stabilise at the configured caps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import characters as ch
from .heisenberg import checks
from .heisenberg.coinvariants import CoinvariantSpec, coinvariant_dims
from .heisenberg.modules import ALL_FAMILIES, ModuleSpec
from .paths import (
    bijection_iota,
    bijection_iota_inverse,
    enumerate_cpaths,
    enumerate_vpaths,
    recursion_partition_check,
)
from .suite import GROUPS, SuiteContext, format_line, run_suite
from .verlinde import verlinde_numbers

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_UNSTABLE = 0, 1, 2, 3
AUX_CAP_ENV = "FUSION_PATHS_AUX_CAP"


class ParamError(ValueError):
    pass


def _emit(data, fmt: str, pretty: Optional[str] = None, csv_rows: Optional[List[dict]] = None) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    elif fmt == "csv":
        rows = csv_rows if csv_rows is not None else (data if isinstance(data, list) else [data])
        if rows:
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            for r in rows:
                writer.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
            sys.stdout.write(buf.getvalue())
    else:
        print(pretty if pretty is not None else json.dumps(data))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamError(msg)


def _check_level(args, with_l: bool = True) -> None:
    _need(args.k >= 1, "k must be at least 1")
    if with_l and getattr(args, "l", None) is not None:
        _need(0 <= args.l <= args.k, "l must lie in 0..k")


# subcommands

def cmd_verlinde(args) -> int:
    _check_level(args, with_l=False)
    _need(args.N >= 0, "N must be non-negative")
    table = verlinde_numbers(args.k, args.N)
    _emit(table.to_json(), args.format, pretty=str(list(table.values)),
          csv_rows=[{"k": args.k, "N": args.N, "l": l, "d": v} for l, v in enumerate(table.values)])
    return EXIT_OK


def cmd_paths(args) -> int:
    _check_level(args)
    _need(args.l is not None, "--l is required")
    _need(args.N >= 0, "N must be non-negative")
    status = EXIT_OK
    if args.check_bijection:
        vp = enumerate_vpaths(args.k, args.l, args.N) if args.N >= 1 else []
        images = [bijection_iota(p) for p in vp]
        ok = set(images) == set(enumerate_cpaths(args.k, args.l, args.N)) or args.N == 0
        ok = ok and len(set(images)) == len(images)
        ok = ok and all(bijection_iota_inverse(c) == p for c, p in zip(images, vp))
        print(f"bijection: {'ok' if ok else 'FAILED'} ({len(vp)} paths)", file=sys.stderr)
        status = max(status, EXIT_OK if ok else EXIT_FAIL)
    if args.check_recursion:
        ok = recursion_partition_check(args.k, args.l, args.N)
        print(f"recursion: {'ok' if ok else 'FAILED'}", file=sys.stderr)
        status = max(status, EXIT_OK if ok else EXIT_FAIL)
    if args.check_bijection or args.check_recursion:
        return status
    if args.family == "v":
        _need(args.N >= 1, "Verlinde paths need N >= 1")
        paths = enumerate_vpaths(args.k, args.l, args.N)
    else:
        paths = enumerate_cpaths(args.k, args.l, args.N)
    if args.count:
        _emit({"k": args.k, "l": args.l, "N": args.N, "count": len(paths)}, args.format, pretty=str(len(paths)))
        return EXIT_OK
    data = [p.to_json() for p in paths]
    _emit(data, args.format, pretty="\n".join(str(p) for p in paths))
    return EXIT_OK


def _poly_out(poly, args) -> None:
    _emit(poly.to_json(), args.format, pretty=str(poly), csv_rows=poly.to_json())


def cmd_char(args) -> int:
    _check_level(args)
    if args.matrix:
        if args.matrix == "R":
            _need(args.N is not None and args.N >= 2, "R needs --N >= 2")
            m = ch.r_matrix(args.k, args.N)
        else:
            m = ch.l_matrix(args.k, from_gradings=args.from_gradings)
        pretty = "\n".join(
            f"{str(lab):>8} " + "  ".join(f"{str(e):>12}" for e in row) for lab, row in zip(m.labels, m.entries)
        )
        _emit(m.to_json(), args.format, pretty=pretty)
        return EXIT_OK
    if args.verify:
        _need(args.N is not None and args.N >= 1, "--verify needs --N")
        L = ch.l_matrix(args.k, from_gradings=args.from_gradings)
        results = {}
        ls = [args.l] if args.l is not None else list(range(args.k + 1))
        if args.verify in ("all", "right"):
            results["right"] = all(ch.verify_right_recursion(args.k, l, N)
                                   for l in ls for N in range(2, args.N + 1))
        if args.verify in ("all", "left"):
            results["left"] = all(ch.verify_left_recursion(args.k, l, N, L)
                                  for l in ls for N in range(1, args.N + 1))
        if args.verify in ("all", "conjugation"):
            results["conjugation"] = all(ch.verify_conjugation_identity(args.k, N) for N in range(2, args.N + 1))
        _emit(results, args.format, pretty="\n".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in results.items()))
        return EXIT_OK if all(results.values()) else EXIT_FAIL
    _need(args.l is not None and args.N is not None and args.N >= 1, "--l and --N >= 1 are required")
    if args.right is not None:
        i, j = args.right
        _need(args.N >= 2, "right partial characters need N >= 2")
        poly = ch.char_right(args.k, args.l, args.N, i, j)
    elif args.left is not None:
        poly = ch.char_left(args.k, args.l, args.N, args.left)
    else:
        poly = ch.char_full(args.k, args.l, args.N)
    _poly_out(poly, args)
    return EXIT_OK


def _aux_cap(args) -> Optional[int]:
    if args.aux_cap is not None:
        return args.aux_cap
    env = os.environ.get(AUX_CAP_ENV)
    return int(env) if env else None


def _module(args) -> ModuleSpec:
    _need(args.family in ALL_FAMILIES, f"family must be one of {ALL_FAMILIES}")
    l3 = args.l3
    if l3 is None and not args.family.endswith("bar"):
        l3 = args.l1 + args.l2 - args.k if args.family == "W" else 0
    return ModuleSpec(args.family, args.k, args.l1, args.l2, l3)


def cmd_oracle(args) -> int:
    _check_level(args, with_l=False)
    for name in ("M", "N"):
        if getattr(args, name, None) is not None:
            _need(getattr(args, name) >= 0, f"{name} must be non-negative")
    action = args.action
    if action in ("dims", "char"):
        spec = CoinvariantSpec(_module(args), args.M, args.N, d_cap=args.d_cap, aux_cap=_aux_cap(args),
                               cutoff=not args.no_cutoff)
        table = coinvariant_dims(spec)
        if action == "dims":
            pretty = "\n".join(f"(m,n,d)={w} dim={table.dims[w]} basis={[str(b) for b in table.bases[w]]}"
                               for w in sorted(table.dims))
            pretty += f"\ntotal {table.total}, stabilized {table.stabilized}"
            if args.format == "csv":
                sys.stdout.write(table.to_csv())
            else:
                _emit(table.to_json(), args.format, pretty=pretty)
        else:
            poly = table.character()
            _emit({"character": poly.to_json(), "stabilized": table.stabilized}, args.format,
                  pretty=f"{poly}\nstabilized {table.stabilized}")
        return EXIT_OK if table.stabilized else EXIT_UNSTABLE
    results = []
    if action == "verify-aux":
        for T in range(0, args.maxMN + 1):
            for M in range(T + 1):
                for l in range(args.k + 1):
                    for i in range(l + 1):
                        results.append(((l, i, M, T - M), checks.verify_aux_dimension(args.k, l, i, M, T - M)))
    elif action == "verify-thmR":
        _need(0 <= args.l3 <= min(args.l1, args.l2), "need 0 <= l3 <= min(l1, l2)")
        _need(args.N >= 1, "N must be at least 1")
        results.append(((args.l1, args.l2, args.l3, args.M, args.N),
                        checks.verify_w_recursion(args.k, args.l1, args.l2, args.l3, args.M, args.N)))
    elif action == "verify-bridge":
        for N in range(1, args.N + 1):
            for l in range(args.k + 1):
                results.append(((l, N), checks.verify_character_bridge(args.k, l, N)))
    elif action == "verify-seq":
        _need(args.kind in checks.SEQUENCE_KINDS, f"kind must be one of {checks.SEQUENCE_KINDS}")
        _need(checks.sequence_applies(args.kind, args.k, args.l1, args.l2, args.M, args.N),
              "the sequence does not apply for these parameters")
        results.append(((args.kind, args.l1, args.l2, args.M, args.N),
                        checks.verify_exact_sequence_dims(args.kind, args.k, args.l1, args.l2, args.M, args.N)))
    elif action == "verify-basis":
        for N in range(1, args.N + 1):
            for l in range(args.k + 1):
                results.append(((l, N), checks.monomial_basis_check(args.k, l, N)))
    rows = [{"case": list(lab), "ok": r.ok, "stabilized": r.stabilized, "detail": r.detail} for lab, r in results]
    _emit(rows, args.format, pretty="\n".join(
        f"{tuple(r['case'])}: {'ok' if r['ok'] else 'MISMATCH'}{'' if r['stabilized'] else ' (not stabilized)'}"
        for r in rows))
    if not all(r.stabilized for _, r in results):
        return EXIT_UNSTABLE
    return EXIT_OK if all(r.ok for _, r in results) else EXIT_FAIL


def cmd_suite(args) -> int:
    ctx = SuiteContext(golden_dir=Path(args.golden_dir) if args.golden_dir else None, seed=args.seed)
    report = run_suite(args.only, ctx)
    if args.format == "pretty":
        for r in report["criteria"]:
            print(format_line(r))
    else:
        _emit(report, args.format, csv_rows=report["criteria"])
    return EXIT_OK if report["passed"] else EXIT_FAIL


# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fusion-paths", description=__doc__.splitlines()[0])
    p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verlinde", help="Verlinde numbers d^(N)_{k,l}")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.set_defaults(func=cmd_verlinde)

    s = sub.add_parser("paths", help="enumerate or check paths")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int, required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--family", choices=("c", "v"), default="c")
    s.add_argument("--count", action="store_true")
    s.add_argument("--check-bijection", action="store_true")
    s.add_argument("--check-recursion", action="store_true")
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("char", help="characters, transfer matrices and their identities")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l", type=int)
    s.add_argument("--N", type=int)
    s.add_argument("--right", type=int, nargs=2, metavar=("I", "J"))
    s.add_argument("--left", type=int, metavar="I")
    s.add_argument("--matrix", choices=("R", "L"))
    s.add_argument("--from-gradings", action="store_true",
                   help="use the left matrix without the q^i' column factor")
    s.add_argument("--verify", choices=("all", "right", "left", "conjugation"))
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("oracle", help="Heisenberg module oracle")
    s.add_argument("action", choices=("dims", "char", "verify-aux", "verify-thmR", "verify-bridge",
                                      "verify-seq", "verify-basis"))
    s.add_argument("--family", default="W")
    s.add_argument("--kind", default="V")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--l1", type=int, default=0)
    s.add_argument("--l2", type=int, default=0)
    s.add_argument("--l3", type=int)
    s.add_argument("--M", type=int, default=0)
    s.add_argument("--N", type=int, default=0)
    s.add_argument("--maxMN", type=int, default=3)
    s.add_argument("--d-cap", type=int)
    s.add_argument("--aux-cap", type=int, help=f"relation degree cap (default from ${AUX_CAP_ENV}, else exact)")
    s.add_argument("--aux-slack", type=int)
    s.add_argument("--no-cutoff", action="store_true")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("suite", help="run the acceptance battery")
    s.add_argument("--only", action="append", choices=GROUPS)
    s.add_argument("--golden-dir")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParamError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
