"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, TextIO

from . import graph6
from .bounders import ClassSpec, run_class
from .errors import EmptyGraphError, InvariantViolation, NotInClassError, ResourceCapError
from .experiment import (
    ExperimentManifest,
    default_parallelism,
    is_resource_error,
    render_csv,
    run_experiment,
    write_reports,
)
from .generators import GenerationError, GenSpec
from .graph import Graph, members
from .oracle import DEFAULT_ENUM_CAP, DEFAULT_PERFECT_CAP, alpha_size, eta_exact, lovasz_violation, omega_size, verify_hitting_set
from .patterns import find_induced_pattern, parse_pattern

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(Exception):
    pass


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def read_graphs(path: str, fmt: str) -> Iterator[tuple[int, Graph]]:
    fh = _open_input(path)
    try:
        if fmt == "edges":
            text = fh.read()
            if text.strip():
                try:
                    yield 1, graph6.parse_edge_list(text)
                except ValueError as exc:
                    raise InputError(str(exc)) from exc
            return
        try:
            yield from graph6.read_graph6_lines(fh)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    finally:
        if fh is not sys.stdin:
            fh.close()


def _fmt_set(vs) -> str:
    return ",".join(map(str, vs))


def _emit(out: TextIO, as_json: bool, record: dict, text: str) -> None:
    out.write((json.dumps(record, sort_keys=True) if as_json else text) + "\n")


def cmd_eta(args, out: TextIO) -> int:
    for lineno, g in read_graphs(args.input, args.format):
        code = graph6.encode(g)
        if g.n == 0:
            _emit(out, args.json, {"graph": code, "n": 0}, f"{code} n=0 (null graph, no hitting set)")
            continue
        a, w = alpha_size(g), omega_size(g)
        size, W = eta_exact(g, cap=args.cap)
        rec = {"graph": code, "n": g.n, "alpha": a, "omega": w, "eta": size, "witness": members(W)}
        _emit(out, args.json, rec, f"{code} alpha={a} omega={w} eta={size} witness={_fmt_set(members(W))}")
    return EXIT_OK


def cmd_bound(args, out: TextIO) -> int:
    spec = ClassSpec.parse(args.cls)
    status = EXIT_OK
    for lineno, g in read_graphs(args.input, args.format):
        code = graph6.encode(g)
        try:
            cert = run_class(g, spec, strict=False if args.no_check else None)
        except NotInClassError as exc:
            rec = {"graph": code, "class": spec.label(), "rejected": str(exc), "witness": exc.witness, "pattern": exc.pattern}
            _emit(out, args.json, rec, f"{code} class={spec.label()} rejected: {exc}")
            status = max(status, EXIT_INPUT)
            continue
        except EmptyGraphError as exc:
            _emit(out, args.json, {"graph": code, "rejected": str(exc)}, f"{code} rejected: {exc}")
            status = max(status, EXIT_INPUT)
            continue
        except InvariantViolation as exc:
            rec = {"graph": code, "class": spec.label(), "invariant": exc.label, "error": str(exc)}
            _emit(out, args.json, rec, f"{code} class={spec.label()} invariant failed: {exc}")
            status = max(status, EXIT_VERIFY)
            continue
        ok = verify_hitting_set(g, cert.W) if not args.no_verify else None
        within = cert.size <= cert.claimed_bound
        rec = {
            "graph": code,
            "class": spec.label(),
            "algorithm": cert.algorithm,
            "W": cert.vertices,
            "size": cert.size,
            "claimed_bound": str(cert.claimed_bound),
            "within_bound": within,
            "verified": ok,
        }
        shown = "skipped" if ok is None else str(ok).lower()
        _emit(
            out,
            args.json,
            rec,
            f"{code} class={spec.label()} size={cert.size} bound={cert.claimed_bound} verified={shown} W={_fmt_set(cert.vertices)}",
        )
        if ok is False or not within:
            status = max(status, EXIT_VERIFY)
    return status


def cmd_check(args, out: TextIO) -> int:
    pats = [parse_pattern(p) for p in args.free or []]
    if not pats and not args.perfect:
        raise InputError("check needs at least one --free pattern or --perfect")
    for lineno, g in read_graphs(args.input, args.format):
        code = graph6.encode(g)
        rec: dict = {"graph": code}
        parts = [code]
        for p in pats:
            emb = find_induced_pattern(g, p)
            if emb is None:
                rec[p.name] = {"free": True}
                parts.append(f"{p.name}=free")
            else:
                rec[p.name] = {"free": False, "witness": list(emb)}
                parts.append(f"{p.name}=contains[{_fmt_set(emb)}]")
        if args.perfect:
            bad = lovasz_violation(g, cap=args.cap)
            if bad is None:
                rec["perfect"] = {"perfect": True}
                parts.append("perfect=yes")
            else:
                rec["perfect"] = {"perfect": False, "witness": members(bad)}
                parts.append(f"perfect=no[{_fmt_set(members(bad))}]")
        _emit(out, args.json, rec, " ".join(parts))
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    spec = GenSpec(
        kind=args.kind,
        n=args.n,
        p=args.p,
        seed=args.seed,
        pattern=args.pattern,
        max_tries=args.max_tries,
        clique=args.clique,
        stable=args.stable,
        count=args.count,
    )
    for g in spec.graphs():
        out.write(graph6.encode(g) + "\n")
    return EXIT_OK


def cmd_experiment(args, out: TextIO) -> int:
    try:
        manifest = ExperimentManifest.load(args.manifest)
    except OSError as exc:
        raise InputError(f"cannot read manifest {args.manifest}: {exc.strerror}") from exc
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad manifest: {exc}") from exc
    if args.jobs is not None:
        manifest.parallelism = args.jobs
    result = run_experiment(manifest)
    prefix = args.output or manifest.output
    if prefix:
        csv_path, json_path = write_reports(result, manifest, prefix, args.reproducible)
        print(f"wrote {csv_path} and {json_path}", file=sys.stderr)
    else:
        out.write(render_csv(result, args.reproducible))
    failures = result.failures
    print(f"rows={len(result.rows)} skipped={result.skipped} failures={len(failures)}", file=sys.stderr)
    if failures and not args.allow_unverified:
        if all(is_resource_error(r) for r in failures):
            return EXIT_CAP
        return EXIT_VERIFY
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etahit", description="Hitting sets for maximum stable sets, with certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph6 file, one graph per line ('-' for stdin)")
        p.add_argument("--format", choices=("g6", "edges"), default="g6", help="input format (edges: 'n m' header then 'u v' lines)")
        p.add_argument("--json", action="store_true", help="one JSON object per graph")

    p = sub.add_parser("eta", help="exact alpha, omega, eta and a minimum hitting set")
    add_input(p)
    p.add_argument("--exact", action="store_true", help="accepted for clarity; eta is always exact")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_ENUM_CAP, help="maximum stable sets to enumerate")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("bound", help="construct and verify a hitting set for a graph class")
    add_input(p)
    p.add_argument("--class", dest="cls", required=True, help="p5 | star:s | sst:s,t | ft:t | lt:t | perfect | proper-p5:H")
    p.add_argument("--no-check", action="store_true", help="skip the class-membership check")
    p.add_argument("--no-verify", action="store_true", help="skip re-verification of the hitting set")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("check", help="induced-subgraph freeness and perfection")
    add_input(p)
    p.add_argument("--free", action="append", metavar="PATTERN", help="P5 | K1s:s | Sst:s,t | Ft:t | Lt:t | Mt:t | 2K2 | g6:CODE (repeatable)")
    p.add_argument("--perfect", action="store_true", help="Lovasz perfection check")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_PERFECT_CAP, help="largest n for --perfect")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="emit seeded graphs as graph6")
    p.add_argument("--kind", required=True, choices=("gnp", "hfree", "split", "cograph", "exhaustive"))
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--p", default="1/2", help="edge probability, e.g. 0.5 or 1/3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pattern", help="forbidden induced pattern for --kind hfree")
    p.add_argument("--max-tries", type=_positive_int, default=1000)
    p.add_argument("--clique", type=int, default=0, help="clique side for --kind split")
    p.add_argument("--stable", type=int, default=0, help="stable side for --kind split")
    p.add_argument("--count", type=_positive_int, default=1)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="run a JSON manifest of generators x routes")
    p.add_argument("manifest")
    p.add_argument("--output", help="report prefix; writes PREFIX.csv and PREFIX.json (default: CSV on stdout)")
    p.add_argument("--jobs", type=_positive_int, default=None, help="worker processes (default: $ETAHIT_JOBS or 1)")
    p.add_argument("--reproducible", action="store_true", help="omit timestamps and timings")
    p.add_argument("--allow-unverified", action="store_true", help="exit 0 even if rows fail")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "experiment" and args.jobs is None:
            default_parallelism()
        return args.func(args, out)
    except ResourceCapError as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, GenerationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
