"""Command-line entry point: ``edvtrees <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import TextIO

from .division import compare, edge_division_vector, edge_mu
from .enumeration import ClassSpec, EnumerationError, enumerate_class
from .families import FamilyError
from .indices import index_value, parse_index
from .tree import Tree, TreeFormatError, canonical_code, parse_edge_list, parse_tree, to_edge_list, to_level_sequence
from .verify import (
    CLAIM_IDS,
    find_equivalent_nonisomorphic,
    reproduce_table4,
    run_claim,
    table4_csv,
    table4_text,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    enumeration_cap: int = 16
    float_tolerance: float = 1e-9
    workers: int = os.cpu_count() or 1
    output_format: str = "text"

    def validate(self) -> None:
        if self.enumeration_cap < 4:
            raise UsageError(f"enumeration cap must be >= 4, got {self.enumeration_cap}")
        if self.workers < 1:
            raise UsageError(f"workers must be >= 1, got {self.workers}")
        if not self.float_tolerance > 0:
            raise UsageError(f"tolerance must be > 0, got {self.float_tolerance}")
        if self.output_format not in ("text", "json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")


_KEYS = {
    "enumeration_cap": ("enumeration_cap", int), "cap": ("enumeration_cap", int),
    "float_tolerance": ("float_tolerance", float), "tolerance": ("float_tolerance", float),
    "workers": ("workers", int),
    "output_format": ("output_format", str), "format": ("output_format", str),
}


def _apply(cfg: CliConfig, key: str, raw: str, origin: str) -> None:
    if key not in _KEYS:
        raise UsageError(f"{origin}: unknown setting {key!r}")
    attr, conv = _KEYS[key]
    try:
        setattr(cfg, attr, conv(raw.strip()))
    except ValueError:
        raise UsageError(f"{origin}: bad value {raw!r} for {key}") from None


def load_config(args: argparse.Namespace, environ=None) -> CliConfig:
    """Defaults, then the config file, then ``EDV_*`` variables, then flags."""
    environ = os.environ if environ is None else environ
    cfg = CliConfig()
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read config file: {exc}") from None
        for i, line in enumerate(lines, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{args.config}:{i}: expected key=value")
            k, v = line.split("=", 1)
            _apply(cfg, k.strip().lower(), v, f"{args.config}:{i}")
    for env, key in (("EDV_CAP", "cap"), ("EDV_WORKERS", "workers"), ("EDV_FORMAT", "format"),
                     ("EDV_TOLERANCE", "tolerance")):
        if environ.get(env):
            _apply(cfg, key, environ[env], env)
    if args.cap is not None:
        cfg.enumeration_cap = args.cap
    if args.workers is not None:
        cfg.workers = args.workers
    if args.tolerance is not None:
        cfg.float_tolerance = args.tolerance
    if args.format is not None:
        cfg.output_format = args.format
    cfg.validate()
    return cfg


def read_tree(arg: str) -> Tree:
    """``@path`` reads an edge-list file; anything else is a family expression."""
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read tree file: {exc}") from None
    return parse_tree(arg, "family-expression")


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"])
    common.add_argument("--cap", type=int, help="largest order that may be enumerated")
    common.add_argument("--workers", type=int)
    common.add_argument("--tolerance", type=float)
    common.add_argument("--config", help="key=value settings file")

    p = argparse.ArgumentParser(prog="edvtrees", description="Edge division vectors and tree preorders.")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("edv", parents=[common], help="edge division vector")
    s.add_argument("tree")
    s = sub.add_parser("mu", parents=[common], help="per-edge mu table")
    s.add_argument("tree")
    s = sub.add_parser("compare", parents=[common], help="compare two trees")
    s.add_argument("a")
    s.add_argument("b")
    s = sub.add_parser("index", parents=[common], help="evaluate a topological index")
    s.add_argument("name")
    s.add_argument("tree")
    s = sub.add_parser("construct", parents=[common], help="edge list of a family member")
    s.add_argument("expr")
    s = sub.add_parser("enumerate", parents=[common], help="list trees of a class")
    s.add_argument("spec")
    s = sub.add_parser("verify", parents=[common], help="run a verification claim")
    s.add_argument("claim", help="one of: " + ", ".join(CLAIM_IDS))
    s.add_argument("--n-max", type=int)
    sub.add_parser("table4", parents=[common], help="Wiener bounds for caterpillars")
    s = sub.add_parser("equiv-pairs", parents=[common], help="non-isomorphic trees with equal vectors")
    s.add_argument("n", type=int)
    return p


def _emit_reports(reports, cfg, out) -> int:
    if cfg.output_format == "json":
        payload = [r.to_dict() for r in reports]
        out.write(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2, sort_keys=True, default=str) + "\n")
    else:
        for r in reports:
            out.write(r.to_text() + "\n")
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def _dispatch(args, cfg: CliConfig, out: TextIO) -> int:
    fmt = cfg.output_format
    cmd = args.cmd
    if cmd == "edv":
        t = read_tree(args.tree)
        v = edge_division_vector(t)
        if fmt == "json":
            out.write(json.dumps({"n": t.n, "vector": list(v.r)}) + "\n")
        elif fmt == "csv":
            out.write("n," + ",".join(f"r{i}" for i in range(1, len(v.r) + 1)) + "\n")
            out.write(",".join(map(str, (t.n,) + v.r)) + "\n")
        else:
            out.write(str(v) + "\n")
        return EXIT_OK
    if cmd == "mu":
        t = read_tree(args.tree)
        m = edge_mu(t)
        rows = list(zip(m.edges, m.mu))
        if fmt == "json":
            out.write(json.dumps([{"u": u, "v": v, "mu": x} for (u, v), x in rows]) + "\n")
        elif fmt == "csv":
            out.write("u,v,mu\n" + "".join(f"{u},{v},{x}\n" for (u, v), x in rows))
        else:
            out.write("".join(f"{u} {v} {x}\n" for (u, v), x in rows))
        return EXIT_OK
    if cmd == "compare":
        a, b = read_tree(args.a), read_tree(args.b)
        rel = compare(edge_division_vector(a), edge_division_vector(b))
        if fmt == "json":
            out.write(rel.to_json() + "\n")
        else:
            out.write(str(rel) + "\n")
        return EXIT_OK
    if cmd == "index":
        spec = parse_index(args.name)
        t = read_tree(args.tree)
        v = index_value(t, spec)
        if fmt == "json":
            out.write(json.dumps({"index": spec.label, "n": t.n, "value": _fmt_value(v)}) + "\n")
        else:
            out.write(_fmt_value(v) + "\n")
        return EXIT_OK
    if cmd == "construct":
        t = parse_tree(args.expr, "family-expression")
        if fmt == "json":
            out.write(json.dumps({"n": t.n, "edges": [list(e) for e in t.edges]}) + "\n")
        else:
            out.write(to_edge_list(t))
        return EXIT_OK
    if cmd == "enumerate":
        c = ClassSpec.parse(args.spec)
        if c.n > cfg.enumeration_cap:
            raise UsageError(f"n={c.n} exceeds the enumeration cap {cfg.enumeration_cap}")
        trees = list(enumerate_class(c, cap=cfg.enumeration_cap))
        if fmt == "json":
            out.write(json.dumps([{"canonical_code": canonical_code(t), "level_sequence": to_level_sequence(t),
                                   "vector": str(edge_division_vector(t))} for t in trees], indent=2) + "\n")
        elif fmt == "csv":
            out.write("level_sequence,vector\n")
            out.write("".join(f"\"{to_level_sequence(t)}\",\"{edge_division_vector(t)}\"\n" for t in trees))
        else:
            out.write("".join(f"{to_level_sequence(t)}\t{edge_division_vector(t)}\n" for t in trees))
        return EXIT_OK
    if cmd == "verify":
        if args.claim not in CLAIM_IDS:
            raise UsageError(f"unknown claim {args.claim!r}; known: {', '.join(CLAIM_IDS)}")
        reports = run_claim(args.claim, args.n_max, workers=cfg.workers, cap=cfg.enumeration_cap,
                            tol=cfg.float_tolerance)
        return _emit_reports(reports, cfg, out)
    if cmd == "table4":
        rep = reproduce_table4()
        rows = rep.data["rows"]
        if fmt == "csv":
            out.write(table4_csv(rows))
        elif fmt == "json":
            out.write(rep.to_json() + "\n")
        else:
            out.write(table4_text(rows) + "\n" + rep.to_text() + "\n")
        return EXIT_FAIL if rep.status == "fail" else EXIT_OK
    if cmd == "equiv-pairs":
        if args.n > cfg.enumeration_cap:
            raise UsageError(f"n={args.n} exceeds the enumeration cap {cfg.enumeration_cap}")
        pairs = find_equivalent_nonisomorphic(args.n, cap=cfg.enumeration_cap)
        if fmt == "json":
            out.write(json.dumps([{"vector": str(edge_division_vector(a)), "first": canonical_code(a),
                                   "second": canonical_code(b)} for a, b in pairs], indent=2) + "\n")
        else:
            for a, b in pairs:
                out.write(f"{edge_division_vector(a)}\t{to_level_sequence(a)}\t{to_level_sequence(b)}\n")
        return EXIT_OK
    raise UsageError(f"unknown subcommand {cmd!r}")


def run(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = load_config(args)
        return _dispatch(args, cfg, out)
    except (UsageError, TreeFormatError, FamilyError, EnumerationError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"edvtrees: error: {msg}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
