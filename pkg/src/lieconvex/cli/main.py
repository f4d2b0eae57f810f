"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical violation was found, 2 usage or
parse error, 3 a resource ceiling was hit.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Sequence

from .. import charmult, convexity, lrcomb
from ..rootdata import (
    NotationError,
    RootSystem,
    format_partition,
    format_weight,
    parse_partition,
    parse_root_system,
    parse_weight,
    weyl_dim,
)
from . import cache, records
from .config import Config, ConfigError, resolve

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

log = logging.getLogger("lieconvex")


class UsageError(Exception):
    pass


class Output:
    def __init__(self, cfg: Config, stream):
        self.structured = cfg.output == "structured"
        self.stream = stream

    def line(self, text: str) -> None:
        if not self.structured:
            print(text, file=self.stream)

    def record(self, rec: dict) -> None:
        if self.structured:
            print(records.dumps(rec), file=self.stream)


def _weights(rs: RootSystem, texts: Sequence[str]):
    return [parse_weight(rs, t) for t in texts]


def _check_product_dimension(rs: RootSystem, factors, cfg: Config) -> None:
    total = 1
    for f in factors:
        total *= weyl_dim(rs, f)
    if total > cfg.dimension_ceiling:
        raise charmult.ResourceLimitError(
            f"product dimension {total} exceeds the dimension ceiling {cfg.dimension_ceiling}")


def _dominant_factors(rs: RootSystem, texts: Sequence[str]):
    factors = _weights(rs, texts)
    for t, f in zip(texts, factors):
        if any(x < 0 for x in f):
            raise NotationError(f"weight {t} is not dominant", t, 1 + t.index("-") if "-" in t else 0)
    return factors


def cmd_decompose(args, cfg: Config, out: Output) -> int:
    rs = parse_root_system(args.root_system)
    factors = _dominant_factors(rs, args.weights)
    if not factors:
        raise UsageError("decompose needs at least one weight")
    _check_product_dimension(rs, factors, cfg)
    d = charmult.tensor_decompose_multi(rs, factors)
    for nu, c, _ in records.sorted_terms(rs, d):
        out.line(f"{format_weight(nu)} x{c}")
    out.record(records.decomposition_record(rs, factors, d))
    return EXIT_OK


def _print_report(report: convexity.ScanReport, out: Output) -> None:
    out.line(f"{report.instances_checked} instances, {len(report.violations)} violations")
    for inst, w in report.violations:
        out.line(f"VIOLATION {inst}: base={format_weight(w.base)} dir={format_weight(w.direction)} "
                 f"k={w.steps} occ={format_weight(w.occupancies)}")


def cmd_check_convexity(args, cfg: Config, out: Output) -> int:
    rs = parse_root_system(args.root_system)
    factors = _dominant_factors(rs, args.weights)
    if not factors:
        raise UsageError("check-convexity needs at least one weight")
    _check_product_dimension(rs, factors, cfg)
    report = convexity.scan_instance(rs, factors)
    _print_report(report, out)
    out.record(records.scan_record(rs, report, {"factors": [list(f) for f in factors]}, args.timing))
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_scan_convexity(args, cfg: Config, out: Output) -> int:
    rs = parse_root_system(args.root_system)
    query = {"r": args.r, "bound": args.bound}
    if args.random is not None:
        if cfg.seed is None:
            raise UsageError("--random needs a seed (--seed or the config file)")
        query.update(mode="random", count=args.random, seed=cfg.seed)
        report = convexity.scan_family(rs, args.r, args.bound, mode="random", seed=cfg.seed, count=args.random,
                                       instance_budget=cfg.instance_budget, workers=args.workers)
    else:
        query["mode"] = "exhaustive"
        report = convexity.scan_family(rs, args.r, args.bound, instance_budget=cfg.instance_budget,
                                       workers=args.workers)
    _print_report(report, out)
    out.record(records.scan_record(rs, report, query, args.timing))
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_lr(args, cfg: Config, out: Output) -> int:
    lam, mu, nu = (parse_partition(t) for t in (args.lam, args.mu, args.nu))
    value = lrcomb.lr_coefficient(lam, mu, nu)
    out.line(str(value))
    out.record(records.value_record("lr_coefficient", {"lam": list(lam), "mu": list(mu), "nu": list(nu)}, value))
    return EXIT_OK


def cmd_kostka(args, cfg: Config, out: Output) -> int:
    lam = parse_partition(args.lam)
    content = parse_partition(args.mu)
    value = lrcomb.kostka(lam, content)
    out.line(str(value))
    out.record(records.value_record("kostka", {"lam": list(lam), "mu": list(content)}, value))
    return EXIT_OK


def cmd_saturation(args, cfg: Config, out: Output) -> int:
    rs = parse_root_system(args.root_system)
    factors = _dominant_factors(rs, args.weights)
    if not factors:
        raise UsageError("saturation needs at least one weight")
    _check_product_dimension(rs, [tuple(args.mmax * x for x in f) for f in factors], cfg)
    profile = convexity.saturation_probe(rs, factors, args.mmax)
    for m, v in profile:
        out.line(f"m={m}: {v}")
    holds = convexity.saturation_holds(profile)
    out.record(records.value_record(
        "saturation_profile",
        {"root_system": rs.name, "factors": [list(f) for f in factors], "mmax": args.mmax},
        {"profile": [[m, v] for m, v in profile], "saturated": holds}))
    if rs.family == "A" and not holds:
        log.error("saturation fails in type A: %s", profile)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_prv(args, cfg: Config, out: Output) -> int:
    rs = parse_root_system(args.root_system)
    lam, mu = _dominant_factors(rs, [args.lam, args.mu])
    _check_product_dimension(rs, [lam, mu], cfg)
    d = charmult.tensor_decompose(rs, lam, mu)
    comps = sorted(convexity.prv_components(rs, lam, mu), key=lambda w: (-weyl_dim(rs, w), w))
    rows = [(w, d.get(w, 0)) for w in comps]
    for w, c in rows:
        out.line(f"{format_weight(w)} {'occurs' if c else 'MISSING'} x{c}")
    out.record(records.value_record(
        "prv_components", {"root_system": rs.name, "lam": list(lam), "mu": list(mu)},
        [{"weight": list(w), "multiplicity": c} for w, c in rows]))
    return EXIT_OK if all(c for _, c in rows) else EXIT_VIOLATION


def cmd_branch(args, cfg: Config, out: Output) -> int:
    p = parse_partition(args.partition)
    if len(p) > args.n:
        raise UsageError(f"partition {format_partition(p)} has more than {args.n} parts")
    parts = charmult.branch_gl_to_gl(p, args.n)
    for b in parts:
        out.line(format_partition(b))
    out.record(records.value_record("branching", {"partition": list(p), "n": args.n}, [list(b) for b in parts]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=("text", "structured"), default=None,
                        help="output format (default: text)")
    common.add_argument("--config", default=None, help="INI config file with a [lieconvex] section")
    common.add_argument("--cache", dest="cache_path", default=None, help="persistent weight-system cache file")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--dimension-ceiling", type=int, default=None)
    common.add_argument("--instance-budget", type=int, default=None)

    parser = argparse.ArgumentParser(prog="lieconvex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("decompose", cmd_decompose, "decompose a tensor product of irreducibles")
    p.add_argument("root_system")
    p.add_argument("weights", nargs="*")

    for name, fn in (("check-convexity", cmd_check_convexity),):
        p = add(name, fn, "check lattice-line convexity of one tensor product support")
        p.add_argument("root_system")
        p.add_argument("weights", nargs="*")
        p.add_argument("--timing", action="store_true")

    p = add("scan-convexity", cmd_scan_convexity, "scan tensor products of bounded weights")
    p.add_argument("root_system")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--random", type=int, default=None, metavar="COUNT")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true")

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient c^nu_{lam,mu}")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")

    p = add("kostka", cmd_kostka, "Kostka number K_{lam,mu}")
    p.add_argument("lam")
    p.add_argument("mu")

    p = add("saturation", cmd_saturation, "invariant dimensions of stretched tensor products")
    p.add_argument("root_system")
    p.add_argument("weights", nargs="*")
    p.add_argument("--mmax", type=int, required=True)

    p = add("prv", cmd_prv, "PRV components of V(lam) x V(mu)")
    p.add_argument("root_system")
    p.add_argument("lam")
    p.add_argument("mu")

    p = add("branch", cmd_branch, "GL(n) -> GL(n-1) branching")
    p.add_argument("partition")
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    logging.basicConfig(level=logging.WARNING, format="lieconvex: %(levelname)s: %(message)s", stream=stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        cfg = resolve({
            "output": args.output,
            "cache_path": args.cache_path,
            "seed": args.seed,
            "dimension_ceiling": args.dimension_ceiling,
            "instance_budget": args.instance_budget,
        }, args.config)
    except ConfigError as e:
        print(f"lieconvex: error: {e}", file=stderr)
        return EXIT_USAGE

    if cfg.cache_path:
        cache.load(cfg.cache_path)
    try:
        code = args.func(args, cfg, Output(cfg, stdout))
    except NotationError as e:
        print(f"lieconvex: error: {e}", file=stderr)
        print("  " + e.caret().replace("\n", "\n  "), file=stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as e:
        print(f"lieconvex: error: {e}", file=stderr)
        return EXIT_USAGE
    except charmult.ResourceLimitError as e:
        print(f"lieconvex: resource limit: {e}", file=stderr)
        return EXIT_RESOURCE
    if cfg.cache_path:
        cache.save(cfg.cache_path)
    return code


def run() -> None:
    sys.exit(main())
