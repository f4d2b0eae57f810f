"""Executable checks for root-lattice convexity of tensor product supports.

A line is a sequence of dominant weights base + l * direction, l = 0..k,
with direction in the root lattice.  A tensor product support is convex
along the line when both endpoints occurring forces every intermediate
weight to occur.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import charmult
from .charmult import Decomposition
from .lrcomb import kostka
from .rootdata import (
    MAX_ENUMERATION_RANK,
    RootSystem,
    Weight,
    build_root_system,
    in_root_lattice,
    integral_simple_root_coords,
    is_dominant,
    normalize_partition,
    partition_to_weight,
    simple_root_coords,
    to_dominant,
    weyl_orbit,
)

CONVEX_OK = "CONVEX-OK"
VACUOUS = "VACUOUS"
VIOLATION = "VIOLATION"

DEFAULT_INSTANCE_BUDGET = 10**5


@dataclass(frozen=True)
class LineWitness:
    base: Weight
    direction: Weight
    steps: int
    occupancies: tuple[int, ...]

    @property
    def points(self) -> list[Weight]:
        return [tuple(b + l * g for b, g in zip(self.base, self.direction)) for l in range(self.steps + 1)]

    @property
    def status(self) -> str:
        occ = self.occupancies
        if not (occ[0] and occ[-1]):
            return VACUOUS
        return CONVEX_OK if all(occ) else VIOLATION


@dataclass
class ScanReport:
    instances_checked: int = 0
    lines_checked: int = 0
    violations: list[tuple[str, LineWitness]] = field(default_factory=list)
    # lines whose occupancies fail log-concavity; not convexity violations
    log_concavity_failures: list[tuple[str, LineWitness]] = field(default_factory=list)
    elapsed: float = 0.0

    def merge(self, other: "ScanReport") -> "ScanReport":
        return ScanReport(
            self.instances_checked + other.instances_checked,
            self.lines_checked + other.lines_checked,
            self.violations + other.violations,
            self.log_concavity_failures + other.log_concavity_failures,
            self.elapsed + other.elapsed,
        )

    def canonical(self) -> "ScanReport":
        key = lambda v: (v[0], v[1].base, v[1].direction, v[1].steps)
        return ScanReport(
            self.instances_checked,
            self.lines_checked,
            sorted(self.violations, key=key),
            sorted(self.log_concavity_failures, key=key),
            self.elapsed,
        )


def describe_instance(rs: RootSystem, factors: Sequence[Sequence[int]]) -> str:
    return rs.name + " " + " ".join("[" + ",".join(map(str, w)) + "]" for w in factors)


def support(d: Decomposition) -> set[Weight]:
    return set(d)


def check_line(rs: RootSystem, d: Decomposition, base: Sequence[int], direction: Sequence[int], k: int) -> LineWitness:
    base, direction = rs.check(base), rs.check(direction)
    if k < 1:
        raise ValueError(f"line needs at least one step, got k={k}")
    if not in_root_lattice(rs, direction):
        raise ValueError(f"direction {list(direction)} is not in the root lattice of {rs.name}")
    end = tuple(b + k * g for b, g in zip(base, direction))
    if not (is_dominant(rs, base) and is_dominant(rs, end)):
        raise ValueError(f"line endpoints {list(base)} and {list(end)} must both be dominant")
    occ = tuple(d.get(tuple(b + l * g for b, g in zip(base, direction)), 0) for l in range(k + 1))
    return LineWitness(base, direction, k, occ)


def log_concavity_scan(values: LineWitness | Sequence[int]) -> list[int]:
    """Interior indices l where values[l]^2 < values[l-1] * values[l+1]."""
    occ = values.occupancies if isinstance(values, LineWitness) else list(values)
    return [l for l in range(1, len(occ) - 1) if occ[l] ** 2 < occ[l - 1] * occ[l + 1]]


def lines_through(rs: RootSystem, points: Iterable[Sequence[int]]) -> Iterable[tuple[Weight, Weight, int]]:
    """(base, direction, k) for every pair of points and every k >= 2 dividing their difference."""
    pts = sorted(tuple(p) for p in points)
    for a, b in itertools.combinations(pts, 2):
        diff = tuple(y - x for x, y in zip(a, b))
        x = integral_simple_root_coords(rs, diff)
        assert x is not None, f"support points {a} and {b} differ by a non-root-lattice vector"
        g = math.gcd(*x)
        for k in range(2, g + 1):
            if g % k == 0:
                yield a, tuple(c // k for c in diff), k


def scan_decomposition(rs: RootSystem, d: Decomposition, label: str) -> ScanReport:
    report = ScanReport(instances_checked=1)
    for base, direction, k in lines_through(rs, d):
        w = check_line(rs, d, base, direction, k)
        report.lines_checked += 1
        if w.status == VIOLATION:
            report.violations.append((label, w))
        if log_concavity_scan(w):
            report.log_concavity_failures.append((label, w))
    return report


def scan_instance(rs: RootSystem, factors: Sequence[Sequence[int]]) -> ScanReport:
    if not factors:
        raise ValueError("need at least one factor")
    start = time.perf_counter()
    d = charmult.tensor_decompose_multi(rs, factors)
    report = scan_decomposition(rs, d, describe_instance(rs, factors))
    report.elapsed = time.perf_counter() - start
    return report


def dominant_box(rs: RootSystem, bound: int) -> list[Weight]:
    return list(itertools.product(range(bound + 1), repeat=rs.rank))


def family_instances(rs: RootSystem, r: int, coeff_bound: int, count: int | None = None,
                     seed: int | None = None) -> list[tuple[Weight, ...]]:
    box = dominant_box(rs, coeff_bound)
    if count is None:
        return list(itertools.product(box, repeat=r))
    if seed is None:
        raise ValueError("random mode needs a seed")
    rng = random.Random(seed)
    return [tuple(rng.choice(box) for _ in range(r)) for _ in range(count)]


def _scan_chunk(args) -> ScanReport:
    family, rank, chunk = args
    rs = build_root_system(family, rank)
    report = ScanReport()
    for factors in chunk:
        report = report.merge(scan_instance(rs, factors))
    return report


def scan_family(
    rs: RootSystem,
    r: int,
    coeff_bound: int,
    mode: str = "exhaustive",
    seed: int | None = None,
    count: int | None = None,
    instance_budget: int = DEFAULT_INSTANCE_BUDGET,
    workers: int = 1,
) -> ScanReport:
    """Scan every (or ``count`` seeded random) r-tuple of dominant weights with coordinates <= coeff_bound.

    The merged report is identical for any number of workers.
    """
    if r < 2 or coeff_bound < 0:
        raise ValueError("need r >= 2 and coeff_bound >= 0")
    if mode == "exhaustive":
        total = (coeff_bound + 1) ** (rs.rank * r)
        if total > instance_budget:
            raise charmult.ResourceLimitError(f"{total} instances exceed the instance budget {instance_budget}")
        instances = family_instances(rs, r, coeff_bound)
    elif mode == "random":
        if count is None:
            raise ValueError("random mode needs a count")
        if count > instance_budget:
            raise charmult.ResourceLimitError(f"{count} instances exceed the instance budget {instance_budget}")
        instances = family_instances(rs, r, coeff_bound, count, seed)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")

    start = time.perf_counter()
    if workers <= 1:
        report = _scan_chunk((rs.family, rs.rank, instances))
    else:
        chunks = [instances[i::workers] for i in range(workers)]
        report = ScanReport()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, [(rs.family, rs.rank, c) for c in chunks]):
                report = report.merge(part)
    report = report.canonical()
    report.elapsed = time.perf_counter() - start
    return report


def saturation_probe(rs: RootSystem, factors: Sequence[Sequence[int]], m_max: int) -> list[tuple[int, int]]:
    """[(m, dim of invariants in the m-fold stretched product) for m = 1..m_max]."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    factors = [rs.check(f) for f in factors]
    total = [sum(c) for c in zip(*factors)]
    profile = [(m, charmult.invariant_dimension(rs, [tuple(m * x for x in f) for f in factors]))
               for m in range(1, m_max + 1)]
    if not in_root_lattice(rs, total):
        assert all(v == 0 for _, v in profile), "invariants found off the root lattice"
    return profile


def saturation_holds(profile: Sequence[tuple[int, int]]) -> bool:
    """True unless some stretch has invariants while m = 1 has none."""
    first = dict(profile).get(1, 0)
    return first > 0 or all(v == 0 for _, v in profile)


def prv_components(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> set[Weight]:
    """Dominant representatives of lam + w mu over the Weyl group."""
    lam, mu = rs.check(lam), rs.check(mu)
    if not (is_dominant(rs, lam) and is_dominant(rs, mu)):
        raise ValueError("PRV components need dominant weights")
    if rs.rank > MAX_ENUMERATION_RANK:
        raise ValueError(f"orbit enumeration is limited to rank <= {MAX_ENUMERATION_RANK}")
    return {to_dominant(rs, tuple(a + b for a, b in zip(lam, w))).dominant for w in weyl_orbit(rs, mu)}


def prv_missing(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> set[Weight]:
    """PRV components absent from the decomposition of V(lam) (x) V(mu); should be empty."""
    d = charmult.tensor_decompose(rs, lam, mu)
    return {nu for nu in prv_components(rs, lam, mu) if d.get(nu, 0) < 1}


def convexity_violations(rs: RootSystem, points: Iterable[Sequence[int]]) -> list[LineWitness]:
    """Lines between points of a finite set that skip an intermediate point of the set."""
    pts = {tuple(p): 1 for p in points}
    out = []
    for base, direction, k in lines_through(rs, pts):
        w = check_line(rs, pts, base, direction, k)
        if w.status == VIOLATION:
            out.append(w)
    return out


def branching_violations(p: Sequence[int], n: int) -> list[LineWitness]:
    """Convexity failures of the GL(n) -> GL(n-1) branching set, read as SL(n-1) weights."""
    if n < 3:
        return []
    rs = build_root_system("A", n - 2)
    pts = [partition_to_weight(n - 1, b) for b in charmult.branch_gl_to_gl(p, n)]
    # branched partitions of different sizes map into different root-lattice cosets
    by_coset: dict[tuple, list[Weight]] = {}
    for w in pts:
        by_coset.setdefault(_coset(rs, w), []).append(w)
    return [v for group in by_coset.values() for v in convexity_violations(rs, group)]


def _coset(rs: RootSystem, w: Weight) -> tuple:
    return tuple(c % 1 for c in simple_root_coords(rs, w))


def compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class KostkaFailure:
    shape: tuple[int, ...]
    content: tuple[int, ...]
    i: int
    j: int
    values: tuple[int, int, int]


def kostka_log_concavity_scan(shape: Sequence[int], parts: int | None = None) -> list[KostkaFailure]:
    """Check K(shape, c)^2 >= K(shape, c + e_i - e_j) K(shape, c - e_i + e_j) over all contents c."""
    shape = normalize_partition(shape)
    n = parts if parts is not None else max(len(shape), 1)
    size = sum(shape)
    out = []
    for c in compositions(size, n):
        k0 = kostka(shape, c)
        for i, j in itertools.combinations(range(n), 2):
            if c[j] == 0 or c[i] == 0:
                continue
            up = list(c); up[i] += 1; up[j] -= 1
            down = list(c); down[i] -= 1; down[j] += 1
            kp, km = kostka(shape, up), kostka(shape, down)
            if k0 * k0 < kp * km:
                out.append(KostkaFailure(shape, c, i, j, (km, k0, kp)))
    return out
