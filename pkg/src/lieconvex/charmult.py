"""Weight multiplicities and tensor product decompositions.

Two independent routes to a decomposition are provided: the Klimyk
(Racah-Speiser) reflection formula and a brute-force product of formal
characters followed by peeling off highest weights.  A decomposition is a
plain ``dict`` mapping dominant weights to positive multiplicities.
"""
from __future__ import annotations

import itertools
import threading
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootdata import (
    Partition,
    RootSystem,
    Weight,
    _require_dominant,
    dominates,
    dual_weight,
    from_simple_root_coords,
    integral_simple_root_coords,
    normalize_partition,
    reflect,
    root_pairing,
    scaled_inner_product,
    simple_root_coords,
    to_dominant,
    weyl_dim,
)

Decomposition = dict[Weight, int]

DEFAULT_DIMENSION_CEILING = 10**6
INT64_MAX = 2**63 - 1


class ResourceLimitError(RuntimeError):
    """A configured size ceiling would be exceeded."""


@dataclass(frozen=True)
class WeightSystem:
    """All weights of V(highest) with their multiplicities."""

    rs: RootSystem
    highest: Weight
    dominant: dict[Weight, int]
    mult: dict[Weight, int]

    def __len__(self) -> int:
        return len(self.mult)

    def dimension(self) -> int:
        return sum(self.mult.values())


_ws_cache: dict[tuple[str, int, Weight], WeightSystem] = {}
_ws_lock = threading.Lock()


def clear_cache() -> None:
    with _ws_lock:
        _ws_cache.clear()
    _pair_cache.clear()


def cached_weight_systems() -> list[WeightSystem]:
    with _ws_lock:
        return list(_ws_cache.values())


def seed_cache(systems: Iterable[WeightSystem]) -> None:
    with _ws_lock:
        for ws in systems:
            _ws_cache[(ws.rs.family, ws.rs.rank, ws.highest)] = ws


def _dominant_weights(rs: RootSystem, lam: Weight) -> list[Weight]:
    # dominant weights below lam are connected by positive-root steps
    seen = {lam}
    todo = [lam]
    while todo:
        mu = todo.pop()
        for beta in rs.positive_roots:
            nu = tuple(a - b for a, b in zip(mu, beta))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                todo.append(nu)
    return sorted(seen, key=lambda mu: sum(integral_simple_root_coords(rs, [a - b for a, b in zip(lam, mu)])))


def _freudenthal(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = scaled_inner_product(rs, lr, lr)
    roots = rs.positive_roots
    mult = {lam: 1}
    for mu in _dominant_weights(rs, lam)[1:]:
        total = 0
        for beta in roots:
            t = 1
            while True:
                nu = tuple(a + t * b for a, b in zip(mu, beta))
                m = mult.get(to_dominant(rs, nu).dominant)
                if not m:
                    break
                total += m * scaled_inner_product(rs, nu, beta)
                t += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = top - scaled_inner_product(rs, mr, mr)
        q, r = divmod(2 * total, denom)
        if r:
            raise RuntimeError(f"Freudenthal recursion is not exact at {mu} in V({lam}) for {rs.name}")
        mult[mu] = q
    return mult


def _orbit(rs: RootSystem, w: Weight) -> set[Weight]:
    seen = {w}
    todo = [w]
    while todo:
        x = todo.pop()
        for i in range(rs.rank):
            if x[i]:
                y = reflect(rs, x, i)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
    return seen


def weight_multiplicities(rs: RootSystem, lam: Sequence[int]) -> WeightSystem:
    lam = rs.check(lam)
    _require_dominant(rs, lam)
    key = (rs.family, rs.rank, lam)
    with _ws_lock:
        ws = _ws_cache.get(key)
    if ws is not None:
        return ws
    dom = {mu: m for mu, m in _freudenthal(rs, lam).items() if m}
    full = {}
    for mu, m in dom.items():
        for w in _orbit(rs, mu):
            full[w] = m
    ws = WeightSystem(rs, lam, dom, full)
    with _ws_lock:
        _ws_cache.setdefault(key, ws)
    return ws


def _check_range(d: Decomposition) -> None:
    for nu, c in d.items():
        if c < 0:
            raise RuntimeError(f"negative coefficient {c} at {nu}: decomposition engine bug")
        if c > INT64_MAX:
            raise OverflowError(f"multiplicity {c} at {nu} exceeds the 64-bit range")


_pair_cache: dict[tuple[str, int, Weight, Weight], Decomposition] = {}


def tensor_decompose(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Decomposition:
    """Decompose V(lam) (x) V(mu) with the Klimyk formula."""
    lam, mu = rs.check(lam), rs.check(mu)
    _require_dominant(rs, lam)
    _require_dominant(rs, mu)
    if weyl_dim(rs, lam) < weyl_dim(rs, mu) or (weyl_dim(rs, lam) == weyl_dim(rs, mu) and lam < mu):
        lam, mu = mu, lam
    key = (rs.family, rs.rank, lam, mu)
    hit = _pair_cache.get(key)
    if hit is not None:
        return dict(hit)
    ws = weight_multiplicities(rs, mu)
    shift = tuple(a + 1 for a in lam)
    acc: dict[Weight, int] = defaultdict(int)
    for nu, m in ws.mult.items():
        dom, sign, singular = to_dominant(rs, tuple(a + b for a, b in zip(shift, nu)))
        if singular:
            continue
        acc[tuple(a - 1 for a in dom)] += sign * m
    out = {nu: c for nu, c in acc.items() if c}
    _check_range(out)
    _pair_cache[key] = out
    return dict(out)


def _fold(rs: RootSystem, weights: list[Weight]) -> Decomposition:
    weights = sorted(weights, key=lambda w: (weyl_dim(rs, w), w))
    current = {weights[0]: 1}
    for w in weights[1:]:
        nxt: dict[Weight, int] = defaultdict(int)
        for nu, c in current.items():
            for rho, m in tensor_decompose(rs, nu, w).items():
                nxt[rho] += c * m
        current = dict(nxt)
    _check_range(current)
    return current


def tensor_decompose_multi(rs: RootSystem, weights: Sequence[Sequence[int]]) -> Decomposition:
    if not weights:
        raise ValueError("need at least one factor")
    ws = [rs.check(w) for w in weights]
    for w in ws:
        _require_dominant(rs, w)
    return _fold(rs, ws)


def _height(rs: RootSystem, w: Weight) -> int:
    # height scaled by inverse_den so it stays integral
    inv = rs.inverse_num
    n = rs.rank
    return sum(w[i] * inv[i][j] for i in range(n) for j in range(n))


def character_product_oracle(
    rs: RootSystem,
    weights: Sequence[Sequence[int]],
    dimension_ceiling: int = DEFAULT_DIMENSION_CEILING,
) -> Decomposition:
    """Decompose a tensor product by multiplying formal characters.

    Expands every factor into its full weight multiset, convolves them, then
    repeatedly strips the character of a highest remaining dominant weight.
    """
    if not weights:
        raise ValueError("need at least one factor")
    ws = [rs.check(w) for w in weights]
    for w in ws:
        _require_dominant(rs, w)
    total_dim = 1
    for w in ws:
        total_dim *= weyl_dim(rs, w)
    if total_dim > dimension_ceiling:
        raise ResourceLimitError(
            f"product dimension {total_dim} exceeds the oracle ceiling {dimension_ceiling}")

    char: dict[Weight, int] = {rs.zero(): 1}
    for w in ws:
        factor = weight_multiplicities(rs, w).mult
        nxt: dict[Weight, int] = defaultdict(int)
        for a, ca in char.items():
            for b, cb in factor.items():
                nxt[tuple(x + y for x, y in zip(a, b))] += ca * cb
        char = dict(nxt)

    out: Decomposition = {}
    while char:
        top = max((w for w in char if all(x >= 0 for x in w)), key=lambda w: _height(rs, w))
        c = char[top]
        if c < 0:
            raise RuntimeError(f"character peeling left a negative coefficient at {top}")
        out[top] = c
        for w, m in weight_multiplicities(rs, top).mult.items():
            left = char.get(w, 0) - c * m
            if left:
                char[w] = left
            else:
                char.pop(w, None)
    _check_range(out)
    return out


def invariant_dimension(rs: RootSystem, weights: Sequence[Sequence[int]]) -> int:
    """dim of the G-invariants in the tensor product, computed two ways."""
    if not weights:
        raise ValueError("need at least one factor")
    full = tensor_decompose_multi(rs, weights).get(rs.zero(), 0)
    *rest, last = [rs.check(w) for w in weights]
    rest_dec = tensor_decompose_multi(rs, rest) if rest else {rs.zero(): 1}
    via_dual = rest_dec.get(dual_weight(rs, last), 0)
    if full != via_dual:
        raise RuntimeError(f"invariant dimension mismatch: {full} vs {via_dual} for {weights}")
    return full


def decomposition_dimension(rs: RootSystem, d: Decomposition) -> int:
    return sum(c * weyl_dim(rs, nu) for nu, c in d.items())


def branch_gl_to_gl(p: Sequence[int], n: int) -> list[Partition]:
    """Highest weights of GL(n-1) in the restriction of the GL(n) irreducible ``p``.

    These are the partitions interlacing ``p``; each occurs once.
    """
    p = normalize_partition(p)
    if len(p) > n:
        raise ValueError(f"partition {list(p)} has more than {n} parts")
    a = list(p) + [0] * (n - len(p))
    ranges = [range(a[i + 1], a[i] + 1) for i in range(n - 1)]
    return sorted((normalize_partition(b) for b in itertools.product(*ranges)), reverse=True)


def alpha_chain(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], k: int) -> tuple[int, int]:
    """Lengths (p, q) of the ``k``-th positive root string through ``mu`` in V(lam)."""
    mu = rs.check(mu)
    support = weight_multiplicities(rs, lam).mult
    if mu not in support:
        raise ValueError(f"{list(mu)} is not a weight of V({list(lam)})")
    beta = rs.positive_roots[k]

    def run(sign):
        t = 0
        while tuple(a + sign * (t + 1) * b for a, b in zip(mu, beta)) in support:
            t += 1
        return t

    p, q = run(1), run(-1)
    assert q - p == root_pairing(rs, mu, k)
    return p, q


def support_candidates(rs: RootSystem, lam: Sequence[int]) -> set[Weight]:
    """{mu in lam + Q : dominant representative of mu <= lam}, built without multiplicities.

    Enumerates dominant weights in a box of simple-root coordinates below
    ``lam`` and closes each under the Weyl group.
    """
    lam = rs.check(lam)
    bound = [int(c) for c in simple_root_coords(rs, lam)]
    out = set()
    for x in itertools.product(*(range(b + 1) for b in bound)):
        step = from_simple_root_coords(rs, x)
        mu = tuple(a - b for a, b in zip(lam, step))
        if all(c >= 0 for c in mu):
            assert dominates(rs, lam, mu)
            out |= _orbit(rs, mu)
    return out


def weight_system_from_dominant(rs: RootSystem, lam: Sequence[int], dominant: dict[Weight, int]) -> WeightSystem:
    """Rebuild a full WeightSystem from its dominant multiplicities."""
    lam = rs.check(lam)
    full = {}
    for mu, m in dominant.items():
        for w in _orbit(rs, mu):
            full[w] = m
    return WeightSystem(rs, lam, dict(dominant), full)
