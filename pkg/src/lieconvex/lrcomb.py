"""Tableau combinatorics for type A.

Kostka numbers and Littlewood-Richardson coefficients are counted by
direct enumeration of fillings; nothing here touches the weight
multiplicity engine.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .rootdata import Partition, Weight, normalize_partition, partition_to_weight

INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", normalize_partition(self.outer))
        object.__setattr__(self, "inner", normalize_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{list(self.inner)} is not contained in {list(self.outer)}")

    def rows(self) -> list[tuple[int, int]]:
        """Half-open column range [start, stop) of each row."""
        inner = list(self.inner) + [0] * (len(self.outer) - len(self.inner))
        return [(inner[i], self.outer[i]) for i in range(len(self.outer))]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


@dataclass(frozen=True)
class LRTableau:
    shape: SkewShape
    entries: tuple[tuple[int, ...], ...]

    def reading_word(self) -> list[int]:
        """Rows read right to left, top to bottom."""
        return [x for row in self.entries for x in reversed(row)]

    def content(self) -> Partition:
        word = self.reading_word()
        top = max(word, default=0)
        return tuple(word.count(i) for i in range(1, top + 1))

    def is_valid(self) -> bool:
        rows = self.shape.rows()
        if [len(r) for r in self.entries] != [b - a for a, b in rows]:
            return False
        cell = {}
        for i, ((start, _), row) in enumerate(zip(rows, self.entries)):
            for j, x in enumerate(row):
                cell[i, start + j] = x
        for (i, j), x in cell.items():
            if x < 1:
                return False
            if (i, j + 1) in cell and cell[i, j + 1] < x:
                return False
            if (i + 1, j) in cell and cell[i + 1, j] <= x:
                return False
        counts: dict[int, int] = {}
        for x in self.reading_word():
            counts[x] = counts.get(x, 0) + 1
            if x > 1 and counts[x] > counts.get(x - 1, 0):
                return False
        return True


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return all(x == 0 for x in inner[len(outer):]) and contains(outer, inner[:len(outer)])
    return all(a >= b for a, b in zip(outer, inner))


def _checked(n: int) -> int:
    if n > INT64_MAX:
        raise OverflowError(f"count {n} exceeds the 64-bit range")
    return n


@lru_cache(maxsize=None)
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    # strip the largest letter: shape / smaller is a horizontal strip of that size
    if not content:
        return int(not shape)
    *rest, last = content
    if last == 0:
        return _kostka(shape, tuple(rest))
    total = 0
    n = len(shape)
    ranges = [range(max(shape[i + 1] if i + 1 < n else 0, 0), shape[i] + 1) for i in range(n)]
    for smaller in itertools.product(*ranges):
        if sum(shape) - sum(smaller) == last:
            total += _kostka(normalize_partition(smaller), tuple(rest))
    return total


def kostka(shape: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of the given shape and content.

    ``content`` may be any composition; mismatched sizes give 0.
    """
    shape = normalize_partition(shape)
    content = tuple(int(x) for x in content)
    if any(x < 0 for x in content) or sum(shape) != sum(content):
        return 0
    return _checked(_kostka(shape, content))


def _lr_fillings(outer: Partition, inner: Partition, content: Partition) -> Iterator[list[list[int]]]:
    rows = SkewShape(outer, inner).rows()
    nrows = len(rows)
    k = len(content)
    counts = [0] * (k + 2)
    filled: list[list[int]] = [[0] * (b - a) for a, b in rows]

    def above(i, col):
        if i == 0:
            return 0
        a, b = rows[i - 1]
        return filled[i - 1][col - a] if a <= col < b else 0

    def place(i, pos):
        # fill row i right to left; pos counts cells already placed in the row
        if i == nrows:
            yield [r[:] for r in filled]
            return
        a, b = rows[i]
        if pos == b - a:
            yield from place(i + 1, 0)
            return
        col = b - 1 - pos
        hi = filled[i][col - a + 1] if pos else k
        lo = above(i, col) + 1
        for x in range(lo, hi + 1):
            if counts[x] >= content[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            filled[i][col - a] = x
            yield from place(i, pos + 1)
            counts[x] -= 1
        filled[i][col - a] = 0

    yield from place(0, 0)


def lr_tableaux(outer: Sequence[int], inner: Sequence[int], content: Sequence[int]) -> Iterator[LRTableau]:
    outer, inner, content = (normalize_partition(p) for p in (outer, inner, content))
    if not contains(outer, inner) or sum(outer) - sum(inner) != sum(content):
        return
    shape = SkewShape(outer, inner)
    for f in _lr_fillings(outer, inner, content):
        yield LRTableau(shape, tuple(tuple(r) for r in f))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(nu) != sum(lam) + sum(mu) or not contains(nu, lam) or not contains(nu, mu):
        return 0
    # count with the smaller skew content to keep the search short
    if len(mu) > len(lam):
        lam, mu = mu, lam
    return sum(1 for _ in _lr_fillings(nu, lam, mu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    return _checked(_lr(lam, mu, nu))


def _partitions_between(inner: Partition, size: int, max_parts: int, max_first: int) -> Iterator[Partition]:
    inner = list(inner) + [0] * (max_parts - len(inner))

    def rec(i, left, cap):
        if i == max_parts:
            if left == 0:
                yield ()
            return
        for x in range(min(cap, left + inner[i]), inner[i] - 1, -1):
            if x - inner[i] > left:
                continue
            for tail in rec(i + 1, left - (x - inner[i]), x):
                yield (x,) + tail

    for p in rec(0, size - sum(inner), max_first):
        yield normalize_partition(p)


def lr_product(lam: Sequence[int], mu: Sequence[int], n: int | None = None) -> dict[Partition, int]:
    """All nu with c^nu_{lam,mu} > 0, optionally restricted to at most ``n`` parts."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    rows = len(lam) + len(mu)
    if n is not None:
        rows = min(rows, n)
    if len(lam) > rows or len(mu) > rows:
        return {}
    size = sum(lam) + sum(mu)
    first = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out = {}
    for nu in _partitions_between(lam, size, rows, first):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def lr_decompose(lam: Sequence[int], mu: Sequence[int], n: int) -> dict[Weight, int]:
    """SL(n) decomposition of V(lam) (x) V(mu), keyed by fundamental-weight coordinates."""
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    for p in (lam, mu):
        if len(p) > n:
            raise ValueError(f"partition {list(p)} has more than {n} parts")
    return {partition_to_weight(n, nu): c for nu, c in lr_product(lam, mu, n).items()}


def stretch(p: Sequence[int], m: int) -> Partition:
    return tuple(m * x for x in normalize_partition(p))


def stretch_probe(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int], m_max: int) -> list[tuple[int, int]]:
    """[(m, c^{m nu}_{m lam, m mu}) for m = 1..m_max]."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    return [(m, lr_coefficient(stretch(lam, m), stretch(mu, m), stretch(nu, m))) for m in range(1, m_max + 1)]
