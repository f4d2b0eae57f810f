"""Root systems of types A and B in the fundamental-weight basis.

Weights are plain tuples of ints giving the coefficients on the fundamental
weights (Bourbaki node labels, 0-based here).  Simple-root coordinates are
derived on demand through the Cartan matrix.  Partitions are tuples of
non-increasing non-negative ints with trailing zeros stripped.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

Weight = tuple[int, ...]
Partition = tuple[int, ...]

SUPPORTED_FAMILIES = ("A", "B")
MAX_ENUMERATION_RANK = 6


def _inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        pivot = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[pivot] = a[pivot], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with ``cartan[i][j] = <alpha_i, alpha_j^vee>``.

    Row ``i`` is then the simple root ``alpha_i`` written in fundamental
    weights.  For B the last node is the short root.
    """
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if family == "B":
        a[rank - 2][rank - 1] = -2
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum of type A_rank or B_rank.

    ``symmetrizer[i]`` is half the squared length of ``alpha_i`` (long roots
    have squared length 2), so ``cartan[i][j] * symmetrizer[j]`` is the
    symmetric matrix of inner products of simple roots.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho: Weight
    symmetrizer: tuple[Fraction, ...]
    # simple-root coordinates of each positive root
    positive_root_coords: tuple[tuple[int, ...], ...] = field(repr=False)
    # coroot of each positive root in simple-coroot coordinates
    positive_coroot_coords: tuple[tuple[int, ...], ...] = field(repr=False)
    # coords @ inverse_num / inverse_den gives simple-root coordinates
    inverse_num: tuple[tuple[int, ...], ...] = field(repr=False)
    inverse_den: int = field(repr=False)
    # integer Gram matrix of fundamental weights, scaled by form_den
    form_num: tuple[tuple[int, ...], ...] = field(repr=False)
    form_den: int = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.name

    def check(self, w: Sequence[int]) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise ValueError(f"weight {list(w)} has length {len(w)}, expected {self.rank} for {self.name}")
        return w

    def zero(self) -> Weight:
        return (0,) * self.rank

    def fundamental(self, i: int) -> Weight:
        """The fundamental weight omega_i (0-based index)."""
        if not 0 <= i < self.rank:
            raise IndexError(f"node {i} out of range for {self.name}")
        return tuple(int(j == i) for j in range(self.rank))


def build_root_system(family: str, rank: int) -> RootSystem:
    family = str(family).upper()
    if family not in SUPPORTED_FAMILIES:
        raise ValueError(f"unsupported root system family {family!r}; expected one of {SUPPORTED_FAMILIES}")
    if not isinstance(rank, int) or rank < (2 if family == "B" else 1):
        raise ValueError(f"unsupported rank {rank!r} for family {family}")
    return _build(family, rank)


_CACHE: dict[tuple[str, int], RootSystem] = {}


def _build(family: str, rank: int) -> RootSystem:
    key = (family, rank)
    if key in _CACHE:
        return _CACHE[key]
    cartan = cartan_matrix(family, rank)
    sym = [Fraction(1)] * rank
    if family == "B":
        sym[-1] = Fraction(1, 2)

    # positive roots by simple-root strings, level by level
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    level = list(simple)
    while level:
        nxt = []
        for beta in level:
            fund = [sum(beta[k] * cartan[k][j] for k in range(rank)) for j in range(rank)]
            for i in range(rank):
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                p = q - fund[i]
                if p > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        level = nxt
    root_coords = sorted(roots, key=lambda r: (sum(r), tuple(-x for x in r)))

    def to_fund(x):
        return tuple(sum(x[k] * cartan[k][j] for k in range(rank)) for j in range(rank))

    def sq_half(x):
        # (beta, beta)/2 with (alpha_i, alpha_j) = cartan[i][j] * sym[j]
        return sum(x[i] * x[j] * cartan[i][j] * sym[j] for i in range(rank) for j in range(rank)) / 2

    coroots = []
    for x in root_coords:
        dl = sq_half(x)
        co = [x[i] * sym[i] / dl for i in range(rank)]
        assert all(c.denominator == 1 for c in co)
        coroots.append(tuple(int(c) for c in co))

    inv = _inverse(cartan)
    inv_den = math.lcm(*(c.denominator for row in inv for c in row))
    inv_num = tuple(tuple(int(c * inv_den) for c in row) for row in inv)

    # (omega_i, omega_k) = inv[i][k] * sym[k]
    form = [[inv[i][k] * sym[k] for k in range(rank)] for i in range(rank)]
    form_den = math.lcm(*(c.denominator for row in form for c in row))
    form_num = tuple(tuple(int(c * form_den) for c in row) for row in form)

    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        simple_roots=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(to_fund(x) for x in root_coords),
        rho=(1,) * rank,
        symmetrizer=tuple(sym),
        positive_root_coords=tuple(root_coords),
        positive_coroot_coords=tuple(coroots),
        inverse_num=inv_num,
        inverse_den=inv_den,
        form_num=form_num,
        form_den=form_den,
    )
    _CACHE[key] = rs
    return rs


def pairing(rs: RootSystem, w: Sequence[int], i: int) -> int:
    """<w, alpha_i^vee> for the simple coroot at node ``i`` (0-based)."""
    if not 0 <= i < rs.rank:
        raise IndexError(f"simple root index {i} out of range for {rs.name}")
    return w[i]


def root_pairing(rs: RootSystem, w: Sequence[int], k: int) -> int:
    """<w, beta^vee> for the ``k``-th positive root, expanding the coroot in simple coroots."""
    if not 0 <= k < len(rs.positive_roots):
        raise IndexError(f"positive root index {k} out of range for {rs.name}")
    return sum(c * x for c, x in zip(rs.positive_coroot_coords[k], w))


def is_dominant(rs: RootSystem, w: Sequence[int]) -> bool:
    return all(x >= 0 for x in w)


def reflect(rs: RootSystem, w: Sequence[int], i: int) -> Weight:
    """Simple reflection s_i(w) = w - <w, alpha_i^vee> alpha_i."""
    c = w[i]
    if c == 0:
        return tuple(w)
    a = rs.cartan[i]
    return tuple(x - c * y for x, y in zip(w, a))


class Dominant(NamedTuple):
    dominant: Weight
    sign: int
    singular: bool


def _to_dominant(rs: RootSystem, w: Sequence[int]) -> tuple[Weight, int, list[int]]:
    w = list(w)
    cartan = rs.cartan
    word = []
    length = 0
    while True:
        for i, c in enumerate(w):
            if c < 0:
                break
        else:
            return tuple(w), length, word
        a = cartan[i]
        for j in range(len(w)):
            w[j] -= c * a[j]
        word.append(i)
        length += 1


def to_dominant(rs: RootSystem, w: Sequence[int]) -> Dominant:
    """Dominant representative of the Weyl orbit of ``w``.

    Each reflection applied flips a negative coordinate, so the number of
    steps equals the length of the Weyl element used.  ``singular`` is set
    when the dominant representative lies on a wall; the sign is then +1.
    """
    dom, length, _ = _to_dominant(rs, w)
    singular = 0 in dom
    sign = 1 if singular or length % 2 == 0 else -1
    return Dominant(dom, sign, singular)


def reflection_word(rs: RootSystem, w: Sequence[int]) -> list[int]:
    """Nodes of the simple reflections applied, in order, to move ``w`` to the dominant chamber."""
    return _to_dominant(rs, w)[2]


def weyl_orbit(rs: RootSystem, w: Sequence[int]) -> set[Weight]:
    if rs.rank > MAX_ENUMERATION_RANK:
        raise ValueError(f"orbit enumeration is limited to rank <= {MAX_ENUMERATION_RANK}, got {rs.name}")
    start = tuple(w)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for i in range(rs.rank):
            y = reflect(rs, x, i)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def weyl_group_order(rs: RootSystem) -> int:
    n = rs.rank
    if rs.family == "A":
        return math.factorial(n + 1)
    return 2 ** n * math.factorial(n)


def simple_root_coords(rs: RootSystem, w: Sequence[int]) -> tuple[Fraction, ...]:
    den = rs.inverse_den
    inv = rs.inverse_num
    n = rs.rank
    return tuple(Fraction(sum(w[i] * inv[i][j] for i in range(n)), den) for j in range(n))


def integral_simple_root_coords(rs: RootSystem, w: Sequence[int]) -> tuple[int, ...] | None:
    """Simple-root coordinates of ``w`` if they are all integers, else None."""
    den = rs.inverse_den
    inv = rs.inverse_num
    n = rs.rank
    out = []
    for j in range(n):
        q, r = divmod(sum(w[i] * inv[i][j] for i in range(n)), den)
        if r:
            return None
        out.append(q)
    return tuple(out)


def from_simple_root_coords(rs: RootSystem, x: Sequence[int]) -> Weight:
    n = rs.rank
    return tuple(sum(x[k] * rs.cartan[k][j] for k in range(n)) for j in range(n))


def in_root_lattice(rs: RootSystem, w: Sequence[int]) -> bool:
    return integral_simple_root_coords(rs, w) is not None


def dominates(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu <= lam, i.e. lam - mu is a non-negative integer sum of simple roots."""
    x = integral_simple_root_coords(rs, [a - b for a, b in zip(lam, mu)])
    return x is not None and all(c >= 0 for c in x)


def inner_product(rs: RootSystem, u: Sequence[int], v: Sequence[int]) -> Fraction:
    return Fraction(scaled_inner_product(rs, u, v), rs.form_den)


def scaled_inner_product(rs: RootSystem, u: Sequence[int], v: Sequence[int]) -> int:
    """``form_den * (u, v)`` as an exact integer."""
    f = rs.form_num
    n = rs.rank
    return sum(u[i] * f[i][j] * v[j] for i in range(n) if u[i] for j in range(n))


def _require_dominant(rs: RootSystem, w: Sequence[int], what: str = "weight") -> None:
    if not is_dominant(rs, w):
        raise ValueError(f"{what} {list(w)} is not dominant for {rs.name}")


def dual_weight(rs: RootSystem, w: Sequence[int]) -> Weight:
    """Highest weight -w0(w) of the dual representation."""
    _require_dominant(rs, w)
    return to_dominant(rs, [-x for x in w]).dominant


def weyl_dim(rs: RootSystem, w: Sequence[int]) -> int:
    _require_dominant(rs, w)
    num = 1
    den = 1
    for co in rs.positive_coroot_coords:
        num *= sum(c * (x + 1) for c, x in zip(co, w))
        den *= sum(co)
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension formula gave a non-integer"
    return q


# --- partitions and SL(n) weights -------------------------------------------

def normalize_partition(parts: Sequence[int]) -> Partition:
    p = [int(x) for x in parts]
    if any(x < 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def partition_to_weight(n: int, p: Sequence[int]) -> Weight:
    """SL(n) highest weight m_i = a_i - a_{i+1} of a partition with at most n parts."""
    p = normalize_partition(p)
    if len(p) > n:
        raise ValueError(f"partition {list(p)} has more than {n} nonzero parts")
    a = list(p) + [0] * (n - len(p))
    return tuple(a[i] - a[i + 1] for i in range(n - 1))


def weight_to_partition(n: int, w: Sequence[int]) -> Partition:
    """Partition with last part 0 whose SL(n) weight is ``w``."""
    if len(w) != n - 1:
        raise ValueError(f"weight {list(w)} is not a weight of A{n - 1}")
    parts = [sum(w[i:]) for i in range(n - 1)]
    return normalize_partition(parts)


# --- text notation -----------------------------------------------------------

_RS_RE = re.compile(r"^([A-Za-z])(\d+)$")


class NotationError(ValueError):
    """Malformed weight or partition text; ``column`` points at the offending character."""

    def __init__(self, message: str, text: str, column: int):
        super().__init__(message)
        self.text = text
        self.column = column

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.column}^"


def parse_root_system(text: str) -> RootSystem:
    m = _RS_RE.match(text.strip())
    if not m:
        raise NotationError(f"expected a root system like A2 or B3, got {text!r}", text, 0)
    try:
        return build_root_system(m.group(1), int(m.group(2)))
    except ValueError as e:
        raise NotationError(str(e), text, 0) from None


def _scan_weight(text: str) -> tuple[list[int], int | None]:
    """Coordinates of ``[a,b,...]`` and the column of the first bad character (None if well-formed)."""
    i, n = 0, len(text)
    while i < n and text[i] == " ":
        i += 1
    if i == n or text[i] != "[":
        return [], i
    i += 1
    coords: list[int] = []
    while True:
        while i < n and text[i] == " ":
            i += 1
        if i < n and text[i] == "]" and not coords:
            i += 1
            break
        j = i + (i < n and text[i] == "-")
        k = j
        while k < n and text[k].isdigit():
            k += 1
        if k == j:
            return coords, k
        coords.append(int(text[i:k]))
        i = k
        while i < n and text[i] == " ":
            i += 1
        if i < n and text[i] == ",":
            i += 1
            continue
        if i < n and text[i] == "]":
            i += 1
            break
        return coords, i
    while i < n and text[i] == " ":
        i += 1
    return coords, (None if i == n else i)


def parse_weight(rs: RootSystem, text: str) -> Weight:
    """Parse ``[1,0,2]`` as a weight of ``rs``."""
    coords, bad = _scan_weight(text)
    if bad is not None:
        raise NotationError(f"malformed weight {text!r}", text, bad)
    if len(coords) != rs.rank:
        raise NotationError(f"weight has {len(coords)} coordinates, {rs.name} needs {rs.rank}", text, 0)
    return tuple(coords)


def parse_partition(text: str) -> Partition:
    """Parse ``2,1,0`` (trailing zeros allowed)."""
    col = next((i for i, ch in enumerate(text) if ch not in "0123456789, "), None)
    if col is None and not text.strip():
        col = 0
    if col is not None:
        raise NotationError(f"malformed partition {text!r}", text, col)
    try:
        return normalize_partition(int(x) for x in text.split(","))
    except ValueError as e:
        raise NotationError(str(e), text, 0) from None


def format_weight(w: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in w) + "]"


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p) if p else "0"
