"""Slow, independent reference computations used to produce expected values.

Nothing here imports the package's engines.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import sympy


def ssyt_count(shape, content):
    """Count semistandard fillings by trying every assignment of letters to cells."""
    shape = [x for x in shape if x]
    k = len(content)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    if sum(shape) != sum(content):
        return 0
    count = 0
    for vals in itertools.product(range(1, k + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if any(t[i, j] > t[i, j + 1] for i, j in cells if (i, j + 1) in t):
            continue
        if any(t[i, j] >= t[i + 1, j] for i, j in cells if (i + 1, j) in t):
            continue
        if all(vals.count(a + 1) == c for a, c in enumerate(content)):
            count += 1
    return count


@lru_cache(maxsize=None)
def schur(shape, n):
    """Schur polynomial in n variables as a ratio of alternants."""
    xs = sympy.symbols(f"x1:{n + 1}")
    lam = list(shape) + [0] * (n - len(shape))
    num = sympy.Matrix(n, n, lambda i, j: xs[i] ** (lam[j] + n - 1 - j)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[i] ** (n - 1 - j)).det()
    q, r = sympy.div(sympy.Poly(num, *xs), sympy.Poly(den, *xs))
    assert r.is_zero
    return q


def schur_product_decomposition(lam, mu, n):
    """{nu: c} with s_lam s_mu = sum c s_nu in n variables, by peeling leading monomials."""
    prod = schur(tuple(lam), n) * schur(tuple(mu), n)
    out = {}
    while not prod.is_zero:
        exps, coeff = max(prod.terms(), key=lambda t: t[0])
        nu = tuple(x for x in exps if x)
        out[nu] = int(coeff)
        prod = prod - schur(tuple(nu), n) * int(coeff)
    return out


def hook_content_dim(shape, n):
    """dim of the GL(n) irreducible with the given partition."""
    shape = [x for x in shape if x]
    conj = [sum(1 for r in shape if r > j) for j in range(shape[0])] if shape else []
    num = Fraction(1)
    for i, row in enumerate(shape):
        for j in range(row):
            hook = row - j + conj[j] - i - 1
            num *= Fraction(n + j - i, hook)
    return int(num)


# Weyl groups as permutation / signed permutation groups on e-coordinates.

def a_weight_to_e(w):
    n = len(w) + 1
    return [sum(w[i:]) for i in range(n - 1)] + [0]


def b_weight_to_e2(w):
    """Twice the e-coordinates of a B_l weight (kept integral)."""
    l = len(w)
    return [2 * sum(w[i:l - 1]) + w[l - 1] for i in range(l)]


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def a_dominant(w):
    """(dominant weight, sign, singular) by sorting e-coordinates."""
    e = a_weight_to_e(w)
    order = sorted(range(len(e)), key=lambda i: -e[i])
    s = [e[i] for i in order]
    dom = tuple(s[i] - s[i + 1] for i in range(len(s) - 1))
    singular = len(set(e)) < len(e)
    return dom, (1 if singular else _perm_sign(order)), singular


def b_dominant(w):
    e = b_weight_to_e2(w)
    l = len(e)
    order = sorted(range(l), key=lambda i: -abs(e[i]))
    s = [abs(e[i]) for i in order]
    flips = sum(1 for x in e if x < 0)
    dom = tuple((s[i] - s[i + 1]) // 2 for i in range(l - 1)) + (s[-1],)
    singular = 0 in e or len({abs(x) for x in e}) < l
    sign = 1 if singular else _perm_sign(order) * (-1) ** flips
    return dom, sign, singular


def a_orbit(w):
    e = a_weight_to_e(w)
    out = set()
    for p in set(itertools.permutations(e)):
        out.add(tuple(p[i] - p[i + 1] for i in range(len(p) - 1)))
    return out


def b_orbit(w):
    e = b_weight_to_e2(w)
    l = len(e)
    out = set()
    for p in itertools.permutations(e):
        for signs in itertools.product((1, -1), repeat=l):
            v = [a * b for a, b in zip(p, signs)]
            out.add(tuple((v[i] - v[i + 1]) // 2 for i in range(l - 1)) + (v[-1],))
    return out
