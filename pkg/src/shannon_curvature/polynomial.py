"""Dense integer/rational polynomials stored as coefficient lists, lowest degree first."""

from fractions import Fraction
from math import comb


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p, c):
    return trim([c * a for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def shift(p, k=1):
    """Multiply by t**k."""
    return [0] * k + list(p) if p else []


def cone_power(p, u):
    """Multiply by (1 + t)**u."""
    if u == 0:
        return list(p)
    return mul(p, [comb(u, i) for i in range(u + 1)])


def evaluate(p, t):
    acc = 0
    for a in reversed(p):
        acc = acc * t + a
    return acc


def integrate(p, lo, hi):
    """Exact definite integral of p over [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    return sum((Fraction(a, k + 1) * (hi ** (k + 1) - lo ** (k + 1)) for k, a in enumerate(p)),
               Fraction(0))
