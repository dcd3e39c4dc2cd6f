"""Wu characteristic and a pointwise Wu curvature.

``wu(G) = sum over ordered pairs (s, t) of intersecting simplices of
w(s) w(t)`` with ``w(s) = (-1)^dim s``; the pair ``(s, s)`` is included.

The curvature spreads each pair's contribution evenly over the vertices of
``s | t``: summing over vertices gives back ``wu(G)`` by construction.

:func:`wu_characteristic` does not loop over pairs.  Inclusion-exclusion on
the common face gives::

    wu(G) = sum_r (-1)^(|r|+1) (sum_{s >= r} w(s))^2
          = sum_r (-1)^(|r|+1) F_{C(r)}(-1)^2

where ``r`` runs over simplices and ``C(r)`` is the common neighbourhood.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P
from .errors import BudgetExceeded
from .graph import strong_product
from .simplicial import DEFAULT_BUDGET, clique_indices, clique_polynomial


def wu_characteristic(g, budget=DEFAULT_BUDGET):
    adj = g.masks
    total = 0
    for level in clique_indices(g, budget):
        for r in level:
            common = g.full_mask
            for v in r:
                common &= adj[v]
            val = P.evaluate(clique_polynomial(g, common), -1)
            total += (1 if len(r) % 2 else -1) * val * val
    return total


def _pair_contributions(g, budget):
    """Yield ``(vertex mask of s | t, w(s) w(t))`` over intersecting ordered pairs."""
    simplices = [s for level in clique_indices(g, budget) for s in level]
    masks = []
    star = [[] for _ in range(len(g))]
    for idx, s in enumerate(simplices):
        m = 0
        for v in s:
            m |= 1 << v
            star[v].append(idx)
        masks.append(m)
    signs = [1 if len(s) % 2 else -1 for s in simplices]
    pairs = 0
    for a, s in enumerate(simplices):
        partners = set()
        for v in s:
            partners.update(star[v])
        pairs += len(partners)
        if pairs > budget:
            raise BudgetExceeded("Wu pair enumeration", budget)
        for b in partners:
            yield masks[a] | masks[b], signs[a] * signs[b]


def wu_curvatures(g, budget=DEFAULT_BUDGET):
    """Wu curvature at every vertex, keyed in graph order."""
    acc = [Fraction(0)] * len(g)
    for union, sign in _pair_contributions(g, budget):
        share = Fraction(sign, union.bit_count())
        m = union
        while m:
            low = m & -m
            acc[low.bit_length() - 1] += share
            m ^= low
    return dict(zip(g.vertices, acc))


def wu_curvature(g, x, budget=DEFAULT_BUDGET):
    g.index(x)
    return wu_curvatures(g, budget)[x]


@dataclass
class WuReport:
    wu: int
    curvatures: dict

    @property
    def sum_equals_wu(self):
        return sum(self.curvatures.values(), Fraction(0)) == self.wu

    ok = sum_equals_wu


def wu_report(g, budget=DEFAULT_BUDGET):
    return WuReport(wu_characteristic(g, budget), wu_curvatures(g, budget))


@dataclass
class WuProductSurvey:
    """Where the pointwise product rule fails for the Wu curvature.

    ``differences`` holds ``(vertex, K_w(G*H)(x, y), K_w(G)(x) * K_w(H)(y))``
    for the vertices where the two sides disagree.
    """

    differences: list
    vertices: int
    wu: tuple  # (wu(G*H), wu(G), wu(H))

    @property
    def wu_multiplicative(self):
        a, b, c = self.wu
        return a == b * c


def wu_product_survey(g, h, gh=None, budget=DEFAULT_BUDGET):
    gh = strong_product(g, h) if gh is None else gh
    kg, kh, kgh = wu_curvatures(g, budget), wu_curvatures(h, budget), wu_curvatures(gh, budget)
    diffs = []
    for a in g.vertices:
        for b in h.vertices:
            left, right = kgh[(a, b)], kg[a] * kh[b]
            if left != right:
                diffs.append(((a, b), left, right))
    wus = (wu_characteristic(gh, budget), wu_characteristic(g, budget), wu_characteristic(h, budget))
    return WuProductSurvey(diffs, len(gh), wus)
