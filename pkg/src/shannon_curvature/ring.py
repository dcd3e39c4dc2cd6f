"""The Shannon ring: integer combinations of graphs.

Addition is formal (it stands for disjoint union, and keeps negatives),
multiplication is the strong product extended bilinearly.  Invariants extend
linearly, so ``chi(-G) = -chi(G)``, ``K_{-G}(x) = -K_G(x)`` and
``b_k(-G) = -b_k(G)``.

Ring equality would need graph isomorphism and is not offered; compare
invariant vectors instead.
"""

from fractions import Fraction

from . import polynomial as P
from .curvature import curvatures
from .graph import Graph, complete_graph, disjoint_union, strong_product
from .homology import poincare_polynomial
from .simplicial import euler_characteristic, f_vector
from .wu import wu_characteristic


class RingElement:
    """Finite sum ``sum c_i G_i`` with nonzero integer coefficients.

    Terms keep insertion order; terms whose graphs are equal as labelled
    graphs are merged.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged = {}
        order = []
        for c, g in terms:
            if not isinstance(g, Graph):
                raise TypeError("ring terms must be graphs")
            if g not in merged:
                merged[g] = 0
                order.append(g)
            merged[g] += c
        self.terms = tuple((merged[g], g) for g in order if merged[g])

    @classmethod
    def of(cls, g, coefficient=1):
        return cls([(coefficient, g)])

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls.of(complete_graph(1))

    def __add__(self, other):
        return RingElement(self.terms + _coerce(other).terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElement((-c, g) for c, g in self.terms)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        return RingElement((a * b, strong_product(g, h))
                           for a, g in self.terms for b, h in other.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        inner = " + ".join("%d*%r" % (c, g) for c, g in self.terms)
        return "RingElement(%s)" % (inner or "0")

    def union_graph(self):
        """Disjoint union of the positive terms, each repeated ``c`` times.

        Only defined when every coefficient is positive.
        """
        if any(c < 0 for c, _ in self.terms):
            raise ValueError("element has negative terms")
        out = Graph()
        for c, g in self.terms:
            for _ in range(c):
                out = disjoint_union(out, g)
        return out


def _coerce(x):
    if isinstance(x, RingElement):
        return x
    if isinstance(x, Graph):
        return RingElement.of(x)
    raise TypeError("cannot use %r as a ring element" % (x,))


def ring_add(a, b):
    return _coerce(a) + _coerce(b)


def ring_mul(a, b):
    return _coerce(a) * _coerce(b)


def ring_neg(a):
    return -_coerce(a)


INVARIANTS = ("chi", "poincare", "curvature-total", "wu", "fvector")


def extended_invariant(e, which):
    """Linear extension of an invariant to ring elements.

    ``which`` is one of ``chi``, ``poincare`` (a coefficient tuple),
    ``curvature-total``, ``wu`` or ``fvector``.
    """
    e = _coerce(e)
    if which == "chi":
        return sum(c * euler_characteristic(g) for c, g in e.terms)
    if which == "curvature-total":
        return sum((c * sum(curvatures(g).values(), Fraction(0)) for c, g in e.terms), Fraction(0))
    if which == "wu":
        return sum(c * wu_characteristic(g) for c, g in e.terms)
    if which in ("poincare", "fvector"):
        fn = poincare_polynomial if which == "poincare" else f_vector
        acc = []
        for c, g in e.terms:
            acc = P.add(acc, P.scale(list(fn(g)), c))
        return tuple(acc)
    raise ValueError("unknown invariant %r" % (which,))


def extended_curvatures(e):
    """``(term index, vertex, c * K(vertex))`` for every term vertex."""
    e = _coerce(e)
    return [(i, v, c * k) for i, (c, g) in enumerate(e.terms) for v, k in curvatures(g).items()]
