"""Levitt curvature, Gauss-Bonnet, and checks of the product formula.

The curvature of ``x`` integrates the simplex generating function of the
unit sphere over ``[-1, 0]``::

    K(x) = 1 - f_0(S(x))/2 + f_1(S(x))/3 - f_2(S(x))/4 + ...

All values are :class:`fractions.Fraction` and every comparison is exact.
"""

from dataclasses import dataclass
from fractions import Fraction

from .graph import strong_product, unit_ball, unit_sphere, zykov_join
from .homology import betti
from .simplicial import chi_of_mask, clique_polynomial, euler_characteristic


def _curvature_from_poly(poly):
    return sum((Fraction((-1) ** k * c, k + 1) for k, c in enumerate(poly)), Fraction(0))


def curvature(g, x):
    return _curvature_from_poly(clique_polynomial(g, g.masks[g.index(x)]))


def curvatures(g):
    """Curvature at every vertex, keyed by vertex in graph order."""
    return {v: _curvature_from_poly(clique_polynomial(g, g.masks[i]))
            for i, v in enumerate(g.vertices)}


@dataclass
class GaussBonnetReport:
    sum: Fraction
    chi: int

    @property
    def equal(self):
        return self.sum == self.chi

    ok = equal


def gauss_bonnet_report(g):
    return GaussBonnetReport(sum(curvatures(g).values(), Fraction(0)), euler_characteristic(g))


@dataclass
class ProductCurvatureReport:
    """Per product vertex: ``(vertex, K_{G*H}(x, y), K_G(x) * K_H(y))``."""

    rows: list

    @property
    def mismatches(self):
        return [r for r in self.rows if r[1] != r[2]]

    @property
    def ok(self):
        return not self.mismatches


def verify_curvature_product(g, h, gh=None):
    gh = strong_product(g, h) if gh is None else gh
    kg, kh, kgh = curvatures(g), curvatures(h), curvatures(gh)
    rows = [((a, b), kgh[(a, b)], kg[a] * kh[b]) for a in g.vertices for b in h.vertices]
    return ProductCurvatureReport(rows)


@dataclass
class CylinderReport:
    vertex: tuple
    sphere_size: int
    vertex_identity: bool
    intersection_identity: bool
    pieces_induced: bool

    @property
    def ok(self):
        return self.vertex_identity and self.intersection_identity and self.pieces_induced


def cylinder_decomposition_check(g, h, x, y, gh=None):
    """Check ``S(x,y) = S(x)*B(y) u B(x)*S(y)`` with intersection ``S(x)*S(y)``."""
    gh = strong_product(g, h) if gh is None else gh
    sx, bx = unit_sphere(g, x), unit_ball(g, x)
    sy, by = unit_sphere(h, y), unit_ball(h, y)
    sphere = set(unit_sphere(gh, (x, y)).vertices)
    mantle = {(a, b) for a in sx.vertices for b in by.vertices}
    lids = {(a, b) for a in bx.vertices for b in sy.vertices}
    core = {(a, b) for a in sx.vertices for b in sy.vertices}
    induced = True
    for piece, factors in ((mantle, (sx, by)), (lids, (bx, sy))):
        expected = strong_product(*factors)
        actual = gh.induced_mask(gh.mask_of(piece))
        # same labels and order imply same adjacency iff the masks agree
        induced &= expected.vertices == actual.vertices and expected.masks == actual.masks
    return CylinderReport((x, y), len(sphere), sphere == mantle | lids,
                          mantle & lids == core, induced)


@dataclass
class SphereJoinReport:
    vertex: tuple
    chi: tuple  # (chi(S(x,y)), chi(S(x) + S(y)))
    betti: tuple

    @property
    def ok(self):
        a, b = self.betti
        return self.chi[0] == self.chi[1] and _strip(a) == _strip(b)


def _strip(t):
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


def sphere_join_homotopy_check(g, h, x, y, gh=None):
    """Compare homotopy invariants of ``S(x,y)`` with those of the join ``S(x) + S(y)``."""
    gh = strong_product(g, h) if gh is None else gh
    sphere = unit_sphere(gh, (x, y))
    join = zykov_join(unit_sphere(g, x), unit_sphere(h, y))
    return SphereJoinReport((x, y), (euler_characteristic(sphere), euler_characteristic(join)),
                            (betti(sphere), betti(join)))


def sphere_index_product(g, h, x, y, gh=None):
    """``(1 - chi(S(x,y)), (1 - chi(S(x))) * (1 - chi(S(y))))``."""
    gh = strong_product(g, h) if gh is None else gh
    left = 1 - chi_of_mask(gh, gh.masks[gh.index((x, y))])
    right = (1 - chi_of_mask(g, g.masks[g.index(x)])) * (1 - chi_of_mask(h, h.masks[h.index(y)]))
    return left, right
