"""Rational homology of clique complexes and Lefschetz numbers.

Betti numbers are ``b_k = f_k - rank d_k - rank d_{k+1}`` with ranks computed
exactly.  Before building boundary matrices, :func:`betti` removes dominated
vertices (``N[v]`` contained in ``N[u]`` for a neighbour ``u``), which is a
strong deformation retraction of the clique complex and keeps dense spheres
of product graphs tractable.  ``reduce=False`` skips it.

Orientation: a simplex is oriented by ascending vertex position, and the
boundary is ``sum_i (-1)^i [v_0 .. ^v_i .. v_k]``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import polynomial as P
from .errors import NotAnEndomorphism
from .graph import Graph, iter_bits, strong_product
from .linalg import nullspace, rref, solve, sparse_rank
from .simplicial import DEFAULT_BUDGET, chi_of_mask, clique_indices, euler_characteristic, f_vector


class ChainComplex:
    """Oriented simplices and sparse boundary matrices of a clique complex.

    ``simplices[k]`` lists the k-simplices as ascending index tuples;
    ``boundary(k)`` gives one ``{row: sign}`` column per k-simplex.
    """

    def __init__(self, g, budget=DEFAULT_BUDGET):
        self.graph = g
        self.simplices = clique_indices(g, budget)
        self.position = [{s: i for i, s in enumerate(level)} for level in self.simplices]
        self._boundary = {}

    @property
    def top(self):
        return len(self.simplices) - 1

    def size(self, k):
        return len(self.simplices[k]) if 0 <= k < len(self.simplices) else 0

    def boundary(self, k):
        if k <= 0 or k > self.top:
            return [{} for _ in range(self.size(k))]
        if k not in self._boundary:
            rows = self.position[k - 1]
            cols = []
            for s in self.simplices[k]:
                cols.append({rows[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
            self._boundary[k] = cols
        return self._boundary[k]

    def boundary_dense(self, k):
        """``d_k`` as a list of integer rows (shape ``f_{k-1} x f_k``)."""
        cols = self.boundary(k)
        out = [[0] * len(cols) for _ in range(self.size(k - 1))]
        for j, col in enumerate(cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def rank(self, k):
        return sparse_rank(self.boundary(k)) if 0 < k <= self.top else 0


def chain_complex(g, budget=DEFAULT_BUDGET):
    return ChainComplex(g, budget)


def core_graph(g):
    """Repeatedly delete dominated vertices; homotopy type is preserved."""
    adj = g.masks
    mask = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(mask):
            closed = (adj[v] | 1 << v) & mask
            for u in iter_bits(adj[v] & mask):
                if closed & ~(adj[u] | 1 << u) == 0:
                    mask &= ~(1 << v)
                    changed = True
                    break
    return g.induced_mask(mask)


def betti(g, reduce=True, budget=DEFAULT_BUDGET):
    """Betti numbers ``(b_0, ..., b_d)`` with ``d`` the dimension of the complex."""
    length = len(f_vector(g))
    core = core_graph(g) if reduce else g
    cc = chain_complex(core, budget)
    ranks = [cc.rank(k) for k in range(cc.top + 2)]
    b = [cc.size(k) - ranks[k] - ranks[k + 1] for k in range(cc.top + 1)]
    return tuple(b + [0] * (length - len(b)))


def poincare_polynomial(g, **kw):
    return tuple(P.trim(betti(g, **kw)))


@dataclass
class EulerPoincareReport:
    betti: tuple
    poincare_at_minus_one: int
    chi: int

    @property
    def ok(self):
        return self.poincare_at_minus_one == self.chi


def euler_poincare_check(g):
    b = betti(g)
    return EulerPoincareReport(b, P.evaluate(b, -1), euler_characteristic(g))


@dataclass
class KunnethReport:
    product: tuple
    factor_product: tuple
    factors: tuple

    @property
    def ok(self):
        return self.product == self.factor_product


def verify_kunneth(g, h, gh=None):
    gh = strong_product(g, h) if gh is None else gh
    pg, ph = poincare_polynomial(g), poincare_polynomial(h)
    return KunnethReport(poincare_polynomial(gh), tuple(P.mul(pg, ph)), (pg, ph))


# -- endomorphisms -----------------------------------------------------------

def _perm_sign(seq):
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


class GraphEndomorphism:
    """Vertex map ``T`` with every edge sent to an edge or collapsed to a vertex."""

    def __init__(self, g, mapping):
        self.graph = g
        try:
            self.imap = tuple(g.index(mapping[v]) for v in g.vertices)
        except KeyError as exc:
            raise NotAnEndomorphism("vertex map is not total or leaves the graph: %s" % exc) from None
        adj = g.masks
        for a in range(len(g)):
            for b in iter_bits(adj[a]):
                ta, tb = self.imap[a], self.imap[b]
                if ta != tb and not adj[ta] >> tb & 1:
                    raise NotAnEndomorphism("edge %r is not mapped to an edge or vertex"
                                            % ((g.vertices[a], g.vertices[b]),))

    @classmethod
    def identity(cls, g):
        return cls(g, {v: v for v in g.vertices})

    @property
    def mapping(self):
        vs = self.graph.vertices
        return {vs[i]: vs[t] for i, t in enumerate(self.imap)}

    def __call__(self, v):
        return self.graph.vertices[self.imap[self.graph.index(v)]]

    def image(self, simplex):
        """Image of an index simplex: ``(target, sign)`` or ``None`` if it collapses."""
        img = [self.imap[i] for i in simplex]
        target = tuple(sorted(img))
        if len(set(target)) < len(target):
            return None
        return target, _perm_sign(img)

    def cycles(self):
        """Cycles of ``T`` on its periodic vertices, as index tuples."""
        n = len(self.imap)
        periodic = set()
        for v in range(n):
            w = v
            for _ in range(n):
                w = self.imap[w]
                if w == v:
                    periodic.add(v)
                    break
        out, done = [], set()
        for v in sorted(periodic):
            if v in done:
                continue
            cyc, w = [v], self.imap[v]
            while w != v:
                cyc.append(w)
                w = self.imap[w]
            done.update(cyc)
            out.append(tuple(cyc))
        return out


def product_endomorphism(t, s, gh=None):
    """``T*S (v, w) = (T v, S w)`` on the strong product."""
    gh = strong_product(t.graph, s.graph) if gh is None else gh
    mapping = {(a, b): (t(a), s(b)) for a, b in gh.vertices}
    return GraphEndomorphism(gh, mapping)


def induced_chain_map(cc, t, k):
    """Columns ``{row: sign}`` of the chain map ``T_k : C_k -> C_k``."""
    pos = cc.position[k]
    cols = []
    for s in cc.simplices[k]:
        im = t.image(s)
        cols.append({} if im is None else {pos[im[0]]: im[1]})
    return cols


def lefschetz_number(g, t, budget=DEFAULT_BUDGET):
    """Chain-level super trace ``sum_k (-1)^k tr(T | C_k)``."""
    if t.graph is not g and t.graph != g:
        raise NotAnEndomorphism("endomorphism belongs to a different graph")
    cc = chain_complex(g, budget)
    total = 0
    for k in range(cc.top + 1):
        cols = induced_chain_map(cc, t, k)
        total += (-1) ** k * sum(col.get(j, 0) for j, col in enumerate(cols))
    return total


def fixed_simplex_index_sum(g, t):
    """Sum of ``(-1)^dim x * sign(T|x)`` over simplices with ``T(x) = x``.

    A setwise fixed simplex is a union of whole cycles of ``T`` whose vertices
    are pairwise adjacent, and its index works out to ``(-1)^(c+1)`` for ``c``
    cycles.  The sum is therefore the Euler characteristic of the clique
    complex of the graph whose nodes are the clique-cycles and whose edges
    join cycles with complete union.
    """
    if t.graph is not g and t.graph != g:
        raise NotAnEndomorphism("endomorphism belongs to a different graph")
    adj = g.masks
    cyc_masks = []
    for c in t.cycles():
        m = 0
        for v in c:
            m |= 1 << v
        if all((adj[v] | 1 << v) & m == m for v in c):
            cyc_masks.append(m)
    nodes = range(len(cyc_masks))
    edges = []
    for i in nodes:
        for j in range(i + 1, len(cyc_masks)):
            union = cyc_masks[i] | cyc_masks[j]
            if all((adj[v] | 1 << v) & union == union for v in iter_bits(union)):
                edges.append((i, j))
    cg = Graph(nodes, edges)
    return chi_of_mask(cg, cg.full_mask)


def homological_lefschetz_number(g, t, budget=10 ** 4):
    """Super trace of ``T`` on rational homology ``H_k``.

    Dense exact elimination; intended for complexes with at most a few
    hundred simplices.
    """
    cc = chain_complex(g, budget)
    total = Fraction(0)
    for k in range(cc.top + 1):
        n = cc.size(k)
        dk = cc.boundary_dense(k) if k > 0 else []
        cycles = nullspace(dk, n)
        if not cycles:
            continue
        above = cc.boundary_dense(k + 1) if k < cc.top else []
        bvecs = [list(col) for col in zip(*above)] if above else []
        basis = []
        if bvecs:
            red, piv = rref(bvecs)
            basis = red[:len(piv)]
        hom = []
        for z in cycles:
            trial = basis + hom + [z]
            if len(rref(trial)[1]) == len(trial):
                hom.append(z)
        tk = induced_chain_map(cc, t, k)
        for i, h in enumerate(hom):
            img = [Fraction(0)] * n
            for j, coef in enumerate(h):
                if coef:
                    for row, sign in tk[j].items():
                        img[row] += sign * coef
            coeffs = solve(basis + hom, img)
            total += (-1) ** k * coeffs[len(basis) + i]
    assert total.denominator == 1
    return int(total)


@dataclass
class LefschetzProductReport:
    lefschetz: tuple  # (L(G*H, T*S), L(G, T), L(H, S))
    fixed_sum: tuple  # same layout for the fixed-simplex sums

    @property
    def ok(self):
        a, b, c = self.lefschetz
        x, y, z = self.fixed_sum
        return a == b * c and x == y * z and a == x


def verify_lefschetz_product(t, s, gh=None):
    ts = product_endomorphism(t, s, gh)
    g, h, p = t.graph, s.graph, ts.graph
    return LefschetzProductReport(
        (lefschetz_number(p, ts), lefschetz_number(g, t), lefschetz_number(h, s)),
        (fixed_simplex_index_sum(p, ts), fixed_simplex_index_sum(g, t), fixed_simplex_index_sum(h, s)),
    )
