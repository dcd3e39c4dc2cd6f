"""Finite simple graphs and the constructions used on them.

A :class:`Graph` carries labelled vertices in a fixed order.  Internally the
adjacency is a tuple of integer bitmasks indexed by vertex position, which is
what the clique machinery in :mod:`shannon_curvature.simplicial` works on.
Graphs are immutable; every construction returns a new graph.
"""

from itertools import combinations

import numpy as np

from .errors import InvalidGraphError, UnknownVertexError


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple graph with an ordered vertex list.

    Parameters
    ----------
    vertices : iterable of hashable
        Vertex labels; order is kept and defines the ascending order used for
        simplices and orientations.
    edges : iterable of pairs
        Unordered edges between existing vertices.  Duplicates are ignored,
        self-loops are rejected.
    """

    __slots__ = ("_vertices", "_index", "_adj", "_cache")

    def __init__(self, vertices=(), edges=()):
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise InvalidGraphError("duplicate vertex labels")
        adj = [0] * len(self._vertices)
        for e in edges:
            a, b = e
            if a not in self._index or b not in self._index:
                raise InvalidGraphError("edge %r references a missing vertex" % (e,))
            i, j = self._index[a], self._index[b]
            if i == j:
                raise InvalidGraphError("self-loop at %r" % (a,))
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        self._adj = tuple(adj)
        self._cache = {}

    @classmethod
    def _from_masks(cls, vertices, adj):
        g = cls.__new__(cls)
        g._vertices = tuple(vertices)
        g._index = {v: i for i, v in enumerate(g._vertices)}
        g._adj = tuple(adj)
        g._cache = {}
        return g

    def __getstate__(self):
        return (self._vertices, self._adj)

    def __setstate__(self, state):
        vertices, adj = state
        self._vertices = vertices
        self._index = {v: i for i, v in enumerate(vertices)}
        self._adj = adj
        self._cache = {}

    # -- basic queries ---------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    @property
    def masks(self):
        """Adjacency bitmasks, one per vertex position."""
        return self._adj

    @property
    def full_mask(self):
        return (1 << len(self._vertices)) - 1

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def index(self, v):
        try:
            return self._index[v]
        except (KeyError, TypeError):
            raise UnknownVertexError(v) from None

    def edges(self):
        """Edges as label pairs, ordered by vertex position."""
        vs = self._vertices
        return tuple((vs[i], vs[j]) for i in range(len(vs))
                     for j in iter_bits(self._adj[i] >> (i + 1) << (i + 1)))

    @property
    def num_edges(self):
        return sum(bin(m).count("1") for m in self._adj) // 2

    def has_edge(self, a, b):
        return bool(self._adj[self.index(a)] >> self.index(b) & 1)

    def neighbors(self, v):
        return tuple(self._vertices[j] for j in iter_bits(self._adj[self.index(v)]))

    def degree(self, v):
        return bin(self._adj[self.index(v)]).count("1")

    def mask_of(self, vs):
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def labels_of(self, mask):
        return tuple(self._vertices[i] for i in iter_bits(mask))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self):
        return hash((self._vertices, self._adj))

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (len(self), self.num_edges)

    # -- substructures ---------------------------------------------------

    def induced_mask(self, mask):
        """Induced subgraph on the vertex positions set in ``mask``."""
        pos = list(iter_bits(mask))
        remap = {p: k for k, p in enumerate(pos)}
        adj = []
        for p in pos:
            m = 0
            for q in iter_bits(self._adj[p] & mask):
                m |= 1 << remap[q]
            adj.append(m)
        return Graph._from_masks([self._vertices[p] for p in pos], adj)


def induced_subgraph(g, vs):
    """Induced subgraph on ``vs``; vertices keep the host order."""
    return g.induced_mask(g.mask_of(vs))


def unit_sphere(g, x):
    return g.induced_mask(g.masks[g.index(x)])


def unit_ball(g, x):
    i = g.index(x)
    return g.induced_mask(g.masks[i] | 1 << i)


# -- products and sums ---------------------------------------------------

def strong_product(g, h):
    """Strong (Shannon) product with vertices ``(a, b)`` in lexicographic order.

    Distinct pairs are adjacent when each coordinate is equal or adjacent.
    """
    n, m = len(g), len(h)
    closed_g = [g.masks[i] | 1 << i for i in range(n)]
    closed_h = [h.masks[j] | 1 << j for j in range(m)]
    # spread an h-mask across the row blocks selected by a g-mask
    adj = []
    for i in range(n):
        rows = list(iter_bits(closed_g[i]))
        for j in range(m):
            mask = 0
            for r in rows:
                mask |= closed_h[j] << (r * m)
            adj.append(mask & ~(1 << (i * m + j)))
    verts = [(a, b) for a in g.vertices for b in h.vertices]
    return Graph._from_masks(verts, adj)


def zykov_join(g, h):
    """Join: disjoint union plus every edge between the two parts.

    Vertices are relabelled ``(0, a)`` and ``(1, b)``.
    """
    n, m = len(g), len(h)
    hmask = ((1 << m) - 1) << n
    adj = [g.masks[i] | hmask for i in range(n)]
    adj += [(h.masks[j] << n) | ((1 << n) - 1) for j in range(m)]
    verts = [(0, a) for a in g.vertices] + [(1, b) for b in h.vertices]
    return Graph._from_masks(verts, adj)


def disjoint_union(g, h):
    """Disjoint union with vertices relabelled ``(0, a)`` and ``(1, b)``."""
    n = len(g)
    adj = list(g.masks) + [mk << n for mk in h.masks]
    verts = [(0, a) for a in g.vertices] + [(1, b) for b in h.vertices]
    return Graph._from_masks(verts, adj)


# -- generators ------------------------------------------------------------

def empty_graph(n=0):
    return Graph(range(n))


def complete_graph(n):
    return Graph(range(n), combinations(range(n), 2))


def path_graph(n):
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    if n < 3:
        raise InvalidGraphError("a cycle needs at least 3 vertices")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves):
    """Center ``0`` joined to leaves ``1..leaves``."""
    return Graph(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))


def octahedron():
    two = empty_graph(2)
    return zykov_join(zykov_join(two, two), two)


def random_graph(n, m, seed):
    """Uniform random graph on ``n`` vertices with exactly ``m`` edges."""
    pairs = list(combinations(range(n), 2))
    if not 0 <= m <= len(pairs):
        raise InvalidGraphError("edge count %d out of range for %d vertices" % (m, n))
    rng = np.random.Generator(np.random.Philox(seed))
    chosen = sorted(rng.choice(len(pairs), size=m, replace=False).tolist()) if m else []
    return Graph(range(n), (pairs[k] for k in chosen))
