"""Whitney (clique) complex of a graph.

Simplices are the nonempty complete subgraphs.  A simplex is reported as a
tuple of vertex labels in the host graph's vertex order, which is also the
orientation used in :mod:`shannon_curvature.homology`.

Three independent routes produce the simplex generating function
``f_G(t) = 1 + f_0 t + f_1 t^2 + ...``:

* :func:`enumerate_cliques` lists every simplex (maximal cliques by pivoting
  Bron-Kerbosch, then all their faces);
* :func:`clique_polynomial` counts without listing, using the
  deletion/contraction rule ``F(P) = F(P - v) + t F(P & N(v))`` with cone
  peeling and component splitting, memoized per graph;
* :func:`generating_function_recursive` uses the Gauss-Bonnet recursion
  ``(k + 1) f_k(G) = sum_x f_{k-1}(S(x))`` and never looks for cliques.
"""

from itertools import combinations

from . import polynomial as P
from .errors import BudgetExceeded
from .graph import iter_bits

DEFAULT_BUDGET = 10 ** 7


# -- counting kernel -----------------------------------------------------

def _component(adj, mask):
    comp = frontier = mask & -mask
    while frontier:
        nb = 0
        for v in iter_bits(frontier):
            nb |= adj[v]
        frontier = nb & mask & ~comp
        comp |= frontier
    return comp


def _count(adj, mask, memo):
    if mask == 0:
        return (1,)
    hit = memo.get(mask)
    if hit is not None:
        return hit
    cones = 0
    rest = mask
    for v in iter_bits(mask):
        if (adj[v] | 1 << v) & mask == mask:
            cones += 1
            rest &= ~(1 << v)
    if cones:
        res = P.cone_power(_count(adj, rest, memo), cones)
    else:
        comp = _component(adj, mask)
        if comp != mask:
            a = _count(adj, comp, memo)
            b = _count(adj, mask ^ comp, memo)
            res = P.add(P.add(a, b), [-1])
        else:
            v = min(iter_bits(mask), key=lambda w: (adj[w] & mask).bit_count())
            res = P.add(_count(adj, mask & ~(1 << v), memo),
                        P.shift(_count(adj, adj[v] & mask, memo)))
    res = tuple(res)
    memo[mask] = res
    return res


def clique_polynomial(g, mask=None):
    """Simplex generating function of the subgraph induced on ``mask``.

    Returns the coefficient tuple ``(1, f_0, f_1, ...)``; ``mask`` defaults to
    all of ``g``.  Results are memoized on the graph.
    """
    memo = g._cache.setdefault("clique_poly", {})
    return _count(g.masks, g.full_mask if mask is None else mask, memo)


def chi_of_mask(g, mask):
    """Euler characteristic of the induced subgraph on ``mask``."""
    return 1 - P.evaluate(clique_polynomial(g, mask), -1)


# -- enumeration -----------------------------------------------------------

def maximal_cliques(g):
    """Maximal cliques as ascending index tuples (Tomita pivoting)."""
    adj = g.masks
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pool = p | x
        u = max(iter_bits(pool), key=lambda w: (p & adj[w]).bit_count())
        for v in iter_bits(p & ~adj[u]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if len(g):
        expand(0, g.full_mask, 0)
    return sorted(tuple(iter_bits(m)) for m in out)


def clique_indices(g, budget=DEFAULT_BUDGET, max_dim=None):
    """All simplices as index tuples, grouped by dimension and sorted."""
    key = ("cliques", max_dim)
    if key in g._cache:
        return g._cache[key]
    top = None if max_dim is None else max_dim + 1
    seen = set()
    for mc in maximal_cliques(g):
        sizes = range(1, len(mc) + 1 if top is None else min(len(mc), top) + 1)
        if top is None and 2 ** len(mc) - 1 > budget:
            raise BudgetExceeded("clique enumeration", budget)
        for k in sizes:
            seen.update(combinations(mc, k))
        if len(seen) > budget:
            raise BudgetExceeded("clique enumeration", budget)
    graded = []
    for s in seen:
        while len(graded) < len(s):
            graded.append([])
        graded[len(s) - 1].append(s)
    for level in graded:
        level.sort()
    g._cache[key] = graded
    return graded


def enumerate_cliques(g, budget=DEFAULT_BUDGET, max_dim=None):
    """Every nonempty complete subgraph exactly once, graded by dimension.

    ``max_dim`` truncates the listing and is an approximation mode: the
    result is no longer the full complex.
    """
    vs = g.vertices
    return [[tuple(vs[i] for i in s) for s in level]
            for level in clique_indices(g, budget, max_dim)]


# -- f-vectors and generating functions ------------------------------------

def f_vector(g, method="count", max_dim=None, budget=DEFAULT_BUDGET):
    """Number of simplices per dimension, trailing zeros trimmed.

    ``method`` is ``"count"`` (counting kernel, no listing) or
    ``"enumerate"`` (length of each level of :func:`enumerate_cliques`).
    """
    if method == "count":
        f = list(clique_polynomial(g)[1:])
        if max_dim is not None:
            f = f[:max_dim + 1]
    elif method == "enumerate":
        f = [len(level) for level in clique_indices(g, budget, max_dim)]
    else:
        raise ValueError("unknown method %r" % (method,))
    return tuple(f)


def generating_function(g, method="count"):
    return (1,) + f_vector(g, method)


def generating_function_recursive(g, budget=10 ** 6):
    """Simplex generating function from the Gauss-Bonnet recursion alone.

    No clique search is done: each coefficient comes from summing the
    generating functions of unit spheres and dividing exactly.
    """
    adj = g.masks
    memo = {}

    def rec(mask):
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if len(memo) >= budget:
            raise BudgetExceeded("generating function recursion", budget)
        if not any(adj[x] & mask for x in iter_bits(mask)):
            res = (1, mask.bit_count()) if mask else (1,)
        else:
            total = []
            for x in iter_bits(mask):
                total = P.add(total, rec(adj[x] & mask))
            coeffs = [1]
            for k, s in enumerate(total):
                q, r = divmod(s, k + 1)
                if r:
                    raise ArithmeticError("non-integral coefficient in recursion")
                coeffs.append(q)
            res = tuple(P.trim(coeffs))
        memo[mask] = res
        return res

    return rec(g.full_mask)


def euler_characteristic(g):
    """Alternating simplex count, ``1 - f_G(-1)``."""
    return chi_of_mask(g, g.full_mask)


def omega(simplex):
    return -1 if len(simplex) % 2 == 0 else 1
