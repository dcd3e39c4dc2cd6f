"""Poincare-Hopf indices of locally injective vertex functions.

For a coloring ``f`` the index at ``x`` is ``1 - chi(S_f(x))`` where
``S_f(x)`` is the part of the unit sphere on which ``f`` is smaller than
``f(x)``.  Random colorings draw i.i.d. values ``k / 2**40`` with ``k``
uniform in ``1..2**40`` from a Philox stream; since the index only sees the
ordering of values, the law of the indices is the same as for any other
continuous i.i.d. choice.

Sample ``i`` of an expectation uses the substream
``SeedSequence(seed, spawn_key=(i,))``, so estimates are the same for any
number of workers.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

import numpy as np

from .errors import ColoringError, TensorCollisionError
from .graph import iter_bits, strong_product
from .parallel import pmap
from .simplicial import chi_of_mask, euler_characteristic

RESOLUTION = 2 ** 40
MAX_RETRIES = 32


def make_rng(seed, *key):
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=key)))


def is_locally_injective(g, f):
    for a, b in g.edges():
        if f[a] == f[b]:
            return False
    return True


def random_coloring(g, seed, *key, rng=None):
    """Random vertex function with pairwise distinct positive values.

    ``seed`` and optional ``key`` integers select the Philox substream;
    alternatively pass a ready ``rng``.
    """
    rng = make_rng(seed, *key) if rng is None else rng
    n = len(g)
    for _ in range(MAX_RETRIES):
        raw = rng.integers(1, RESOLUTION, size=n, endpoint=True).tolist()
        if len(set(raw)) == n:
            return {v: Fraction(r, RESOLUTION) for v, r in zip(g.vertices, raw)}
    raise ColoringError("no injective draw after %d attempts" % MAX_RETRIES)


def _sublevel_mask(g, values, i):
    m = 0
    for j in iter_bits(g.masks[i]):
        if values[j] < values[i]:
            m |= 1 << j
    return m


def sublevel_sphere(g, f, x):
    """Induced subgraph of ``S(x)`` on neighbours with smaller value."""
    i = g.index(x)
    return g.induced_mask(_sublevel_mask(g, [f[v] for v in g.vertices], i))


def ph_index(g, f, x):
    i = g.index(x)
    return 1 - chi_of_mask(g, _sublevel_mask(g, [f[v] for v in g.vertices], i))


def ph_indices(g, f):
    values = [f[v] for v in g.vertices]
    return {v: 1 - chi_of_mask(g, _sublevel_mask(g, values, i)) for i, v in enumerate(g.vertices)}


@dataclass
class PoincareHopfReport:
    indices: dict
    sum: int
    chi: int

    @property
    def equal(self):
        return self.sum == self.chi

    ok = equal


def ph_report(g, f):
    idx = ph_indices(g, f)
    return PoincareHopfReport(idx, sum(idx.values()), euler_characteristic(g))


def tensor_function(g, f, h, k, gh=None):
    """Coloring ``(x, y) -> f(x) * k(y)`` of the strong product.

    Raises :class:`TensorCollisionError` if adjacent product vertices get
    equal values; callers should draw new colorings rather than perturb.
    """
    if any(v <= 0 for v in f.values()) or any(v <= 0 for v in k.values()):
        raise ValueError("tensor colorings need positive values")
    gh = strong_product(g, h) if gh is None else gh
    fk = {(a, b): f[a] * k[b] for a in g.vertices for b in h.vertices}
    if not is_locally_injective(gh, fk):
        raise TensorCollisionError("adjacent product vertices share a value")
    return fk


def random_tensor_colorings(g, h, seed, *key, gh=None):
    """Seeded colorings ``f, k`` whose tensor is valid, plus the tensor."""
    rng = make_rng(seed, *key)
    for _ in range(MAX_RETRIES):
        f = random_coloring(g, None, rng=rng)
        k = random_coloring(h, None, rng=rng)
        try:
            return f, k, tensor_function(g, f, h, k, gh)
        except TensorCollisionError:
            continue
    raise TensorCollisionError("no collision-free tensor coloring after %d attempts" % MAX_RETRIES)


@dataclass
class IndexProductReport:
    """Per product vertex: ``(vertex, i_{G*H}(x, y), i_G(x) * i_H(y))``."""

    rows: list
    chi: int

    @property
    def mismatches(self):
        return [r for r in self.rows if r[1] != r[2]]

    @property
    def ok(self):
        return not self.mismatches and sum(r[1] for r in self.rows) == self.chi


def verify_index_product(g, h, f, k, gh=None):
    gh = strong_product(g, h) if gh is None else gh
    fk = tensor_function(g, f, h, k, gh)
    ig, ih, igh = ph_indices(g, f), ph_indices(h, k), ph_indices(gh, fk)
    rows = [((a, b), igh[(a, b)], ig[a] * ih[b]) for a in g.vertices for b in h.vertices]
    return IndexProductReport(rows, euler_characteristic(gh))


# -- index expectation -------------------------------------------------------

@dataclass
class Estimate:
    estimate: Fraction
    stderr: float
    samples: int


def _sample_block(g, seed, block):
    lo, hi = block
    n = len(g)
    s1 = [0] * n
    s2 = [0] * n
    for i in range(lo, hi):
        f = random_coloring(g, seed, i)
        values = [f[v] for v in g.vertices]
        for j in range(n):
            ind = 1 - chi_of_mask(g, _sublevel_mask(g, values, j))
            s1[j] += ind
            s2[j] += ind * ind
    return s1, s2


def index_expectations(g, samples, seed, workers=1):
    """Monte-Carlo mean of the index at every vertex over ``samples`` colorings."""
    if samples < 1:
        raise ValueError("samples must be positive")
    step = max(1, min(1000, -(-samples // max(1, workers))))
    blocks = [(lo, min(samples, lo + step)) for lo in range(0, samples, step)]
    parts = pmap(partial(_sample_block, g, seed), blocks, workers)
    out = {}
    for j, v in enumerate(g.vertices):
        s1 = sum(p[0][j] for p in parts)
        s2 = sum(p[1][j] for p in parts)
        mean = Fraction(s1, samples)
        if samples > 1:
            var = (s2 - samples * mean * mean) / (samples - 1)
            err = math.sqrt(float(var) / samples)
        else:
            err = math.nan
        out[v] = Estimate(mean, err, samples)
    return out


def index_expectation(g, x, samples, seed, workers=1):
    g.index(x)
    return index_expectations(g, samples, seed, workers)[x]
