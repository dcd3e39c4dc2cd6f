"""Seeded random test corpora.

Case ``i`` of any corpus depends only on ``(seed, i)``, never on how many
cases are drawn or which process draws them.
"""

from .graph import random_graph
from .homology import GraphEndomorphism
from .morse import make_rng

# limits (max vertices, max edges) matching the 8v/12e x 7v/17e experiment
G_LIMITS = (8, 12)
H_LIMITS = (7, 17)


def draw_graph(rng, max_vertices, max_edges):
    n = int(rng.integers(1, max_vertices, endpoint=True))
    m = int(rng.integers(0, min(max_edges, n * (n - 1) // 2), endpoint=True))
    return random_graph(n, m, int(rng.integers(2 ** 63)))


def corpus_graph(seed, i, limits=G_LIMITS, stream=0):
    return draw_graph(make_rng(seed, stream, i), *limits)


def corpus_pair(seed, i, g_limits=G_LIMITS, h_limits=H_LIMITS):
    rng = make_rng(seed, 1, i)
    return draw_graph(rng, *g_limits), draw_graph(rng, *h_limits)


def graph_corpus(count, seed, limits=G_LIMITS):
    return [corpus_graph(seed, i, limits) for i in range(count)]


def pair_corpus(count, seed, g_limits=G_LIMITS, h_limits=H_LIMITS):
    return [corpus_pair(seed, i, g_limits, h_limits) for i in range(count)]


def full_size_pair(seed, i):
    """Exactly 8 vertices/12 edges times 7 vertices/17 edges."""
    rng = make_rng(seed, 2, i)
    return (random_graph(8, 12, int(rng.integers(2 ** 63))),
            random_graph(7, 17, int(rng.integers(2 ** 63))))


def random_endomorphism(g, rng, tries=200):
    """A random adjacency-compatible vertex map.

    Tries random permutations first (automorphisms), then arbitrary maps,
    and falls back to a constant map, which is always compatible.
    """
    n = len(g)
    vs = g.vertices
    for t in range(tries):
        if t < tries // 2:
            img = rng.permutation(n).tolist()
        else:
            img = rng.integers(0, n, size=n).tolist()
        try:
            return GraphEndomorphism(g, {vs[i]: vs[img[i]] for i in range(n)})
        except ValueError:
            continue
    c = vs[int(rng.integers(n))]
    return GraphEndomorphism(g, {v: c for v in vs})
