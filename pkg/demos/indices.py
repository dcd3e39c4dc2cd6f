"""
Poincare-Hopf indices and their expectation
===========================================

A locally injective function g (a coloring) gives every vertex an index
1 - chi(S^-(x)), where S^-(x) is the part of the unit sphere where g is
smaller.  The indices add up to chi, and averaging over random colorings
gives back the curvature.
"""

from shannon_curvature import (
    curvatures, cycle_graph, index_expectations, octahedron, ph_indices, ph_report,
    random_coloring, star_graph, strong_product, tensor_function, verify_index_product,
)

g = octahedron()
f = random_coloring(g, 7)
print("indices:", ph_indices(g, f))
print("sum =", ph_report(g, f).sum, " chi =", ph_report(g, f).chi)

# on a product, the tensor coloring (x, y) -> f(x) k(y) makes indices multiply
a, b = cycle_graph(5), star_graph(3)
fa, fb = random_coloring(a, 1), random_coloring(b, 2)
rep = verify_index_product(a, b, fa, fb)
print("index product on C5*Star3: %d vertices, %d mismatches" % (len(rep.rows), len(rep.mismatches)))
fab = tensor_function(a, fa, b, fb)
print("tensor coloring has", len(set(fab.values())), "distinct values on", len(fab), "vertices")

# Monte Carlo: mean index over random colorings against the exact curvature
est = index_expectations(star_graph(4), samples=20000, seed=3)
for v, k in curvatures(star_graph(4)).items():
    e = est[v]
    print("vertex %s: estimate %.4f +- %.4f, curvature %s" % (v, e.estimate, e.stderr, k))
