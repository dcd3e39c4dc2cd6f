"""
Curvature multiplies under the strong product
=============================================

The curvature of a vertex only depends on its unit sphere.  It is an exact
rational number and the curvatures of a graph add up to its Euler
characteristic.  In a strong product the curvature of (x, y) is the
product of the factor curvatures.
"""

from shannon_curvature import (
    complete_graph, curvatures, f_vector, gauss_bonnet_report, random_graph,
    star_graph, strong_product, verify_curvature_product,
)

# the f-vector of K4 * Star(4): 20 vertices, 94 edges, ... a 7-simplex at the top
g, h = complete_graph(4), star_graph(4)
gh = strong_product(g, h)
print("f(K4)      =", f_vector(g))
print("f(Star4)   =", f_vector(h))
print("f(K4*Star4)=", f_vector(gh))

# center of the star has curvature 1 - 4/2 = -1, leaves 1/2, K4 vertices 1/4
kg, kh, kgh = curvatures(g), curvatures(h), curvatures(gh)
print("K_Star4:", {v: str(k) for v, k in kh.items()})
print("K at (0,0):", kgh[(0, 0)], "=", kg[0], "*", kh[0])

# Gauss-Bonnet: summing curvature gives chi
rep = gauss_bonnet_report(gh)
print("sum K =", rep.sum, " chi =", rep.chi)

# random pairs, checked at every product vertex with exact fractions
for seed in range(5):
    a, b = random_graph(7, 9, seed), random_graph(6, 8, seed + 100)
    rep = verify_curvature_product(a, b)
    print("seed %d: %d product vertices, mismatches: %d" % (seed, len(rep.rows), len(rep.mismatches)))
