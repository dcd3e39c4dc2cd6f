"""
The Wu characteristic
=====================

The Wu characteristic sums (-1)^(dim x + dim y) over ordered pairs of
intersecting simplices.  It has its own curvature, which adds up to it,
but unlike the Euler curvature it does not multiply pointwise on products.
"""

from shannon_curvature import (
    complete_graph, octahedron, star_graph, wu_characteristic, wu_curvatures,
    wu_product_survey,
)

for n in range(1, 6):
    print("w(K%d) = %d" % (n, wu_characteristic(complete_graph(n))))
print("w(octahedron) =", wu_characteristic(octahedron()))  # closed surface: w = chi

k = wu_curvatures(star_graph(3))
print("Wu curvature of Star(3):", {v: str(c) for v, c in k.items()}, "sum", sum(k.values()))

# K2 * K2 = K4: curvature -1/4 everywhere, but (-1/2)^2 = 1/4
s = wu_product_survey(complete_graph(2), complete_graph(2))
for (x, y), left, right in s.differences:
    print("at", (x, y), "K_w =", left, "but product of factors =", right)
