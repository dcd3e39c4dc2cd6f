"""
Betti numbers and the Kunneth formula
=====================================

Betti numbers of the clique complex come from exact integer ranks of the
boundary matrices.  Their generating function, the Poincare polynomial,
is multiplicative on strong products and gives chi at t = -1.
"""

from shannon_curvature import (
    betti, cycle_graph, euler_characteristic, octahedron, poincare_polynomial,
    strong_product, verify_kunneth,
)

c4 = cycle_graph(4)
torus_like = strong_product(c4, c4)
print("b(C4)      =", betti(c4))
print("b(C4*C4)   =", betti(torus_like))  # a torus: b1 = 2
print("b(octahedron) =", betti(octahedron()))

# Kunneth: p_{G*H} = p_G p_H
rep = verify_kunneth(c4, octahedron())
print("p_G*H =", rep.product, " p_G p_H =", rep.factor_product, " ok:", rep.ok)

# Euler-Poincare: p(-1) = chi
p = poincare_polynomial(torus_like)
print("p(-1) =", sum(c * (-1) ** k for k, c in enumerate(p)), " chi =", euler_characteristic(torus_like))
