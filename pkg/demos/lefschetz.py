"""
Lefschetz numbers of graph endomorphisms
========================================

A graph endomorphism maps simplices to simplices.  Its Lefschetz number
can be read three ways: as a super trace on chains, as a sum of indices of
fixed simplices, and as a super trace on homology.  For the identity it is
chi, and it multiplies on products T*S.
"""

from shannon_curvature import (
    GraphEndomorphism, complete_graph, cycle_graph, euler_characteristic,
    fixed_simplex_index_sum, homological_lefschetz_number, lefschetz_number,
    path_graph, verify_lefschetz_product,
)

c4 = cycle_graph(4)
rot = GraphEndomorphism(c4, {0: 1, 1: 2, 2: 3, 3: 0})
print("rotation of C4: L =", lefschetz_number(c4, rot),
      "fixed sum =", fixed_simplex_index_sum(c4, rot),
      "homology =", homological_lefschetz_number(c4, rot))

p3 = path_graph(3)
flip = GraphEndomorphism(p3, {0: 2, 1: 1, 2: 0})
print("flip of P3: L =", lefschetz_number(p3, flip))  # contractible, so 1

ident = GraphEndomorphism.identity(c4)
print("identity: L =", lefschetz_number(c4, ident), " chi =", euler_characteristic(c4))

swap = GraphEndomorphism(complete_graph(2), {0: 1, 1: 0})
rep = verify_lefschetz_product(rot, swap)
print("L(T*S) =", rep.lefschetz[0], " L(T) L(S) =", rep.lefschetz[1], " ok:", rep.ok)
