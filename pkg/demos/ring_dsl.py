"""
The ring of graphs and the expression language
==============================================

Graphs with disjoint union and strong product form a semiring; allowing
negative coefficients makes it a ring.  Euler characteristic, Poincare
polynomial and total curvature extend to ring homomorphisms.  The
expression language builds ring elements from small generators.
"""

from shannon_curvature import extended_invariant
from shannon_curvature.dsl import evaluate, parse, to_source

tree = parse("-C(5) + K(2)*K(2)")
print(tree)
print("printed back:", to_source(tree))

e = evaluate(tree)
print(e)
for which in ("chi", "poincare", "curvature-total", "wu", "fvector"):
    print("%-16s %s" % (which, extended_invariant(e, which)))

# chi is multiplicative: chi((K1 + K1) * C4) = 2 * 0
print("chi((K(1)+K(1))*C(4)) =", extended_invariant(evaluate("(K(1)+K(1))*C(4)"), "chi"))

# seeded random graphs are reproducible
a, b = evaluate("random(8, 12, 7)"), evaluate("random(8, 12, 7)")
print("random(8,12,7) reproducible:", a.terms == b.terms)
