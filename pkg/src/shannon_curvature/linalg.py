"""Exact linear algebra over the rationals.

Ranks of the (sparse, +-1) boundary matrices use fraction-free integer row
elimination: every row operation is ``r <- a*r - b*p`` followed by division
by the row content, so entries stay small and no fractions appear.  The
dense routines below work on lists of :class:`fractions.Fraction` and are
only used for the small homology computations behind Lefschetz traces.
"""

from fractions import Fraction
from math import gcd


def _primitive(row):
    c = 0
    for v in row.values():
        c = gcd(c, v)
    lead = row[min(row)]
    if lead < 0:
        c = -c
    if c != 1:
        row = {k: v // c for k, v in row.items()}
    return row


def sparse_rank(rows):
    """Rank over Q of an integer matrix given as an iterable of ``{col: value}``."""
    pivots = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = _primitive(row)
                break
            a, b = p[c], row[c]
            new = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                s = new.get(k, 0) - b * v
                if s:
                    new[k] = s
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rref(matrix):
    """Reduced row echelon form and pivot columns of a Fraction matrix."""
    m = [[Fraction(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        k = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if k is None:
            continue
        m[r], m[k] = m[k], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(matrix, ncols):
    """Basis of ``{v : matrix @ v = 0}`` as a list of Fraction vectors."""
    if not matrix:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def rank(vectors):
    """Rank of a list of equal-length Fraction vectors."""
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def solve(columns, target):
    """Coefficients ``c`` with ``sum c_i columns[i] == target``.

    ``columns`` must be linearly independent and span ``target``.
    """
    n = len(target)
    aug = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    red, pivots = rref(aug)
    k = len(columns)
    if k in pivots:
        raise ValueError("target is not in the span of the columns")
    coeffs = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return coeffs
