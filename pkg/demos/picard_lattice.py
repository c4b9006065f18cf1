"""
Picard lattices of blown-up planes
==================================

The plane blown up at ``r`` points has Picard lattice ``Z^{1,r}`` with basis
``e0, e1, ..., er``.  This walks through the intersection form, the
canonical class and the two families of special classes.
"""

from realforms.piclattice import (enumerate_exceptional, enumerate_roots,
                                  kperp_invariants, make_lattice, pair)

L = make_lattice(6)
print("gram diagonal:", [L.gram[i][i] for i in range(L.rank)])
print("K =", L.canonical, " K.K =", pair(L, L.canonical, L.canonical))

# a line through two of the points: e0 - e1 - e2
line = L.divisor(1, 1, 1)
print("line through p1, p2:", line, "square", pair(L, line, line))

###############################################################################
# Exceptional classes have ``E.E = -1`` and ``E.K = -1``.  For six points
# these are the 27 lines of a cubic surface.

exc = enumerate_exceptional(L)
by_degree = {}
for E in exc:
    by_degree[E.degree] = by_degree.get(E.degree, 0) + 1
print(len(exc), "exceptional classes, by degree:", by_degree)

###############################################################################
# Roots are the classes with square -2 orthogonal to K.

for r in range(3, 9):
    print(f"r={r}: {len(enumerate_roots(make_lattice(r)))} roots")

###############################################################################
# Past eight points the enumeration no longer terminates; a cap stops it and
# sets the ``truncated`` flag.

big = enumerate_roots(make_lattice(10), cap=1000)
print("r=10:", len(big), "roots found, truncated =", big.truncated)

###############################################################################
# The orthogonal complement of K.  At ten points it is even, unimodular and
# of signature (1, 9).

for r in (8, 9, 10):
    print(r, kperp_invariants(make_lattice(r)))
