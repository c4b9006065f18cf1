"""
Weyl groups and their orders
============================

The simple roots generate a reflection group acting on the Picard lattice.
It is finite exactly when ``r <= 8``; its order is computed from the
permutation action on the root set with a stabilizer chain.
"""

import random

from realforms import weyl
from realforms.piclattice import make_lattice

for r in range(3, 9):
    L = make_lattice(r)
    chain = weyl.weyl_chain(L)
    print(f"r={r}: |W| = {chain.order():>10}   basic orbits {chain.basic_orbit_sizes()}")

###############################################################################
# For small r the group is small enough to list every matrix.

L = make_lattice(5)
print("BFS over matrices at r=5:", weyl.bfs_group_order(L))

###############################################################################
# The reflection in ``e0 - e1 - e2 - e3`` is the quadratic Cremona map.

L3 = make_lattice(3)
s0 = weyl.reflection(L3, L3.simple_roots[0])
print("s0(e0) =", s0(L3.basis(0)))

###############################################################################
# Products of reflections are isometries that fix K.

L10 = make_lattice(10)
rng = random.Random(0)
M = weyl.word_to_isometry(L10, weyl.random_word(L10, 20, rng))
print("K fixed:", M(L10.canonical) == L10.canonical)

###############################################################################
# Dynkin diagrams: at nine points the diagram is the affine E8 diagram,
# which has no symmetry.

for r in (5, 6, 9):
    D = weyl.dynkin_diagram(make_lattice(r))
    print(f"r={r}: edges {sorted(D.edges)}, {len(weyl.diagram_automorphisms(D))} automorphism(s)")

try:
    weyl.weyl_order(make_lattice(9))
except weyl.InfiniteGroupError as exc:
    print("r=9:", exc)
