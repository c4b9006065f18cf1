"""
Certified entropy of lattice isometries
=======================================

The entropy of an isometry is the log of its spectral radius.  Everything
below is decided with exact integers and rationals; floats only appear when
printing logarithms.
"""

from fractions import Fraction

from realforms import spectral, weyl
from realforms.piclattice import make_lattice

for r in (8, 9, 10):
    L = make_lattice(r)
    M = weyl.word_to_isometry(L, weyl.coxeter_word(L))
    rep = spectral.entropy(L, M, Fraction(1, 10**5))
    lo, hi = rep.spectral_radius_interval
    print(f"r={r}: char poly {list(rep.char_poly.coeffs)}")
    print(f"      radius in [{lo}, {hi}] = [{float(lo):.6f}, {float(hi):.6f}],"
          f" positive entropy: {rep.positive_entropy}")

###############################################################################
# At eight points the Coxeter element has finite order (the Coxeter number
# of E8).  At nine points it has radius one but infinite order.

for r in (8, 9):
    L = make_lattice(r)
    M = weyl.word_to_isometry(L, weyl.coxeter_word(L))
    print(r, spectral.is_finite_order(M))

###############################################################################
# At ten points the characteristic polynomial factors as ``(x - 1)`` times
# Lehmer's polynomial, which is not a product of cyclotomic factors.

L = make_lattice(10)
p = spectral.char_poly(weyl.word_to_isometry(L, weyl.coxeter_word(L)))
print("cyclotomic part:", spectral.cyclotomic_factorization(p))
print("x=1 is a root:", p(1) == 0)
