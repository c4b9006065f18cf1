"""
Non-abelian H^1 of Z/2
======================

A Z/2-group is a finite group with an involutive automorphism ``theta``.  A
cocycle is an element ``a`` with ``a theta(a) = e``; two cocycles are
equivalent when ``b = x^-1 a theta(x)`` for some ``x``.
"""

from realforms import gcohom
from realforms.fixtures import load_record

rec = load_record("s3_triv_n3_1")
S3 = gcohom.load_ggroup(rec)
H = gcohom.h1(S3)
print("cocycles:", [c.a_sigma for c in gcohom.cocycles(S3)])
print("classes:", H.classes)

###############################################################################
# The same classes appear as conjugacy classes of complements in the
# semidirect product.

S = gcohom.semidirect(S3)
for a in gcohom.cocycles(S3):
    row = [gcohom.splitting_conjugacy_equiv(S3, a, b, S) for b in gcohom.cocycles(S3)]
    print(a.a_sigma, row)

###############################################################################
# A normal subgroup stable under the action gives a six-term exact sequence
# of pointed sets.

seq = gcohom.exact_sequence(S3, rec["normal"])
for name in gcohom.TERMS:
    print(f"{name:6} size {len(seq.terms[name])}  exact: {seq.exact[name]}")
for name, m in seq.maps.items():
    print(f"{name:14} {m}")

###############################################################################
# Fibres of ``H1(B) -> H1(C)`` are controlled by twisted groups.

fib = gcohom.fiber_decomposition(S3, rec["normal"])
for e in fib.entries:
    print(f"[{e.representative}] fibre {e.fiber}, |H1(A_b)| = {e.twisted_h1_size}")

###############################################################################
# Twisting by a cocycle changes the action to ``x -> b theta(x) b^-1``.

b = gcohom.cocycles(S3)[1]
T = gcohom.twist(S3, b)
print("twisted action:", T.theta, " bijection ok:", gcohom.twist_bijection_check(S3, b))
