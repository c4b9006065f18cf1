"""
H^1 of Z/2 acting on Z^k
========================

For an integer involution ``M`` the cohomology is ``ker(I + M) / im(M - I)``,
computed with the Smith normal form.  A brute-force count over a box of
lattice points checks it.
"""

from realforms import gcohom, zcohom

examples = {
    "sign": [[-1]],
    "swap": [[0, 1], [1, 0]],
    "diag(1,-1)": [[1, 0], [0, -1]],
    "skew": [[-1, 0, 0], [0, -1, 0], [0, -4, 1]],
}
for name, M in examples.items():
    mod = zcohom.InvolutionModule.from_matrix(M)
    H = zcohom.h1_abelian(mod)
    B = zcohom.h1_abelian_bruteforce(mod, box=4)
    print(f"{name:11} H1 = {H.invariant_factors or '0'}  order {H.order}"
          f"  brute force {B.order}  H0 rank {zcohom.h0_abelian(mod)}")

###############################################################################
# Free products of copies of Z: H^1 is the wedge (pushout) of the factors'
# pointed sets.  Each factor is computed by the abelian routine above.

for signs in ([-1, -1], [1, 1, 1], [-1, 1, -1]):
    P = gcohom.h1_free_product_pushout(signs)
    print(signs, "->", len(P), "classes:", P.elements)
