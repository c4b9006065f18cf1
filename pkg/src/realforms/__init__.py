"""Exact lattice and Galois-cohomology computations for real forms of rational surfaces.

Modules:

* ``piclattice`` -- Picard lattice of the blown-up plane, roots, (-1)-classes
* ``weyl`` -- reflections, Weyl group order, Dynkin diagrams
* ``spectral`` -- characteristic polynomials, certified spectral radius, entropy
* ``gcohom`` -- non-abelian H^1(Z/2, A) for finite A, exact sequences, twisting
* ``zcohom`` -- H^0 and H^1 of Z/2 acting on Z^k
"""
__version__ = "0.1.0"
