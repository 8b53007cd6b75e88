"""Exact Galois cohomology of real reductive groups.

Computes H^1(R, G), the component group pi_0 G(R), Tate cohomology of
Gamma-modules and hypercohomology of short complexes, and the cohomology
of tori and quasi-tori, for groups given combinatorially by a based root
datum, an involution, and a Kac labeling.  All arithmetic is exact.
"""

__version__ = "0.1.0"
