"""
Integer lattices and their quotients
====================================

Hermite and Smith normal forms, integer kernels and the invariant
factors of a quotient of lattices.
"""

from logleaf.lattice import IntegerMatrix, Lattice, hnf, integer_kernel, lattice_quotient, lll_reduce, snf

# A 3x3 integer matrix and its Hermite normal form. U is unimodular and U @ A == H.
A = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
H, U = hnf(A)
print("H =", H.to_rows())
print("U @ A == H:", U @ A == H)

# Smith form: the diagonal is the chain of invariant factors d1 | d2 | d3.
dec = snf(A)
print("invariant factors:", dec.diagonal)

# The integer kernel of a matrix is a saturated lattice.
K = integer_kernel(IntegerMatrix.from_rows([[1], [1], [-2]]))
print("kernel basis:", K.basis)

# Z^2 modulo the lattice spanned by (2, 0) and (0, 3) is cyclic of order 6.
q = lattice_quotient(Lattice.full(2), Lattice.from_generators([[2, 0], [0, 3]]))
print("Z^2 / <(2,0), (0,3)> =", q)

# LLL gives short vectors of the same lattice.
print("LLL:", lll_reduce([[1, 1, 1], [0, 2, 1]]))
