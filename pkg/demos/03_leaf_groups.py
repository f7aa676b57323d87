"""
Fundamental groups of leaves
============================

For a logarithmic foliation on projective space the leaf group is the
relation lattice of the residues modulo the degree vector, and the
complement group is the free group on the components modulo the same vector.
"""

from logleaf.foliation import FoliationSpec, complement_pi1, leaf_pi1, resonance_classify
from logleaf.residues import ResidueVector, SymbolBasis

one = SymbolBasis.of("1")


def residues(*values):
    return [ResidueVector.rational(one, v) for v in values]


# The pencil f^a / g^b with two hypersurfaces of degree d: pi_1(L) = Z/d.
for d in (1, 2, 3, 6):
    spec = FoliationSpec.projective(3, [d, d], residues(1, -1))
    print(f"d = {d}: leaf {leaf_pi1(spec)}, complement {complement_pi1(spec)}")

# Three planes with residues (1, 1, -2) are resonant: (1, -1, 0) is a relation
# that is not a multiple of the degree vector, and the leaf group is free.
spec = FoliationSpec.projective(3, [1, 1, 1], residues(1, 1, -2))
print("resonance:", resonance_classify(spec))
print("leaf group:", leaf_pi1(spec))
