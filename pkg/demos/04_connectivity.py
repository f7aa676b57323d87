"""
Higher connectivity and hyperplane sections
===========================================

With all degrees equal to one and non-resonant residues the leaves are
(n-1)-connected. Cutting by a generic hyperplane does not change pi_1 as
long as the leaf dimension stays above two.
"""

import math

from logleaf.foliation import FoliationSpec, connectivity_report, hyperplane_section_report
from logleaf.residues import ResidueVector, SymbolBasis

basis = SymbolBasis.of("1", "sqrt2", numeric={"1": 1, "sqrt2": math.sqrt(2)})
lam = [
    ResidueVector.from_mapping(basis, {"1": 1}),
    ResidueVector.from_mapping(basis, {"sqrt2": 1}),
    ResidueVector.from_mapping(basis, {"1": -1, "sqrt2": -1}),
]

for dim in (3, 4, 5):
    rep = connectivity_report(FoliationSpec.projective(dim, [1, 1, 1], lam))
    levels = ", ".join(f"pi_{l}: {s.value}" for l, s in sorted(rep.higher.items()))
    print(f"P^{dim}: n = {rep.n}, {rep.headline}; {levels}")

sec = hyperplane_section_report(FoliationSpec.projective(5, [2, 2], [
    ResidueVector.from_mapping(basis, {"1": 1}),
    ResidueVector.from_mapping(basis, {"1": -1}),
]))
print("section pi_1:", sec.pi1_section, "leaf pi_1:", sec.pi1_leaf, "match:", sec.match)
