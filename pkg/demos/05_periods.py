"""
Numeric periods on a generic line
=================================

Restricting the logarithmic form to a random line turns each component into
a set of roots. A small loop around a root of D_j integrates to 2*pi*i*lambda_j,
and the loops together sum to 2*pi*i times the residue-theorem sum.
"""

import numpy as np

from logleaf.foliation import Component, FoliationSpec, Polynomial, ProjectiveSpace
from logleaf.periods import explicit_cover_check, verify_meridians
from logleaf.residues import ResidueVector, SymbolBasis

one = SymbolBasis.of("1", numeric={"1": 1})
conic = Polynomial((((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)))
x, y = Polynomial.linear([1, 0, 0]), Polynomial.linear([0, 1, 0])

comps = (
    Component("Q", 2, ResidueVector.rational(one, 1), conic),
    Component("X", 1, ResidueVector.rational(one, -1), x),
    Component("Y", 1, ResidueVector.rational(one, -1), y),
)
report = verify_meridians(FoliationSpec(ProjectiveSpace(2), comps), tolerance=1e-8, samples=1024, seed=1)
for m in report.meridians:
    print(f"{m.name} at {m.root:.3f}: {m.result.value:.8f} (error {m.result.abs_error:.1e})")
print("sum of meridians:", abs(report.global_sum))

# On C^{n+1} with the form 2*pi*i * sum lambda_j dx_j, the first integral
# pulled back through x -> exp(2*pi*i x) can be checked along any path.
path = np.array([[0, 0, 0], [0.5, 0.25, 1.0], [1, 1, 0]])
print(explicit_cover_check(3, [1, -1], path))
