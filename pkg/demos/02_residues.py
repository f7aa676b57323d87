"""
Residues and their relation lattice
===================================

Residues are exact linear combinations of named symbols. Integer relations
among them are computed exactly, and a numeric LLL search proposes the same
relations from floating point values alone.
"""

import math

from logleaf.residues import (
    ResidueVector,
    SymbolBasis,
    numeric_relation_candidates,
    relation_lattice,
    residue_theorem_check,
)

basis = SymbolBasis.of("1", "sqrt2", numeric={"1": 1, "sqrt2": math.sqrt(2)})
lam = [
    ResidueVector.from_mapping(basis, {"1": 1}),
    ResidueVector.from_mapping(basis, {"sqrt2": 1}),
    ResidueVector.from_mapping(basis, {"1": -1, "sqrt2": -1}),
]
print("residues:", [str(r) for r in lam])

# Exact relations: only the sum vanishes.
print("relation lattice:", relation_lattice(lam).basis)

# The residue theorem for three hyperplanes asks that the sum vanish.
print("residue theorem:", residue_theorem_check([1, 1, 1], lam))

# The numeric search finds the same vector, flagged as heuristic.
for c in numeric_relation_candidates([r.numeric() for r in lam], 1000, 1e-9):
    print("candidate", c.vector, "residual", f"{c.residual:.1e}", "heuristic" if c.heuristic else "")

# Nothing small relates 1 and pi.
print("1, pi:", numeric_relation_candidates([1.0, math.pi], 1000, 1e-9))
