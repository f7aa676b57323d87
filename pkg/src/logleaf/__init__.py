"""Topology of generic leaves of logarithmic foliations on projective space.

Exact lattice algebra computes pi_1 of the complement of the polar divisor,
pi_1 of a generic leaf and the resonance class of the residues; a numeric
period oracle cross-checks the residues by contour integration.
"""

__version__ = "0.1.0"

from .errors import (
    ComputationError,
    DegenerateLine,
    DegreeVectorNotInKernel,
    DimensionTooLow,
    LogLeafError,
    MeridianMismatch,
    MissingNumericValues,
    MissingPolynomialData,
    MixedBases,
    OracleToleranceError,
    ParseError,
    RootOnContour,
    SpecError,
    SpecValidationError,
    SubNotContained,
    ToleranceExceeded,
    UnsupportedAmbient,
)
from .foliation import (
    ASSUMPTIONS,
    CompleteIntersectionAmbient,
    Component,
    ConnectivityReport,
    FoliationSpec,
    HyperplaneSectionReport,
    LevelStatus,
    Polynomial,
    ProjectiveSpace,
    Resonance,
    complement_pi1,
    connectivity_report,
    hyperplane_section_report,
    leaf_pi1,
    resonance_classify,
)
from .lattice import (
    AbelianGroupInvariants,
    IntegerMatrix,
    Lattice,
    RationalMatrix,
    SmithDecomposition,
    hnf,
    integer_kernel,
    lattice_contains,
    lattice_quotient,
    snf,
)
from .periods import explicit_cover_check, integrate_loop, restrict_to_line, verify_meridians
from .residues import (
    RelationCandidate,
    ResidueVector,
    SymbolBasis,
    numeric_relation_candidates,
    relation_lattice,
    residue_theorem_check,
)
from .spec_io import dump_spec, load_spec, parse_spec

__all__ = [
    "__version__",
    "ComputationError",
    "DegenerateLine",
    "DegreeVectorNotInKernel",
    "DimensionTooLow",
    "LogLeafError",
    "MeridianMismatch",
    "MissingNumericValues",
    "MissingPolynomialData",
    "MixedBases",
    "OracleToleranceError",
    "ParseError",
    "RootOnContour",
    "SpecError",
    "SpecValidationError",
    "SubNotContained",
    "ToleranceExceeded",
    "UnsupportedAmbient",
    "ASSUMPTIONS",
    "CompleteIntersectionAmbient",
    "Component",
    "ConnectivityReport",
    "FoliationSpec",
    "HyperplaneSectionReport",
    "LevelStatus",
    "Polynomial",
    "ProjectiveSpace",
    "Resonance",
    "complement_pi1",
    "connectivity_report",
    "hyperplane_section_report",
    "leaf_pi1",
    "resonance_classify",
    "AbelianGroupInvariants",
    "IntegerMatrix",
    "Lattice",
    "RationalMatrix",
    "SmithDecomposition",
    "hnf",
    "integer_kernel",
    "lattice_contains",
    "lattice_quotient",
    "snf",
    "explicit_cover_check",
    "integrate_loop",
    "restrict_to_line",
    "verify_meridians",
    "RelationCandidate",
    "ResidueVector",
    "SymbolBasis",
    "numeric_relation_candidates",
    "relation_lattice",
    "residue_theorem_check",
    "dump_spec",
    "load_spec",
    "parse_spec",
]
