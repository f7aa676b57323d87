"""Exception hierarchy.

The CLI maps each family to an exit code: ``SpecError`` -> 1,
``ComputationError`` -> 2, ``OracleToleranceError`` -> 3.
"""


class LogLeafError(Exception):
    """Base class for every error raised by this package."""


class SpecError(LogLeafError, ValueError):
    """Invalid input document. ``errors`` holds ``(field_path, message)`` pairs."""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [("", errors)]
        self.errors = list(errors)
        super().__init__("; ".join(f"{p}: {m}" if p else m for p, m in self.errors))


class ParseError(SpecError):
    pass


class SpecValidationError(SpecError):
    pass


class ComputationError(LogLeafError):
    pass


class SubNotContained(ComputationError, ValueError):
    def __init__(self, vector):
        self.vector = tuple(vector)
        super().__init__(f"sublattice generator {self.vector} is not in the ambient lattice")


class MixedBases(ComputationError, ValueError):
    pass


class UnsupportedAmbient(ComputationError):
    pass


class DimensionTooLow(ComputationError):
    pass


class DegreeVectorNotInKernel(ComputationError):
    """The degree vector is not an integer relation among the residues.

    ``residue_sum`` is the exact value of sum_j d_j * lambda_j, given as the
    ``ResidueTheoremCheck`` that detected it.
    """

    def __init__(self, degrees, check):
        self.degrees = tuple(degrees)
        self.check = check
        super().__init__(
            f"degree vector {self.degrees} is not in the relation lattice: "
            f"sum d_j*lambda_j = {check.format()} != 0, so no closed logarithmic "
            "1-form with these residues exists on projective space"
        )


class MissingPolynomialData(ComputationError):
    pass


class MissingNumericValues(ComputationError):
    pass


class DegenerateLine(ComputationError):
    pass


class RootOnContour(ComputationError):
    def __init__(self, root, center, radius):
        self.root, self.center, self.radius = root, center, radius
        super().__init__(
            f"root {root:.6g} lies within the contour margin of circle |t - {center:.6g}| = {radius:.6g}"
        )


class OracleToleranceError(LogLeafError):
    pass


class MeridianMismatch(OracleToleranceError):
    def __init__(self, report, worst):
        self.report = report
        self.worst = worst
        super().__init__(
            f"meridian around root {worst.root:.6g} of component {worst.component} "
            f"misses 2*pi*i*lambda by {worst.result.abs_error:.3e}"
        )


class ToleranceExceeded(OracleToleranceError):
    def __init__(self, report):
        self.report = report
        super().__init__(
            f"explicit cover integral off by {report.abs_error:.3e} "
            f"(linearity error {report.linearity_error:.3e}, tolerance {report.tolerance:.1e})"
        )
