"""Numeric periods of the logarithmic form.

Restricting omega = sum_j lambda_j dF_j / F_j to a generic line t -> p + t*q
gives the rational 1-form sum_j lambda_j f_j'(t) / f_j(t) dt. A small circle
around a root of f_j is a meridian of D_j, and its integral must be
2*pi*i*lambda_j. The circle integrals are computed with the trapezoid rule,
which converges geometrically for these analytic periodic integrands.

:func:`explicit_cover_check` covers the other numeric check: for coordinate
hyperplanes the map x -> [1 : exp(2 pi i x_1) : ... ] is the universal cover
of the complement, and omega pulls back to the linear form
2*pi*i * sum_j lambda_j dx_j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import (
    DegenerateLine,
    MeridianMismatch,
    MissingNumericValues,
    MissingPolynomialData,
    RootOnContour,
    ToleranceExceeded,
)
from .foliation import FoliationSpec, Polynomial
from .residues import ResidueTheoremCheck, residue_theorem_check

__all__ = [
    "LineRestriction",
    "Root",
    "LoopIntegralResult",
    "MeridianResult",
    "MeridianReport",
    "CoverCheckReport",
    "restrict_to_line",
    "integrate_loop",
    "verify_meridians",
    "explicit_cover_check",
    "covering_map",
    "DEFAULT_SAMPLES",
    "DEFAULT_TOLERANCE",
]

DEFAULT_SAMPLES = 1024
DEFAULT_TOLERANCE = 1e-6
MAX_DEGREE = 20
TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    component: int


@dataclass(frozen=True, eq=False)
class LineRestriction:
    """The divisor components pulled back along t -> base + t * direction.

    ``polys[j]`` holds the coefficients of f_j(t) in ascending order.
    ``residues`` are the numeric lambda_j, or None if the basis has no
    numeric values.
    """

    base: np.ndarray
    direction: np.ndarray
    polys: tuple[np.ndarray, ...]
    roots: tuple[Root, ...]
    residues: tuple[complex, ...] | None = None

    def form(self, t: np.ndarray) -> np.ndarray:
        """Coefficient of dt in sum_j lambda_j f_j'(t) / f_j(t)."""
        if self.residues is None:
            raise MissingNumericValues("residues have no numeric embedding")
        out = np.zeros_like(t, dtype=complex)
        for lam, c in zip(self.residues, self.polys):
            out += lam * P.polyval(t, P.polyder(c)) / P.polyval(t, c)
        return out


def polynomial_on_line(poly: Polynomial, base: np.ndarray, direction: np.ndarray) -> np.ndarray:
    """Ascending coefficients of t -> poly(base + t * direction)."""
    out = np.zeros(poly.degree + 1, dtype=complex)
    for exps, c in poly.terms:
        term = np.array([c], dtype=complex)
        for p, q, e in zip(base, direction, exps):
            if e:
                term = P.polymul(term, P.polypow([p, q], e))
        out[: len(term)] += term
    return out


def _polished_roots(coeffs: np.ndarray, steps: int = 3) -> np.ndarray:
    # np.roots takes descending coefficients and returns companion-matrix eigenvalues
    roots = np.roots(coeffs[::-1]).astype(complex)
    der = P.polyder(coeffs)
    for _ in range(steps):
        f = P.polyval(roots, coeffs)
        fp = P.polyval(roots, der)
        ok = fp != 0
        roots[ok] = roots[ok] - f[ok] / fp[ok]
    return roots


def _numeric_residues(spec: FoliationSpec) -> tuple[complex, ...] | None:
    if not spec.basis.has_numeric:
        return None
    return tuple(r.numeric() for r in spec.residues)


def restrict_to_line(spec: FoliationSpec, seed: int = 0, max_attempts: int = 64, separation: float = 1e-3) -> LineRestriction:
    """Pull the divisor back to a pseudo-random line, retrying until roots separate.

    A line is accepted when every f_j keeps its full degree d_j and all roots
    are pairwise farther apart than ``separation`` times the root-cloud
    diameter. Deterministic in ``seed``.
    """
    if not spec.is_projective:
        raise MissingPolynomialData("line restriction needs a projective ambient")
    missing = [c.name for c in spec.components if c.polynomial is None]
    if missing:
        raise MissingPolynomialData(f"components without polynomials: {missing}")
    if max(spec.degrees) > MAX_DEGREE:
        raise ValueError(f"root finding is limited to degree {MAX_DEGREE}")
    nv = spec.ambient.dim + 1
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        base = rng.standard_normal(nv) + 1j * rng.standard_normal(nv)
        direction = rng.standard_normal(nv) + 1j * rng.standard_normal(nv)
        polys = [polynomial_on_line(c.polynomial, base, direction) for c in spec.components]
        if any(abs(c[-1]) <= 1e-8 * np.max(np.abs(c)) for c in polys):
            continue
        roots = []
        for j, c in enumerate(polys):
            roots.extend(Root(complex(r), 1, j) for r in _polished_roots(c))
        pts = np.array([r.value for r in roots])
        if len(pts) > 1:
            dist = np.abs(pts[:, None] - pts[None, :])
            diameter = dist.max()
            np.fill_diagonal(dist, np.inf)
            if diameter == 0 or dist.min() <= separation * diameter:
                continue
        return LineRestriction(base, direction, tuple(polys), tuple(roots), _numeric_residues(spec))
    raise DegenerateLine(f"no line with separated roots after {max_attempts} attempts")


@dataclass(frozen=True)
class LoopIntegralResult:
    value: complex
    expected: complex
    abs_error: float
    samples: int
    radius: float
    center: complex = 0j


def integrate_loop(restriction: LineRestriction, center: complex, radius: float, samples: int = DEFAULT_SAMPLES) -> LoopIntegralResult:
    """Trapezoid rule for the restricted form around |t - center| = radius.

    Every root must stay at least radius/2 away from the circle.
    """
    if samples < 64:
        raise ValueError("need at least 64 samples")
    if not radius > 0:
        raise ValueError("radius must be positive")
    if restriction.residues is None:
        raise MissingNumericValues("residues have no numeric embedding")
    center = complex(center)
    expected = 0j
    for r in restriction.roots:
        dist = abs(r.value - center)
        if abs(dist - radius) < 0.5 * radius * (1 - 1e-12):
            raise RootOnContour(r.value, center, radius)
        if dist < radius:
            expected += r.multiplicity * restriction.residues[r.component]
    expected *= TWO_PI_I
    theta = 2 * np.pi * np.arange(samples) / samples
    w = radius * np.exp(1j * theta)
    # dt = i * w * dtheta
    value = complex(np.sum(restriction.form(center + w) * 1j * w) * (2 * np.pi / samples))
    return LoopIntegralResult(value, expected, abs(value - expected), samples, radius, center)


@dataclass(frozen=True)
class MeridianResult:
    component: int
    name: str
    root: complex
    result: LoopIntegralResult


@dataclass(frozen=True)
class MeridianReport:
    meridians: tuple[MeridianResult, ...]
    global_sum: complex
    global_expected: complex
    residue_check: ResidueTheoremCheck
    tolerance: float
    seed: int

    @property
    def worst(self) -> MeridianResult:
        return max(self.meridians, key=lambda m: m.result.abs_error)

    @property
    def global_error(self) -> float:
        return abs(self.global_sum - self.global_expected)

    @property
    def passed(self) -> bool:
        return self.worst.result.abs_error <= self.tolerance and self.global_error <= len(self.meridians) * self.tolerance

    @property
    def flags(self) -> tuple[str, ...]:
        if self.residue_check.satisfied:
            return ()
        return (
            f"sum of all meridians is {self.global_sum:.6g} ~ 2*pi*i*({self.residue_check.format()}), not 0: "
            "the residue theorem sum d_j*lambda_j = 0 fails",
        )

    def meridian_value(self, component: int) -> complex:
        """Integral around the first root of ``component`` (a meridian of D_component)."""
        return next(m.result.value for m in self.meridians if m.component == component)


def verify_meridians(
    spec: FoliationSpec,
    tolerance: float = DEFAULT_TOLERANCE,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
) -> MeridianReport:
    """Integrate around every root on a generic line and compare with 2*pi*i*lambda_j.

    Raises :class:`MeridianMismatch` if any meridian misses by more than
    ``tolerance`` or the total misses 2*pi*i*sum d_j lambda_j by more than
    (number of roots) * tolerance.
    """
    if not spec.basis.has_numeric:
        raise MissingNumericValues("period verification needs numeric values for the basis symbols")
    line = restrict_to_line(spec, seed)
    pts = [r.value for r in line.roots]
    results = []
    for idx, r in enumerate(line.roots):
        others = [abs(r.value - z) for i, z in enumerate(pts) if i != idx]
        radius = 0.45 * min(others) if others else 1.0
        res = integrate_loop(line, r.value, radius, samples)
        results.append(MeridianResult(r.component, spec.components[r.component].name, r.value, res))
    check = residue_theorem_check(spec.degrees, spec.residues)
    lam = line.residues
    global_expected = TWO_PI_I * sum(d * l for d, l in zip(spec.degrees, lam))
    report = MeridianReport(
        tuple(results),
        complex(math.fsum(m.result.value.real for m in results), math.fsum(m.result.value.imag for m in results)),
        global_expected,
        check,
        tolerance,
        seed,
    )
    if not report.passed:
        raise MeridianMismatch(report, report.worst)
    return report


# --------------------------------------------------------------------------
# explicit universal cover of the complement of coordinate hyperplanes


def covering_map(x: np.ndarray, k: int) -> np.ndarray:
    """Affine coordinates of [1 : e^{2 pi i x_1} : ... : e^{2 pi i x_k} : x_{k+1} : ...]."""
    x = np.asarray(x, dtype=complex)
    z = x.copy()
    z[..., :k] = np.exp(TWO_PI_I * x[..., :k])
    return z


@dataclass(frozen=True)
class CoverCheckReport:
    value: complex
    expected: complex
    abs_error: float
    linearity_error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return max(self.abs_error, self.linearity_error) <= self.tolerance


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(40)


def _pushforward_integral(a: np.ndarray, b: np.ndarray, lam: np.ndarray, h: float = 1e-3) -> complex:
    """Integral of sum_j lam_j dz_j / z_j along s -> covering_map(a + s (b - a)), s in [0, 1].

    The velocity of the image curve is taken by a five-point stencil on the
    covering map itself.
    """
    k = len(lam)
    s = 0.5 * (_GL_NODES + 1)

    def curve(t):
        return covering_map(a[None, :] + t[:, None] * (b - a)[None, :], k)[:, :k]

    vel = (-curve(s + 2 * h) + 8 * curve(s + h) - 8 * curve(s - h) + curve(s - 2 * h)) / (12 * h)
    integrand = (vel / curve(s)) @ lam
    return complex(0.5 * np.sum(_GL_WEIGHTS * integrand))


def explicit_cover_check(
    dim: int,
    residues: Sequence[complex],
    path: Sequence[Sequence[complex]],
    tolerance: float = 1e-8,
) -> CoverCheckReport:
    """Integrate omega along the image of a polyline under the universal cover.

    ``residues`` are lambda_1..lambda_k on the hyperplanes z_1..z_k (the
    residue on z_0 = 0 is minus their sum). ``path`` is a polyline in
    C^dim. The result is compared with the closed form
    g(end) - g(start), g(x) = 2*pi*i * sum_j lambda_j x_j, and the running
    integral is checked against g at every vertex.

    Raises :class:`ToleranceExceeded` on failure.
    """
    lam = np.asarray(residues, dtype=complex)
    k = len(lam)
    if not 1 <= k <= dim:
        raise ValueError(f"need between 1 and {dim} residues, got {k}")
    pts = [np.asarray(p, dtype=complex) for p in path]
    if len(pts) < 2 or any(p.shape != (dim,) for p in pts):
        raise ValueError(f"path needs at least two points in C^{dim}")

    def g(x):
        return complex(TWO_PI_I * np.dot(lam, x[:k]))

    running = 0j
    lin_err = 0.0
    for a, b in zip(pts, pts[1:]):
        pieces = max(1, math.ceil(np.linalg.norm(b - a) / 0.25))
        for i in range(pieces):
            running += _pushforward_integral(a + (b - a) * i / pieces, a + (b - a) * (i + 1) / pieces, lam)
        lin_err = max(lin_err, abs(running - (g(b) - g(pts[0]))))
    expected = g(pts[-1]) - g(pts[0])
    report = CoverCheckReport(running, expected, abs(running - expected), lin_err, tolerance)
    if not report.passed:
        raise ToleranceExceeded(report)
    return report
