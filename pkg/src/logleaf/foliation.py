"""Fundamental groups and connectivity of generic leaves.

A logarithmic foliation on P^{n+1} is described by its polar divisor
D = D_0 + ... + D_k (component degrees d_j) and the residues lambda_j of the
defining closed 1-form along each D_j. For an SNC ample D and a generic
leaf L:

* pi_1(P^{n+1} - D) = Z^{k+1} / Z(d_0, ..., d_k);
* pi_1(L) = K / Z(d_0, ..., d_k), where K is the lattice of integer
  relations among the residues;
* pi_l(L) -> pi_l(P^{n+1} - D) is an isomorphism for 1 < l < n and onto
  for l = n;
* for a hyperplane arrangement the groups pi_l(L), 1 < l < n, vanish.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from math import gcd
from functools import reduce
from typing import Sequence

from .errors import DegreeVectorNotInKernel, DimensionTooLow, UnsupportedAmbient
from .lattice import AbelianGroupInvariants, Lattice, lattice_contains, lattice_quotient, lll_reduce, primitive
from .residues import ResidueVector, SymbolBasis, relation_lattice, residue_theorem_check

__all__ = [
    "ProjectiveSpace",
    "CompleteIntersectionAmbient",
    "Polynomial",
    "Component",
    "FoliationSpec",
    "Resonance",
    "LevelStatus",
    "ConnectivityReport",
    "HyperplaneSectionReport",
    "ASSUMPTIONS",
    "MAX_COMPONENTS",
    "complement_pi1",
    "leaf_pi1",
    "resonance_classify",
    "connectivity_report",
    "hyperplane_section_report",
    "spec_warnings",
]

MAX_COMPONENTS = 64

ASSUMPTIONS = (
    "the polar divisor D has simple normal crossings",
    "D is ample",
    "the leaf is generic",
    "the basis symbols are linearly independent over Q",
)

HEADLINE_HIGHLY_CONNECTED = "(n-1)-connected"
HEADLINE_SIMPLY_CONNECTED = "simply-connected"


@dataclass(frozen=True)
class ProjectiveSpace:
    dim: int  # n + 1

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("ambient dimension n+1 must be at least 2")


@dataclass(frozen=True)
class CompleteIntersectionAmbient:
    """A complete intersection X^{n+1} in P^N cut out by hypersurfaces of the given degrees."""

    N: int
    multidegree: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "multidegree", tuple(self.multidegree))
        if any(e < 1 for e in self.multidegree):
            raise ValueError("multidegree entries must be positive")
        if self.dim < 2:
            raise ValueError("ambient dimension n+1 must be at least 2")

    @property
    def dim(self) -> int:
        return self.N - len(self.multidegree)


@dataclass(frozen=True)
class Polynomial:
    """Homogeneous polynomial as ``((exponents, coefficient), ...)``."""

    terms: tuple[tuple[tuple[int, ...], complex], ...]

    def __post_init__(self):
        terms = tuple((tuple(int(e) for e in exps), complex(c)) for exps, c in self.terms)
        if not terms:
            raise ValueError("polynomial has no terms")
        nv = len(terms[0][0])
        if any(len(exps) != nv for exps, _ in terms):
            raise ValueError("terms use different numbers of variables")
        if any(e < 0 for exps, _ in terms for e in exps):
            raise ValueError("negative exponent")
        degs = {sum(exps) for exps, c in terms if c}
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        if not degs:
            raise ValueError("polynomial is zero")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def linear(cls, coefficients: Sequence[complex]) -> Polynomial:
        n = len(coefficients)
        return cls(tuple(
            (tuple(int(i == j) for j in range(n)), c) for i, c in enumerate(coefficients) if c
        ))

    @property
    def nvars(self) -> int:
        return len(self.terms[0][0])

    @property
    def degree(self) -> int:
        return next(sum(exps) for exps, c in self.terms if c)

    def __call__(self, point: Sequence[complex]) -> complex:
        total = 0j
        for exps, c in self.terms:
            t = c
            for x, e in zip(point, exps):
                if e:
                    t *= x**e
            total += t
        return total


@dataclass(frozen=True)
class Component:
    name: str
    degree: int
    residue: ResidueVector
    polynomial: Polynomial | None = None

    def __post_init__(self):
        if isinstance(self.degree, bool) or not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"component {self.name!r}: degree must be an integer >= 1")
        if self.polynomial is not None and self.polynomial.degree != self.degree:
            raise ValueError(
                f"component {self.name!r}: polynomial has degree {self.polynomial.degree}, expected {self.degree}"
            )


@dataclass(frozen=True)
class FoliationSpec:
    """Ambient space, polar divisor components and their residues."""

    ambient: ProjectiveSpace | CompleteIntersectionAmbient
    components: tuple[Component, ...]
    strict: bool = False

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not 1 <= len(comps) <= MAX_COMPONENTS:
            raise ValueError(f"need between 1 and {MAX_COMPONENTS} divisor components")
        basis = comps[0].residue.basis
        if any(c.residue.basis != basis for c in comps):
            raise ValueError("all residues must be declared over the same symbol basis")
        if isinstance(self.ambient, CompleteIntersectionAmbient):
            if any(c.degree != 1 for c in comps):
                raise ValueError("on a complete intersection every component must be a hyperplane section (degree 1)")
            if any(c.polynomial is not None for c in comps):
                raise ValueError("polynomials are only supported on projective space")
        else:
            for c in comps:
                if c.polynomial is not None and c.polynomial.nvars != self.ambient.dim + 1:
                    raise ValueError(
                        f"component {c.name!r}: polynomial in {c.polynomial.nvars} variables, "
                        f"P^{self.ambient.dim} needs {self.ambient.dim + 1}"
                    )

    @classmethod
    def projective(
        cls,
        dim: int,
        degrees: Sequence[int],
        residues: Sequence[ResidueVector],
        polynomials: Sequence[Polynomial | None] | None = None,
        strict: bool = False,
    ) -> FoliationSpec:
        """Shorthand: components named D0, D1, ... on P^dim."""
        if len(degrees) != len(residues):
            raise ValueError("degrees and residues differ in length")
        polys = list(polynomials) if polynomials is not None else [None] * len(degrees)
        comps = tuple(Component(f"D{j}", d, r, p) for j, (d, r, p) in enumerate(zip(degrees, residues, polys)))
        return cls(ProjectiveSpace(dim), comps, strict)

    @property
    def n(self) -> int:
        """Leaf dimension: the ambient has dimension n + 1."""
        return self.ambient.dim - 1

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    @property
    def residues(self) -> tuple[ResidueVector, ...]:
        return tuple(c.residue for c in self.components)

    @property
    def basis(self) -> SymbolBasis:
        return self.components[0].residue.basis

    @property
    def is_projective(self) -> bool:
        return isinstance(self.ambient, ProjectiveSpace)

    @property
    def is_arrangement(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def with_dim(self, dim: int) -> FoliationSpec:
        """Same divisor data on P^dim. Polynomials are dropped (their variable count changes)."""
        comps = tuple(replace(c, polynomial=None) for c in self.components)
        return FoliationSpec(ProjectiveSpace(dim), comps, self.strict)


def spec_warnings(spec: FoliationSpec) -> list[str]:
    """Conditions that make the computed groups unjustified, though still computable."""
    out = []
    check = residue_theorem_check(spec.degrees, spec.residues)
    if not check.satisfied:
        out.append(
            f"sum d_j*lambda_j = {check.format()} != 0: no closed logarithmic 1-form with these "
            "residues exists on projective space"
        )
    if spec.n < 2:
        out.append(
            f"n = {spec.n}: the leaf theorem needs n > 1, so the leaf group is the kernel of the "
            "period map, not a proven pi_1(L)"
        )
    return out


def _require_projective(spec: FoliationSpec, what: str) -> None:
    if not spec.is_projective:
        raise UnsupportedAmbient(f"{what} is only computed for projective space ambients")


def complement_pi1(spec: FoliationSpec) -> AbelianGroupInvariants:
    """pi_1(P^{n+1} - D) = Z^{k+1} / Z(d_0, ..., d_k)."""
    _require_projective(spec, "pi_1 of the complement")
    k1 = len(spec.components)
    return lattice_quotient(Lattice.full(k1), Lattice.from_generators([spec.degrees]))


def _kernel_with_degrees(spec: FoliationSpec) -> Lattice:
    lat = relation_lattice(spec.residues)
    if not lattice_contains(lat, spec.degrees):
        raise DegreeVectorNotInKernel(spec.degrees, residue_theorem_check(spec.degrees, spec.residues))
    return lat


def leaf_pi1(spec: FoliationSpec) -> AbelianGroupInvariants:
    """pi_1 of a generic leaf: K / Z(d_0, ..., d_k).

    Raises :class:`DegreeVectorNotInKernel` when sum d_j lambda_j != 0.
    """
    _require_projective(spec, "pi_1 of the leaf")
    lat = _kernel_with_degrees(spec)
    return lattice_quotient(lat, Lattice.from_generators([spec.degrees]))


@dataclass(frozen=True)
class Resonance:
    resonant: bool
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        return f"resonant (witness {self.witness})" if self.resonant else "non-resonant"


def resonance_classify(spec: FoliationSpec) -> Resonance:
    """Non-resonant iff every integer relation is a multiple of d / gcd(d).

    The witness of a resonance is the shortest vector outside Z(d / gcd(d))
    in an LLL-reduced basis of the relation lattice.
    """
    _require_projective(spec, "resonance")
    lat = _kernel_with_degrees(spec)
    g = reduce(gcd, spec.degrees)
    reduced = Lattice.from_generators([[d // g for d in spec.degrees]])
    outside = [b for b in lll_reduce(lat.basis) if not lattice_contains(reduced, b)]
    if not outside:
        return Resonance(False)
    witness = min(outside, key=lambda b: (sum(x * x for x in b), primitive(b)))
    return Resonance(True, primitive(witness))


class LevelStatus(enum.Enum):
    ZERO = "zero"
    ISO_TO_COMPLEMENT = "iso-to-complement"
    EPI_FROM_LEAF_AT_N = "epi-from-leaf-at-n"


@dataclass(frozen=True)
class ConnectivityReport:
    """What is known about pi_l(L) for l = 1..n.

    ``higher[l]`` for 2 <= l < n is ZERO (hyperplane arrangements) or
    ISO_TO_COMPLEMENT; ``higher[n]`` is EPI_FROM_LEAF_AT_N: pi_n(L) maps onto
    pi_n of the complement, nothing more is claimed.
    """

    n: int
    pi1_leaf: AbelianGroupInvariants | None
    resonance: Resonance | None
    higher: dict[int, LevelStatus]
    headline: str | None
    assumptions: tuple[str, ...] = ASSUMPTIONS
    caveats: tuple[str, ...] = field(default=())

    @property
    def connectivity(self) -> int | None:
        """The integer c such that the leaf is c-connected, when the headline says so."""
        if self.headline == HEADLINE_HIGHLY_CONNECTED:
            return self.n - 1
        if self.headline == HEADLINE_SIMPLY_CONNECTED:
            return 1
        return None


def connectivity_report(spec: FoliationSpec) -> ConnectivityReport:
    n = spec.n
    caveats = []
    higher = {}
    for l in range(2, n):
        higher[l] = LevelStatus.ZERO if spec.is_arrangement else LevelStatus.ISO_TO_COMPLEMENT
    if n >= 2:
        higher[n] = LevelStatus.EPI_FROM_LEAF_AT_N

    if not spec.is_projective:
        caveats.append("pi_1 of the leaf is not computed on a complete intersection ambient")
        return ConnectivityReport(n, None, None, higher, None, ASSUMPTIONS, tuple(caveats))

    pi1 = leaf_pi1(spec)
    res = resonance_classify(spec)
    headline = None
    if n < 2:
        caveats.append(
            "n = 1: the leaf theorem needs n > 1; pi1_leaf is the kernel of the period map "
            "restricted to pi_1 of the complement, not a proven pi_1(L)"
        )
    elif spec.is_arrangement and not res.resonant:
        headline = HEADLINE_HIGHLY_CONNECTED
    elif pi1.is_trivial:
        headline = HEADLINE_SIMPLY_CONNECTED
    return ConnectivityReport(n, pi1, res, higher, headline, ASSUMPTIONS, tuple(caveats))


@dataclass(frozen=True)
class HyperplaneSectionReport:
    """pi_l(L cap H) -> pi_l(L) is an isomorphism for l < iso_below and onto at l = epi_level."""

    n: int
    iso_below: int
    epi_level: int
    pi1_leaf: AbelianGroupInvariants
    pi1_section: AbelianGroupInvariants
    guaranteed: bool
    notes: tuple[str, ...] = ()

    @property
    def match(self) -> bool:
        return self.pi1_leaf == self.pi1_section


def hyperplane_section_report(spec: FoliationSpec) -> HyperplaneSectionReport:
    """Compare the leaf group with that of its section by a general hyperplane."""
    _require_projective(spec, "the hyperplane section report")
    n = spec.n
    if n < 2:
        raise DimensionTooLow(f"hyperplane sections need n >= 2, got n = {n}")
    pi1 = leaf_pi1(spec)
    pi1_h = leaf_pi1(spec.with_dim(spec.ambient.dim - 1))
    guaranteed = n - 1 > 1
    notes = []
    if guaranteed:
        notes.append(f"pi_1 of the section is isomorphic to pi_1(L) since 1 < n - 1 = {n - 1}")
    else:
        notes.append("n - 1 = 1: only surjectivity pi_1(L cap H) -> pi_1(L) is guaranteed")
    if guaranteed and pi1 != pi1_h:
        notes.append("MISMATCH between the section group and the leaf group")
    return HyperplaneSectionReport(n, n - 1, n - 1, pi1, pi1_h, guaranteed, tuple(notes))
