"""Residues as exact rational coordinates over a symbol basis.

A residue lambda_j is written as sum_s c_s * s over user-declared symbols
("1", "sqrt2", "pi", ...), which the caller asserts are linearly independent
over Q. Under that assumption every integer relation sum_j m_j lambda_j = 0
is an exact linear condition on the coordinates.

When only floating values are available, :func:`numeric_relation_candidates`
searches for small relations by lattice reduction. That search is heuristic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import MixedBases
from .lattice import Lattice, RationalMatrix, integer_kernel, lll_reduce, primitive

__all__ = [
    "SymbolBasis",
    "ResidueVector",
    "RelationCandidate",
    "ResidueTheoremCheck",
    "relation_lattice",
    "numeric_relation_candidates",
    "residue_theorem_check",
    "format_combination",
    "DEFAULT_HEIGHT_BOUND",
]

DEFAULT_HEIGHT_BOUND = 10**6


def _complex(x) -> complex:
    if isinstance(x, str):
        return complex(x.replace(" ", ""))
    if isinstance(x, (list, tuple)):
        re, im = x
        return complex(float(re), float(im))
    return complex(x)


@dataclass(frozen=True)
class SymbolBasis:
    """Ordered symbol names, optionally with a numeric value for each."""

    symbols: tuple[str, ...]
    numeric_values: tuple[complex, ...] | None = None

    def __post_init__(self):
        symbols = tuple(self.symbols)
        if not symbols:
            raise ValueError("symbol basis is empty")
        if any(not isinstance(s, str) or not s for s in symbols):
            raise ValueError("symbol names must be nonempty strings")
        if len(set(symbols)) != len(symbols):
            raise ValueError("symbol names must be unique")
        object.__setattr__(self, "symbols", symbols)
        if self.numeric_values is not None:
            values = tuple(_complex(v) for v in self.numeric_values)
            if len(values) != len(symbols):
                raise ValueError("need exactly one numeric value per symbol")
            if not all(cmath.isfinite(v) for v in values):
                raise ValueError("numeric values must be finite")
            if "1" in symbols and values[symbols.index("1")] != 1:
                raise ValueError('symbol "1" must have numeric value 1')
            object.__setattr__(self, "numeric_values", values)

    @classmethod
    def of(cls, *symbols: str, numeric: Mapping[str, object] | None = None) -> SymbolBasis:
        """``SymbolBasis.of("1", "sqrt2", numeric={"1": 1, "sqrt2": 2**0.5})``"""
        if numeric is None:
            return cls(tuple(symbols))
        missing = [s for s in symbols if s not in numeric]
        if missing:
            raise ValueError(f"no numeric value for symbols {missing}")
        extra = [s for s in numeric if s not in symbols]
        if extra:
            raise ValueError(f"numeric values given for unknown symbols {extra}")
        return cls(tuple(symbols), tuple(numeric[s] for s in symbols))

    @property
    def has_numeric(self) -> bool:
        return self.numeric_values is not None

    def __len__(self) -> int:
        return len(self.symbols)


def format_combination(basis: SymbolBasis, coords: Sequence[Fraction]) -> str:
    """Human form of sum_s c_s * s, e.g. ``1 - 1/2*sqrt2``."""
    out = ""
    for sym, c in zip(basis.symbols, coords):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if sym == "1":
            term = str(mag)
        elif mag == 1:
            term = sym
        else:
            term = f"{mag}*{sym}"
        if not out:
            out = term if sign == "+" else f"-{term}"
        else:
            out += f" {sign} {term}"
    return out or "0"


@dataclass(frozen=True)
class ResidueVector:
    """One residue lambda_j = sum_s coords[s] * s. Never zero."""

    basis: SymbolBasis
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != len(self.basis):
            raise ValueError("coordinate count does not match the basis")
        if not any(coords):
            raise ValueError("residue must be nonzero (residues lie in C*)")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_mapping(cls, basis: SymbolBasis, coords: Mapping[str, object]) -> ResidueVector:
        unknown = [s for s in coords if s not in basis.symbols]
        if unknown:
            raise ValueError(f"unknown symbols {unknown}")
        return cls(basis, tuple(Fraction(coords.get(s, 0)) for s in basis.symbols))

    @classmethod
    def rational(cls, basis: SymbolBasis, value) -> ResidueVector:
        """A residue that is a plain rational number (needs the symbol "1")."""
        return cls.from_mapping(basis, {"1": value})

    def as_mapping(self) -> dict[str, Fraction]:
        return {s: c for s, c in zip(self.basis.symbols, self.coords) if c}

    def numeric(self) -> complex:
        if self.basis.numeric_values is None:
            raise ValueError("symbol basis carries no numeric values")
        return sum((float(c) * v for c, v in zip(self.coords, self.basis.numeric_values)), 0j)

    def scaled(self, factor) -> ResidueVector:
        factor = Fraction(factor)
        return ResidueVector(self.basis, tuple(c * factor for c in self.coords))

    def __str__(self) -> str:
        return format_combination(self.basis, self.coords)


def _shared_basis(residues: Sequence[ResidueVector]) -> SymbolBasis:
    if not residues:
        raise ValueError("need at least one residue")
    basis = residues[0].basis
    for r in residues[1:]:
        if r.basis != basis:
            raise MixedBases("residues are declared over different symbol bases")
    return basis


def relation_lattice(residues: Sequence[ResidueVector]) -> Lattice:
    """The lattice of all m in Z^{k+1} with sum_j m_j * lambda_j = 0.

    Exact, assuming the basis symbols are Q-linearly independent.

    >>> b = SymbolBasis.of("1", "sqrt2")
    >>> lam = [ResidueVector.from_mapping(b, c) for c in ({"1": 1}, {"sqrt2": 1}, {"1": -1, "sqrt2": -1})]
    >>> relation_lattice(lam).basis
    ((1, 1, 1),)
    """
    basis = _shared_basis(residues)
    coords = RationalMatrix.from_rows([r.coords for r in residues], len(basis))
    return integer_kernel(coords.clear_column_denominators())


@dataclass(frozen=True)
class ResidueTheoremCheck:
    """Exact value of sum_j d_j * lambda_j in basis coordinates."""

    basis: SymbolBasis
    value: tuple[Fraction, ...]

    @property
    def satisfied(self) -> bool:
        return not any(self.value)

    def numeric(self) -> complex:
        if self.basis.numeric_values is None:
            raise ValueError("symbol basis carries no numeric values")
        return sum((float(c) * v for c, v in zip(self.value, self.basis.numeric_values)), 0j)

    def format(self) -> str:
        return format_combination(self.basis, self.value)

    def __str__(self) -> str:
        return "satisfied" if self.satisfied else f"violated(value = {self.format()})"


def residue_theorem_check(degrees: Sequence[int], residues: Sequence[ResidueVector]) -> ResidueTheoremCheck:
    """Evaluate sum_j d_j * lambda_j exactly.

    On projective space a closed logarithmic 1-form with these residues exists
    only if the sum vanishes.
    """
    if len(degrees) != len(residues):
        raise ValueError("degrees and residues differ in length")
    basis = _shared_basis(residues)
    value = tuple(
        sum((d * r.coords[s] for d, r in zip(degrees, residues)), Fraction(0)) for s in range(len(basis))
    )
    return ResidueTheoremCheck(basis, value)


@dataclass(frozen=True)
class RelationCandidate:
    """An integer vector m with |sum_j m_j * value_j| below the search tolerance.

    Found numerically: nothing certifies that it is an exact relation, nor
    that the search found every relation.
    """

    vector: tuple[int, ...]
    residual: float
    height: int
    heuristic: bool = True


def _residual(m: Sequence[int], values: Sequence[complex]) -> float:
    re = math.fsum(c * v.real for c, v in zip(m, values))
    im = math.fsum(c * v.imag for c, v in zip(m, values))
    return math.hypot(re, im)


def numeric_relation_candidates(
    values: Sequence[complex],
    height_bound: int | None = None,
    epsilon: float | None = None,
) -> list[RelationCandidate]:
    """Small integer relations among floating values, by LLL.

    The rows ``[e_j | N*Re(v_j) | N*Im(v_j)]`` (with ``N = 1/epsilon``, tails
    rounded to integers) span a lattice whose short vectors are near-relations.
    Every reduced row whose first block has residual <= epsilon and height
    <= height_bound is kept. Those rows are part of a unimodular basis of
    Z^{k+1}, so they span a saturated lattice; its canonical HNF basis is
    returned too, made primitive and filtered by the same bounds.

    Defaults: ``epsilon = 1e-10 * max|v_j|`` and ``height_bound = 10**6``.
    Returns an empty list if no relation passes the bounds.
    """
    vals = [complex(v) for v in values]
    if not vals:
        raise ValueError("need at least one value")
    if not all(cmath.isfinite(v) for v in vals):
        raise ValueError("values must be finite")
    if height_bound is None:
        height_bound = DEFAULT_HEIGHT_BOUND
    if height_bound < 1:
        raise ValueError("height_bound must be >= 1")
    if epsilon is None:
        epsilon = 1e-10 * max(abs(v) for v in vals)
        if epsilon == 0:
            epsilon = 1e-10
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")

    n = len(vals)
    scale = 1.0 / epsilon
    tails = []
    if any(v.real for v in vals):
        tails.append([round(v.real * scale) for v in vals])
    if any(v.imag for v in vals):
        tails.append([round(v.imag * scale) for v in vals])
    rows = [[int(i == j) for j in range(n)] + [t[i] for t in tails] for i in range(n)]
    reduced = lll_reduce(rows)

    def accept(m):
        if not any(m):
            return None
        m = primitive(m)
        height = max(abs(x) for x in m)
        if height > height_bound:
            return None
        res = _residual(m, vals)
        if res > epsilon:
            return None
        return RelationCandidate(m, res, height)

    found: dict[tuple[int, ...], RelationCandidate] = {}
    relations = []
    for row in reduced:
        m = tuple(row[:n])
        cand = accept(m)
        if cand is not None:
            relations.append(m)
            found.setdefault(cand.vector, cand)
    if relations:
        for b in Lattice.from_generators(relations, n).basis:
            cand = accept(b)
            if cand is not None:
                found.setdefault(cand.vector, cand)
    return sorted(found.values(), key=lambda c: (sum(x * x for x in c.vector), c.vector))
