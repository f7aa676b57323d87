"""Exact integer lattice algebra.

Hermite and Smith normal forms, integer kernels, membership and quotients
of sublattices of Z^m, all over Python integers so nothing overflows.

Row conventions throughout: a lattice is spanned by the *rows* of a matrix,
and the kernel of a matrix ``A`` is the set of row vectors ``m`` with
``m @ A == 0``.

>>> hnf(IntegerMatrix.from_rows([[2, 4], [6, 8]]))[0].to_rows()
[[2, 0], [0, 4]]
>>> print(lattice_quotient(Lattice.full(2), Lattice.from_generators([[2, 0], [0, 3]])))
Z/6
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Integral
from typing import Iterable, Sequence

from .errors import SubNotContained

__all__ = [
    "IntegerMatrix",
    "RationalMatrix",
    "Lattice",
    "SmithDecomposition",
    "AbelianGroupInvariants",
    "hnf",
    "snf",
    "integer_kernel",
    "lattice_contains",
    "lattice_coordinates",
    "lattice_quotient",
    "lll_reduce",
    "primitive",
]


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, Integral):
        raise TypeError(f"expected an integer entry, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, row-major, immutable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        entries = tuple(_as_int(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntegerMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows))
        )

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            sum(a[i][t] * b[t][j] for t in range(self.cols))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    def det(self) -> int:
        """Determinant by fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of ``Fraction`` entries (always in lowest terms)."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(Fraction(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> RationalMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def column_denominators(self) -> list[int]:
        return [
            reduce(lambda a, b: a * b // gcd(a, b), (self[i, j].denominator for i in range(self.rows)), 1)
            for j in range(self.cols)
        ]

    def clear_column_denominators(self) -> IntegerMatrix:
        """Scale each column by the lcm of its denominators.

        Column scaling by a nonzero constant leaves the left kernel unchanged.
        """
        scale = self.column_denominators()
        return IntegerMatrix(
            self.rows,
            self.cols,
            tuple(int(self[i, j] * scale[j]) for i in range(self.rows) for j in range(self.cols)),
        )


# --------------------------------------------------------------------------
# Hermite normal form


def _row_sub(m: list[list[int]], i: int, r: int, q: int) -> None:
    if q:
        ri = m[i]
        rr = m[r]
        for j in range(len(ri)):
            ri[j] -= q * rr[j]


def _hnf_in_place(h: list[list[int]], u: list[list[int]] | None, ncols: int) -> int:
    """Reduce ``h`` to row HNF, mirroring row operations on ``u``. Returns the rank."""
    m = len(h)
    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][c]))
            if p != r:
                h[r], h[p] = h[p], h[r]
                if u is not None:
                    u[r], u[p] = u[p], u[r]
            piv = h[r][c]
            clean = True
            for i in range(r + 1, m):
                if h[i][c]:
                    q = h[i][c] // piv
                    _row_sub(h, i, r, q)
                    if u is not None:
                        _row_sub(u, i, r, q)
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if not h[r][c]:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            if u is not None:
                u[r] = [-x for x in u[r]]
        piv = h[r][c]
        for i in range(r):
            q = h[i][c] // piv
            _row_sub(h, i, r, q)
            if u is not None:
                _row_sub(u, i, r, q)
        r += 1
    return r


def hnf(a: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ a == H``. Pivots of ``H``
    are positive, entries above each pivot lie in ``[0, pivot)`` and zero rows
    come last.
    """
    h = a.to_rows()
    u = IntegerMatrix.identity(a.rows).to_rows()
    _hnf_in_place(h, u, a.cols)
    return IntegerMatrix.from_rows(h, a.cols), IntegerMatrix.from_rows(u, a.rows)


# --------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``S`` diagonal and d_1 | d_2 | ... ."""

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix

    @property
    def source_shape(self) -> tuple[int, int]:
        return self.S.rows, self.S.cols

    @property
    def diagonal(self) -> tuple[int, ...]:
        """The nonzero diagonal entries d_1, ..., d_r."""
        k = min(self.S.rows, self.S.cols)
        return tuple(d for d in (self.S[i, i] for i in range(k)) if d)

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def snf(a: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form by smallest-pivot elimination with row and column swaps."""
    m, n = a.rows, a.cols
    s = a.to_rows()
    u = IntegerMatrix.identity(m).to_rows()
    v = IntegerMatrix.identity(n).to_rows()

    def swap_cols(mat, i, j):
        for row in mat:
            row[i], row[j] = row[j], row[i]

    def col_sub(mat, j, t, q):
        # column j -= q * column t
        for row in mat:
            row[j] -= q * row[t]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] and (best is None or abs(s[i][j]) < best[0]):
                    best = (abs(s[i][j]), i, j)
        if best is None:
            break
        while True:
            _, i, j = best
            if i != t:
                s[t], s[i] = s[i], s[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                swap_cols(s, t, j)
                swap_cols(v, t, j)
            piv = s[t][t]
            for i in range(t + 1, m):
                q = s[i][t] // piv
                _row_sub(s, i, t, q)
                _row_sub(u, i, t, q)
            for j in range(t + 1, n):
                q = s[t][j] // piv
                if q:
                    col_sub(s, j, t, q)
                    col_sub(v, j, t, q)
            best = None
            for i in range(t + 1, m):
                if s[i][t] and (best is None or abs(s[i][t]) < best[0]):
                    best = (abs(s[i][t]), i, t)
            for j in range(t + 1, n):
                if s[t][j] and (best is None or abs(s[t][j]) < best[0]):
                    best = (abs(s[t][j]), t, j)
            if best is not None:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # pull the non-divisible row into the pivot row; the next pass shrinks the pivot
            for j in range(n):
                s[t][j] += s[bad][j]
            for j in range(m):
                u[t][j] += u[bad][j]
            best = (abs(piv), t, t)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return SmithDecomposition(
        IntegerMatrix.from_rows(u, m), IntegerMatrix.from_rows(s, n), IntegerMatrix.from_rows(v, n)
    )


# --------------------------------------------------------------------------
# Lattices


def _is_hnf(basis: Sequence[Sequence[int]]) -> bool:
    last = -1
    for idx, row in enumerate(basis):
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None or p <= last or row[p] <= 0:
            return False
        for above in basis[:idx]:
            if not 0 <= above[p] < row[p]:
                return False
        last = p
    return True


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^ambient_rank stored by its canonical row-HNF basis.

    Two ``Lattice`` values are equal exactly when they are the same subgroup.
    Build them with :meth:`from_generators`; the constructor only accepts a
    basis that is already in HNF.
    """

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        basis = tuple(tuple(_as_int(x) for x in row) for row in self.basis)
        if any(len(row) != self.ambient_rank for row in basis):
            raise ValueError("basis vectors must have length ambient_rank")
        if not _is_hnf(basis):
            raise ValueError("basis is not in Hermite normal form; use Lattice.from_generators")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]], ambient_rank: int | None = None) -> Lattice:
        gens = [[_as_int(x) for x in g] for g in generators]
        if ambient_rank is None:
            if not gens:
                raise ValueError("ambient_rank is required when there are no generators")
            ambient_rank = len(gens[0])
        if any(len(g) != ambient_rank for g in gens):
            raise ValueError("generator length differs from ambient_rank")
        rank = _hnf_in_place(gens, None, ambient_rank)
        return cls(ambient_rank, tuple(tuple(r) for r in gens[:rank]))

    @classmethod
    def full(cls, n: int) -> Lattice:
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> Lattice:
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.basis, self.ambient_rank)

    def __contains__(self, v) -> bool:
        return lattice_contains(self, v)

    def __le__(self, other: Lattice) -> bool:
        return self.ambient_rank == other.ambient_rank and all(b in other for b in self.basis)


def lattice_coordinates(lat: Lattice, v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients of ``v`` in the HNF basis, or None if ``v`` is not in ``lat``."""
    if len(v) != lat.ambient_rank:
        raise ValueError(f"vector of length {len(v)} in a lattice of ambient rank {lat.ambient_rank}")
    w = [_as_int(x) for x in v]
    coeffs = []
    for row in lat.basis:
        p = next(j for j, x in enumerate(row) if x)
        c, rem = divmod(w[p], row[p])
        if rem:
            return None
        if c:
            for j in range(p, len(w)):
                w[j] -= c * row[j]
        coeffs.append(c)
    if any(w):
        return None
    return tuple(coeffs)


def lattice_contains(lat: Lattice, v: Sequence[int]) -> bool:
    return lattice_coordinates(lat, v) is not None


def integer_kernel(a: IntegerMatrix) -> Lattice:
    """All integer row vectors ``m`` with ``m @ a == 0``.

    The result is saturated: it is the kernel of a unimodular transform, so any
    integer vector in its rational span already belongs to it.
    """
    h = a.to_rows()
    u = IntegerMatrix.identity(a.rows).to_rows()
    rank = _hnf_in_place(h, u, a.cols)
    return Lattice.from_generators(u[rank:], a.rows)


# --------------------------------------------------------------------------
# Abelian groups


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Z^free_rank + Z/t_1 + ... + Z/t_s with t_1 | t_2 | ... and every t_i >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(_as_int(t) for t in self.torsion)
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t < 2 for t in torsion):
            raise ValueError("invariant factors must be >= 2")
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    @classmethod
    def from_diagonal(cls, diagonal: Iterable[int], generators: int) -> AbelianGroupInvariants:
        """Invariants of Z^generators modulo relations with Smith diagonal ``diagonal``."""
        diag = [abs(d) for d in diagonal if d]
        return cls(generators - len(diag), tuple(sorted(d for d in diag if d > 1)))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def lattice_quotient(amb: Lattice, sub: Lattice) -> AbelianGroupInvariants:
    """Invariant factors of ``amb / sub``.

    Raises :class:`SubNotContained` if ``sub`` is not a sublattice of ``amb``.
    """
    if amb.ambient_rank != sub.ambient_rank:
        raise ValueError("lattices live in different ambient ranks")
    coords = []
    for b in sub.basis:
        c = lattice_coordinates(amb, b)
        if c is None:
            raise SubNotContained(b)
        coords.append(c)
    if not coords:
        return AbelianGroupInvariants(amb.rank)
    dec = snf(IntegerMatrix.from_rows(coords, amb.rank))
    return AbelianGroupInvariants.from_diagonal(dec.diagonal, amb.rank)


# --------------------------------------------------------------------------
# LLL


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide out the content and make the first nonzero entry positive."""
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    first = next(x for x in v if x)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


def lll_reduce(basis: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)) -> list[list[int]]:
    """LLL-reduce linearly independent integer rows.

    Integral variant (exact subdeterminants d_i and scaled Gram-Schmidt
    coefficients), so no rational arithmetic is needed.
    """
    b = [[_as_int(x) for x in row] for row in basis]
    n = len(b)
    if n <= 1:
        return b
    p, q = delta.numerator, delta.denominator

    def dot(x, y):
        return sum(s * t for s, t in zip(x, y))

    # d[i+1] = Gram determinant of the first i+1 vectors; d[0] = 1
    d = [1] + [0] * n
    lam = [[0] * n for _ in range(n)]
    d[1] = dot(b[0], b[0])
    if d[1] == 0:
        raise ValueError("basis vectors are linearly dependent")
    kmax = 0

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            r = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - r * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= r * d[l + 1]
            for i in range(l):
                lam[k][i] -= r * lam[l][i]

    def swap(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        mu = lam[k][k - 1]
        big = (d[k - 1] * d[k + 1] + mu * mu) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - mu * t) // d[k]
            lam[i][k - 1] = (big * t + mu * lam[i][k]) // d[k + 1]
        d[k] = big

    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                acc = dot(b[k], b[j])
                for i in range(j):
                    acc = (d[i + 1] * acc - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = acc
                else:
                    if acc == 0:
                        raise ValueError("basis vectors are linearly dependent")
                    d[k + 1] = acc
        red(k, k - 1)
        if q * d[k + 1] * d[k - 1] < p * d[k] * d[k] - q * lam[k][k - 1] ** 2:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return b
