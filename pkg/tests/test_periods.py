import math

import numpy as np
import pytest

from logleaf.errors import (
    DegenerateLine,
    MeridianMismatch,
    MissingNumericValues,
    MissingPolynomialData,
    RootOnContour,
    ToleranceExceeded,
)
from logleaf.foliation import Component, FoliationSpec, Polynomial, ProjectiveSpace
from logleaf.periods import (
    LineRestriction,
    Root,
    covering_map,
    explicit_cover_check,
    integrate_loop,
    restrict_to_line,
    verify_meridians,
)
from logleaf.residues import ResidueVector, SymbolBasis, relation_lattice

TWO_PI_I = 2j * math.pi
B1 = SymbolBasis.of("1", numeric={"1": 1})
X, Y, Z = (Polynomial.linear(v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1]))
SPHERE = Polynomial((((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)))


def plane_spec(polys, values, basis=B1):
    comps = tuple(
        Component(f"D{j}", p.degree, ResidueVector.rational(basis, v), p) for j, (p, v) in enumerate(zip(polys, values))
    )
    return FoliationSpec(ProjectiveSpace(2), comps)


def handmade(polys, residues):
    """A LineRestriction built directly from univariate polynomials (ascending coefficients)."""
    roots = []
    for j, c in enumerate(polys):
        roots.extend(Root(complex(r), 1, j) for r in np.roots(np.asarray(c, dtype=complex)[::-1]))
    z = np.zeros(3, dtype=complex)
    return LineRestriction(z, z, tuple(np.asarray(c, dtype=complex) for c in polys), tuple(roots), tuple(residues))


class TestRestriction:
    def test_two_lines(self):
        for seed in range(5):
            line = restrict_to_line(plane_spec([X, Y], [1, -1]), seed)
            assert sorted(r.component for r in line.roots) == [0, 1]
            assert abs(line.roots[0].value - line.roots[1].value) > 1e-6

    def test_root_count_with_conic(self):
        line = restrict_to_line(plane_spec([SPHERE, X, Y], [1, -1, -1]), seed=4)
        assert [r.component for r in line.roots].count(0) == 2
        assert len(line.roots) == 4

    def test_roots_are_roots(self):
        spec = plane_spec([SPHERE, X, Y], [1, -1, -1])
        line = restrict_to_line(spec, seed=11)
        for r in line.roots:
            point = line.base + r.value * line.direction
            assert abs(spec.components[r.component].polynomial(point)) < 1e-10

    def test_coincident_components(self):
        with pytest.raises(DegenerateLine):
            restrict_to_line(plane_spec([X, X], [1, -1]), seed=0, max_attempts=8)

    def test_deterministic(self):
        spec = plane_spec([SPHERE, X, Y], [1, -1, -1])
        a, b = restrict_to_line(spec, 5), restrict_to_line(spec, 5)
        assert [r.value for r in a.roots] == [r.value for r in b.roots]

    def test_needs_polynomials(self):
        spec = FoliationSpec.projective(2, [1, 1], [ResidueVector.rational(B1, 1), ResidueVector.rational(B1, -1)])
        with pytest.raises(MissingPolynomialData):
            restrict_to_line(spec)


class TestIntegrateLoop:
    def test_unit_circle(self):
        line = handmade([[0, 1]], [1])
        res = integrate_loop(line, 0, 1.0, 256)
        assert res.abs_error < 1e-8
        assert abs(res.value - TWO_PI_I) < 1e-8

    def test_two_roots(self):
        line = handmade([[0, 1], [-1, 1]], [1, -1])
        small = integrate_loop(line, 0, 0.3, 256)
        assert abs(small.value - TWO_PI_I) < 1e-8
        big = integrate_loop(line, 0, 2.0, 256)
        assert abs(big.value) < 1e-8 and big.expected == 0

    def test_root_on_contour(self):
        line = handmade([[0, 1], [-1, 1]], [1, -1])
        with pytest.raises(RootOnContour):
            integrate_loop(line, 0, 0.9, 256)

    def test_samples_floor(self):
        with pytest.raises(ValueError):
            integrate_loop(handmade([[0, 1]], [1]), 0, 1.0, 32)

    def test_needs_numeric(self):
        line = handmade([[0, 1]], [1])
        line = LineRestriction(line.base, line.direction, line.polys, line.roots, None)
        with pytest.raises(MissingNumericValues):
            integrate_loop(line, 0, 1.0)

    def test_convergence_and_radius_independence(self):
        line = restrict_to_line(plane_spec([SPHERE, X, Y], [1, -1, -1]), seed=2)
        r0 = line.roots[0].value
        near = min(abs(r0 - r.value) for r in line.roots[1:])
        errs = [integrate_loop(line, r0, 0.45 * near, n).abs_error for n in (64, 128, 256)]
        assert errs[1] <= max(errs[0], 1e-12) and errs[2] <= max(errs[1], 1e-12)
        a = integrate_loop(line, r0, 0.45 * near, 1024)
        b = integrate_loop(line, r0, 0.3 * near, 1024)
        assert abs(a.value - b.value) <= 2e-6


class TestMeridians:
    def test_three_lines(self):
        rep = verify_meridians(plane_spec([X, Y, Z], [1, 1, -2]), tolerance=1e-6)
        for m in rep.meridians:
            assert m.result.abs_error < 1e-6
        assert abs(rep.global_sum) < 3e-6
        assert rep.residue_check.satisfied and rep.flags == ()

    def test_violated_residue_theorem_flagged(self):
        rep = verify_meridians(plane_spec([X, Y, Z], [1, 1, -1]), tolerance=1e-6)
        assert abs(rep.global_sum - TWO_PI_I) < 3e-6
        assert not rep.residue_check.satisfied
        assert rep.flags

    def test_conic_and_lines(self):
        rep = verify_meridians(plane_spec([SPHERE, X, Y], [1, -1, -1]), seed=3)
        assert rep.passed and abs(rep.global_sum) < 4e-6

    def test_without_polynomials(self):
        spec = FoliationSpec.projective(2, [1, 1], [ResidueVector.rational(B1, 1), ResidueVector.rational(B1, -1)])
        with pytest.raises(MissingPolynomialData):
            verify_meridians(spec)

    def test_without_numeric(self):
        b = SymbolBasis.of("1")
        with pytest.raises(MissingNumericValues):
            verify_meridians(plane_spec([X, Y], [1, -1], basis=b))

    def test_mismatch_raised(self):
        # 64 samples on a badly placed circle cannot reach 1e-15
        with pytest.raises(MeridianMismatch) as e:
            verify_meridians(plane_spec([SPHERE, X, Y], [1, -1, -1]), tolerance=1e-18, samples=64)
        assert e.value.worst.result.abs_error > 1e-18

    def test_exact_numeric_bridge(self):
        b = SymbolBasis.of("1", "sqrt2", numeric={"1": 1, "sqrt2": math.sqrt(2)})
        lam = [
            ResidueVector.from_mapping(b, {"1": 1}),
            ResidueVector.from_mapping(b, {"sqrt2": 1}),
            ResidueVector.from_mapping(b, {"1": 1, "sqrt2": -1}),
            ResidueVector.from_mapping(b, {"1": -2}),
        ]
        w = Polynomial.linear([1, 1, 1])
        comps = tuple(Component(f"D{j}", 1, r, p) for j, (r, p) in enumerate(zip(lam, [X, Y, Z, w])))
        spec = FoliationSpec(ProjectiveSpace(2), comps)
        rep = verify_meridians(spec, tolerance=1e-6)
        lat = relation_lattice(spec.residues)
        vals = [rep.meridian_value(j) for j in range(4)]
        for coeffs in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]:
            m = [sum(c * v[i] for c, v in zip(coeffs, lat.basis)) for i in range(4)]
            if max(abs(x) for x in m) <= 10:
                assert abs(sum(mi * vi for mi, vi in zip(m, vals))) <= 1e-6


class TestExplicitCover:
    @pytest.mark.parametrize("dim", [2, 3])
    def test_unit_step(self, dim):
        e1 = [1] + [0] * (dim - 1)
        rep = explicit_cover_check(dim, [1], [[0] * dim, e1])
        assert abs(rep.value - TWO_PI_I) < 1e-8

    @pytest.mark.parametrize("dim", [2, 3])
    def test_cancellation(self, dim):
        rep = explicit_cover_check(dim, [1, -1], [[0] * dim, [1, 1] + [0] * (dim - 2)])
        assert abs(rep.value) < 1e-8

    @pytest.mark.parametrize("dim", [2, 3])
    def test_square_loop(self, dim):
        pad = [0] * (dim - 2)
        square = [[0, 0] + pad, [1, 0] + pad, [1, 1] + pad, [0, 1] + pad, [0, 0] + pad]
        rep = explicit_cover_check(dim, [0.7, -0.3 + 0.2j], square)
        assert abs(rep.value) < 1e-8 and rep.linearity_error < 1e-8

    def test_generic_path_and_free_coordinate(self):
        # k < dim: the last coordinate is not exponentiated and carries no pole
        path = [[0.1 + 0.2j, -0.3, 5.0], [1.4 - 0.5j, 0.8 + 0.1j, -2.0], [0.2, 0.2, 0.2]]
        lam = [0.25 + 0.5j, -1.5]
        rep = explicit_cover_check(3, lam, path)
        expected = TWO_PI_I * sum(l * (b - a) for l, a, b in zip(lam, path[0], path[-1]))
        assert abs(rep.expected - expected) < 1e-12
        assert rep.passed

    def test_covering_map(self):
        z = covering_map(np.array([0.5, 0.25, 3.0]), 2)
        assert np.allclose(z, [-1, 1j, 3.0])

    def test_tolerance_exceeded(self):
        with pytest.raises(ToleranceExceeded):
            explicit_cover_check(2, [1], [[0, 0], [1, 0]], tolerance=1e-30)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            explicit_cover_check(2, [1, 1, 1], [[0, 0], [1, 0]])
        with pytest.raises(ValueError):
            explicit_cover_check(2, [1], [[0, 0]])
