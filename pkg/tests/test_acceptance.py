"""Acceptance criteria AC1-AC9. Each test logs one PASS/FAIL line, shown at the end of the run."""

import contextlib
import json
import math
import random
import time
from fractions import Fraction


from logleaf.cli import EXIT_COMPUTATION, main
from logleaf.foliation import (
    HEADLINE_HIGHLY_CONNECTED,
    Component,
    FoliationSpec,
    Polynomial,
    ProjectiveSpace,
    complement_pi1,
    connectivity_report,
    hyperplane_section_report,
    leaf_pi1,
)
from logleaf.lattice import IntegerMatrix, Lattice, hnf, lattice_quotient, snf
from logleaf.periods import explicit_cover_check, verify_meridians
from logleaf.residues import ResidueVector, SymbolBasis, numeric_relation_candidates, relation_lattice

from oracles import coset_count, det_leibniz, invariant_factors_by_minors, rational_rank

TWO_PI_I = 2j * math.pi
B1 = SymbolBasis.of("1", numeric={"1": 1})
B3 = SymbolBasis.of("1", "sqrt2", "sqrt3", numeric={"1": 1, "sqrt2": math.sqrt(2), "sqrt3": math.sqrt(3)})


@contextlib.contextmanager
def criterion(log, tag, title, limit):
    start = time.perf_counter()
    ok = False
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        detail = f"{elapsed:.2f}s / {limit}s"
        assert elapsed < limit, f"{tag} took {elapsed:.2f}s, limit {limit}s"
        ok = True
    except BaseException as e:
        detail = detail or f"{type(e).__name__}: {str(e)[:80]}"
        raise
    finally:
        log.append(f"[{'PASS' if ok else 'FAIL'}] {tag} {title} ({detail})")


def rand_fraction(rng, lo=-5, hi=5, den=6):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def test_ac1_pencil_regression(acceptance_log):
    with criterion(acceptance_log, "AC1", "pencil pi_1(L) = Z/d", 1.0):
        lam = [ResidueVector.rational(B1, 1), ResidueVector.rational(B1, -1)]
        for d in range(1, 13):
            spec = FoliationSpec.projective(3, [d, d], lam)
            g = leaf_pi1(spec)
            assert g.free_rank == 0
            assert g.torsion == (() if d == 1 else (d,))
            assert complement_pi1(spec).torsion == g.torsion


def test_ac2_non_resonant_highly_connected(acceptance_log):
    rng = random.Random(2)
    with criterion(acceptance_log, "AC2", "non-resonant specs are (n-1)-connected", 5.0):
        done = 0
        while done < 100:
            k = rng.choice([1, 2, 3])
            coords = [[rand_fraction(rng) for _ in range(3)] for _ in range(k)]
            coords.append([-sum(c[i] for c in coords) for i in range(3)])
            if any(not any(c) for c in coords) or rational_rank(coords) != k:
                continue
            spec = FoliationSpec.projective(rng.randint(3, 6), [1] * (k + 1), [ResidueVector(B3, c) for c in coords])
            assert leaf_pi1(spec).is_trivial
            assert connectivity_report(spec).headline == HEADLINE_HIGHLY_CONNECTED
            done += 1


def test_ac3_snf_hnf_oracle_suite(acceptance_log):
    rng = random.Random(3)
    with criterion(acceptance_log, "AC3", "SNF/HNF on 1000 random matrices", 30.0):
        for _ in range(1000):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
            a = IntegerMatrix.from_rows(rows, n)
            h, u = hnf(a)
            assert u @ a == h and u.is_unimodular()
            dec = snf(a)
            assert dec.U @ a @ dec.V == dec.S
            assert dec.U.is_unimodular() and dec.V.is_unimodular()
            for i in range(m):
                for j in range(n):
                    assert i == j or dec.S[i, j] == 0
            diag = dec.diagonal
            assert all(x > 0 for x in diag)
            assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
            if m <= 4 and n <= 4:
                assert list(diag) == invariant_factors_by_minors(rows)


def test_ac4_quotient_coset_oracle(acceptance_log):
    rng = random.Random(4)
    with criterion(acceptance_log, "AC4", "quotient order equals coset count", 30.0):
        done = 0
        while done < 200:
            r = rng.randint(1, 3)
            n = rng.randint(r, 4)
            c = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(r)]
            det = det_leibniz(c)
            if det == 0 or abs(det) > 200:
                continue
            b = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
            if rational_rank(b) != r:
                continue
            amb = Lattice.from_generators(b, n)
            sub = Lattice.from_generators([[sum(ci[t] * b[t][j] for t in range(r)) for j in range(n)] for ci in c], n)
            q = lattice_quotient(amb, sub)
            assert q.free_rank == 0
            assert math.prod(q.torsion) == coset_count(c) == abs(det)
            done += 1


def test_ac5_exact_numeric_agreement(acceptance_log):
    rng = random.Random(5)
    with criterion(acceptance_log, "AC5", "exact and numeric relation lattices agree", 10.0):
        done = 0
        while done < 50:
            k = rng.randint(2, 5)
            coords = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(k)]
            if any(not any(c) for c in coords):
                continue
            lam = [ResidueVector(B3, c) for c in coords]
            lat = relation_lattice(lam)
            found = {c.vector for c in numeric_relation_candidates([r.numeric() for r in lam], 10**6, 1e-9)}
            for b in lat.basis:
                if max(abs(x) for x in b) <= 100:
                    assert b in found
            done += 1
        free = [
            [1.0, math.sqrt(2)],
            [1.0, math.sqrt(3)],
            [1.0, math.sqrt(5)],
            [1.0, math.pi],
            [1.0, math.sqrt(2), math.sqrt(3)],
            [math.sqrt(2), math.sqrt(3), math.sqrt(6) + 1],
        ]
        for vals in free:
            assert numeric_relation_candidates(vals, 10**3, 1e-9) == []


def test_ac6_meridian_oracle(acceptance_log):
    with criterion(acceptance_log, "AC6", "meridians of x, y, z with residues (1, 1, -2)", 5.0):
        lam = [1, 1, -2]
        polys = [Polynomial.linear(v) for v in ([1, 0, 0], [0, 1, 0], [0, 0, 1])]
        comps = tuple(
            Component(f"D{j}", 1, ResidueVector.rational(B1, l), p) for j, (l, p) in enumerate(zip(lam, polys))
        )
        rep = verify_meridians(FoliationSpec(ProjectiveSpace(2), comps), tolerance=1e-6, samples=1024)
        for m in rep.meridians:
            assert abs(m.result.value - TWO_PI_I * lam[m.component]) <= 1e-6
        assert abs(rep.global_sum) <= 3e-6


def test_ac7_explicit_cover(acceptance_log):
    with criterion(acceptance_log, "AC7", "explicit cover check in dims 2 and 3", 2.0):
        for dim in (2, 3):
            pad = [0] * (dim - 2)
            origin = [0, 0] + pad
            step = explicit_cover_check(dim, [1], [origin, [1, 0] + pad], tolerance=1e-8)
            assert abs(step.value - TWO_PI_I) <= 1e-8
            diag = explicit_cover_check(dim, [1, -1], [origin, [1, 1] + pad], tolerance=1e-8)
            assert abs(diag.value) <= 1e-8
            square = [origin, [1, 0] + pad, [1, 1] + pad, [0, 1] + pad, origin]
            loop = explicit_cover_check(dim, [1, -1], square, tolerance=1e-8)
            assert abs(loop.value) <= 1e-8


def random_kernel_spec(rng, dim):
    while True:
        k = rng.randint(2, 5)
        degrees = [rng.randint(1, 4) for _ in range(k)]
        lam = [rand_fraction(rng, -4, 4, 4) for _ in range(k - 1)]
        last = -sum(d * l for d, l in zip(degrees, lam)) / degrees[-1]
        lam.append(last)
        if all(lam):
            return FoliationSpec.projective(dim, degrees, [ResidueVector.rational(B1, l) for l in lam])


def test_ac8_dimension_independence(acceptance_log):
    rng = random.Random(8)
    with criterion(acceptance_log, "AC8", "leaf pi_1 independent of dimension, section iso", 5.0):
        for _ in range(20):
            base = random_kernel_spec(rng, 3)
            groups = set()
            for dim in range(3, 8):
                spec = base.with_dim(dim)
                groups.add(leaf_pi1(spec))
                rep = hyperplane_section_report(spec)
                if spec.n - 1 > 1:
                    assert rep.pi1_section == rep.pi1_leaf
            assert len(groups) == 1


def test_ac9_error_path_contract(acceptance_log, tmp_path, capsys):
    single = {
        "ambient": {"type": "projective", "dim": 3},
        "basis": {"symbols": ["1"]},
        "components": [{"name": "Q", "degree": 2, "residue": {"1": "3/2"}}],
    }
    bad_sum = {
        "ambient": {"type": "projective", "dim": 3},
        "basis": {"symbols": ["1"]},
        "components": [
            {"name": f"H{j}", "degree": 1, "residue": {"1": v}} for j, v in enumerate(["1", "1", "-1"])
        ],
    }
    with criterion(acceptance_log, "AC9", "single component and (1,1,-1) exit 2", 1.0):
        for document, expected in ((single, "3"), (bad_sum, "1")):
            path = tmp_path / "spec.json"
            path.write_text(json.dumps(document))
            code = main(["leaf-pi", str(path)])
            out = capsys.readouterr()
            rep = json.loads(out.out)
            assert code == EXIT_COMPUTATION
            assert rep["error"]["type"] == "DegreeVectorNotInKernel"
            assert rep["error"]["residue_sum"] == expected
            assert "DegreeVectorNotInKernel" in out.err
