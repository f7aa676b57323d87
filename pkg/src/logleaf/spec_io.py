"""Reading and writing foliation spec documents.

A spec document is JSON::

    {
      "ambient": {"type": "projective", "dim": 3},
      "basis": {"symbols": ["1", "sqrt2"], "numeric": {"1": 1, "sqrt2": 1.4142135623730951}},
      "components": [
        {"name": "D0", "degree": 1, "residue": {"1": "1"}},
        {"name": "D1", "degree": 1, "residue": {"sqrt2": "1"}},
        {"name": "D2", "degree": 1, "residue": {"1": "-1", "sqrt2": "-1"},
         "polynomial": [["1", [0, 0, 1, 0]]]}
      ],
      "options": {"strict": false}
    }

Residue coordinates are rationals written as strings (integers are also
accepted) so that nothing passes through floating point. Numeric values
and polynomial coefficients may be numbers, ``[re, im]`` pairs or strings
such as ``"1+2j"``. For a complete intersection use
``{"type": "complete_intersection", "N": 5, "multidegree": [2]}``.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import ParseError, SpecValidationError
from .foliation import (
    MAX_COMPONENTS,
    CompleteIntersectionAmbient,
    Component,
    FoliationSpec,
    Polynomial,
    ProjectiveSpace,
    spec_warnings,
)
from .residues import ResidueVector, SymbolBasis

__all__ = ["parse_spec", "load_spec", "spec_from_document", "spec_to_document", "dump_spec", "check_strict"]

_TOP_KEYS = {"ambient", "basis", "components", "options"}


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _parse_complex(x, path, errors):
    try:
        if isinstance(x, bool):
            raise ValueError
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, str):
            return complex(x.replace(" ", ""))
        if isinstance(x, list) and len(x) == 2 and all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in x):
            return complex(x[0], x[1])
    except ValueError:
        pass
    errors.append((path, f"expected a number, [re, im] or a complex string, got {x!r}"))
    return None


def _parse_rational(x, path, errors):
    if _is_int(x):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    if isinstance(x, float):
        errors.append((path, f"write rationals as strings (e.g. \"1/3\"), got float {x!r}"))
    else:
        errors.append((path, f"expected a rational string such as \"-1/2\", got {x!r}"))
    return None


def _parse_ambient(doc, errors):
    path = "ambient"
    if not isinstance(doc, dict):
        errors.append((path, "expected an object"))
        return None
    kind = doc.get("type", "projective")
    if kind == "projective":
        extra = set(doc) - {"type", "dim"}
        if extra:
            errors.append((path, f"unknown keys {sorted(extra)}"))
        dim = doc.get("dim")
        if not _is_int(dim) or dim < 2:
            errors.append((f"{path}.dim", f"ambient dimension n+1 must be an integer >= 2, got {dim!r}"))
            return None
        return ProjectiveSpace(dim)
    if kind == "complete_intersection":
        extra = set(doc) - {"type", "N", "multidegree", "dim"}
        if extra:
            errors.append((path, f"unknown keys {sorted(extra)}"))
        big_n, multideg = doc.get("N"), doc.get("multidegree")
        ok = True
        if not _is_int(big_n):
            errors.append((f"{path}.N", "expected an integer"))
            ok = False
        if not isinstance(multideg, list) or not all(_is_int(e) and e >= 1 for e in multideg):
            errors.append((f"{path}.multidegree", "expected a list of positive integers"))
            ok = False
        if not ok:
            return None
        dim = big_n - len(multideg)
        if "dim" in doc and doc["dim"] != dim:
            errors.append((f"{path}.dim", f"N - len(multidegree) = {dim}, but dim = {doc['dim']!r}"))
            return None
        if dim < 2:
            errors.append((path, f"ambient dimension n+1 = {dim} must be >= 2"))
            return None
        return CompleteIntersectionAmbient(big_n, tuple(multideg))
    errors.append((f"{path}.type", f"expected 'projective' or 'complete_intersection', got {kind!r}"))
    return None


def _parse_basis(doc, errors):
    path = "basis"
    if not isinstance(doc, dict):
        errors.append((path, "expected an object with 'symbols'"))
        return None
    extra = set(doc) - {"symbols", "numeric"}
    if extra:
        errors.append((path, f"unknown keys {sorted(extra)}"))
    symbols = doc.get("symbols")
    if not isinstance(symbols, list) or not symbols or not all(isinstance(s, str) and s for s in symbols):
        errors.append((f"{path}.symbols", "expected a nonempty list of symbol names"))
        return None
    if len(set(symbols)) != len(symbols):
        errors.append((f"{path}.symbols", "symbol names must be unique"))
        return None
    numeric = doc.get("numeric")
    values = None
    if numeric is not None:
        if not isinstance(numeric, dict):
            errors.append((f"{path}.numeric", "expected an object mapping symbol -> value"))
            return None
        n_err = len(errors)
        for s in numeric:
            if s not in symbols:
                errors.append((f"{path}.numeric.{s}", "unknown symbol"))
        for s in symbols:
            if s not in numeric:
                errors.append((f"{path}.numeric", f"missing value for symbol {s!r}"))
        values = [_parse_complex(numeric.get(s, 0), f"{path}.numeric.{s}", errors) for s in symbols]
        if len(errors) > n_err:
            return None
    try:
        return SymbolBasis(tuple(symbols), None if values is None else tuple(values))
    except ValueError as e:
        errors.append((path, str(e)))
        return None


def _parse_polynomial(doc, path, errors):
    if not isinstance(doc, list) or not doc:
        errors.append((path, "expected a nonempty list of [coefficient, exponents] terms"))
        return None
    terms = []
    for i, term in enumerate(doc):
        tpath = f"{path}[{i}]"
        if not (isinstance(term, list) and len(term) == 2 and isinstance(term[1], list)
                and all(_is_int(e) and e >= 0 for e in term[1])):
            errors.append((tpath, "expected [coefficient, [e_0, ..., e_{n+1}]]"))
            return None
        c = _parse_complex(term[0], f"{tpath}[0]", errors)
        if c is None:
            return None
        terms.append((tuple(term[1]), c))
    try:
        return Polynomial(tuple(terms))
    except ValueError as e:
        errors.append((path, str(e)))
        return None


def _parse_component(doc, idx, basis, ambient, errors):
    path = f"components[{idx}]"
    if not isinstance(doc, dict):
        errors.append((path, "expected an object"))
        return None
    extra = set(doc) - {"name", "degree", "residue", "polynomial"}
    if extra:
        errors.append((path, f"unknown keys {sorted(extra)}"))
    n_err = len(errors)
    name = doc.get("name", f"D{idx}")
    if not isinstance(name, str) or not name:
        errors.append((f"{path}.name", "expected a nonempty string"))
    degree = doc.get("degree")
    if not _is_int(degree) or degree < 1:
        errors.append((f"{path}.degree", f"degree must be an integer >= 1, got {degree!r}"))
    elif isinstance(ambient, CompleteIntersectionAmbient) and degree != 1:
        errors.append((f"{path}.degree", "on a complete intersection only hyperplane sections (degree 1) are allowed"))
    residue = doc.get("residue")
    coords = None
    if not isinstance(residue, dict):
        errors.append((f"{path}.residue", "expected an object mapping symbol -> rational string"))
    elif basis is not None:
        coords = {}
        for s, v in residue.items():
            if s not in basis.symbols:
                errors.append((f"{path}.residue.{s}", "unknown symbol"))
                continue
            q = _parse_rational(v, f"{path}.residue.{s}", errors)
            if q is not None:
                coords[s] = q
        if len(errors) == n_err and not any(coords.values()):
            errors.append((f"{path}.residue", "residue is zero; residues must lie in C* (lambda_j != 0)"))
    poly = None
    if doc.get("polynomial") is not None:
        if isinstance(ambient, CompleteIntersectionAmbient):
            errors.append((f"{path}.polynomial", "polynomials are only supported on projective space"))
        else:
            poly = _parse_polynomial(doc["polynomial"], f"{path}.polynomial", errors)
            if poly is not None and _is_int(degree) and poly.degree != degree:
                errors.append((f"{path}.polynomial", f"homogeneous degree {poly.degree} differs from degree {degree}"))
            if poly is not None and ambient is not None and poly.nvars != ambient.dim + 1:
                errors.append((f"{path}.polynomial", f"uses {poly.nvars} variables, P^{ambient.dim} needs {ambient.dim + 1}"))
    if len(errors) > n_err or basis is None:
        return None
    return Component(name, degree, ResidueVector.from_mapping(basis, coords), poly)


def spec_from_document(doc, strict: bool | None = None) -> FoliationSpec:
    """Validate a decoded document. Collects every problem before raising."""
    errors: list[tuple[str, str]] = []
    if not isinstance(doc, dict):
        raise SpecValidationError([("", "top level must be an object")])
    for key in sorted(set(doc) - _TOP_KEYS):
        errors.append((key, "unknown top-level key"))
    for key in ("ambient", "basis", "components"):
        if key not in doc:
            errors.append((key, "missing"))
    ambient = _parse_ambient(doc["ambient"], errors) if "ambient" in doc else None
    basis = _parse_basis(doc["basis"], errors) if "basis" in doc else None
    comps = []
    raw = doc.get("components")
    if "components" in doc:
        if not isinstance(raw, list) or not 1 <= len(raw) <= MAX_COMPONENTS:
            errors.append(("components", f"expected a list of 1 to {MAX_COMPONENTS} components"))
        else:
            comps = [_parse_component(c, i, basis, ambient, errors) for i, c in enumerate(raw)]
    options = doc.get("options", {})
    doc_strict = False
    if not isinstance(options, dict):
        errors.append(("options", "expected an object"))
    else:
        for key in sorted(set(options) - {"strict"}):
            errors.append((f"options.{key}", "unknown option"))
        doc_strict = options.get("strict", False)
        if not isinstance(doc_strict, bool):
            errors.append(("options.strict", "expected true or false"))
            doc_strict = False
    if errors:
        raise SpecValidationError(errors)
    spec = FoliationSpec(ambient, tuple(comps), doc_strict if strict is None else strict)
    check_strict(spec)
    return spec


def check_strict(spec: FoliationSpec) -> list[str]:
    """Return the spec's warnings, or raise them as validation errors in strict mode."""
    warnings = spec_warnings(spec)
    if spec.strict and warnings:
        raise SpecValidationError([("strict", w) for w in warnings])
    return warnings


def parse_spec(text: str, strict: bool | None = None) -> FoliationSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError([(f"line {e.lineno}, column {e.colno}", e.msg)]) from None
    return spec_from_document(doc, strict)


def load_spec(source: str | Path, strict: bool | None = None) -> FoliationSpec:
    """Parse a spec file; ``"-"`` reads standard input."""
    return parse_spec(read_source(source), strict)


def read_source(source: str | Path) -> str:
    if str(source) == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError([(str(source), f"cannot read: {e.strerror}")]) from None


def _complex_out(z: complex):
    return z.real if z.imag == 0 else [z.real, z.imag]


def spec_to_document(spec: FoliationSpec) -> dict:
    if isinstance(spec.ambient, ProjectiveSpace):
        ambient = {"type": "projective", "dim": spec.ambient.dim}
    else:
        ambient = {"type": "complete_intersection", "N": spec.ambient.N, "multidegree": list(spec.ambient.multidegree)}
    basis = {"symbols": list(spec.basis.symbols)}
    if spec.basis.numeric_values is not None:
        basis["numeric"] = {s: _complex_out(v) for s, v in zip(spec.basis.symbols, spec.basis.numeric_values)}
    comps = []
    for c in spec.components:
        entry = {"name": c.name, "degree": c.degree, "residue": {s: str(q) for s, q in c.residue.as_mapping().items()}}
        if c.polynomial is not None:
            entry["polynomial"] = [[_complex_out(coef), list(exps)] for exps, coef in c.polynomial.terms]
        comps.append(entry)
    return {"ambient": ambient, "basis": basis, "components": comps, "options": {"strict": spec.strict}}


def dump_spec(spec: FoliationSpec) -> str:
    return json.dumps(spec_to_document(spec), indent=2)
