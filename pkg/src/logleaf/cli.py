"""Command line front end.

    logleaf leaf-pi spec.json
    logleaf connectivity spec.json --format text
    logleaf verify-periods spec.json --seed 3 --samples 2048

Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 invalid input, 2 computation error, 3 numeric oracle out of tolerance.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .errors import (
    ComputationError,
    DegreeVectorNotInKernel,
    LogLeafError,
    MeridianMismatch,
    OracleToleranceError,
    SpecError,
)
from .foliation import (
    ASSUMPTIONS,
    FoliationSpec,
    complement_pi1,
    connectivity_report,
    hyperplane_section_report,
    leaf_pi1,
    resonance_classify,
)
from .lattice import AbelianGroupInvariants
from .periods import DEFAULT_SAMPLES, DEFAULT_TOLERANCE, verify_meridians
from .residues import DEFAULT_HEIGHT_BOUND, numeric_relation_candidates, relation_lattice
from .spec_io import check_strict, parse_spec, read_source, spec_to_document

__all__ = ["main", "run", "COMMANDS", "EXIT_OK", "EXIT_INVALID", "EXIT_COMPUTATION", "EXIT_ORACLE"]

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_COMPUTATION = 2
EXIT_ORACLE = 3

COMMANDS = ("complement-pi", "leaf-pi", "resonance", "connectivity", "hyperplane-section", "verify-periods", "full")


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, SpecError):
        return EXIT_INVALID
    if isinstance(exc, OracleToleranceError):
        return EXIT_ORACLE
    if isinstance(exc, ComputationError):
        return EXIT_COMPUTATION
    raise TypeError(f"no exit code for {type(exc).__name__}")


def _cplx(z: complex) -> list[float]:
    return [z.real, z.imag]


def _group(g: AbelianGroupInvariants | None):
    if g is None:
        return None
    return {"free_rank": g.free_rank, "torsion": list(g.torsion), "pretty": str(g)}


def _error(exc: LogLeafError) -> dict:
    out = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, SpecError):
        out["errors"] = [{"field": p, "message": m} for p, m in exc.errors]
    if isinstance(exc, DegreeVectorNotInKernel):
        out["degrees"] = list(exc.degrees)
        out["residue_sum"] = exc.check.format()
        out["residue_sum_coordinates"] = {
            s: str(c) for s, c in zip(exc.check.basis.symbols, exc.check.value) if c
        }
    if isinstance(exc, MeridianMismatch):
        out["worst"] = {
            "component": exc.worst.name,
            "root": _cplx(exc.worst.root),
            "abs_error": exc.worst.result.abs_error,
        }
        out["periods"] = _meridian_dict(exc.report)
    return out


def _meridian_dict(rep) -> dict:
    return {
        "seed": rep.seed,
        "tolerance": rep.tolerance,
        "meridians": [
            {
                "component": m.name,
                "root": _cplx(m.root),
                "radius": m.result.radius,
                "value": _cplx(m.result.value),
                "expected": _cplx(m.result.expected),
                "abs_error": m.result.abs_error,
            }
            for m in rep.meridians
        ],
        "global_sum": _cplx(rep.global_sum),
        "global_expected": _cplx(rep.global_expected),
        "global_error": rep.global_error,
        "residue_theorem": str(rep.residue_check),
        "flags": list(rep.flags),
        "passed": rep.passed,
    }


def _resonance_section(spec: FoliationSpec, height_bound: int) -> dict:
    res = resonance_classify(spec)
    lat = relation_lattice(spec.residues)
    out = {
        "class": "resonant" if res.resonant else "non-resonant",
        "witness": list(res.witness) if res.witness else None,
        "relation_lattice": [list(b) for b in lat.basis],
    }
    if spec.basis.has_numeric:
        cands = numeric_relation_candidates([r.numeric() for r in spec.residues], height_bound)
        out["numeric_candidates"] = {
            "heuristic": True,
            "height_bound": height_bound,
            "vectors": [{"vector": list(c.vector), "residual": c.residual} for c in cands],
        }
    return out


def _connectivity_section(spec: FoliationSpec) -> dict:
    rep = connectivity_report(spec)
    return {
        "n": rep.n,
        "pi1_leaf": _group(rep.pi1_leaf) if rep.pi1_leaf is not None else "not computed",
        "resonance": None if rep.resonance is None else str(rep.resonance),
        "higher": {str(l): s.value for l, s in sorted(rep.higher.items())},
        "headline": rep.headline,
        "connectivity": rep.connectivity,
        "caveats": list(rep.caveats),
    }


def _section_report(spec: FoliationSpec) -> dict:
    rep = hyperplane_section_report(spec)
    return {
        "n": rep.n,
        "iso_for_l_below": rep.iso_below,
        "epi_at_l": rep.epi_level,
        "pi1_leaf": _group(rep.pi1_leaf),
        "pi1_section": _group(rep.pi1_section),
        "match": rep.match,
        "guaranteed": rep.guaranteed,
        "notes": list(rep.notes),
    }


def _compute(command: str, spec: FoliationSpec, flags: argparse.Namespace) -> dict:
    if command == "complement-pi":
        return {"complement_pi1": _group(complement_pi1(spec))}
    if command == "leaf-pi":
        return {"leaf_pi1": _group(leaf_pi1(spec))}
    if command == "resonance":
        return {"resonance": _resonance_section(spec, flags.height_bound)}
    if command == "connectivity":
        return {"connectivity": _connectivity_section(spec)}
    if command == "hyperplane-section":
        return {"hyperplane_section": _section_report(spec)}
    if command == "verify-periods":
        rep = verify_meridians(spec, flags.tolerance, flags.seed, flags.samples)
        return {"periods": _meridian_dict(rep)}
    raise ValueError(command)


def run(command: str, spec: FoliationSpec, flags: argparse.Namespace | None = None) -> tuple[dict, int]:
    """Dispatch one command. Returns the report dict and the exit code."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    flags = flags or default_flags()
    report = {
        "command": command,
        "version": __version__,
        "input_digest": spec_digest(spec),
        "results": {},
        "assumptions": [],
        "warnings": [],
        "error": None,
    }
    code = EXIT_OK
    try:
        report["warnings"] = check_strict(spec)
    except SpecError as e:
        report["error"] = _error(e)
        return report, EXIT_INVALID
    report["assumptions"] = list(ASSUMPTIONS)
    if command != "full":
        try:
            report["results"] = _compute(command, spec, flags)
        except LogLeafError as e:
            report["error"] = _error(e)
            code = exit_code_for(e)
        return report, code

    errors = []
    for sub in COMMANDS[:-1]:
        if sub == "hyperplane-section" and (spec.n < 2 or not spec.is_projective):
            report["results"][sub] = {"skipped": "needs a projective ambient with n >= 2"}
            continue
        if sub == "verify-periods" and (
            not spec.basis.has_numeric or any(c.polynomial is None for c in spec.components)
        ):
            report["results"][sub] = {"skipped": "needs polynomials and numeric symbol values"}
            continue
        if sub in ("complement-pi", "leaf-pi", "resonance", "hyperplane-section") and not spec.is_projective:
            report["results"][sub] = {"skipped": "only computed on projective space"}
            continue
        try:
            report["results"].update(_compute(sub, spec, flags))
        except LogLeafError as e:
            errors.append({"command": sub, **_error(e)})
            code = max(code, exit_code_for(e))
    if errors:
        report["error"] = errors
    return report, code


def spec_digest(spec: FoliationSpec) -> str:
    canon = json.dumps(spec_to_document(spec), sort_keys=True, separators=(",", ":"))
    return "sha256:" + hashlib.sha256(canon.encode()).hexdigest()


def default_flags() -> argparse.Namespace:
    return argparse.Namespace(
        strict=False,
        seed=0,
        samples=DEFAULT_SAMPLES,
        tolerance=DEFAULT_TOLERANCE,
        height_bound=DEFAULT_HEIGHT_BOUND,
        format="json",
    )


def render_text(report: dict) -> str:
    lines = [f"logleaf {report['version']} :: {report['command']}"]
    skipped = {k: v for k, v in report["results"].items() if isinstance(v, dict) and "skipped" in v}
    res = {k: v for k, v in report["results"].items() if k not in skipped}

    def group(g):
        return g["pretty"] if isinstance(g, dict) else str(g)

    if "complement_pi1" in res:
        lines.append(f"pi_1(P^(n+1) - D) = {group(res['complement_pi1'])}")
    if "leaf_pi1" in res:
        lines.append(f"pi_1(L) = {group(res['leaf_pi1'])}")
    if "resonance" in res:
        r = res["resonance"]
        line = f"residues: {r['class']}"
        if r["witness"]:
            line += f" (witness relation {tuple(r['witness'])})"
        lines.append(line)
        lines.append(f"relation lattice basis: {[tuple(b) for b in r['relation_lattice']]}")
        if "numeric_candidates" in r:
            vecs = [tuple(v["vector"]) for v in r["numeric_candidates"]["vectors"]]
            lines.append(f"numeric relation candidates (heuristic): {vecs}")
    if "connectivity" in res:
        c = res["connectivity"]
        lines.append(f"n = {c['n']}")
        lines.append(f"pi_1(L) = {group(c['pi1_leaf'])}")
        for l, s in c["higher"].items():
            lines.append(f"  pi_{l}: {s}")
        if c["headline"]:
            lines.append(f"leaf is {c['headline']} (= {c['connectivity']}-connected)")
        lines.extend(f"caveat: {x}" for x in c["caveats"])
    if "hyperplane_section" in res:
        h = res["hyperplane_section"]
        lines.append(
            f"pi_l(L cap H) -> pi_l(L): iso for l < {h['iso_for_l_below']}, epi at l = {h['epi_at_l']}"
        )
        lines.append(f"pi_1(L cap H) = {group(h['pi1_section'])}, pi_1(L) = {group(h['pi1_leaf'])}")
        lines.extend(f"note: {x}" for x in h["notes"])
    if "periods" in res:
        p = res["periods"]
        for m in p["meridians"]:
            lines.append(
                f"meridian {m['component']} at {complex(*m['root']):.4f}: error {m['abs_error']:.2e}"
            )
        lines.append(f"sum of meridians = {complex(*p['global_sum']):.3e} ({p['residue_theorem']})")
        lines.extend(f"flag: {x}" for x in p["flags"])
    lines.extend(f"{key}: skipped ({val['skipped']})" for key, val in skipped.items())
    if report["assumptions"]:
        lines.append("assuming: " + "; ".join(report["assumptions"]))
    lines.extend(f"warning: {w}" for w in report["warnings"])
    err = report["error"]
    if err:
        errs = err if isinstance(err, list) else [err]
        lines.extend(f"error: {e['type']}: {e['message']}" for e in errs)
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="spec document (JSON), or - for stdin")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--strict", action="store_true", help="turn spec warnings into errors")
    common.add_argument("--seed", type=int, default=0, help="line choice for verify-periods")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="trapezoid nodes per loop")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="meridian tolerance")
    common.add_argument("--height-bound", type=int, default=DEFAULT_HEIGHT_BOUND, help="numeric relation search")
    parser = argparse.ArgumentParser(prog="logleaf", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"logleaf {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd in COMMANDS:
        sub.add_parser(cmd, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = read_source(args.spec)
        spec = parse_spec(text, strict=True if args.strict else None)
    except SpecError as e:
        report = {
            "command": args.command,
            "version": __version__,
            "input_digest": None,
            "results": {},
            "assumptions": [],
            "warnings": [],
            "error": _error(e),
        }
        _emit(report, args.format)
        for p, m in e.errors:
            print(f"logleaf: {p}: {m}" if p else f"logleaf: {m}", file=sys.stderr)
        return EXIT_INVALID
    report, code = run(args.command, spec, args)
    _emit(report, args.format)
    if report["error"]:
        errs = report["error"] if isinstance(report["error"], list) else [report["error"]]
        for e in errs:
            print(f"logleaf: {e['type']}: {e['message']}", file=sys.stderr)
    for w in report["warnings"]:
        print(f"logleaf: warning: {w}", file=sys.stderr)
    return code


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render_text(report) + "\n")


if __name__ == "__main__":
    sys.exit(main())
