"""specrel command line: audit, noftl, witness, validate.

Exit codes: 0 everything passed, 1 a failure or violation was found,
2 the input was unusable or a precondition did not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from . import serialize as ser
from .axioms import SamplingConfig, Verdict, audit_all, overall_verdict
from .field import FieldError, FieldMode
from .geometry import GeometryError
from .noftl import (
    BadHypothesis,
    NotFTL,
    build_ftl_witness,
    certificate_from_json,
    certificate_to_json,
    check_noftl,
    validate_certificate,
)
from .scene import SceneError, load_json, parse_scene
from .worldview import ModelError

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
REPORT_VERSION = 1


class _InputError(Exception):
    pass


def _header(command: str, digest: str | None) -> dict[str, Any]:
    return {
        "tool": "specrel",
        "version": __version__,
        "reportVersion": REPORT_VERSION,
        "command": command,
        "sceneDigest": digest,
    }


def _sampling(args, scene) -> SamplingConfig:
    s = scene.sampling
    return SamplingConfig(
        seed=s.seed if args.seed is None else args.seed,
        grid_radius=s.grid_radius if args.grid_radius is None else args.grid_radius,
        random_count=s.random_count if args.random_count is None else args.random_count,
        denominator_bound=s.denominator_bound,
    )


def _load_scene(args):
    try:
        raw = Path(args.scene).read_bytes()
    except OSError as exc:
        raise _InputError(f"cannot read {args.scene}: {exc.strerror}") from None
    try:
        return parse_scene(raw, args.mode)
    except SceneError as exc:
        raise _InputError(f"{args.scene}: {exc}") from None


def _cmd_audit(args) -> tuple[dict, int]:
    scene = _load_scene(args)
    cfg = _sampling(args, scene)
    reports = audit_all(scene.model, cfg)
    verdict = overall_verdict(reports)
    report = _header("audit", scene.digest)
    report["fieldMode"] = scene.field_mode.value
    report["sampling"] = {
        "seed": cfg.seed, "gridRadius": cfg.grid_radius,
        "randomCount": cfg.random_count, "denominatorBound": cfg.denominator_bound,
    }
    report["results"] = [
        {
            "axiom": r.axiom.value,
            "verdict": r.verdict.value,
            "instancesChecked": r.instances_checked,
            "counterexample": ser.to_json(r.counterexample),
            "notes": list(r.notes),
        }
        for r in reports
    ]
    report["verdict"] = verdict.value
    return report, EXIT_PASS if verdict is Verdict.PASS else EXIT_FAIL


def _cmd_noftl(args) -> tuple[dict, int]:
    scene = _load_scene(args)
    if not scene.noftl:
        raise _InputError("scene has no noftl check blocks")
    results = []
    for i, c in enumerate(scene.noftl):
        try:
            r = check_noftl(scene.model, c.m, c.k, c.e, c.f)
        except (GeometryError, ModelError) as exc:
            raise _InputError(f"noftl[{i}]: {exc}") from None
        results.append({
            "m": c.m, "k": c.k, "e": ser.to_json(c.e), "f": ser.to_json(c.f),
            "verdict": "pass" if r.holds else "fail",
            "space2": ser.to_json(r.space2), "c2time2": ser.to_json(r.c2time2),
        })
    ok = all(r["verdict"] == "pass" for r in results)
    report = _header("noftl", scene.digest)
    report["fieldMode"] = scene.field_mode.value
    report["results"] = results
    report["verdict"] = "pass" if ok else "fail"
    return report, EXIT_PASS if ok else EXIT_FAIL


def _cmd_witness(args) -> tuple[dict, int]:
    scene = _load_scene(args)
    if not scene.witness:
        raise _InputError("scene has no witness hypotheses")
    results = []
    for i, h in enumerate(scene.witness):
        try:
            cert = build_ftl_witness(h, scene.field_mode)
        except (NotFTL, BadHypothesis, FieldError, GeometryError) as exc:
            raise _InputError(f"witness[{i}]: {type(exc).__name__}: {exc}") from None
        doc = certificate_to_json(cert)
        # re-validate from the serialized form, as an external tool would
        check = validate_certificate(certificate_from_json(doc))
        if args.cert_dir:
            out = Path(args.cert_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"certificate-{i}.json").write_text(json.dumps(doc, indent=2) + "\n")
        results.append({"index": i, "validated": check.ok, "mismatch": check.mismatch, "certificate": doc})
    ok = all(r["validated"] for r in results)
    report = _header("witness", scene.digest)
    report["fieldMode"] = scene.field_mode.value
    report["results"] = results
    report["verdict"] = "pass" if ok else "fail"
    return report, EXIT_PASS if ok else EXIT_FAIL


def _certificates_in(doc: Any) -> list[dict]:
    if isinstance(doc, dict) and "format" in doc:
        return [doc]
    if isinstance(doc, dict) and doc.get("command") == "witness":
        return [r["certificate"] for r in doc.get("results", [])]
    raise _InputError("expected a certificate or a witness report")


def _cmd_validate(args) -> tuple[dict, int]:
    try:
        raw = Path(args.certfile).read_bytes()
    except OSError as exc:
        raise _InputError(f"cannot read {args.certfile}: {exc.strerror}") from None
    try:
        docs = _certificates_in(load_json(raw))
        certs = [certificate_from_json(d) for d in docs]
    except (SceneError, KeyError, TypeError, ValueError, ArithmeticError) as exc:
        raise _InputError(f"{args.certfile}: malformed certificate: {exc}") from None
    results = []
    for i, cert in enumerate(certs):
        r = validate_certificate(cert)
        results.append({
            "index": i, "validated": r.ok, "mismatch": r.mismatch,
            "verdict": cert.verdict.kind.value,
            "axiom": ser.to_json(cert.verdict.axiom),
        })
    ok = all(r["validated"] for r in results)
    report = _header("validate", None)
    report["results"] = results
    report["verdict"] = "pass" if ok else "fail"
    return report, EXIT_PASS if ok else EXIT_FAIL


def _pt(p: list[str]) -> str:
    return "(" + ", ".join(p) + ")"


def _text(report: dict) -> str:
    lines = [f"specrel {report['version']} {report['command']}"]
    if report.get("sceneDigest"):
        lines.append(f"scene {report['sceneDigest']}")
    for r in report["results"]:
        if report["command"] == "audit":
            lines.append(f"{r['axiom']:<18} {r['verdict']:<13} {r['instancesChecked']} instances")
            for note in r["notes"]:
                lines.append(f"    note: {note}")
            if r["counterexample"] is not None:
                lines.append(f"    witness: {json.dumps(r['counterexample'])}")
        elif report["command"] == "noftl":
            lines.append(
                f"{r['m']} sees {r['k']} at {_pt(r['e'])} and {_pt(r['f'])}: {r['verdict']} "
                f"(space2 {r['space2']} vs c^2 time2 {r['c2time2']})"
            )
        elif report["command"] == "witness":
            v = r["certificate"]["verdict"]
            what = v["axiom"] if v["kind"] == "axiomViolated" else v["point"]
            status = "validated" if r["validated"] else f"REJECTED: {r['mismatch']}"
            lines.append(f"hypothesis {r['index']}: {v['kind']} {what}; {status}")
        else:
            status = "valid" if r["validated"] else f"invalid: {r['mismatch']}"
            lines.append(f"certificate {r['index']}: {status}")
    lines.append(f"verdict: {report['verdict']}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specrel", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"specrel {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    scene_opts = argparse.ArgumentParser(add_help=False)
    scene_opts.add_argument("scene", help="scene file (JSON)")
    scene_opts.add_argument("--mode", choices=[m.value for m in FieldMode], default=None,
                            help="override the scene's field mode")
    sub = parser.add_subparsers(dest="command", required=True)

    audit = sub.add_parser("audit", parents=[common, scene_opts], help="audit the model against every axiom")
    audit.add_argument("--seed", type=int)
    audit.add_argument("--grid-radius", type=int)
    audit.add_argument("--random-count", type=int)
    audit.set_defaults(run=_cmd_audit)

    noftl = sub.add_parser("noftl", parents=[common, scene_opts], help="check the no-FTL theorem on sightings")
    noftl.set_defaults(run=_cmd_noftl)

    witness = sub.add_parser("witness", parents=[common, scene_opts], help="refute FTL hypotheses")
    witness.add_argument("--cert-dir", help="also write each certificate to this directory")
    witness.set_defaults(run=_cmd_witness)

    validate = sub.add_parser("validate", parents=[common], help="re-check certificates")
    validate.add_argument("certfile")
    validate.set_defaults(run=_cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("grid_radius", "random_count"):
        v = getattr(args, name, None)
        if v is not None and v < (0 if name == "grid_radius" else 1):
            print(f"specrel: --{name.replace('_', '-')} out of range", file=sys.stderr)
            return EXIT_INPUT
    try:
        report, code = args.run(args)
    except _InputError as exc:
        print(f"specrel: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(_text(report) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
