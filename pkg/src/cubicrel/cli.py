"""Command-line front end: ``cubicrel <subcommand> [options]``.

JSON is the default output and is key-sorted, so repeated runs are
byte-identical. Exit status is 0 when every check in the report passes.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Sequence

__all__ = ["RunConfig", "build_parser", "run", "main"]

log = logging.getLogger("cubicrel")

MAX_DEG = 8
# The fourfold relation has coefficients up to L^10.
FOURFOLD_MAX_DEG = 12
CASES = ("smooth", "a1", "a2", "fourfold")
CASE_CRITERIA = {
    "smooth": [1, 2, 3, 4, 5, 6, 7, 11, 12],
    "a1": [8],
    "a2": [9],
    "fourfold": [10],
}
RELATION_IDS = {
    "szs-sym": "S-Z(S) relation among symmetric powers",
    "szs-hilb": "S-Z(S) relation among Hilbert schemes",
    "yfy": "Y-F(Y) relation, symmetric form",
    "yfy-hilb": "Y-F(Y) relation, Hilbert form",
    "deg5": "homogeneous degree-5 relation",
    "a1": "S-Z(S) relation for an A1-singular surface, in Burn(S6)",
    "a2": "S-Z(S) relation for an A2-singular surface, in Burn(G72)",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    format: str = "json"
    max_deg: int | None = None
    case: str | None = None
    out: str | None = None
    verbosity: int = 0
    args: dict = field(default_factory=dict)


# -- subcommands --------------------------------------------------------------


def _criteria_report(numbers: Sequence[int]) -> dict:
    from .suite import run_all

    return run_all(list(numbers))


def cmd_validate(cfg: RunConfig) -> dict:
    return _criteria_report([1, 2])


def cmd_classes(cfg: RunConfig) -> dict:
    from .charring import decompose, decomposition_json, format_decomposition
    from .goldens import DISPLAYS
    from .motives import named

    classes = {}
    for name in DISPLAYS:
        dec = decompose(named(name).value)
        classes[name] = {"decomposition": decomposition_json(dec), "display": format_decomposition(dec)}
    return {"classes": classes}


def cmd_decompose(cfg: RunConfig) -> dict:
    from .charring import decompose, decomposition_json, evaluate, format_decomposition
    from .motives import named

    name = cfg.args["name"]
    try:
        c = named(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    dec = decompose(c.value)
    return {
        "name": c.name,
        "degree": c.degree,
        "dimension": int(evaluate(c.value, "dimension")),
        "decomposition": decomposition_json(dec),
        "display": format_decomposition(dec),
    }


def _split(text: str | None) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()] if text else []


def cmd_find_relation(cfg: RunConfig) -> dict:
    from .relfind import find_relations, homogeneous_classes, modL_obstruction, nonexistence_certificate

    names = _split(cfg.args.get("classes"))
    if not names:
        names = [c.name for c in homogeneous_classes(cfg.args.get("degree") or 4, cfg.args.get("kind") or "sym")]
    names += [n for n in _split(cfg.args.get("with")) if n not in names]
    try:
        space = find_relations(names, cfg.max_deg or MAX_DEG, cfg.args.get("distinguished"))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = space.to_json()
    out["minimal_text"] = [str(r) for r in space.field_basis]
    out["mod_L"] = [modL_obstruction(r)["congruence"] for r in space.field_basis]
    cert = nonexistence_certificate(names, allow_residual=True)
    out["certificate"] = {
        "steps": [[n, i] for n, i in cert["steps"]],
        "residual": list(cert["residual"]),
        "residual_nullity": cert["residual_space"].nullity if cert["residual"] else 0,
        "complete": not cert["residual"],
    }
    return out


def _residual_row(key: str, residual) -> dict:
    return {"check": f"relation {key}", "passed": residual.is_zero(), "detail": str(residual)}


def cmd_verify(cfg: RunConfig) -> dict:
    from .relfind import REGISTERED, verify_relation

    key = cfg.args["relation"]
    if key not in RELATION_IDS:
        raise UsageError(f"unknown relation {key!r}; choose from {', '.join(RELATION_IDS)}")
    if key in ("a1", "a2"):
        from .burnside import verify_a1_suite, verify_a2_suite

        report = verify_a1_suite() if key == "a1" else verify_a2_suite()
        rows = [{"check": r["check"], "passed": r["passed"], "detail": r["lhs"]}
                for r in report["checks"] if r["check"].startswith("relation")]
        return {"relation": key, "checks": rows, "passed": all(r["passed"] for r in rows)}
    rel = REGISTERED["yfy-sym" if key == "yfy" else key]
    row = _residual_row(key, verify_relation(rel))
    return {"relation": key, "text": str(rel), "coefficients": rel.to_json(),
            "checks": [row], "passed": row["passed"]}


def cmd_burnside(cfg: RunConfig) -> dict:
    from .burnside import verify_a1_suite, verify_a2_suite

    case = cfg.case or "a1"
    if case not in ("a1", "a2"):
        raise UsageError("burnside needs --case a1 or --case a2")
    report = verify_a1_suite() if case == "a1" else verify_a2_suite()
    rows = [{"check": r["check"], "passed": r["passed"], "detail": {"lhs": r["lhs"], "rhs": r["rhs"]}}
            for r in report["checks"]]
    return {"case": case, "group_order": report["group_order"], "checks": rows,
            "passed": report["passed"]}


def cmd_fourfold(cfg: RunConfig) -> dict:
    from .k3lambda import derive_fourfold_relations, fourfold_classes

    out: dict = {"classes": {n: str(c.value) for n, c in fourfold_classes().items()}}
    if cfg.args.get("derive"):
        res = derive_fourfold_relations(cfg.max_deg or FOURFOLD_MAX_DEG)
        out["yfy"] = str(res["yfy"])
        out["relation"] = str(res["relation"])
        out["coefficients"] = res["relation"].to_json()
        out["space"] = res["space"].to_json()
        rows = [
            {"check": "Y-F(Y) residual", "passed": res["yfy_residual"].is_zero(), "detail": str(res["yfy_residual"])},
            {"check": "Y-Z(Y) residual", "passed": res["relation_residual"].is_zero(),
             "detail": str(res["relation_residual"])},
        ]
        out["checks"] = rows
        out["passed"] = all(r["passed"] for r in rows)
    return out


def cmd_all(cfg: RunConfig) -> dict:
    numbers = CASE_CRITERIA[cfg.case] if cfg.case else sorted({n for v in CASE_CRITERIA.values() for n in v})
    return _criteria_report(numbers)


COMMANDS = {
    "validate": cmd_validate,
    "classes": cmd_classes,
    "dump-classes": cmd_classes,
    "decompose": cmd_decompose,
    "find-relation": cmd_find_relation,
    "verify": cmd_verify,
    "burnside": cmd_burnside,
    "fourfold": cmd_fourfold,
    "all": cmd_all,
}


# -- rendering ----------------------------------------------------------------


def _check_rows(report: dict) -> list[dict]:
    if "criteria" in report:
        return [r for c in report["criteria"] for r in c["checks"]]
    return report.get("checks", [])


def _text(report: dict) -> str:
    lines = []
    if "criteria" in report:
        for c in report["criteria"]:
            lines.append(f"criterion {c['criterion']}: {'PASS' if c['passed'] else 'FAIL'} {c['title']}")
            for r in c["checks"]:
                if not r["passed"]:
                    lines.append(f"    FAIL {r['check']}: {r['detail']}")
            for n in c["notes"]:
                lines.append(f"    note {n['subject']}: {n['detail']}")
        return "\n".join(lines)
    if "display" in report:
        return f"[{report['name']}] = {report['display']}"
    if "classes" in report and isinstance(report["classes"], dict):
        for name, v in report["classes"].items():
            lines.append(f"[{name}] = {v['display'] if isinstance(v, dict) else v}")
    if "minimal_text" in report:
        lines.append(f"nullity {report['nullity']}, dimension over Q(L) {report['field_dimension']}")
        lines.extend(report["minimal_text"])
    for key in ("text", "yfy"):
        if isinstance(report.get(key), str):
            lines.append(report[key])
    if "space" in report:
        lines.append(report["relation"])
    for r in report.get("checks", []):
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {r['check']}")
    return "\n".join(lines)


def _tsv(report: dict) -> str:
    rows = _check_rows(report)
    if rows:
        return "\n".join(
            "\t".join([str(r.get("criterion", "")), r["check"], "PASS" if r["passed"] else "FAIL"]) for r in rows
        )
    if "decomposition" in report:
        return "\n".join(f"{d}\t{chi}\t{m}" for d, row in report["decomposition"].items() for chi, m in row.items())
    if "classes" in report:
        out = []
        for name, v in report["classes"].items():
            dec = v["decomposition"] if isinstance(v, dict) else {}
            out.extend(f"{name}\t{d}\t{chi}\t{m}" for d, row in dec.items() for chi, m in row.items())
            if not isinstance(v, dict):
                out.append(f"{name}\t{v}")
        return "\n".join(out)
    if "relations" in report:
        return "\n".join(f"{i}\t{k}\t{' '.join(v)}" for i, r in enumerate(report["minimal"]) for k, v in r.items())
    return _text(report)


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False, default=str)
    if fmt == "tsv":
        return _tsv(report)
    return _text(report)


def first_failure(report: dict) -> dict | None:
    return next((r for r in _check_rows(report) if not r["passed"]), None)


# -- entry points -------------------------------------------------------------


def _common(defaults: bool) -> argparse.ArgumentParser:
    """Shared options; subcommand copies suppress defaults so top-level values survive."""
    def dflt(value):
        return value if defaults else argparse.SUPPRESS

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "tsv"), default=dflt("json"))
    common.add_argument("--json", dest="format", action="store_const", const="json",
                        default=argparse.SUPPRESS, help="same as --format json")
    common.add_argument("--max-deg", type=int, default=dflt(None),
                        help=f"maximal L-degree of relation coefficients (default {MAX_DEG}, "
                             f"{FOURFOLD_MAX_DEG} for fourfold --derive)")
    common.add_argument("--case", choices=CASES, default=dflt(None),
                        help="restrict to one surface or fourfold case")
    common.add_argument("--out", default=dflt(None), help="write the report to this path instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=dflt(0))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(defaults=False)
    p = argparse.ArgumentParser(prog="cubicrel", description=__doc__.splitlines()[0],
                                parents=[_common(defaults=True)])
    sub = p.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("validate", parents=[common], help="character tables and root system structure")
    sub.add_parser("classes", parents=[common], help="decompositions of the reference classes")
    sub.add_parser("dump-classes", parents=[common], help="same as classes")
    d = sub.add_parser("decompose", parents=[common], help="irreducible decomposition of a class")
    d.add_argument("name", help='class name such as "S^(3)", "S x S^[2]", "Z"')
    f = sub.add_parser("find-relation", parents=[common], help="relation space among classes")
    f.add_argument("--classes", help="comma-separated class names")
    f.add_argument("--degree", type=int, help="use all products of formula degree <= N")
    f.add_argument("--kind", choices=("sym", "hilb"), default="sym")
    f.add_argument("--with", dest="with_", help="extra classes such as F,Z")
    f.add_argument("--distinguished", help="class whose leading coefficient is made positive")
    v = sub.add_parser("verify", parents=[common], help="verify a registered relation",
                       epilog="; ".join(f"{k}: {t}" for k, t in RELATION_IDS.items()))
    v.add_argument("relation", choices=sorted(RELATION_IDS))
    sub.add_parser("burnside", parents=[common], help="Burnside-ring suite for --case a1 or a2")
    ff = sub.add_parser("fourfold", parents=[common], help="cubic fourfold expansions")
    ff.add_argument("--derive", action="store_true", help="derive the Y-Z(Y) relation")
    sub.add_parser("all", parents=[common], help="full acceptance suite")
    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    args = {k: v for k, v in vars(ns).items()
            if k not in ("subcommand", "format", "max_deg", "case", "out", "verbose")}
    if "with_" in args:
        args["with"] = args.pop("with_")
    return RunConfig(ns.subcommand, ns.format, ns.max_deg, ns.case, ns.out, ns.verbose, args)


def run(cfg: RunConfig, stream=None) -> int:
    stream = stream or sys.stdout
    report = COMMANDS[cfg.subcommand](cfg)
    text = render(report, cfg.format) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stream.write(text)
    fail = first_failure(report)
    if fail is not None:
        print(f"first failing check: {fail['check']}", file=sys.stderr)
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    level = logging.WARNING - 10 * min(ns.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return run(_config(ns))
    except UsageError as exc:
        print(f"cubicrel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
