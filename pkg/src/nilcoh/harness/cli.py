"""Command-line interface.

Subcommands: h1, complements, decompose, verify, suite, catalog.  Reports go
to stdout; json output is deterministic line-oriented JSON with sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from ..actions import coset_gset, semidirect
from ..cohomology import GENERATOR_ENUM_BUDGET, cocycles, decomposition_map, h1
from ..errors import NilcohError, ParseError, ValidationError
from ..structure import complements, subgroup_conjugacy_classes
from ..theorems import (
    verify_lemma1,
    verify_prop2,
    verify_prop3,
    verify_prop5,
    verify_thm4,
)
from .catalog import CATALOG, EQ3_EXTRA, catalog_by_id
from .scenario import load_scenario, subgroup_of_semidirect
from .suite import (
    default_suite,
    report_emit,
    run_checks,
    exit_code,
    scenario_checks,
)


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        _emit_human(payload)


def _emit_human(payload, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(payload, dict):
        for k in payload:
            v = payload[k]
            if isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _emit_human(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            _emit_human(v, indent)
    else:
        print(f"{pad}{payload}")


def _resolve_action(args) -> tuple[str, object]:
    if args.scenario:
        scenario = load_scenario(args.scenario)
        name = args.instance
        if name is None:
            if len(scenario.actions) != 1:
                raise ValidationError(
                    "cli", "scenario has several actions; pick one with --instance")
            name = next(iter(scenario.actions))
        if name not in scenario.actions:
            raise ValidationError("cli", f"scenario has no action named {name!r}")
        return f"{scenario.id}/{name}", scenario.actions[name]
    if args.instance is None:
        raise ValidationError("cli", "--instance (or --scenario) is required")
    instances = catalog_by_id()
    if args.instance not in instances:
        raise ValidationError("cli", f"unknown catalog instance {args.instance!r}")
    return args.instance, instances[args.instance].action()


def cmd_catalog(args) -> int:
    rows = []
    for inst in CATALOG + EQ3_EXTRA:
        action = inst.action()
        rows.append({
            "id": inst.id,
            "description": inst.description,
            "j_order": action.actor.order,
            "n_order": action.target.order,
            "tags": sorted(inst.tags),
        })
    if args.format == "json":
        for row in rows:
            print(json.dumps(row, sort_keys=True, separators=(",", ":")))
    else:
        for row in rows:
            tags = ",".join(row["tags"])
            print(f"{row['id']:<18} |J|={row['j_order']:<3} |N|={row['n_order']:<3} "
                  f"[{tags}] {row['description']}")
    return 0


def cmd_h1(args) -> int:
    instance, action = _resolve_action(args)
    H = h1(action, budget=args.budget)
    zs = cocycles(action, budget=args.budget)
    payload = {
        "instance": instance,
        "cocycles": len(zs),
        "classes": H.size,
        "distinguished": H.distinguished,
        "representatives": [list(rep.values) for rep in H.reps()],
    }
    _emit(payload, args.format)
    return 0


def cmd_complements(args) -> int:
    instance, action = _resolve_action(args)
    P = semidirect(action)
    n_sub = P.n_part()
    comps = complements(P.group, n_sub)
    classes = subgroup_conjugacy_classes(P.group, comps, under=n_sub)
    payload = {
        "instance": instance,
        "group_order": P.group.order,
        "complements": [list(K.elements) for K in comps],
        "n_conjugacy_classes": len(classes),
        "h1_classes": h1(action, budget=args.budget).size,
    }
    _emit(payload, args.format)
    return 0


def cmd_decompose(args) -> int:
    instance, action = _resolve_action(args)
    report = decomposition_map(action, budget=args.budget)
    payload = {"instance": instance}
    payload.update(report.to_json())
    _emit(payload, args.format)
    return 0 if report.bijective else 1


def _parse_h_spec(raw: str | None):
    if raw is None:
        return "embedded_j"
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"--h: {exc.msg}", line=exc.lineno, column=exc.colno) from exc


def cmd_verify(args) -> int:
    instance, action = _resolve_action(args)
    relaxed = args.relaxed_hypotheses
    if args.theorem == "lemma1":
        report = verify_lemma1(action, instance, relaxed=relaxed)
    elif args.theorem == "prop2":
        P = semidirect(action)
        report = verify_prop2(P.group, P.n_part(), instance, relaxed=relaxed)
    elif args.theorem == "prop3":
        P = semidirect(action)
        report = verify_prop3(P.group, P.n_part(), instance, relaxed=relaxed)
    elif args.theorem == "prop5":
        P = semidirect(action)
        H = subgroup_of_semidirect(P, _parse_h_spec(args.h))
        report = verify_prop5(P.group, P.n_part(), P.j_part(), H, instance,
                              relaxed=relaxed)
    else:  # thm4
        P = semidirect(action)
        H = subgroup_of_semidirect(P, _parse_h_spec(args.h))
        report = verify_thm4(action, coset_gset(P.group, H), instance,
                             relaxed=relaxed)
    _emit(report.to_json(), args.format)
    if report.falsification:
        return 2
    return 0 if report.passed or (relaxed and not report.hypotheses_met) else 1


def cmd_suite(args) -> int:
    if args.scenario:
        scenario = load_scenario(args.scenario)
        checks = scenario_checks(scenario, relaxed=args.relaxed_hypotheses)
    else:
        checks = default_suite(relaxed=args.relaxed_hypotheses)
    if args.instance:
        checks = [c for c in checks if args.instance in c.instance]
        if not checks:
            raise ValidationError("cli", f"no checks match instance {args.instance!r}")
    outcomes = run_checks(checks)
    sys.stdout.write(report_emit(outcomes, args.format))
    return exit_code(outcomes)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcoh",
        description="First cohomology of finite nilpotent group actions, "
                    "complement conjugacy, and fixed-point verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scenario", help="path to a scenario (.scn) file")
        p.add_argument("--instance", help="catalog instance id (or scenario action)")
        p.add_argument("--budget", type=int, default=GENERATOR_ENUM_BUDGET,
                       help="cap on enumeration candidates")
        p.add_argument("--format", choices=("json", "human"), default="human")
        p.add_argument("--relaxed-hypotheses", action="store_true",
                       help="run conclusions as observations when hypotheses fail")

    p_catalog = sub.add_parser("catalog", help="list built-in instances")
    p_catalog.add_argument("--format", choices=("json", "human"), default="human")
    p_catalog.set_defaults(fn=cmd_catalog)

    p_h1 = sub.add_parser("h1", help="cocycles and cohomology classes of an action")
    common(p_h1)
    p_h1.set_defaults(fn=cmd_h1)

    p_comp = sub.add_parser("complements",
                            help="complements of N in the semidirect product")
    common(p_comp)
    p_comp.set_defaults(fn=cmd_complements)

    p_dec = sub.add_parser("decompose", help="Sylow-wise decomposition report")
    common(p_dec)
    p_dec.set_defaults(fn=cmd_decompose)

    p_ver = sub.add_parser("verify", help="run one verifier on one instance")
    p_ver.add_argument("theorem",
                       choices=("lemma1", "prop2", "prop3", "prop5", "thm4"))
    common(p_ver)
    p_ver.add_argument("--h", help="subgroup spec (JSON) for prop5/thm4")
    p_ver.set_defaults(fn=cmd_verify)

    p_suite = sub.add_parser("suite", help="run the default or a scenario suite")
    common(p_suite)
    p_suite.set_defaults(fn=cmd_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValidationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except NilcohError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
