"""Scenario files: JSON documents naming groups, actions, G-sets, and checks.

A scenario is fully validated at load time; every constructor failure is
reported as a ValidationError naming the constructor, and malformed JSON as a
ParseError with line and column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from ..actions import (
    ActionOnGroup,
    GSet,
    SemidirectProduct,
    action_from_generator_images,
    coset_gset,
    semidirect,
    trivial_action,
)
from ..errors import NilcohError, ParseError, UnknownCheck, ValidationError
from ..groups import Group, Subgroup, group_from_table, group_from_permutations, subgroup_generated
from .catalog import (
    BUILTIN_GROUPS,
    direct_product,
    inversion_action,
    swap_action,
)

KNOWN_VERIFIERS = ("lemma1", "prop2", "prop3", "prop5", "thm4")
KNOWN_CHECKS = ("h1", "complements", "decompose")


@dataclass
class ScenarioCheck:
    kind: str                 # verifier or computational check name
    instance: str
    spec: dict
    expect_hypothesis_fail: bool = False


@dataclass
class Scenario:
    id: str
    groups: dict[str, Group] = field(default_factory=dict)
    actions: dict[str, ActionOnGroup] = field(default_factory=dict)
    gsets: dict[str, tuple[str, GSet]] = field(default_factory=dict)  # action name, gset
    checks: list[ScenarioCheck] = field(default_factory=list)
    semidirects: dict[str, SemidirectProduct] = field(default_factory=dict)

    def semidirect_of(self, action_name: str) -> SemidirectProduct:
        if action_name not in self.semidirects:
            self.semidirects[action_name] = semidirect(self.actions[action_name])
        return self.semidirects[action_name]


def _build_group(spec, groups: dict[str, Group], where: str) -> Group:
    if isinstance(spec, str):
        if spec not in groups:
            raise ValidationError(where, f"unknown group name {spec!r}")
        return groups[spec]
    if not isinstance(spec, dict):
        raise ValidationError(where, "group spec must be a name or an object")
    try:
        if "builtin" in spec:
            name = spec["builtin"]
            if name == "direct_product":
                parts = [_build_group(s, groups, where) for s in spec["factors"]]
                if not parts:
                    raise ValidationError(where, "direct_product needs factors")
                out = parts[0]
                for rhs in parts[1:]:
                    out = direct_product(out, rhs)
                return out
            if name not in BUILTIN_GROUPS:
                raise ValidationError(where, f"unknown builtin group {name!r}")
            kwargs = {k: v for k, v in spec.items() if k != "builtin"}
            return BUILTIN_GROUPS[name](**kwargs)
        kind = spec.get("kind")
        if kind == "table":
            return group_from_table(spec["mul"])
        if kind == "perm":
            return group_from_permutations(spec["generators"],
                                           degree=spec.get("degree"))
    except ValidationError:
        raise
    except NilcohError as exc:
        raise ValidationError(where, f"{type(exc).__name__}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(where, str(exc)) from exc
    raise ValidationError(where, f"unrecognized group spec {spec!r}")


def _build_action(spec: dict, groups: dict[str, Group], where: str) -> ActionOnGroup:
    try:
        if "builtin" in spec:
            name = spec["builtin"]
            if name == "trivial":
                return trivial_action(
                    _build_group(spec["actor"], groups, where),
                    _build_group(spec["target"], groups, where),
                )
            if name == "inversion":
                return inversion_action(_build_group(spec["target"], groups, where))
            if name == "swap":
                return swap_action(_build_group(spec["factor"], groups, where))
            raise ValidationError(where, f"unknown builtin action {name!r}")
        return action_from_generator_images(
            _build_group(spec["actor"], groups, where),
            _build_group(spec["target"], groups, where),
            spec["gens"],
            spec["images"],
        )
    except ValidationError:
        raise
    except NilcohError as exc:
        raise ValidationError(where, f"{type(exc).__name__}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(where, str(exc)) from exc


def subgroup_of_semidirect(P: SemidirectProduct, spec, where: str = "subgroup") -> Subgroup:
    """Resolve a subgroup spec against a semidirect product.

    Accepts "embedded_j", "embedded_n", "whole", "trivial", {"elements": [...]},
    or {"generated_by": [[n, j], ...]} with pairs in N x J coordinates.
    """
    G = P.group
    nj = P.action.actor.order
    try:
        if spec == "embedded_j":
            return Subgroup(G, range(nj))
        if spec == "embedded_n":
            return Subgroup(G, (n * nj for n in range(P.action.target.order)))
        if spec == "whole":
            return Subgroup(G, range(G.order))
        if spec == "trivial":
            return Subgroup(G, (0,))
        if isinstance(spec, dict) and "elements" in spec:
            return Subgroup(G, spec["elements"])
        if isinstance(spec, dict) and "generated_by" in spec:
            seeds = [int(n) * nj + int(j) for n, j in spec["generated_by"]]
            return subgroup_generated(G, seeds)
    except NilcohError as exc:
        raise ValidationError(where, f"{type(exc).__name__}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(where, str(exc)) from exc
    raise ValidationError(where, f"unrecognized subgroup spec {spec!r}")


def _build_gset(spec: dict, scenario: Scenario, where: str) -> tuple[str, GSet]:
    try:
        action_name = spec["action"]
        if action_name not in scenario.actions:
            raise ValidationError(where, f"unknown action name {action_name!r}")
        P = scenario.semidirect_of(action_name)
        if "coset_of" in spec:
            H = subgroup_of_semidirect(P, spec["coset_of"], where)
            return action_name, coset_gset(P.group, H)
        if "act" in spec:
            return action_name, GSet(P.group, spec["act"])
    except ValidationError:
        raise
    except NilcohError as exc:
        raise ValidationError(where, f"{type(exc).__name__}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(where, str(exc)) from exc
    raise ValidationError(where, f"unrecognized gset spec {spec!r}")


def _reject_duplicate_names(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise ValidationError("scenario", f"duplicate name {key!r}")
        out[key] = value
    return out


def load_scenario(path: str | Path) -> Scenario:
    """Parse and fully validate a scenario file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_names)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    if not isinstance(doc, dict) or "id" not in doc:
        raise ValidationError("scenario", "document must be an object with an 'id'")
    scenario = Scenario(id=str(doc["id"]))
    for name, spec in (doc.get("groups") or {}).items():
        scenario.groups[name] = _build_group(spec, scenario.groups, f"group {name!r}")
    for name, spec in (doc.get("actions") or {}).items():
        scenario.actions[name] = _build_action(spec, scenario.groups, f"action {name!r}")
    for name, spec in (doc.get("gsets") or {}).items():
        scenario.gsets[name] = _build_gset(spec, scenario, f"gset {name!r}")
    for i, spec in enumerate(doc.get("checks") or []):
        if not isinstance(spec, dict):
            raise ValidationError(f"check {i}", "check must be an object")
        if "verify" in spec:
            kind = spec["verify"]
            if kind not in KNOWN_VERIFIERS:
                raise UnknownCheck(kind)
        elif "check" in spec:
            kind = spec["check"]
            if kind not in KNOWN_CHECKS:
                raise UnknownCheck(kind)
        else:
            raise ValidationError(f"check {i}", "needs a 'verify' or 'check' key")
        _validate_check_refs(spec, scenario, i)
        scenario.checks.append(
            ScenarioCheck(
                kind=kind,
                instance=f"{scenario.id}/{i}:{kind}",
                spec=spec,
                expect_hypothesis_fail=bool(spec.get("expect_hypothesis_fail")),
            )
        )
    return scenario


def _validate_check_refs(spec: dict, scenario: Scenario, i: int) -> None:
    where = f"check {i}"
    if "action" in spec and spec["action"] not in scenario.actions:
        raise ValidationError(where, f"unknown action name {spec['action']!r}")
    if "gset" in spec and spec["gset"] not in scenario.gsets:
        raise ValidationError(where, f"unknown gset name {spec['gset']!r}")
    if "group" in spec and spec["group"] not in scenario.groups:
        raise ValidationError(where, f"unknown group name {spec['group']!r}")
    needs_action = spec.get("verify") in ("lemma1", "prop5") or spec.get("check") in KNOWN_CHECKS
    if needs_action and "action" not in spec:
        raise ValidationError(where, "this check needs an 'action' reference")
    if spec.get("verify") in ("prop2", "prop3") and not ({"action", "group"} & set(spec)):
        raise ValidationError(where, "this check needs an 'action' or 'group' reference")
    if spec.get("verify") == "thm4" and "gset" not in spec:
        raise ValidationError(where, "thm4 needs a 'gset' reference")
