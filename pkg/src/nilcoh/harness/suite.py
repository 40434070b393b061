"""Suite orchestration: the default check battery over the catalog, scenario
check execution, and deterministic report emission.

Exit codes: 0 all checks pass, 1 check failure, 2 falsification, 3 input
error (the CLI maps load-time errors to 3).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from ..actions import coset_gset, semidirect
from ..cohomology import cocycle_to_complement, eq3_check, h1
from ..errors import NilcohError, NotAbelian
from ..groups import Group, subgroup_generated
from ..structure import complements, subgroup_conjugacy_classes
from ..theorems import (
    VerificationReport,
    verify_lemma1,
    verify_prop2,
    verify_prop3,
    verify_prop5,
    verify_thm4,
)
from .catalog import CATALOG, EQ3_EXTRA, ActionInstance, cyclic, dihedral, direct_product
from .scenario import Scenario, ScenarioCheck, subgroup_of_semidirect


@dataclass
class SuiteCheck:
    instance: str
    run: Callable[[], VerificationReport]
    expect_hypothesis_fail: bool = False


@dataclass
class CheckOutcome:
    report: VerificationReport
    expect_hypothesis_fail: bool = False

    @property
    def ok(self) -> bool:
        if self.report.falsification:
            return False
        if self.expect_hypothesis_fail:
            return not self.report.hypotheses_met
        return self.report.passed


def correspondence_report(action, instance: str, max_gens: int = 3) -> VerificationReport:
    """Check the complement correspondence on the induced semidirect product:
    classes of H1 biject with N-conjugacy classes of independently enumerated
    complements."""
    t0 = time.perf_counter()
    report = VerificationReport("correspondence", instance)
    P = semidirect(action)
    G = P.group
    n_sub = P.n_part()
    report.hypotheses["within_order_cap"] = True
    comps = complements(G, n_sub, max_gens=max_gens)
    classes = subgroup_conjugacy_classes(G, comps, under=n_sub)
    H = h1(action)
    ok = H.size == len(classes)
    # The correspondence itself: class representatives map to pairwise
    # non-N-conjugate complements covering every N-class.
    mapped = [cocycle_to_complement(P, rep) for rep in H.reps()]
    mapped_keys = {K.elements for K in mapped}
    if len(mapped_keys) != len(mapped):
        ok = False
    enumerated = {K.elements for K in comps}
    if not mapped_keys <= enumerated:
        ok = False
    else:
        comp_index = {K.elements: i for i, K in enumerate(comps)}
        class_of_comp = {}
        for ci, members in enumerate(classes):
            for m in members:
                class_of_comp[m] = ci
        hit_classes = {class_of_comp[comp_index[K.elements]] for K in mapped}
        if len(hit_classes) != len(classes):
            ok = False
    report.conclusion_verified = ok
    report.witness = {
        "h1_classes": H.size,
        "complements": len(comps),
        "n_conjugacy_classes": len(classes),
    }
    report.elapsed = time.perf_counter() - t0
    return report


def eq3_report(action, instance: str) -> VerificationReport:
    """Wrap the abelian primary-decomposition cross-check as a report."""
    t0 = time.perf_counter()
    report = VerificationReport("eq3", instance)
    try:
        result = eq3_check(action)
        report.hypotheses["n_abelian"] = True
    except NotAbelian as exc:
        report.hypotheses["n_abelian"] = False
        report.details["n_abelian"] = str(exc)
        report.elapsed = time.perf_counter() - t0
        return report
    report.conclusion_verified = result.ok
    report.witness = result.to_json()
    report.elapsed = time.perf_counter() - t0
    return report


def _thm4_check(inst: ActionInstance, tag: str, coset_spec,
                expect_fail: bool = False, relaxed: bool = False) -> SuiteCheck:
    def run() -> VerificationReport:
        action = inst.action()
        P = semidirect(action)
        H = subgroup_of_semidirect(P, coset_spec)
        gset = coset_gset(P.group, H)
        return verify_thm4(action, gset, instance=f"{inst.id}/thm4:{tag}",
                           relaxed=relaxed)

    return SuiteCheck(f"{inst.id}/thm4:{tag}", run, expect_hypothesis_fail=expect_fail)


def _prop5_semidirect_check(inst: ActionInstance, tag: str, h_spec,
                            expect_fail: bool = False,
                            relaxed: bool = False) -> SuiteCheck:
    def run() -> VerificationReport:
        action = inst.action()
        P = semidirect(action)
        H = subgroup_of_semidirect(P, h_spec)
        return verify_prop5(
            P.group, P.n_part(), P.j_part(), H,
            instance=f"{inst.id}/prop5:{tag}", relaxed=relaxed,
        )

    return SuiteCheck(f"{inst.id}/prop5:{tag}", run, expect_hypothesis_fail=expect_fail)


def _ambient_prop5_check(tag: str, build: Callable[[], tuple[Group, list[int], list[int], list[int]]],
                         expect_fail: bool = False,
                         relaxed: bool = False) -> SuiteCheck:
    def run() -> VerificationReport:
        G, n_seed, j_seed, h_seed = build()
        return verify_prop5(
            G,
            subgroup_generated(G, n_seed),
            subgroup_generated(G, j_seed),
            subgroup_generated(G, h_seed),
            instance=f"ambient/prop5:{tag}", relaxed=relaxed,
        )

    return SuiteCheck(f"ambient/prop5:{tag}", run, expect_hypothesis_fail=expect_fail)


def default_suite(max_gens: int = 3, relaxed: bool = False) -> list[SuiteCheck]:
    """The shipped suite: every catalog action through the decomposition,
    correspondence, and complement-conjugacy verifiers, plus curated
    fixed-point, conjugator, and hypothesis-failure instances."""
    checks: list[SuiteCheck] = []

    def add(instance: str, fn: Callable[[], VerificationReport],
            expect_fail: bool = False) -> None:
        checks.append(SuiteCheck(instance, fn, expect_hypothesis_fail=expect_fail))

    for inst in CATALOG:
        add(f"{inst.id}/lemma1",
            lambda inst=inst: verify_lemma1(inst.action(), f"{inst.id}/lemma1",
                                            relaxed=relaxed))
        add(f"{inst.id}/correspondence",
            lambda inst=inst: correspondence_report(
                inst.action(), f"{inst.id}/correspondence", max_gens=max_gens))
        add(f"{inst.id}/prop2",
            lambda inst=inst: _prop2_on_semidirect(inst, max_gens, relaxed))
    for inst in CATALOG + EQ3_EXTRA:
        if "abelian_n" in inst.tags:
            add(f"{inst.id}/eq3",
                lambda inst=inst: eq3_report(inst.action(), f"{inst.id}/eq3"))

    by_id = {inst.id: inst for inst in CATALOG}

    # Fixed-point instances over coset spaces of the semidirect products.
    checks.append(_thm4_check(by_id["c2_inv_c4"], "omega_j", "embedded_j",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c2_inv_c4"], "omega_other_class",
                              {"generated_by": [[1, 1]]}, expect_fail=True,
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c2_inv_c4"], "omega_point", "whole",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c2_inv_c4"], "omega_regular", "trivial",
                              expect_fail=True, relaxed=relaxed))
    checks.append(_thm4_check(by_id["c2_swap_c2c2"], "omega_j", "embedded_j",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c6_inv_c6"], "omega_j", "embedded_j",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c6_inv_c6"], "omega_supplement",
                              {"generated_by": [[0, 1], [3, 0]]},
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c3_cycle_q8"], "omega_j", "embedded_j",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["q8_conj_q8"], "omega_center_supplement",
                              {"generated_by": [[0, 2], [0, 4], [1, 0]]},
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c3_inner_heis3"], "omega_j", "embedded_j",
                              relaxed=relaxed))
    checks.append(_thm4_check(by_id["c6_twist_q8c3"], "omega_supplement",
                              {"generated_by": [[0, 1], [3, 0]]},
                              relaxed=relaxed))

    # Conjugator searches, semidirect and ambient.
    checks.append(_prop5_semidirect_check(
        by_id["c2_inv_c4"], "twisted_complement", {"elements": [0, 5]},
        relaxed=relaxed))
    checks.append(_prop5_semidirect_check(
        by_id["c6_inv_c6"], "supplement", {"generated_by": [[0, 1], [3, 0]]},
        relaxed=relaxed))
    checks.append(_prop5_semidirect_check(
        by_id["c6_inv_c12"], "supplement", {"generated_by": [[0, 1], [6, 0]]},
        relaxed=relaxed))
    checks.append(_prop5_semidirect_check(
        by_id["q8_conj_q8"], "center_supplement",
        {"generated_by": [[0, 2], [0, 4], [1, 0]]}, relaxed=relaxed))
    checks.append(_prop5_semidirect_check(
        by_id["c6_twist_q8c3"], "supplement",
        {"generated_by": [[0, 1], [3, 0]]}, relaxed=relaxed))
    checks.append(_ambient_prop5_check(
        "d4_contains_j", lambda: (dihedral(4), [1], [4], [4, 2]),
        relaxed=relaxed))
    checks.append(_ambient_prop5_check(
        "d4_wrong_class", lambda: (dihedral(4), [1], [4], [5, 2]),
        expect_fail=True, relaxed=relaxed))

    # Local-to-global conjugacy of complements in ambient groups.
    add("ambient/prop3:d4_c4",
        lambda: verify_prop3(dihedral(4), subgroup_generated(dihedral(4), [1]),
                             "ambient/prop3:d4_c4", relaxed=relaxed),
        expect_fail=True)
    add("ambient/prop3:s3_c3",
        lambda: verify_prop3(dihedral(3), subgroup_generated(dihedral(3), [1]),
                             "ambient/prop3:s3_c3", relaxed=relaxed))
    add("ambient/prop3:c6_c3",
        lambda: _prop3_on_c6(relaxed))
    add("c2_swap_c2c2/prop3",
        lambda: _prop3_on_semidirect(by_id["c2_swap_c2c2"], max_gens, relaxed))
    add("ambient/prop2:d4_c4",
        lambda: verify_prop2(dihedral(4), subgroup_generated(dihedral(4), [1]),
                             "ambient/prop2:d4_c4", relaxed=relaxed))
    add("ambient/prop2:s3_c3",
        lambda: verify_prop2(dihedral(3), subgroup_generated(dihedral(3), [1]),
                             "ambient/prop2:s3_c3", relaxed=relaxed))
    return checks


def _prop2_on_semidirect(inst: ActionInstance, max_gens: int,
                         relaxed: bool = False) -> VerificationReport:
    P = semidirect(inst.action())
    return verify_prop2(P.group, P.n_part(), f"{inst.id}/prop2",
                        max_gens=max_gens, relaxed=relaxed)


def _prop3_on_semidirect(inst: ActionInstance, max_gens: int,
                         relaxed: bool = False) -> VerificationReport:
    P = semidirect(inst.action())
    return verify_prop3(P.group, P.n_part(), f"{inst.id}/prop3",
                        max_gens=max_gens, relaxed=relaxed)


def _prop3_on_c6(relaxed: bool = False) -> VerificationReport:
    G = direct_product(cyclic(2), cyclic(3))
    return verify_prop3(G, subgroup_generated(G, [1]), "ambient/prop3:c6_c3",
                        relaxed=relaxed)


# -- scenario execution ------------------------------------------------------------


def scenario_checks(scenario: Scenario, relaxed: bool = False) -> list[SuiteCheck]:
    out = []
    for check in scenario.checks:
        out.append(
            SuiteCheck(
                check.instance,
                lambda check=check: run_scenario_check(scenario, check, relaxed),
                expect_hypothesis_fail=check.expect_hypothesis_fail,
            )
        )
    return out


def run_scenario_check(scenario: Scenario, check: ScenarioCheck,
                       relaxed: bool = False) -> VerificationReport:
    spec = check.spec
    kind = check.kind
    if kind == "lemma1":
        return verify_lemma1(scenario.actions[spec["action"]], check.instance,
                             relaxed=relaxed)
    if kind in ("prop2", "prop3"):
        if "action" in spec:
            P = scenario.semidirect_of(spec["action"])
            G, N = P.group, P.n_part()
        else:
            G = scenario.groups[spec["group"]]
            N = subgroup_generated(G, spec.get("normal", {}).get("generated_by", []))
        fn = verify_prop2 if kind == "prop2" else verify_prop3
        return fn(G, N, check.instance, relaxed=relaxed)
    if kind == "prop5":
        P = scenario.semidirect_of(spec["action"])
        H = subgroup_of_semidirect(P, spec.get("h", "embedded_j"))
        return verify_prop5(P.group, P.n_part(), P.j_part(), H, check.instance,
                            relaxed=relaxed)
    if kind == "thm4":
        action_name, gset = scenario.gsets[spec["gset"]]
        return verify_thm4(scenario.actions[action_name], gset, check.instance,
                           relaxed=relaxed)
    if kind == "h1":
        return _h1_report(scenario, check)
    if kind == "complements":
        action = scenario.actions[spec["action"]]
        return correspondence_report(action, check.instance)
    if kind == "decompose":
        return verify_lemma1(scenario.actions[spec["action"]], check.instance,
                             relaxed=relaxed)
    raise NilcohError(f"unhandled check kind {kind}")  # pragma: no cover


def _h1_report(scenario: Scenario, check: ScenarioCheck) -> VerificationReport:
    from ..cohomology import cocycles, cocycles_bruteforce

    t0 = time.perf_counter()
    action = scenario.actions[check.spec["action"]]
    report = VerificationReport("h1", check.instance)
    H = h1(action)
    zs = cocycles(action)
    ok = True
    oracle_limit = check.spec.get("oracle_limit", 8)
    if action.actor.order <= oracle_limit and action.target.order <= oracle_limit:
        brute = cocycles_bruteforce(action)
        ok &= [c.values for c in zs] == [c.values for c in brute]
        report.hypotheses["oracle_in_budget"] = True
    report.conclusion_verified = ok
    expected = True
    if "expect_classes" in check.spec:
        expected &= H.size == check.spec["expect_classes"]
    if "expect_cocycles" in check.spec:
        expected &= len(zs) == check.spec["expect_cocycles"]
    if "expect_classes" in check.spec or "expect_cocycles" in check.spec:
        report.expectation_met = expected
    report.witness = {"classes": H.size, "cocycles": len(zs)}
    report.elapsed = time.perf_counter() - t0
    return report


# -- running and reporting ---------------------------------------------------------


def run_checks(checks: Iterable[SuiteCheck]) -> list[CheckOutcome]:
    outcomes = []
    for check in checks:
        try:
            report = check.run()
        except NilcohError as exc:
            report = VerificationReport("error", check.instance)
            report.hypotheses["ran"] = False
            report.details["ran"] = f"{type(exc).__name__}: {exc}"
            report.conclusion_verified = False
        outcomes.append(CheckOutcome(report, check.expect_hypothesis_fail))
    return outcomes


def exit_code(outcomes: list[CheckOutcome]) -> int:
    if any(o.report.falsification for o in outcomes):
        return 2
    if any(not o.ok for o in outcomes):
        return 1
    return 0


def report_emit(outcomes: list[CheckOutcome], fmt: str = "json") -> str:
    """Render outcomes: json-lines with stable key order, or a human table."""
    if fmt == "json":
        lines = [
            json.dumps(o.report.to_json(), sort_keys=True, separators=(",", ":"))
            for o in outcomes
        ]
        return "\n".join(lines) + ("\n" if lines else "")
    rows = []
    n_pass = n_fail = n_fals = 0
    for o in outcomes:
        rep = o.report
        if rep.falsification:
            status, n_fals = "FALSIFICATION", n_fals + 1
        elif o.ok:
            status, n_pass = "pass", n_pass + 1
            if o.expect_hypothesis_fail:
                status = "pass (hypotheses unmet, as expected)"
        else:
            status, n_fail = "FAIL", n_fail + 1
        rows.append((rep.instance, rep.theorem, status))
    width = max((len(r[0]) for r in rows), default=8)
    out = [f"{r[0]:<{width}}  {r[1]:<14}  {r[2]}" for r in rows]
    out.append("")
    out.append(f"{len(rows)} checks: {n_pass} passed, {n_fail} failed, "
               f"{n_fals} falsifications")
    if n_fals:
        out.append("FALSIFICATION present: see records above")
    return "\n".join(out) + "\n"


def run_suite(checks: Iterable[SuiteCheck], fmt: str = "json") -> tuple[int, str]:
    outcomes = run_checks(list(checks))
    return exit_code(outcomes), report_emit(outcomes, fmt)
