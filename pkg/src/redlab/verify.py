"""Verification harnesses: reference-table checks and exhaustive sweeps.

Everything here confronts two independent routes with each other:
closed-form discrepancies against exact matrix solves, and the pattern
membership test for redundancy-free graphs against redundant points
computed from solved discrepancies.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import get_context

from .dualgraph import (chain_graph, d_graph, d_type_closed_form,
                        discrepancies)
from .families import (BRACKET_FAMILIES, CHAINS_WITH_REDUNDANT_POINT,
                       CHAINS_WITHOUT_REDUNDANT_POINT,
                       single_vertex_discrepancy)
from .hjcf import hj_eval
from .redundancy import is_redundancy_free, negative_part, redundant_points


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        state = "OK" if self.ok else f"{len(self.failures)} FAILURES"
        return f"{self.name}: {self.checked} checked, {state}"


def check_chain_tables(single_max: int = 12) -> CheckResult:
    """Chain discrepancy tables, plus presence/absence of redundant points."""
    res = CheckResult("chain tables")
    for table, expect_redundant in (
        (CHAINS_WITHOUT_REDUNDANT_POINT, False),
        (CHAINS_WITH_REDUNDANT_POINT, True),
    ):
        for ws, want in table.items():
            g = chain_graph(ws)
            got = discrepancies(g).as_tuple()
            res.checked += 1
            if got != want:
                res.failures.append(f"{list(ws)}: solved {got} != table {want}")
            has_red = bool(redundant_points(negative_part(g)))
            if has_red != expect_redundant:
                res.failures.append(
                    f"{list(ws)}: redundant point {'missing' if expect_redundant else 'found'}")
    for n in range(2, single_max + 1):
        g = chain_graph([n])
        got = discrepancies(g).as_tuple()
        res.checked += 1
        if got != (single_vertex_discrepancy(n),):
            res.failures.append(f"[{n}]: solved {got}")
        if redundant_points(negative_part(g)):
            res.failures.append(f"[{n}]: unexpected redundant point")
    return res


def check_bracket_families(b_min: int = 2, b_max: int = 10) -> CheckResult:
    """Bracket stars: matrix solves equal the closed forms for every b, and
    the center-leaf point is redundant (a_0 + a_1 >= 1) unless canonical."""
    res = CheckResult("bracket families")
    for fam in BRACKET_FAMILIES:
        for b in range(b_min, b_max + 1):
            g = fam.graph(b)
            want = fam.closed_form(b)
            got = discrepancies(g).as_tuple()
            res.checked += 1
            if got != want:
                res.failures.append(f"{fam.name} b={b}: solved {got} != {want}")
                continue
            canonical = all(x == 0 for x in got)
            if not canonical and got[0] + got[1] < 1:
                res.failures.append(f"{fam.name} b={b}: a0 + a1 = {got[0] + got[1]} < 1")
            has_red = bool(redundant_points(negative_part(g)))
            if has_red == canonical:
                res.failures.append(f"{fam.name} b={b}: redundancy/canonical mismatch")
    return res


def check_d_closed_forms(b_max: int = 8, arm_len_max: int = 5,
                         weight_max: int = 5) -> CheckResult:
    """D shapes: closed forms against matrix solves, and the four-case
    behaviour in terms of q - q1 (redundant unless canonical)."""
    res = CheckResult("D closed forms")
    for b in range(2, b_max + 1):
        for l in range(1, arm_len_max + 1):
            for arm in itertools.product(range(2, weight_max + 1), repeat=l):
                g = d_graph(b, arm)
                d = discrepancies(g).as_tuple()
                a0, a1, al, tip = d_type_closed_form(b, arm)
                res.checked += 1
                if (d[0], d[1], d[l], d[l + 1], d[l + 2]) != (a0, a1, al, tip, tip):
                    res.failures.append(f"D b={b} arm={list(arm)}: {d}")
                    continue
                q, q1 = hj_eval(arm)
                canonical = b == 2 and q == q1 + 1
                if b >= 3 or (b == 2 and q >= q1 + 3):
                    if a0 + tip < 1:
                        res.failures.append(
                            f"D b={b} arm={list(arm)}: a0 + tip = {a0 + tip} < 1")
                elif b == 2 and q == q1 + 2:
                    half = Fraction(1, 2)
                    tail_ok = arm[-1] == 3 and all(w == 2 for w in arm[:-1])
                    if not tail_ok or a0 != half or a1 != half:
                        res.failures.append(f"D b=2 arm={list(arm)}: q = q1 + 2 case")
                elif canonical:
                    if any(x != 0 for x in d):
                        res.failures.append(f"D b=2 arm={list(arm)}: not canonical")
                has_red = bool(redundant_points(negative_part(g)))
                if has_red == canonical:
                    res.failures.append(
                        f"D b={b} arm={list(arm)}: redundancy/canonical mismatch")
    return res


@dataclass
class ClassificationReport:
    chains_checked: int = 0
    chains_redundant: int = 0
    d_checked: int = 0
    brackets_checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "ClassificationReport") -> None:
        self.chains_checked += other.chains_checked
        self.chains_redundant += other.chains_redundant
        self.d_checked += other.d_checked
        self.brackets_checked += other.brackets_checked
        self.counterexamples.extend(other.counterexamples)


def _sweep_chain_prefix(args: tuple[int, int, int]) -> ClassificationReport:
    """Check every chain starting with the given first weight."""
    first, max_len, max_weight = args
    rep = ClassificationReport()
    rng = range(2, max_weight + 1)
    for l in range(1, max_len + 1):
        for rest in itertools.product(rng, repeat=l - 1):
            ws = (first,) + rest
            g = chain_graph(ws)
            has_red = bool(redundant_points(negative_part(g)))
            member = is_redundancy_free(g)
            rep.chains_checked += 1
            if has_red:
                rep.chains_redundant += 1
            if has_red == member:
                rep.counterexamples.append(
                    f"chain {list(ws)}: redundant={has_red}, listed free={member}")
    return rep


def verify_classification(max_len: int, max_weight: int, jobs: int = 1,
                          chains: bool = True, d_types: bool = True,
                          brackets: bool = True) -> ClassificationReport:
    """Exhaustive consistency sweep.

    Chains: for every string with length <= max_len and weights in
    [2, max_weight], absence of redundant points (computed from solved
    discrepancies) must coincide with the pattern membership test.
    D shapes and bracket stars: a redundant point exists iff the graph is
    not canonical.
    """
    if max_len < 1 or max_weight < 2:
        raise ValueError("need max_len >= 1 and max_weight >= 2")
    report = ClassificationReport()
    if chains:
        tasks = [(w, max_len, max_weight) for w in range(2, max_weight + 1)]
        if jobs > 1:
            with get_context("fork").Pool(processes=jobs) as pool:
                parts = pool.map(_sweep_chain_prefix, tasks)
        else:
            parts = [_sweep_chain_prefix(t) for t in tasks]
        for part in parts:
            report.merge(part)
    if d_types:
        for b in range(2, max_weight + 1):
            for l in range(1, max_len + 1):
                for arm in itertools.product(range(2, max_weight + 1), repeat=l):
                    g = d_graph(b, arm)
                    has_red = bool(redundant_points(negative_part(g)))
                    canonical = b == 2 and all(w == 2 for w in arm)
                    report.d_checked += 1
                    if has_red == canonical:
                        report.counterexamples.append(
                            f"D b={b} arm={list(arm)}: redundant={has_red}")
                    if is_redundancy_free(g) != canonical:
                        report.counterexamples.append(
                            f"D b={b} arm={list(arm)}: membership mismatch")
    if brackets:
        for fam in BRACKET_FAMILIES:
            for b in range(2, max_weight + 1):
                g = fam.graph(b)
                has_red = bool(redundant_points(negative_part(g)))
                canonical = fam.is_canonical_at(b)
                report.brackets_checked += 1
                if has_red == canonical:
                    report.counterexamples.append(
                        f"bracket {fam.name} b={b}: redundant={has_red}")
                if is_redundancy_free(g) != canonical:
                    report.counterexamples.append(
                        f"bracket {fam.name} b={b}: membership mismatch")
    return report
