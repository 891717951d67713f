"""Exhaustive verification suites over all partitions up to a degree bound.

Each suite checks one family of exact identities and reports the number of
identities checked plus the first counterexample, if any.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .partitions import (
    Partition,
    cells,
    enumerate_partitions,
    hook_polynomial,
    hook_polynomial_qpower_form,
    parity_sum,
    partitions_through,
    verify_branching,
)
from .ring import A, S, monomial
from .skein import (
    OperatorExpression,
    P01_OP,
    P10_OP,
    P11_OP,
    SkeinVector,
    Z_BRACKET,
)
from .solver import (
    GeometryTag,
    UnknotBranch,
    closed_form,
    closed_form_unknot,
    solve_recursion,
    verify_annihilation,
)


@dataclass
class SuiteReport:
    suite: str
    max_degree: int
    checked: int = 0
    failures: int = 0
    first_counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = describe()

    def lines(self) -> list[str]:
        status = "pass" if self.passed else "FAIL"
        out = [f"suite={self.suite} max-degree={self.max_degree} "
               f"checked={self.checked} failures={self.failures} {status}"]
        if self.first_counterexample is not None:
            out.append(f"first counterexample: {self.first_counterexample}")
        return out


DEFAULT_DEGREES = {
    "recursion": 8,
    "branching": 12,
    "commutator": 10,
    "symmetry": 8,
    "annihilation": 8,
    "parity": 15,
    "hookforms": 12,
}

SUITES = tuple(DEFAULT_DEGREES)


def run_suite(name: str, max_degree: int | None = None) -> SuiteReport:
    if name not in DEFAULT_DEGREES:
        raise ValueError(f"unknown suite {name!r}")
    n = DEFAULT_DEGREES[name] if max_degree is None else max_degree
    report = SuiteReport(suite=name, max_degree=n)
    _RUNNERS[name](report, n)
    return report


def _run_recursion(report: SuiteReport, n: int) -> None:
    for tag in GeometryTag:
        psi = solve_recursion(tag, n)
        for p in partitions_through(n):
            expected = closed_form(tag, p)
            report.record(
                psi.coefficient(p) == expected,
                lambda tag=tag, p=p: f"geometry={tag.value} partition=({p})",
            )


def _run_branching(report: SuiteReport, n: int) -> None:
    for k in range(1, n + 1):
        for mu in enumerate_partitions(k):
            report.record(verify_branching(mu), lambda mu=mu: f"partition=({mu})")


def _run_commutator(report: SuiteReport, n: int) -> None:
    bracket = OperatorExpression.commutator(P10_OP, P01_OP)
    scaled = P11_OP.scale(Z_BRACKET)
    for k in range(n + 1):
        for p in enumerate_partitions(k):
            basis = SkeinVector.basis(p, max_degree=k + 1)
            report.record(
                scaled.apply(basis) == bracket.apply(basis),
                lambda p=p: f"partition=({p})",
            )


def _run_symmetry(report: SuiteReport, n: int) -> None:
    for k in range(n + 1):
        for p in enumerate_partitions(k):
            report.record(
                swap_symmetry_check_single(p), lambda p=p: f"partition=({p})")


def swap_symmetry_check_single(p: Partition) -> bool:
    plain = closed_form_unknot(p, UnknotBranch.PLAIN)
    return plain.substitute({"a": A ** -1, "s": -S}) == closed_form_unknot(
        p, UnknotBranch.PRIME)


def _run_annihilation(report: SuiteReport, n: int) -> None:
    for tag in GeometryTag:
        psi = solve_recursion(tag, n)
        report.record(
            verify_annihilation(tag, psi),
            lambda tag=tag: f"geometry={tag.value} through degree {n}",
        )


def _run_parity(report: SuiteReport, n: int) -> None:
    for k in range(n + 1):
        for p in enumerate_partitions(k):
            report.record(parity_sum(p) % 2 == 0, lambda p=p: f"partition=({p})")


def _run_hookforms(report: SuiteReport, n: int) -> None:
    s_inverse = S ** -1
    for k in range(n + 1):
        for p in enumerate_partitions(k):
            product_form = hook_polynomial(p)
            report.record(
                product_form == hook_polynomial_qpower_form(p),
                lambda p=p: f"double formula, partition=({p})",
            )
            total_content = sum(c.content for c in cells(p))
            balanced = product_form * monomial(1, s=-total_content)
            report.record(
                balanced == balanced.substitute({"s": s_inverse}),
                lambda p=p: f"palindromicity, partition=({p})",
            )


_RUNNERS = {
    "recursion": _run_recursion,
    "branching": _run_branching,
    "commutator": _run_commutator,
    "symmetry": _run_symmetry,
    "annihilation": _run_annihilation,
    "parity": _run_parity,
    "hookforms": _run_hookforms,
}
