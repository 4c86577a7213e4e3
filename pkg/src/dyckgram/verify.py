"""Cross-checking a family instance by every available route.

For one instance this runs: lowering against the stated closed form
(when the family has one), word-level checks of the grammar or equation
against the path oracle, a three-way count comparison (brute force, DP,
solved generating function), and the reference-sequence comparison for
families with a known count formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .families import FamilyInstance
from .grammar import (Grammar, check_equation, check_unambiguous, lower,
                      words)
from .oracle import (DEFAULT_ENUMERATION_CAP, Method, count_brute, count_dp,
                     enumerate_paths)
from .sequences import reference
from .series import DEFAULT_ORDER, solve

DEFAULT_MAX_LEN = 20
DEFAULT_N_MAX = 10


@dataclass(frozen=True)
class CountReport:
    """Per-semilength counts from several methods, compared pointwise."""

    methods: tuple[str, ...]
    counts: dict[str, tuple[int, ...]]

    @property
    def n_max(self) -> int:
        return len(next(iter(self.counts.values()))) - 1

    def row(self, n: int) -> tuple[int, ...]:
        return tuple(self.counts[m][n] for m in self.methods)

    def verdicts(self) -> tuple[bool, ...]:
        return tuple(len(set(self.row(n))) == 1 for n in range(self.n_max + 1))

    @property
    def passed(self) -> bool:
        return all(self.verdicts())

    def first_mismatch(self) -> int | None:
        for n, ok in enumerate(self.verdicts()):
            if not ok:
                return n
        return None


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class FamilyReport:
    instance: FamilyInstance
    checks: tuple[CheckOutcome, ...]
    counts: CountReport

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.counts.passed


def count_comparison(n_max, quad, methods=("brute", "dp"),
                     cap: int = DEFAULT_ENUMERATION_CAP) -> CountReport:
    counts = {}
    for m in methods:
        table = count_brute(n_max, quad, cap) if m == "brute" else count_dp(n_max, quad)
        counts[m] = table.sequence(n_max)
    return CountReport(tuple(methods), counts)


def verify_family(instance: FamilyInstance,
                  max_len: int = DEFAULT_MAX_LEN,
                  n_max: int = DEFAULT_N_MAX,
                  order: int = DEFAULT_ORDER,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> FamilyReport:
    checks: list[CheckOutcome] = []
    system = lower(instance.body)

    if instance.stated_system is not None:
        ok = system == instance.stated_system
        checks.append(CheckOutcome("lowering matches stated system", ok,
                                   "" if ok else f"derived {system}"))

    order = max(order, n_max + 1)
    solution = solve(system, order)[instance.start].require_counts()
    gf_counts = tuple(solution.coefficient(n) for n in range(n_max + 1))

    report = CountReport(
        ("brute", "dp", "series"),
        {"brute": count_brute(n_max, instance.quad, cap).sequence(n_max),
         "dp": count_dp(n_max, instance.quad).sequence(n_max),
         "series": gf_counts})
    mismatch = report.first_mismatch()
    checks.append(CheckOutcome(
        "counts agree (brute = dp = series)", mismatch is None,
        "" if mismatch is None else f"first mismatch at n={mismatch}: {report.row(mismatch)}"))

    if isinstance(instance.body, Grammar):
        amb = check_unambiguous(instance.body, instance.start, max_len)
        checks.append(CheckOutcome(
            "grammar unambiguous", amb.passed,
            "" if amb.passed else f"{amb.witness!r} derived {amb.multiplicity} ways"))
        got = set(words(instance.body, instance.start, max_len).counts)
        want = {p.text for n in range(max_len // 2 + 1)
                for p in enumerate_paths(n, instance.quad, cap=cap)}
        ok = got == want
        detail = ""
        if not ok:
            extra = sorted(got - want, key=lambda w: (len(w), w))[:3]
            missing = sorted(want - got, key=lambda w: (len(w), w))[:3]
            detail = f"extra={extra} missing={missing}"
        checks.append(CheckOutcome("grammar words = oracle language", ok, detail))
    else:
        eq = check_equation(instance.body, {instance.start: instance.quad},
                            max_len, enum_cap=cap)
        detail = ""
        if not eq.passed:
            detail = (f"{eq.witness!r}: lhs {eq.lhs_multiplicity}, "
                      f"rhs {eq.rhs_multiplicity}")
        checks.append(CheckOutcome("equation multisets equal", eq.passed, detail))

    if instance.count_reference is not None:
        seq_id, offset = instance.count_reference
        expect = tuple(reference(seq_id, n + offset) for n in range(n_max + 1))
        ok = expect == report.counts["brute"]
        checks.append(CheckOutcome(
            f"counts match {seq_id.value} (offset {offset})", ok,
            "" if ok else f"expected {expect}, got {report.counts['brute']}"))

    return FamilyReport(instance, tuple(checks), report)
