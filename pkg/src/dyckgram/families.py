"""Constructors for the catalogued families of restricted Dyck paths.

Each family id (F1..F3, F5..F11; there is no F4) names a parameterized
restriction on peak heights, valley heights, or run lengths, together
with a structural description of the language: either a grammar whose
words are exactly the restricted paths, or a grammatical equation whose
two sides agree as word multisets.  ``build`` returns the restriction
quad, the grammar or equation, and, where a closed form is stated for
the family, the lowered series system transcribed independently of the
grammar (so lowering can be tested against it).

The catalogue:

  F1   peaks avoid ap(2,3), up-runs avoid 3..       counts 1, 2^(n-1)
  F2   peaks avoid ap(2,3), up-runs avoid 4..       shifted GEN_CATALAN
  F3   up-runs avoid 3..                            Motzkin
  F5   up-runs avoid ap(A,B), 1 <= B < A            grammar
  F6   up-runs avoid ap(A,B), 1 <= A <= B           equation
  F7   down-runs avoid ap(A,B), 1 <= B < A          grammar
  F8   down-runs avoid ap(A,B), 1 <= A <= B         equation
  F9   both run kinds avoid 1..r                    equation
  F10  up-runs avoid 1..m, down-runs avoid 1..n     equation
  F11  up-runs avoid 1..r, down-runs avoid k+1..r   equation
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .grammar import (D, EPSILON, GExpr, Grammar, GrammaticalEquation, NonTerm,
                      U, rep, seq)
from .intsets import IntSet, Progression, Range, RestrictionQuad
from .sequences import SeqId
from .series import DEFAULT_ORDER, Poly, SeriesSystem, TruncatedSeries

FAMILY_IDS = ("F1", "F2", "F3", "F5", "F6", "F7", "F8", "F9", "F10", "F11")

_P = NonTerm("P")


class BadParams(ValueError):
    def __init__(self, family: str, params: dict, constraint: str):
        super().__init__(f"{family}{params}: requires {constraint}")
        self.family = family
        self.params = params
        self.constraint = constraint


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict[str, int]
    quad: RestrictionQuad
    body: Grammar | GrammaticalEquation
    start: str = "P"
    # lowered system as stated in closed form, or None to derive by lowering
    stated_system: SeriesSystem | None = None
    # (sequence, offset): count at semilength n should equal reference(seq, n + offset)
    count_reference: tuple[SeqId, int] | None = None

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({args})" if args else self.family


def _pvar(k: int = 1) -> Poly:
    return Poly.var("P", k)


def _zP(zdeg: int, pexp: int) -> Poly:
    return Poly.z(zdeg) * (Poly.var("P") ** pexp)


def _f1() -> FamilyInstance:
    Q = NonTerm("Q")
    g = Grammar({
        "P": (EPSILON, seq(U, D, _P), seq(U, U, D, Q, D, _P)),
        "Q": (EPSILON, seq(U, D, Q)),
    })
    stated = SeriesSystem(("P", "Q"), {
        "P": Poly.const(1) + Poly.z() * Poly.var("P")
             + Poly.z(2) * Poly.var("Q") * Poly.var("P"),
        "Q": Poly.const(1) + Poly.z() * Poly.var("Q"),
    })
    quad = RestrictionQuad(peaks=IntSet((Progression(2, 3),)),
                           up_runs=IntSet((Progression(1, 3),)))
    return FamilyInstance("F1", {}, quad, g, stated_system=stated,
                          count_reference=(SeqId.POWERS_OF_TWO, 0))


def _f2() -> FamilyInstance:
    O, E = NonTerm("O"), NonTerm("E")
    g = Grammar({
        "P": (EPSILON, seq(U, D, _P), seq(U, U, D, O, D, _P)),
        "O": (EPSILON, seq(U, D, O), seq(U, U, U, D, O, D, E, D, O)),
        "E": (EPSILON, seq(U, U, D, O, D, E)),
    })
    stated = SeriesSystem(("P", "O", "E"), {
        "P": Poly.const(1) + Poly.z() * Poly.var("P")
             + Poly.z(2) * Poly.var("O") * Poly.var("P"),
        "O": Poly.const(1) + Poly.z() * Poly.var("O")
             + Poly.z(3) * Poly.var("E") * Poly.var("O") ** 2,
        "E": Poly.const(1) + Poly.z(2) * Poly.var("O") * Poly.var("E"),
    })
    quad = RestrictionQuad(peaks=IntSet((Progression(2, 3),)),
                           up_runs=IntSet((Progression(1, 4),)))
    return FamilyInstance("F2", {}, quad, g, stated_system=stated,
                          count_reference=(SeqId.GEN_CATALAN, 1))


def _f3() -> FamilyInstance:
    g = Grammar({"P": (EPSILON, seq(U, U, D, _P, D, _P), seq(U, D, _P))})
    stated = SeriesSystem(("P",), {
        "P": Poly.const(1) + Poly.z() * _pvar() + Poly.z(2) * _pvar(2),
    })
    quad = RestrictionQuad(up_runs=IntSet((Progression(1, 3),)))
    return FamilyInstance("F3", {}, quad, g, stated_system=stated,
                          count_reference=(SeqId.MOTZKIN, 0))


def _f5(A: int, B: int) -> FamilyInstance:
    if not 1 <= B < A:
        raise BadParams("F5", {"A": A, "B": B}, "1 <= B < A")
    alts: list[GExpr] = []
    for k in range(A):
        if k != B:
            alts.append(seq(rep(U, k), rep(seq(D, _P), k)))
    alts.append(seq(rep(U, A), rep(seq(_P, D), A), _P))
    g = Grammar({"P": tuple(alts)})
    stated = Poly.zero()
    for k in range(A):
        if k != B:
            stated = stated + _zP(k, k)
    stated = stated + _zP(A, A + 1)
    quad = RestrictionQuad(up_runs=IntSet((Progression(A, B),)))
    return FamilyInstance("F5", {"A": A, "B": B}, quad, g,
                          stated_system=SeriesSystem(("P",), {"P": stated}))


def _f6(A: int, B: int) -> FamilyInstance:
    if not 1 <= A <= B:
        raise BadParams("F6", {"A": A, "B": B}, "1 <= A <= B")
    lhs = (_P, seq(rep(U, B), rep(seq(D, _P), B)))
    rhs = tuple(seq(rep(U, k), rep(seq(D, _P), k)) for k in range(A))
    rhs = rhs + (seq(rep(U, A), rep(seq(_P, D), A), _P),)
    eq = GrammaticalEquation(lhs, rhs, ("P",))
    stated = Poly.zero()
    for k in range(A):
        stated = stated + _zP(k, k)
    stated = stated + _zP(A, A + 1) - _zP(B, B)
    quad = RestrictionQuad(up_runs=IntSet((Progression(A, B),)))
    ref = None
    if A == 1 and B == 3:
        ref = (SeqId.MOTZKIN, 0)
    elif A == 1 and B == 2:
        ref = (SeqId.ALL_ONES, 0)
    return FamilyInstance("F6", {"A": A, "B": B}, quad, eq,
                          stated_system=SeriesSystem(("P",), {"P": stated}),
                          count_reference=ref)


def _f7(A: int, B: int) -> FamilyInstance:
    if not 1 <= B < A:
        raise BadParams("F7", {"A": A, "B": B}, "1 <= B < A")
    alts: list[GExpr] = [EPSILON]
    for k in range(1, A):
        if k != B:
            alts.append(seq(rep(seq(U, _P), k - 1), U, rep(D, k), _P))
    alts.append(seq(rep(seq(U, _P), A), rep(D, A), _P))
    g = Grammar({"P": tuple(alts)})
    stated = Poly.const(1)
    for k in range(1, A):
        if k != B:
            stated = stated + _zP(k, k)
    stated = stated + _zP(A, A + 1)
    quad = RestrictionQuad(down_runs=IntSet((Progression(A, B),)))
    return FamilyInstance("F7", {"A": A, "B": B}, quad, g,
                          stated_system=SeriesSystem(("P",), {"P": stated}))


def _f8(A: int, B: int) -> FamilyInstance:
    if not 1 <= A <= B:
        raise BadParams("F8", {"A": A, "B": B}, "1 <= A <= B")
    lhs = (_P, seq(rep(seq(U, _P), B - 1), U, rep(D, B), _P))
    rhs: tuple[GExpr, ...] = (EPSILON,)
    for k in range(1, A):
        rhs = rhs + (seq(rep(seq(U, _P), k - 1), U, rep(D, k), _P),)
    rhs = rhs + (seq(rep(seq(U, _P), A), rep(D, A), _P),)
    eq = GrammaticalEquation(lhs, rhs, ("P",))
    stated = Poly.const(1)
    for k in range(1, A):
        stated = stated + _zP(k, k)
    stated = stated + _zP(A, A + 1) - _zP(B, B)
    quad = RestrictionQuad(down_runs=IntSet((Progression(A, B),)))
    return FamilyInstance("F8", {"A": A, "B": B}, quad, eq,
                          stated_system=SeriesSystem(("P",), {"P": stated}))


def _f9(r: int) -> FamilyInstance:
    if r < 1:
        raise BadParams("F9", {"r": r}, "r >= 1")
    lhs = (_P, seq(U, D, _P))
    rhs = (EPSILON, seq(rep(U, r + 1), rep(D, r + 1), _P), seq(U, _P, D, _P))
    eq = GrammaticalEquation(lhs, rhs, ("P",))
    stated = (Poly.const(1) + _zP(r + 1, 1) + _zP(1, 2)) - _zP(1, 1)
    short = IntSet((Range(1, r),))
    quad = RestrictionQuad(up_runs=short, down_runs=short)
    return FamilyInstance("F9", {"r": r}, quad, eq,
                          stated_system=SeriesSystem(("P",), {"P": stated}))


def _f10(m: int, n: int) -> FamilyInstance:
    if m < 1 or n < 1:
        raise BadParams("F10", {"m": m, "n": n}, "m >= 1 and n >= 1")
    lhs = (_P, seq(U, D, _P))
    if m >= n:
        long_alt = seq(rep(U, m + 1), rep(D, n + 1), rep(seq(_P, D), m - n), _P)
    else:
        long_alt = seq(rep(seq(U, _P), n - m), rep(U, m + 1), rep(D, n + 1), _P)
    rhs = (EPSILON, seq(U, _P, D, _P), long_alt)
    eq = GrammaticalEquation(lhs, rhs, ("P",))
    quad = RestrictionQuad(up_runs=IntSet((Range(1, m),)),
                           down_runs=IntSet((Range(1, n),)))
    return FamilyInstance("F10", {"m": m, "n": n}, quad, eq)


def _f11(r: int, k: int) -> FamilyInstance:
    if r < 1 or not 1 <= k <= r:
        raise BadParams("F11", {"r": r, "k": k}, "1 <= k <= r")
    lhs = (_P, seq(U, D, _P), seq(rep(U, r + 1), rep(D, k), rep(seq(D, _P), r + 1 - k)))
    rhs = (EPSILON, seq(U, _P, D, _P), seq(rep(U, r + 1), rep(D, r + 1), _P),
           seq(rep(U, r + 1), rep(seq(D, _P), r + 1)))
    eq = GrammaticalEquation(lhs, rhs, ("P",))
    down = IntSet((Range(k + 1, r),)) if k < r else IntSet.empty()
    quad = RestrictionQuad(up_runs=IntSet((Range(1, r),)), down_runs=down)
    return FamilyInstance("F11", {"r": r, "k": k}, quad, eq)


_BUILDERS = {
    "F1": (_f1, ()),
    "F2": (_f2, ()),
    "F3": (_f3, ()),
    "F5": (_f5, ("A", "B")),
    "F6": (_f6, ("A", "B")),
    "F7": (_f7, ("A", "B")),
    "F8": (_f8, ("A", "B")),
    "F9": (_f9, ("r",)),
    "F10": (_f10, ("m", "n")),
    "F11": (_f11, ("r", "k")),
}


def build(family: str, **params: int) -> FamilyInstance:
    if family not in _BUILDERS:
        raise BadParams(family, params, f"family id in {FAMILY_IDS}")
    fn, names = _BUILDERS[family]
    if set(params) != set(names):
        raise BadParams(family, params,
                        f"parameters {names}" if names else "no parameters")
    return fn(*(params[name] for name in names))


def f1_closed_form(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """(1 - z) / (1 - 2z): one path at n = 0, then 2^(n-1)."""
    num = TruncatedSeries.from_coeffs([1, -1], order)
    den = TruncatedSeries.from_coeffs([1, -2], order)
    return (num * den.reciprocal()).require_counts()


def f2_closed_form(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """2 / (1 - z - z^2 + sqrt(z^4 - 2z^3 - z^2 - 2z + 1))."""
    radical = TruncatedSeries.from_coeffs([1, -2, -1, -2, 1], order).sqrt()
    den = TruncatedSeries.from_coeffs([1, -1, -1], order) + radical
    return den.scale(Fraction(1, 2)).reciprocal().require_counts()


def downrun_variant_sides(instance: FamilyInstance) -> tuple[Poly, Poly]:
    """Down-run closed form with the union index started at k = 0.

    This variant keeps the explicit constant 1 for the empty path *and*
    lets the sum contribute its k = 0 term, so its right-hand side
    over-counts the empty path once: RHS - LHS = 1 exactly, when the true
    counting series is substituted for P.
    """
    if instance.family not in ("F7", "F8"):
        raise ValueError(f"no k=0 variant for family {instance.family}")
    A = instance.params["A"]
    B = instance.params["B"]
    if instance.family == "F7":
        lhs = _pvar()
        rhs = Poly.const(1)
        for k in range(A):
            if k != B:
                rhs = rhs + _zP(k, k)
        rhs = rhs + _zP(A, A + 1)
        return lhs, rhs
    lhs = _pvar() + _zP(B, B)
    rhs = Poly.const(1)
    for k in range(A):
        rhs = rhs + _zP(k, k)
    rhs = rhs + _zP(A, A + 1)
    return lhs, rhs
