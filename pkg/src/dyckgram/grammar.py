"""Grammars and grammatical equations over the letters U and D.

Expressions are trees built from epsilon, terminals, named nonterminals,
concatenation, and integer powers.  A grammar maps each nonterminal to a
tuple of alternatives (a union, with multiset semantics: a word derived
two ways counts twice).  A grammatical equation asserts that two unions
of expressions generate the same multiset of words, where each
nonterminal is interpreted not through rewrite rules but as the language
of an externally supplied restriction quad.

Lowering sends a grammar (or equation) to a polynomial fixed-point
system: U contributes a factor z, D contributes 1, union becomes sum and
concatenation product, so z tracks the semilength of balanced words.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Union

from .intsets import RestrictionQuad
from .oracle import DEFAULT_ENUMERATION_CAP, ResourceLimit, enumerate_paths
from .paths import Step
from .series import Poly, SeriesSystem

DEFAULT_WORD_CAP = 10_000_000
_BALANCE_PROBE_LEN = 8


class UnbalancedGrammar(ValueError):
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Term:
    step: Step


@dataclass(frozen=True)
class NonTerm:
    name: str


@dataclass(frozen=True)
class Concat:
    parts: tuple["GExpr", ...]


@dataclass(frozen=True)
class Power:
    base: "GExpr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {self.exponent}")


GExpr = Union[Epsilon, Term, NonTerm, Concat, Power]

EPSILON = Epsilon()
U = Term(Step.UP)
D = Term(Step.DOWN)


def seq(*parts: GExpr) -> GExpr:
    if not parts:
        return EPSILON
    if len(parts) == 1:
        return parts[0]
    return Concat(tuple(parts))


def rep(expr: GExpr, k: int) -> GExpr:
    return Power(expr, k)


def _tokens(expr: GExpr) -> list[str]:
    if isinstance(expr, Epsilon):
        return []
    if isinstance(expr, Term):
        return [expr.step.value]
    if isinstance(expr, NonTerm):
        return [expr.name]
    if isinstance(expr, Concat):
        return [t for p in expr.parts for t in _tokens(p)]
    return _tokens(expr.base) * expr.exponent


def render(expr: GExpr) -> str:
    return " ".join(_tokens(expr)) or "eps"


@dataclass(frozen=True)
class Grammar:
    rules: dict[str, tuple[GExpr, ...]]

    @property
    def nonterminals(self) -> tuple[str, ...]:
        return tuple(self.rules)

    def to_text(self) -> str:
        lines = []
        for name, alts in self.rules.items():
            for alt in alts:
                lines.append(f"{name} -> {render(alt)}")
        return "\n".join(lines)


@dataclass(frozen=True)
class GrammaticalEquation:
    """Multiset identity between two unions of expressions."""

    lhs: tuple[GExpr, ...]
    rhs: tuple[GExpr, ...]
    nonterminals: tuple[str, ...]

    def to_text(self) -> str:
        def side(exprs):
            return " | ".join(render(e) for e in exprs)
        return f"{side(self.lhs)}  =  {side(self.rhs)}"


@dataclass(frozen=True)
class WordMultiset:
    max_len: int
    counts: dict[str, int]

    def total(self) -> int:
        return sum(self.counts.values())


def _as_expr(start: GExpr | str) -> GExpr:
    return NonTerm(start) if isinstance(start, str) else start


class _Expander:
    """Exact-length word multisets for expressions, memoized, budgeted."""

    def __init__(self, resolve, cap: int):
        self.resolve = resolve  # (name, length) -> Counter
        self.cap = cap
        self.generated = 0
        self._memo: dict = {}

    def _charge(self, words: Counter) -> None:
        self.generated += sum(words.values())
        if self.generated > self.cap:
            raise ResourceLimit(self.generated, self.cap, what="generated words")

    def exact(self, expr: GExpr, length: int) -> Counter:
        key = (expr, length)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if isinstance(expr, Epsilon):
            out = Counter({"": 1}) if length == 0 else Counter()
        elif isinstance(expr, Term):
            out = Counter({expr.step.value: 1}) if length == 1 else Counter()
        elif isinstance(expr, NonTerm):
            out = self.resolve(expr.name, length)
        elif isinstance(expr, Power):
            out = self.exact_seq((expr.base,) * expr.exponent, length)
        else:
            out = self.exact_seq(expr.parts, length)
        self._memo[key] = out
        self._charge(out)
        return out

    def exact_seq(self, parts: tuple[GExpr, ...], length: int) -> Counter:
        if not parts:
            return Counter({"": 1}) if length == 0 else Counter()
        if len(parts) == 1:
            return self.exact(parts[0], length)
        key = (parts, length)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out: Counter = Counter()
        for l1 in range(length + 1):
            left = self.exact(parts[0], l1)
            if not left:
                continue
            right = self.exact_seq(parts[1:], length - l1)
            for w2, c2 in right.items():
                for w1, c1 in left.items():
                    out[w1 + w2] += c1 * c2
        self._memo[key] = out
        self._charge(out)
        return out


def _grammar_expander(grammar: Grammar, cap: int) -> _Expander:
    memo: dict = {}
    active: set = set()

    def resolve(name: str, length: int) -> Counter:
        key = (name, length)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if key in active:
            raise ValueError(f"unguarded recursion on nonterminal {name}")
        if name not in grammar.rules:
            raise ValueError(f"undefined nonterminal {name}")
        active.add(key)
        out: Counter = Counter()
        for alt in grammar.rules[name]:
            out.update(expander.exact(alt, length))
        active.discard(key)
        memo[key] = out
        return out

    expander = _Expander(resolve, cap)
    return expander


@lru_cache(maxsize=4096)
def _oracle_words(quad: RestrictionQuad, n: int, enum_cap: int) -> tuple[str, ...]:
    return tuple(p.text for p in enumerate_paths(n, quad, cap=enum_cap))


def _language_expander(languages: Mapping[str, RestrictionQuad], cap: int,
                       enum_cap: int) -> _Expander:
    def resolve(name: str, length: int) -> Counter:
        if name not in languages:
            raise ValueError(f"no language bound to nonterminal {name}")
        if length % 2:
            return Counter()
        return Counter(dict.fromkeys(_oracle_words(languages[name], length // 2, enum_cap), 1))

    return _Expander(resolve, cap)


def words(grammar: Grammar, start: GExpr | str, max_len: int,
          cap: int = DEFAULT_WORD_CAP) -> WordMultiset:
    """Multiset of derivable words of length <= max_len.

    Multiplicity is the number of distinct derivations, so an unambiguous
    grammar yields all-1 counts.
    """
    expander = _grammar_expander(grammar, cap)
    expr = _as_expr(start)
    out: Counter = Counter()
    for length in range(max_len + 1):
        out.update(expander.exact(expr, length))
    return WordMultiset(max_len, dict(out))


def derivation_count(grammar: Grammar, start: GExpr | str, word: str) -> int:
    """Number of distinct derivations of ``word``, by span parsing."""
    expr = _as_expr(start)
    memo: dict = {}
    active: set = set()

    def count(e: GExpr, i: int, j: int) -> int:
        if isinstance(e, Epsilon):
            return 1 if i == j else 0
        if isinstance(e, Term):
            return 1 if j == i + 1 and word[i] == e.step.value else 0
        if isinstance(e, NonTerm):
            key = (e.name, i, j)
            hit = memo.get(key)
            if hit is not None:
                return hit
            if key in active:
                raise ValueError(f"unguarded recursion on nonterminal {e.name}")
            if e.name not in grammar.rules:
                raise ValueError(f"undefined nonterminal {e.name}")
            active.add(key)
            total = sum(count(alt, i, j) for alt in grammar.rules[e.name])
            active.discard(key)
            memo[key] = total
            return total
        if isinstance(e, Power):
            return count_seq((e.base,) * e.exponent, i, j)
        return count_seq(e.parts, i, j)

    def count_seq(parts: tuple[GExpr, ...], i: int, j: int) -> int:
        if not parts:
            return 1 if i == j else 0
        if len(parts) == 1:
            return count(parts[0], i, j)
        key = (parts, i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = 0
        for m in range(i, j + 1):
            c1 = count(parts[0], i, m)
            if c1:
                total += c1 * count_seq(parts[1:], m, j)
        memo[key] = total
        return total

    return count(expr, 0, len(word))


@dataclass(frozen=True)
class AmbiguityReport:
    passed: bool
    max_len: int
    witness: str | None = None
    multiplicity: int | None = None


def check_unambiguous(grammar: Grammar, start: GExpr | str, max_len: int,
                      cap: int = DEFAULT_WORD_CAP) -> AmbiguityReport:
    ws = words(grammar, start, max_len, cap)
    bad = [w for w, c in ws.counts.items() if c != 1]
    if not bad:
        return AmbiguityReport(True, max_len)
    w = min(bad, key=lambda x: (len(x), x))
    return AmbiguityReport(False, max_len, w, ws.counts[w])


@dataclass(frozen=True)
class EquationReport:
    passed: bool
    max_len: int
    witness: str | None = None
    lhs_multiplicity: int | None = None
    rhs_multiplicity: int | None = None


def check_equation(eq: GrammaticalEquation,
                   languages: Mapping[str, RestrictionQuad],
                   max_len: int,
                   cap: int = DEFAULT_WORD_CAP,
                   enum_cap: int = DEFAULT_ENUMERATION_CAP) -> EquationReport:
    """Compare both sides as word multisets up to max_len.

    Nonterminals are read as oracle languages (each word once); union and
    concatenation contribute multiplicities as usual, so overlapping
    alternatives on both sides must overlap equally for a PASS.
    """
    expander = _language_expander(languages, cap, enum_cap)

    def side(exprs: tuple[GExpr, ...]) -> Counter:
        out: Counter = Counter()
        for e in exprs:
            for length in range(max_len + 1):
                out.update(expander.exact(e, length))
        return out

    left = side(eq.lhs)
    right = side(eq.rhs)
    if left == right:
        return EquationReport(True, max_len)
    diff = {w for w in left.keys() | right.keys() if left[w] != right[w]}
    w = min(diff, key=lambda x: (len(x), x))
    return EquationReport(False, max_len, w, left[w], right[w])


# --- lowering to series systems -----------------------------------------

def _poly(expr: GExpr) -> Poly:
    if isinstance(expr, Epsilon):
        return Poly.const(1)
    if isinstance(expr, Term):
        return Poly.z() if expr.step is Step.UP else Poly.const(1)
    if isinstance(expr, NonTerm):
        return Poly.var(expr.name)
    if isinstance(expr, Power):
        return _poly(expr.base) ** expr.exponent
    out = Poly.const(1)
    for p in expr.parts:
        out = out * _poly(p)
    return out


def _terminal_balance(expr: GExpr) -> int:
    if isinstance(expr, Term):
        return 1 if expr.step is Step.UP else -1
    if isinstance(expr, Concat):
        return sum(_terminal_balance(p) for p in expr.parts)
    if isinstance(expr, Power):
        return expr.exponent * _terminal_balance(expr.base)
    return 0


def _probe_balance(grammar: Grammar) -> None:
    for name in grammar.nonterminals:
        ws = words(grammar, name, _BALANCE_PROBE_LEN)
        for w in ws.counts:
            if w.count("U") != w.count("D"):
                raise UnbalancedGrammar(f"nonterminal {name} derives unbalanced word {w!r}")


def equation_sides(eq: GrammaticalEquation) -> tuple[Poly, Poly]:
    """Both sides as polynomials, before any rearrangement."""
    lhs = Poly.zero()
    for e in eq.lhs:
        lhs = lhs + _poly(e)
    rhs = Poly.zero()
    for e in eq.rhs:
        rhs = rhs + _poly(e)
    return lhs, rhs


def lower(body: Grammar | GrammaticalEquation) -> SeriesSystem:
    """Send a grammar or equation to a solvable fixed-point system.

    For an equation the subject unknown is isolated: extra left-hand
    monomials move to the right with flipped sign.  They all carry z
    factors (any bare copy of the subject would make the system
    non-contractive), so solvability is preserved.
    """
    if isinstance(body, Grammar):
        _probe_balance(body)
        equations = {}
        for name, alts in body.rules.items():
            phi = Poly.zero()
            for alt in alts:
                phi = phi + _poly(alt)
            equations[name] = phi
        return SeriesSystem(body.nonterminals, equations)

    for e in body.lhs + body.rhs:
        if _terminal_balance(e) != 0:
            raise UnbalancedGrammar(f"expression {render(e)!r} is not balanced")
    lhs, rhs = equation_sides(body)
    bare = [(vars_[0][0], coeff) for zdeg, vars_, coeff in lhs.terms
            if zdeg == 0 and len(vars_) == 1 and vars_[0][1] == 1]
    if len(bare) != 1 or bare[0][1] != 1:
        raise ValueError("left-hand side must contain exactly one bare unknown")
    subject = bare[0][0]
    phi = rhs - (lhs - Poly.var(subject))
    return SeriesSystem((subject,), {subject: phi})
