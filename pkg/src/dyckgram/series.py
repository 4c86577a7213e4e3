"""Truncated formal power series with exact coefficients.

A series of order N carries coefficients for z^0 .. z^(N-1); everything
beyond is unknown, not zero.  Coefficients are Python ints wherever
possible; Fractions appear only inside reciprocal and square root and
are normalized back to int the moment they are integral.

The module also defines sparse polynomials in z and named unknowns
(:class:`Poly`) and fixed-point systems X = Phi(X) over them
(:class:`SeriesSystem`).  Such a system is solvable by iteration from 0
whenever every unknown-bearing monomial carries a factor z^1 or higher:
each round then fixes at least one further coefficient, so ``order``
rounds reach the unique fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

DEFAULT_ORDER = 32


class OrderMismatch(ValueError):
    pass


class NonUnitConstant(ValueError):
    def __init__(self, constant):
        super().__init__(f"reciprocal needs constant term 1 or -1, got {constant}")
        self.constant = constant


class BadConstantTerm(ValueError):
    def __init__(self, constant):
        super().__init__(f"sqrt needs constant term 1, got {constant}")
        self.constant = constant


class NotContractive(ValueError):
    pass


class NoConvergence(RuntimeError):
    pass


def _norm(c):
    """Collapse integral Fractions to int."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("order must be at least 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "TruncatedSeries":
        cs = [_norm(c) for c in coeffs]
        if order is not None:
            if len(cs) > order:
                cs = cs[:order]
            else:
                cs.extend([0] * (order - len(cs)))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls((0,) * order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.constant(1, order)

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def z(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.monomial(1, 1, order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        if power >= order:
            return cls.zero(order)
        return cls.from_coeffs([0] * power + [coeff], order)

    def coefficient(self, n: int):
        return self.coeffs[n]

    def _match(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        return TruncatedSeries(tuple(_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._match(other)
        n = self.order
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(_norm(c) for c in out))

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise ValueError(f"exponent must be >= 0, got {k}")
        result = TruncatedSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(tuple(_norm(c * a) for a in self.coeffs))

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit (+-1)."""
        c0 = self.coeffs[0]
        if c0 != 1 and c0 != -1:
            raise NonUnitConstant(c0)
        inv0 = 1 if c0 == 1 else -1
        out = [inv0] + [0] * (self.order - 1)
        for n in range(1, self.order):
            acc = 0
            for k in range(1, n + 1):
                acc += self.coeffs[k] * out[n - k]
            out[n] = _norm(-inv0 * acc)
        return TruncatedSeries(tuple(out))

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1 (the branch fixed by r(0) = 1)."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm(self.coeffs[0])
        out = [1] + [0] * (self.order - 1)
        for n in range(1, self.order):
            acc = 0
            for i in range(1, n):
                acc += out[i] * out[n - i]
            out[n] = _norm(Fraction(self.coeffs[n] - acc, 2))
        return TruncatedSeries(tuple(out))

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Exact division by z^k; the first k coefficients must be zero."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"not divisible by z^{k}")
        if k >= self.order:
            raise ValueError(f"order {self.order} too small to drop z^{k}")
        return TruncatedSeries(self.coeffs[k:])

    def require_counts(self) -> "TruncatedSeries":
        """Assert every coefficient is a nonnegative integer and return self."""
        for n, c in enumerate(self.coeffs):
            if isinstance(c, Fraction) or c < 0:
                raise ValueError(f"coefficient of z^{n} is not a count: {c}")
        return self

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = str(abs(c)) if (abs(c) != 1 or n == 0) else ""
            zp = "" if n == 0 else ("z" if n == 1 else f"z^{n}")
            body = "*".join(x for x in (mag, zp) if x)
            parts.append(("- " if c < 0 else "+ ") + body)
        if not parts:
            return f"0 + O(z^{self.order})"
        head = parts[0].removeprefix("+ ")
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + parts[1:]) + f" + O(z^{self.order})"


# --- polynomials in z and named unknowns -------------------------------

_VarsKey = tuple[tuple[str, int], ...]


def _mul_vars(a: _VarsKey, b: _VarsKey) -> _VarsKey:
    d: dict[str, int] = {}
    for name, e in a + b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


@dataclass(frozen=True)
class Poly:
    """Sparse polynomial: monomials (z-degree, unknowns) -> int coefficient."""

    terms: tuple[tuple[int, _VarsKey, int], ...]  # (zdeg, vars, coeff), sorted

    @staticmethod
    def _from_dict(d: dict[tuple[int, _VarsKey], int]) -> "Poly":
        items = tuple(sorted((z, v, c) for (z, v), c in d.items() if c != 0))
        return Poly(items)

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls._from_dict({(0, ()): c})

    @classmethod
    def z(cls, k: int = 1) -> "Poly":
        return cls._from_dict({(k, ()): 1})

    @classmethod
    def var(cls, name: str, k: int = 1) -> "Poly":
        return cls._from_dict({(0, ((name, k),)): 1})

    def _dict(self) -> dict[tuple[int, _VarsKey], int]:
        return {(z, v): c for z, v, c in self.terms}

    def __add__(self, other: "Poly") -> "Poly":
        d = self._dict()
        for z, v, c in other.terms:
            d[(z, v)] = d.get((z, v), 0) + c
        return Poly._from_dict(d)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Poly":
        return Poly(tuple((z, v, c * k) for z, v, k in self.terms)) if c else Poly.zero()

    def __mul__(self, other: "Poly") -> "Poly":
        d: dict[tuple[int, _VarsKey], int] = {}
        for z1, v1, c1 in self.terms:
            for z2, v2, c2 in other.terms:
                key = (z1 + z2, _mul_vars(v1, v2))
                d[key] = d.get(key, 0) + c1 * c2
        return Poly._from_dict(d)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError(f"exponent must be >= 0, got {k}")
        result = Poly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def unknowns(self) -> set[str]:
        return {name for _, vars_, _ in self.terms for name, _ in vars_}

    def eval(self, env: Mapping[str, TruncatedSeries], order: int) -> TruncatedSeries:
        total = TruncatedSeries.zero(order)
        for zdeg, vars_, coeff in self.terms:
            if zdeg >= order:
                continue
            term = TruncatedSeries.monomial(coeff, zdeg, order)
            for name, e in vars_:
                term = term * (env[name] ** e)
            total = total + term
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for zdeg, vars_, coeff in self.terms:
            factors = []
            if zdeg == 1:
                factors.append("z")
            elif zdeg > 1:
                factors.append(f"z^{zdeg}")
            for name, e in vars_:
                factors.append(name if e == 1 else f"{name}^{e}")
            if abs(coeff) != 1 or not factors:
                factors.insert(0, str(abs(coeff)))
            body = "*".join(factors)
            parts.append(("- " if coeff < 0 else "+ ") + body)
        head = parts[0].removeprefix("+ ")
        if head.startswith("- "):
            head = "-" + head[2:]
        return " ".join([head] + parts[1:])


@dataclass(frozen=True)
class SeriesSystem:
    """Simultaneous fixed-point equations X = Phi_X(z, unknowns)."""

    unknowns: tuple[str, ...]
    equations: dict[str, Poly]

    def validate(self) -> None:
        known = set(self.unknowns)
        for name in self.unknowns:
            phi = self.equations[name]
            extra = phi.unknowns() - known
            if extra:
                raise ValueError(f"equation for {name} uses unbound {sorted(extra)}")
            for zdeg, vars_, _ in phi.terms:
                if vars_ and zdeg == 0:
                    raise NotContractive(
                        f"equation for {name} has unknown-bearing monomial with no z factor")

    def __str__(self) -> str:
        return "\n".join(f"{name} = {self.equations[name]}" for name in self.unknowns)


def solve(system: SeriesSystem, order: int = DEFAULT_ORDER) -> dict[str, TruncatedSeries]:
    """Iterate X <- Phi(X) from X = 0 until the fixed point is reached."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    system.validate()
    env = {name: TruncatedSeries.zero(order) for name in system.unknowns}
    for _ in range(order + 1):
        nxt = {name: system.equations[name].eval(env, order) for name in system.unknowns}
        if nxt == env:
            return env
        env = nxt
    raise NoConvergence(f"no fixed point within {order + 1} rounds")
