"""Reference integer sequences and prefix identification.

Each sequence is computed from its own defining rule (binomials, a
recurrence, or a solved quadratic), independently of the path oracles,
so that agreement between a family count and its reference sequence is
evidence rather than circularity.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import comb

from .series import DEFAULT_ORDER, Poly, SeriesSystem, TruncatedSeries, solve


class SeqId(Enum):
    CATALAN = "CATALAN"
    MOTZKIN = "MOTZKIN"
    GEN_CATALAN = "GEN_CATALAN"
    POWERS_OF_TWO = "POWERS_OF_TWO"
    PARITY_BINOM = "PARITY_BINOM"
    ALL_ONES = "ALL_ONES"


_motzkin_cache: list[int] = []
_gen_catalan_cache: list[int] = [1, 1]


def _motzkin(n: int) -> int:
    if n >= len(_motzkin_cache):
        order = max(DEFAULT_ORDER, n + 1)
        m = Poly.var("M")
        system = SeriesSystem(("M",), {"M": Poly.const(1) + Poly.z() * m + Poly.z(2) * m ** 2})
        _motzkin_cache[:] = solve(system, order)["M"].require_counts().coeffs
    return _motzkin_cache[n]


def _gen_catalan(n: int) -> int:
    g = _gen_catalan_cache
    while len(g) <= n:
        m = len(g)  # computing G_m with the convolution over G_1..G_{m-2}
        g.append(g[m - 1] + sum(g[k] * g[m - 2 - k] for k in range(1, m - 1)))
    return g[n]


def gen_catalan_closed_form(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The same sequence from its radical form (1 - z + z^2 - sqrt(...)) / 2z^2."""
    inner = TruncatedSeries.from_coeffs([1, -2, -1, -2, 1], order + 2)
    numerator = TruncatedSeries.from_coeffs([1, -1, 1], order + 2) - inner.sqrt()
    return numerator.shift_down(2).scale(Fraction(1, 2)).require_counts()


def reference(seq: SeqId, n: int) -> int:
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    if seq is SeqId.CATALAN:
        return comb(2 * n, n) // (n + 1)
    if seq is SeqId.MOTZKIN:
        return _motzkin(n)
    if seq is SeqId.GEN_CATALAN:
        return _gen_catalan(n)
    if seq is SeqId.POWERS_OF_TWO:
        return 1 if n == 0 else 2 ** (n - 1)
    if seq is SeqId.PARITY_BINOM:
        # count of even-height-free paths of semilength n: the empty path,
        # then C(2k-1, k) at n = 2k and C(2k, k) at n = 2k + 1
        if n == 0:
            return 1
        return comb(n - 1, n // 2) if n % 2 == 0 else comb(n - 1, (n - 1) // 2)
    if seq is SeqId.ALL_ONES:
        return 1
    raise ValueError(f"unknown sequence {seq!r}")


def identify(prefix) -> list[SeqId]:
    """All sequences whose initial terms equal the given prefix (offset 0)."""
    terms = list(prefix)
    if len(terms) < 4:
        raise ValueError(f"need at least 4 terms to identify, got {len(terms)}")
    return [sid for sid in SeqId
            if all(reference(sid, i) == t for i, t in enumerate(terms))]
