"""Ground-truth enumeration and counting of restricted Dyck paths.

Two deliberately independent methods:

* brute force: depth-first generation of every path of the given
  semilength, with the definitional feature check applied to each
  complete path;
* a dynamic program over run states (height, current run direction,
  current run length), where peak/valley and run-length checks fire at
  direction changes and the final pending down-run is checked when the
  path closes.

Counts are exact Python integers throughout.  Brute force is guarded by
an enumeration cap on the semilength; the DP has no cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .intsets import IntSet, RestrictionQuad
from .paths import DyckPath, satisfies

DEFAULT_ENUMERATION_CAP = 16

_EMPTY_QUAD = RestrictionQuad()


class ResourceLimit(RuntimeError):
    def __init__(self, requested: int, cap: int, what: str = "semilength"):
        super().__init__(f"requested {what} {requested} exceeds cap {cap}")
        self.requested = requested
        self.cap = cap


class Method(Enum):
    BRUTE = "brute"
    DP = "dp"
    GRAMMAR = "grammar"


@dataclass(frozen=True)
class CountTable:
    method: Method
    entries: dict[int, int]

    def sequence(self, n_max: int | None = None) -> tuple[int, ...]:
        if n_max is None:
            n_max = max(self.entries)
        return tuple(self.entries[n] for n in range(n_max + 1))


def _table(s: IntSet, bound: int) -> list[bool]:
    # index 0 is never avoided: avoid-sets hold positive integers only
    return [False] + [s.contains(v) for v in range(1, bound + 1)]


def _tables(quad: RestrictionQuad, bound: int):
    bound = max(bound, 1)
    return (_table(quad.peaks, bound), _table(quad.valleys, bound),
            _table(quad.up_runs, bound), _table(quad.down_runs, bound))


def enumerate_paths(n: int, quad: RestrictionQuad = _EMPTY_QUAD,
                    cap: int = DEFAULT_ENUMERATION_CAP) -> list[DyckPath]:
    """All satisfying paths of semilength ``n`` in lexicographic order (U < D)."""
    if n < 0:
        raise ValueError(f"semilength must be >= 0, got {n}")
    if n > cap:
        raise ResourceLimit(n, cap)
    out: list[DyckPath] = []
    buf: list[str] = []

    def grow(h: int, rem: int):
        if rem == 0:
            path = DyckPath.from_text("".join(buf))
            if satisfies(path, quad):
                out.append(path)
            return
        if h < rem:  # room to go up and still return
            buf.append("U")
            grow(h + 1, rem - 1)
            buf.pop()
        if h > 0:
            buf.append("D")
            grow(h - 1, rem - 1)
            buf.pop()

    grow(0, 2 * n)
    return out


def _count_leaves(n: int, tables) -> int:
    """Count satisfying paths of semilength n by exhaustive generation.

    The complete-path scan below is the same feature walk as
    paths.features, specialized to boolean membership tables (the tests
    hold the two in lockstep against enumerate_paths + satisfies).
    """
    if n == 0:
        return 1
    peak_t, valley_t, up_t, down_t = tables
    buf = [""] * (2 * n)

    def leaf_ok() -> bool:
        h = 0
        run = 0
        prev = ""
        for s in buf:
            if s == "U":
                if prev == "D":
                    if valley_t[h] or down_t[run]:
                        return False
                    run = 1
                else:
                    run += 1
                h += 1
            else:
                if prev == "U":
                    if peak_t[h] or up_t[run]:
                        return False
                    run = 1
                else:
                    run += 1
                h -= 1
            prev = s
        return not down_t[run]

    total = 0

    def grow(i: int, h: int, rem: int):
        nonlocal total
        if rem == 0:
            if leaf_ok():
                total += 1
            return
        if h < rem:
            buf[i] = "U"
            grow(i + 1, h + 1, rem - 1)
        if h > 0:
            buf[i] = "D"
            grow(i + 1, h - 1, rem - 1)

    grow(0, 0, 2 * n)
    return total


def count_brute(n_max: int, quad: RestrictionQuad = _EMPTY_QUAD,
                cap: int = DEFAULT_ENUMERATION_CAP) -> CountTable:
    if n_max > cap:
        raise ResourceLimit(n_max, cap)
    tables = _tables(quad, n_max)
    entries = {n: _count_leaves(n, tables) for n in range(n_max + 1)}
    return CountTable(Method.BRUTE, entries)


def _count_dp(n: int, tables) -> int:
    if n == 0:
        return 1
    peak_t, valley_t, up_t, down_t = tables
    total_steps = 2 * n
    # state after i steps: (height, run direction as +1/-1, run length)
    states: dict[tuple[int, int, int], int] = {(1, 1, 1): 1}
    for i in range(1, total_steps):
        new: dict[tuple[int, int, int], int] = {}
        for (h, d, r), c in states.items():
            # step up
            h2 = h + 1
            if h2 <= total_steps - i - 1:  # must still be able to return to 0
                if d == 1:
                    key = (h2, 1, r + 1)
                    new[key] = new.get(key, 0) + c
                elif not (down_t[r] or valley_t[h]):
                    key = (h2, 1, 1)
                    new[key] = new.get(key, 0) + c
            # step down
            if h > 0:
                h2 = h - 1
                if d == -1:
                    key = (h2, -1, r + 1)
                    new[key] = new.get(key, 0) + c
                elif not (up_t[r] or peak_t[h]):
                    key = (h2, -1, 1)
                    new[key] = new.get(key, 0) + c
        states = new
    return sum(c for (h, d, r), c in states.items()
               if h == 0 and d == -1 and not down_t[r])


def count_dp(n_max: int, quad: RestrictionQuad = _EMPTY_QUAD) -> CountTable:
    if n_max < 0:
        raise ValueError(f"semilength must be >= 0, got {n_max}")
    tables = _tables(quad, n_max)
    entries = {n: _count_dp(n, tables) for n in range(n_max + 1)}
    return CountTable(Method.DP, entries)
