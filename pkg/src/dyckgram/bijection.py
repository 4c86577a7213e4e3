"""Paths without peaks or valleys at positive even height, and their
correspondence with free walks.

Such a path of semilength s is determined by what happens at its
even-numbered steps, and that data reads off as a +-1 walk of length
s - 1 starting at 0: the walk ends at 0 when s is odd and at -1 when s
is even.  Pair up path steps (2k, 2k+1) for k = 1 .. s-1; the first path
step is always U and the last always D, and each pair maps to one walk
step:

  D then U   the path returns to height 0; the walk crosses between
             heights 0 and -1 (downward from 0, upward from -1)
  U then U   the walk moves away from that boundary: up from height
             >= 0, down from height <= -1
  D then D   the walk moves toward the boundary: down from height >= 1,
             up from height <= -2

A peak or valley of the path between positions 2k+1 and 2k+2 sits at an
odd height, and within a pair only the height-0 valley of "D then U" can
appear, which is why every walk produces a valid restricted path.  The
inverse reads the same table right to left.  Crossings inherit a parity
law: the walk can step 0 -> -1 only at odd indices and -1 -> 0 only at
even indices (walk steps counted from 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .intsets import IntSet, Progression, RestrictionQuad
from .oracle import DEFAULT_ENUMERATION_CAP, enumerate_paths
from .paths import DyckPath, Step, satisfies

#: no peak and no valley at positive even height
PARITY_QUAD = RestrictionQuad(peaks=IntSet((Progression(2, 2),)),
                              valleys=IntSet((Progression(2, 2),)))


class NotInDomain(ValueError):
    pass


class NotInCodomain(ValueError):
    pass


@dataclass(frozen=True)
class Walk:
    """A +-1 step sequence starting at height 0, any sign allowed."""

    steps: tuple[int, ...]

    def __post_init__(self):
        if any(s not in (1, -1) for s in self.steps):
            raise ValueError("walk steps must be +1 or -1")

    def heights(self) -> tuple[int, ...]:
        out = []
        h = 0
        for s in self.steps:
            h += s
            out.append(h)
        return tuple(out)

    def end(self) -> int:
        return sum(self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def is_parity_path(path: DyckPath) -> bool:
    return len(path) > 0 and satisfies(path, PARITY_QUAD)


def path_to_walk(path: DyckPath) -> Walk:
    """Forward direction; the empty path is excluded from the domain."""
    if len(path) == 0:
        raise NotInDomain("the empty path is counted separately, not mapped")
    if not satisfies(path, PARITY_QUAD):
        raise NotInDomain("path has a peak or valley at positive even height")
    s = path.semilength
    steps = path.steps
    walk: list[int] = []
    d = 0
    for k in range(1, s):
        a = steps[2 * k - 1]  # path step 2k, 1-indexed
        b = steps[2 * k]      # path step 2k + 1
        if a is Step.DOWN and b is Step.UP:
            move = -1 if d == 0 else 1
            if d not in (0, -1):
                raise NotInDomain(f"crossing pair at walk height {d}")
        elif a is Step.UP and b is Step.UP:
            move = 1 if d >= 0 else -1
        elif a is Step.DOWN and b is Step.DOWN:
            if d in (0, -1):
                raise NotInDomain(f"inward pair at walk height {d}")
            move = -1 if d >= 1 else 1
        else:
            raise NotInDomain("peak at even height")  # unreachable after the quad check
        walk.append(move)
        d += move
    return Walk(tuple(walk))


def walk_to_path(walk: Walk, semilength: int | None = None) -> DyckPath:
    """Inverse direction.

    A walk of even length must end at 0 (odd semilength), a walk of odd
    length at -1 (even semilength); anything else is outside the
    codomain, as is a stated semilength other than len(walk) + 1.
    """
    n = len(walk.steps)
    end = walk.end()
    expected_end = 0 if n % 2 == 0 else -1
    if end != expected_end:
        raise NotInCodomain(f"walk of length {n} must end at {expected_end}, ends at {end}")
    if semilength is not None and semilength != n + 1:
        raise NotInCodomain(f"walk of length {n} yields semilength {n + 1}, not {semilength}")
    chars = ["U"]
    d = 0
    for move in walk.steps:
        if (d == 0 and move == -1) or (d == -1 and move == 1):
            chars.append("DU")
        elif (d >= 0 and move == 1) or (d <= -1 and move == -1):
            chars.append("UU")
        else:
            chars.append("DD")
        d += move
    chars.append("D")
    return DyckPath.from_text("".join(chars))


def _all_walks(semilength: int) -> list[Walk]:
    n = semilength - 1
    end = 0 if n % 2 == 0 else -1
    return [Walk(steps) for steps in product((1, -1), repeat=n) if sum(steps) == end]


@dataclass(frozen=True)
class BijectionRow:
    semilength: int
    path_count: int
    walk_count: int
    expected: int
    round_trip_ok: bool


@dataclass(frozen=True)
class BijectionReport:
    rows: tuple[BijectionRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.path_count == r.walk_count == r.expected and r.round_trip_ok
                   for r in self.rows)


def expected_count(semilength: int) -> int:
    """Binomial count of restricted paths: C(2n-1, n) at 2n, C(2n, n) at 2n+1."""
    if semilength == 0:
        return 1  # the empty path, outside the mapped sets
    if semilength % 2 == 0:
        return comb(semilength - 1, semilength // 2)
    return comb(semilength - 1, (semilength - 1) // 2)


def verify_counts(max_semilength: int,
                  cap: int = DEFAULT_ENUMERATION_CAP) -> BijectionReport:
    """Enumerate both sides for every semilength and certify the bijection.

    Checks, per semilength m <= max_semilength: the path count matches the
    binomial formula, the walk count matches it too, the forward map is
    injective onto the full walk set, and both composites are identities.
    """
    rows = []
    for m in range(max_semilength + 1):
        paths = enumerate_paths(m, PARITY_QUAD, cap=cap)
        if m == 0:
            rows.append(BijectionRow(0, len(paths), 1, expected_count(0), True))
            continue
        walks = _all_walks(m)
        images = [path_to_walk(p) for p in paths]
        ok = (set(images) == set(walks)
              and len(set(images)) == len(images)
              and all(walk_to_path(w, m) == p for p, w in zip(paths, images))
              and all(path_to_walk(walk_to_path(w)) == w for w in walks))
        rows.append(BijectionRow(m, len(paths), len(walks), expected_count(m), ok))
    return BijectionReport(tuple(rows))
