"""Dyck paths: balanced U/D step sequences with nonnegative prefix sums.

Sizes are measured in semilength (half the number of steps).  The feature
vocabulary used throughout the package:

  peak      a UD factor; its height is the height just after the U
  valley    a DU factor; its height is the height just after the D
  up-run    a maximal block of consecutive U steps (length counted)
  down-run  a maximal block of consecutive D steps

The empty path has no features at all; by convention it satisfies every
restriction quad (it is the path that vacuously has "a peak at 0 but no
valley", and 0 never belongs to an avoid-set).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .intsets import RestrictionQuad


class Step(Enum):
    UP = "U"
    DOWN = "D"

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1

    def flipped(self) -> "Step":
        return Step.DOWN if self is Step.UP else Step.UP


class InvalidPath(ValueError):
    pass


class NegativePrefix(InvalidPath):
    """Prefix sum went negative; ``position`` is the 1-based offending step."""

    def __init__(self, position: int):
        super().__init__(f"prefix sum negative after step {position}")
        self.position = position


class UnbalancedPath(InvalidPath):
    def __init__(self, final_height: int):
        super().__init__(f"path ends at height {final_height}, not 0")
        self.final_height = final_height


@dataclass(frozen=True)
class DyckPath:
    steps: tuple[Step, ...]

    def __post_init__(self):
        h = 0
        for i, s in enumerate(self.steps, start=1):
            h += s.delta
            if h < 0:
                raise NegativePrefix(i)
        if h != 0:
            raise UnbalancedPath(h)

    @classmethod
    def from_text(cls, text: str) -> "DyckPath":
        steps = []
        for i, c in enumerate(text):
            if c == "U":
                steps.append(Step.UP)
            elif c == "D":
                steps.append(Step.DOWN)
            else:
                raise InvalidPath(f"unexpected character {c!r} at index {i}")
        return cls(tuple(steps))

    @property
    def text(self) -> str:
        return "".join(s.value for s in self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> tuple[int, ...]:
        """Partial sums after each step."""
        out = []
        h = 0
        for s in self.steps:
            h += s.delta
            out.append(h)
        return tuple(out)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.steps)


def validate(steps) -> DyckPath:
    return DyckPath(tuple(steps))


@dataclass(frozen=True)
class PathFeatures:
    peaks: tuple[int, ...]
    valleys: tuple[int, ...]
    up_runs: tuple[int, ...]
    down_runs: tuple[int, ...]


def features(path: DyckPath) -> PathFeatures:
    """All four feature lists, left to right.

    A run is recorded when it ends (at a direction change, or at the end
    of the path).  Peak and valley heights are recorded at the same
    moments, so peaks interleave with up-run endings and valleys with
    down-run endings.
    """
    peaks: list[int] = []
    valleys: list[int] = []
    up_runs: list[int] = []
    down_runs: list[int] = []
    h = 0
    run = 0
    prev = None
    for s in path.steps:
        if s is Step.UP:
            if prev is Step.DOWN:
                valleys.append(h)
                down_runs.append(run)
                run = 1
            else:
                run += 1
            h += 1
        else:
            if prev is Step.UP:
                peaks.append(h)
                up_runs.append(run)
                run = 1
            else:
                run += 1
            h -= 1
        prev = s
    if prev is Step.DOWN:
        down_runs.append(run)
    elif prev is Step.UP:  # unreachable for a balanced path
        up_runs.append(run)
    return PathFeatures(tuple(peaks), tuple(valleys), tuple(up_runs), tuple(down_runs))


def satisfies(path: DyckPath, quad: RestrictionQuad) -> bool:
    """True iff none of the path's features lands in the matching avoid-set."""
    if quad.is_empty():
        return True
    f = features(path)
    # valleys at height 0 are exempt: avoid-sets hold positive integers only
    return (all(not quad.peaks.contains(v) for v in f.peaks)
            and all(v == 0 or not quad.valleys.contains(v) for v in f.valleys)
            and all(not quad.up_runs.contains(v) for v in f.up_runs)
            and all(not quad.down_runs.contains(v) for v in f.down_runs))


def reverse_complement(path: DyckPath) -> DyckPath:
    """Reverse the step order and flip every step.

    An involution on Dyck paths.  It mirrors the height profile, so peak
    and valley heights are preserved while up-runs and down-runs trade
    places.
    """
    return DyckPath(tuple(s.flipped() for s in reversed(path.steps)))
