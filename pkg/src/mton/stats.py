"""Block statistics of ordered partitions and their child-step laws.

Every statistic is evaluated from scratch off the block structure, never
incrementally along tree edges, so the certified transition laws below
are genuine cross-checks and not restatements of the evaluator.

Two transition shapes appear.  A statistic of the first kind changes by
a fixed amount r_j on any edge whose child has a maximal-label block of
size j.  A statistic of the second kind changes by alpha on a
distinguished subset of insertion children, by beta on every other
child, where the distinguished subset has size Z(parent) + q.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, TextIO

from . import tree
from .partitions import NcPartition, NotPairPartition
from .polynomials import format_rational
from .tree import FULL, PAIR, OrderedNcPartition


class AreaRequiresPairPartition(NotPairPartition):
    """Area is only defined for pair-partitions."""


class NotFirstKind(ValueError):
    """No fixed per-edge increment vector exists for this statistic."""


class NotSecondKind(ValueError):
    """No insertion-subset transition law exists for this statistic."""


class VerificationFailed(AssertionError):
    """A certified transition law failed; carries the witness node."""

    def __init__(self, message: str, witness: OrderedNcPartition):
        self.witness = witness
        super().__init__(f"{message} at {witness!r}")


@dataclass(frozen=True)
class Statistic:
    """Identifier for one of the supported block statistics."""

    family: str  # blocks | blocks_of_size | blocks_at_least3 | outer | intervals | area
    size: int = 0

    @property
    def name(self) -> str:
        return {
            "blocks": "Y",
            "blocks_of_size": f"Y{self.size}",
            "blocks_at_least3": "Yge3",
            "outer": "Out",
            "intervals": "Int",
            "area": "Area",
        }[self.family]

    @classmethod
    def parse(cls, text: str) -> "Statistic":
        text = text.strip()
        fixed = {"Y": BLOCKS, "Yge3": LARGE_BLOCKS, "Out": OUTER,
                 "Int": INTERVAL_PAIRS, "Area": AREA}
        if text in fixed:
            return fixed[text]
        if text.startswith("Y") and text[1:].isdigit() and int(text[1:]) >= 1:
            return blocks_of_size(int(text[1:]))
        raise ValueError(f"unknown statistic {text!r}")


BLOCKS = Statistic("blocks")
LARGE_BLOCKS = Statistic("blocks_at_least3")
OUTER = Statistic("outer")
INTERVAL_PAIRS = Statistic("intervals")
AREA = Statistic("area")


def blocks_of_size(size: int) -> Statistic:
    if size < 1:
        raise ValueError("block size must be >= 1")
    return Statistic("blocks_of_size", size)


def _outer_count(blocks: Sequence[tuple[int, ...]]) -> int:
    out = 0
    reach = 0
    for lo, hi in sorted((b[0], b[-1]) for b in blocks):
        if lo > reach:
            out += 1
        if hi > reach:
            reach = hi
    return out


def evaluate(stat: Statistic, op: OrderedNcPartition) -> int:
    """Value of the statistic on one ordered partition."""
    blocks = op.blocks_by_label
    if stat.family == "blocks":
        return len(blocks)
    if stat.family == "blocks_of_size":
        return sum(1 for b in blocks if len(b) == stat.size)
    if stat.family == "blocks_at_least3":
        return sum(1 for b in blocks if len(b) >= 3)
    if stat.family == "outer":
        return _outer_count(blocks)
    if stat.family == "intervals":
        return sum(1 for b in blocks if len(b) == 2 and b[1] == b[0] + 1)
    if stat.family == "area":
        if not op.is_pair_partition():
            raise AreaRequiresPairPartition(f"n={op.n} partition has a non-pair block")
        return sum(b[1] - b[0] for b in blocks)
    raise ValueError(f"unknown statistic family {stat.family!r}")


def area(p: NcPartition) -> int:
    """Sum of max(V) - min(V) over the blocks of a pair-partition."""
    if not p.is_pair_partition():
        raise AreaRequiresPairPartition("area needs a pair-partition")
    return sum(b[1] - b[0] for b in p.blocks)


def dyck_path(p: NcPartition) -> tuple[int, ...]:
    """Slope word of the lattice path: +1 at block minima, -1 at maxima."""
    if not p.is_pair_partition():
        raise NotPairPartition("dyck path needs a pair-partition")
    steps = [0] * p.n
    for lo, hi in p.blocks:
        steps[lo - 1] = 1
        steps[hi - 1] = -1
    return tuple(steps)


def path_area(steps: Sequence[int]) -> int:
    """Area under a +-1 step path, by exact trapezoid sums."""
    twice = 0
    h = 0
    for s in steps:
        twice += 2 * h + s
        h += s
        if h < 0:
            raise ValueError("path dips below height 0")
    if h != 0:
        raise ValueError("path does not return to height 0")
    if twice % 2:
        raise ValueError("non-integer area; path is not a +-1 step word")
    return twice // 2


# ---------------------------------------------------------------------------
# transition laws

@dataclass(frozen=True)
class SecondKindInput:
    alpha: int
    beta: int
    q: int


_FIRST_KIND: dict[Statistic, tuple[int, ...]] = {}


def first_kind_input(stat: Statistic) -> tuple[int, ...]:
    """Increment vector (r_1, ..., r_k): an edge whose child has a
    maximal-label block of size j changes the statistic by r_j (0 for
    j beyond the vector)."""
    if stat.family == "blocks":
        return (1,)
    if stat.family == "blocks_of_size":
        if stat.size == 1:
            return (1, -1)
        return (0,) * (stat.size - 1) + (1, -1)
    if stat.family == "blocks_at_least3":
        return (0, 0, 1)
    raise NotFirstKind(f"{stat.name} has no per-edge increment vector")


def second_kind_input(stat: Statistic, kind: str) -> SecondKindInput:
    """The (alpha, beta; q) law for insertion-driven statistics."""
    if stat.family == "outer" and kind in (FULL, PAIR):
        return SecondKindInput(1, 0, 1)
    if stat.family == "intervals" and kind == PAIR:
        return SecondKindInput(0, 1, 0)
    raise NotSecondKind(f"{stat.name} on the {kind} tree")


def core_child_digits(stat: Statistic, kind: str,
                      parent_op: OrderedNcPartition) -> set[int]:
    """Digits of the children where a second-kind statistic jumps by alpha.

    Outer blocks: the new singleton (or pair) is outer exactly when it is
    inserted at the left end of an outer block's span or to the right of
    the last one.  Interval pairs: the new pair splits an existing
    interval pair exactly when inserted between its two points.
    """
    blocks = parent_op.blocks_by_label
    if stat.family == "outer":
        spans = sorted((b[0], b[-1]) for b in blocks)
        reach = 0
        mins = []
        for lo, hi in spans:
            if lo > reach:
                mins.append(lo)
            if hi > reach:
                reach = hi
        if kind == FULL:
            return {m - 1 for m in mins} | {parent_op.n}
        return {m - 1 for m in mins} | {reach}
    if stat.family == "intervals" and kind == PAIR:
        return {b[0] for b in blocks if len(b) == 2 and b[1] == b[0] + 1}
    raise NotSecondKind(f"{stat.name} on the {kind} tree")


def _iter_parents(kind: str, bound: int):
    top = bound - 1
    for n in range(1, top + 1):
        yield from tree.iter_level(n, kind)


def certify_first_kind(stat: Statistic, bound: int = 7,
                       vector: Optional[tuple[int, ...]] = None) -> tuple[int, ...]:
    """Return the increment vector after re-verifying it on every edge
    with child depth <= bound.  Pass ``vector`` to certify a claimed
    vector instead of the built-in one."""
    r = first_kind_input(stat) if vector is None else tuple(vector)
    for n in range(2, bound + 1):
        for op in tree.iter_level(n):
            j = len(op.max_label_block())
            expected = r[j - 1] if j <= len(r) else 0
            if evaluate(stat, op) - evaluate(stat, tree.parent(op)) != expected:
                raise VerificationFailed(
                    f"{stat.name} edge increment != {expected}", op)
    return r


def certify_second_kind(stat: Statistic, kind: str, bound: int = 7,
                        law: Optional[SecondKindInput] = None) -> SecondKindInput:
    """Return (alpha, beta; q) after re-verifying, for every parent with
    depth < bound, all three clauses: the alpha jump on the distinguished
    children, the beta jump elsewhere, and the subset size Z + q.  Pass
    ``law`` to certify a claimed triple instead of the built-in one."""
    law = second_kind_input(stat, kind) if law is None else law
    for parent_op in _iter_parents(kind, bound + 1):
        kids = (tree.children(parent_op) if kind == FULL
                else tree.pair_children(parent_op))
        core = core_child_digits(stat, kind, parent_op)
        z = evaluate(stat, parent_op)
        if len(core) != z + law.q:
            raise VerificationFailed(
                f"core subset size {len(core)} != {z} + {law.q}", parent_op)
        for digit, child in enumerate(kids):
            jump = law.alpha if digit in core else law.beta
            if evaluate(stat, child) - z != jump:
                raise VerificationFailed(
                    f"{stat.name} child digit {digit} increment != {jump}", child)
    return law


# ---------------------------------------------------------------------------
# tables

def write_stats_csv(out: TextIO, n: int, kind: str,
                    stats: Iterable[Statistic]) -> None:
    """One row per ordered partition in rank order, then an exact-mean row."""
    stats = list(stats)
    writer = csv.writer(out)
    writer.writerow(["rank", "n"] + [s.name for s in stats])
    totals = [0] * len(stats)
    count = 0
    for rank, op in enumerate(tree.iter_level(n, kind)):
        values = [evaluate(s, op) for s in stats]
        for i, v in enumerate(values):
            totals[i] += v
        count += 1
        writer.writerow([rank, n] + values)
    means = [format_rational(Fraction(t, count)) for t in totals]
    writer.writerow(["mean", n] + means)
