"""Monotone moment-cumulant calculus and the ordered-count triangle.

The weight of a non-crossing partition is its number of monotonic
labellings divided by the factorial of its block count.  Moments expand
over all non-crossing partitions with those weights; cumulants come back
by triangular inversion.  The triangle J[n][k] counts ordered partitions
of {1..n} with exactly k blocks and admits three independent builders
whose agreement is part of the verification surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import laplace, reference
from .partitions import NcPartition, nesting_parents
from .stats import BLOCKS

Rational = Union[int, Fraction]


class InsufficientCumulants(ValueError):
    """Asked for moments beyond the supplied cumulant order."""


class InsufficientMoments(ValueError):
    """Asked for cumulants beyond the supplied moment order."""


def _ordering_count_blocks(blocks) -> int:
    """Monotonic labelling count via subtree products on the nesting
    forest: k! divided by the product of subtree sizes."""
    k = len(blocks)
    if k == 0:
        return 1
    order = sorted(range(k), key=lambda i: blocks[i][0])
    subtree = [1] * k
    stack: list[int] = []
    for pos in order:
        b = blocks[pos]
        while stack and blocks[stack[-1]][-1] < b[0]:
            top = stack.pop()
            if stack:
                subtree[stack[-1]] += subtree[top]
        stack.append(pos)
    while len(stack) > 1:
        top = stack.pop()
        subtree[stack[-1]] += subtree[top]
    total = math.factorial(k)
    den = math.prod(subtree)
    assert total % den == 0
    return total // den


def ordering_count(p: NcPartition) -> int:
    """Number of monotonic labellings of ``p``."""
    return _ordering_count_blocks(p.blocks)


def _weight(blocks) -> Fraction:
    return Fraction(_ordering_count_blocks(blocks),
                    math.factorial(len(blocks)))


def moments_from_cumulants(cumulants: Sequence[Rational],
                           upto: Optional[int] = None) -> tuple[Fraction, ...]:
    """Moments 1..upto from cumulants, summing the weighted products
    over all non-crossing partitions."""
    cums = [Fraction(c) for c in cumulants]
    upto = len(cums) if upto is None else upto
    if upto > len(cums):
        raise InsufficientCumulants(f"need {upto} cumulants, got {len(cums)}")
    moments = []
    for n in range(1, upto + 1):
        total = Fraction(0)
        for blocks in reference.noncrossing_partitions(n):
            term = _weight(blocks)
            for b in blocks:
                term *= cums[len(b) - 1]
            total += term
        moments.append(total)
    return tuple(moments)


def cumulants_from_moments(moments: Sequence[Rational],
                           upto: Optional[int] = None) -> tuple[Fraction, ...]:
    """Cumulants 1..upto by triangular inversion of the moment expansion."""
    moms = [Fraction(m) for m in moments]
    upto = len(moms) if upto is None else upto
    if upto > len(moms):
        raise InsufficientMoments(f"need {upto} moments, got {len(moms)}")
    cums: list[Fraction] = []
    for n in range(1, upto + 1):
        rest = Fraction(0)
        for blocks in reference.noncrossing_partitions(n):
            if len(blocks) == 1:
                continue  # the full block carries the unknown cumulant
            term = _weight(blocks)
            for b in blocks:
                term *= cums[len(b) - 1]
            rest += term
        cums.append(moms[n - 1] - rest)
    return tuple(cums)


# ---------------------------------------------------------------------------
# the ordered-count triangle

@dataclass(frozen=True)
class StirlingTable:
    """rows[n-1][k-1] counts ordered partitions of {1..n} with k blocks."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def value(self, n: int, k: int) -> int:
        return self.rows[n - 1][k - 1]


def stirling_by_recursion(n_max: int) -> StirlingTable:
    """J[n][k] = J[n-1][k] + n * J[n-1][k-1], from J[1] = (1,)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = [(1,)]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(1, n + 1):
            above = prev[k - 1] if k <= len(prev) else 0
            diag = prev[k - 2] if 2 <= k <= len(prev) + 1 else 0
            row.append(above + n * diag)
        rows.append(tuple(row))
    return StirlingTable(tuple(rows))


def stirling_by_closed_form(n_max: int) -> StirlingTable:
    """J[n][k] as the sum of products j_1*...*j_{k-1} over increasing
    choices 2 <= j_1 < ... < j_{k-1} <= n, expanded term by term."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        row = [0] * n

        def descend(start: int, chosen: int, product: int):
            row[chosen] += product
            for j in range(start, n + 1):
                descend(j + 1, chosen + 1, product * j)

        descend(2, 0, 1)
        rows.append(tuple(row))
    return StirlingTable(tuple(rows))


def stirling_by_tree_count(n_max: int, max_n: Optional[int] = None,
                           workers: int = 1) -> StirlingTable:
    """J[n][k] read off the enumerated block-count transforms."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        poly = laplace.bruteforce_transform(BLOCKS, n, max_n=max_n,
                                            workers=workers)
        rows.append(tuple(int(poly.coefficient(k)) for k in range(1, n + 1)))
    return StirlingTable(tuple(rows))


def poisson_moments(alpha: Rational, upto: int) -> tuple[Fraction, ...]:
    """Moments of the law with all cumulants equal to alpha, through the
    triangle: moment n = sum_k J[n][k] * alpha^k / k!."""
    if upto < 1:
        raise ValueError("upto must be >= 1")
    a = Fraction(alpha)
    table = stirling_by_recursion(upto)
    out = []
    for n in range(1, upto + 1):
        total = Fraction(0)
        for k in range(1, n + 1):
            total += table.value(n, k) * a ** k / math.factorial(k)
        out.append(total)
    return tuple(out)
