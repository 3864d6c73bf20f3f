"""Generating polynomials of block statistics over the two trees.

For a statistic Z the level-n transform is sum of t**Z(pi,u) over all
ordered partitions at depth n.  Brute force computes it by a single
depth-first scan that tallies every node of the walk (so one scan to
depth N yields the transforms of every statistic at every level <= N).
The recursions rebuild the same polynomials from small seeds through the
certified transition laws; agreement between the two routes is what the
verification suites check.

Scans can be sharded by leaf-rank ranges: an interior node is tallied by
the shard owning its leftmost descendant leaf, so shard results merge by
plain addition and the totals are independent of the shard layout.
"""

from __future__ import annotations

import multiprocessing
from collections import Counter
from fractions import Fraction
from typing import Optional, Sequence

from . import tree
from .polynomials import ExactPolynomial
from .stats import (AreaRequiresPairPartition, SecondKindInput, Statistic,
                    first_kind_input)
from .tree import FULL, PAIR, _digits_from_rank, _radix, _step

DEFAULT_MAX_FULL = 10
DEFAULT_MAX_PAIR = 8


class SizeBoundExceeded(ValueError):
    """Refusing an enumeration larger than the configured guard."""


class InsufficientSeed(ValueError):
    """The recursion needs more seed polynomials than were given."""


class ZeroPolynomial(ValueError):
    """Expectation of an empty distribution."""


# ---------------------------------------------------------------------------
# brute-force scan

def _full_key(blocks):
    sizes = sorted(len(b) for b in blocks)
    out = 0
    ints = 0
    reach = 0
    for lo, hi in sorted((b[0], b[-1]) for b in blocks):
        if lo > reach:
            out += 1
        if hi > reach:
            reach = hi
        if hi == lo + 1:
            ints += 1
    return (tuple(sizes), out, ints)


def _pair_key(blocks):
    out = 0
    ints = 0
    area = 0
    reach = 0
    for lo, hi in sorted(blocks):
        area += hi - lo
        if lo > reach:
            out += 1
        if hi > reach:
            reach = hi
        if hi == lo + 1:
            ints += 1
    return (out, ints, area)


def scan_chunk(kind: str, depth: int, lo: int, hi: int) -> dict[int, Counter]:
    """Tally composite statistic keys for all walk nodes owned by the
    leaf-rank range [lo, hi); keyed by level."""
    key_of = _full_key if kind == FULL else _pair_key
    hist: dict[int, Counter] = {level: Counter() for level in range(1, depth + 1)}
    if lo >= hi:
        return hist
    if depth == 1:
        hist[1][key_of(((1,),) if kind == FULL else ((1, 2),))] += 1
        return hist
    digits = _digits_from_rank(lo, depth, kind)
    path = [((1,),) if kind == FULL else ((1, 2),)]
    for d_level, d in enumerate(digits, start=1):
        path.append(_step(kind, path[-1], d_level, d))
    # interior nodes on the seed path belong to this shard only from the
    # point where the remaining digit suffix is all zero
    suffix_zero_from = depth - 1
    while suffix_zero_from > 0 and digits[suffix_zero_from - 1] == 0:
        suffix_zero_from -= 1
    for level in range(suffix_zero_from + 1, depth + 1):
        hist[level][key_of(path[level - 1])] += 1
    radii = [_radix(level, kind) for level in range(1, depth)]
    remaining = hi - lo - 1
    while remaining > 0:
        i = depth - 1
        while digits[i - 1] == radii[i - 1] - 1:
            i -= 1
        digits[i - 1] += 1
        path[i] = _step(kind, path[i - 1], i, digits[i - 1])
        hist[i + 1][key_of(path[i])] += 1
        for j in range(i + 1, depth):
            digits[j - 1] = 0
            path[j] = _step(kind, path[j - 1], j, 0)
            hist[j + 1][key_of(path[j])] += 1
        remaining -= 1
    return hist


def _merge(parts: Sequence[dict[int, Counter]]) -> dict[int, Counter]:
    out: dict[int, Counter] = {}
    for part in parts:
        for level, counter in part.items():
            if level in out:
                out[level].update(counter)
            else:
                out[level] = Counter(counter)
    return out


_scan_cache: dict[str, tuple[int, dict[int, Counter]]] = {}


def level_histograms(kind: str, depth: int, workers: int = 1) -> dict[int, Counter]:
    """Composite-key histograms for every level <= depth, cached per kind."""
    cached = _scan_cache.get(kind)
    if cached and cached[0] >= depth:
        return {level: cached[1][level] for level in range(1, depth + 1)}
    total = tree.level_count(depth, kind)
    if workers <= 1 or total < 10000:
        hist = scan_chunk(kind, depth, 0, total)
    else:
        shards = workers * 4
        bounds = [total * i // shards for i in range(shards + 1)]
        jobs = [(kind, depth, bounds[i], bounds[i + 1]) for i in range(shards)]
        with multiprocessing.get_context("fork").Pool(workers) as pool:
            hist = _merge(pool.starmap(scan_chunk, jobs))
    _scan_cache[kind] = (depth, hist)
    return hist


def clear_scan_cache() -> None:
    _scan_cache.clear()


def _stat_from_key(stat: Statistic, kind: str, level: int, key) -> int:
    if kind == FULL:
        sizes, out, ints = key
        if stat.family == "blocks":
            return len(sizes)
        if stat.family == "blocks_of_size":
            return sizes.count(stat.size)
        if stat.family == "blocks_at_least3":
            return sum(1 for s in sizes if s >= 3)
        if stat.family == "outer":
            return out
        if stat.family == "intervals":
            return ints
        raise AreaRequiresPairPartition("area needs the pair tree")
    out, ints, area = key
    if stat.family == "blocks":
        return level
    if stat.family == "blocks_of_size":
        return level if stat.size == 2 else 0
    if stat.family == "blocks_at_least3":
        return 0
    if stat.family == "outer":
        return out
    if stat.family == "intervals":
        return ints
    return area


def _guard(n: int, kind: str, max_n: Optional[int]) -> None:
    limit = max_n if max_n is not None else (
        DEFAULT_MAX_FULL if kind == FULL else DEFAULT_MAX_PAIR)
    if n > limit:
        raise SizeBoundExceeded(
            f"depth {n} exceeds the {kind}-tree guard of {limit}")


def bruteforce_transform(stat: Statistic, n: int, kind: str = FULL,
                         max_n: Optional[int] = None,
                         workers: int = 1) -> ExactPolynomial:
    """Exact level-n transform by exhaustive enumeration."""
    _guard(n, kind, max_n)
    hist = level_histograms(kind, n, workers)[n]
    counts: Counter = Counter()
    for key, mult in hist.items():
        counts[_stat_from_key(stat, kind, n, key)] += mult
    return ExactPolynomial.from_counts(counts)


# ---------------------------------------------------------------------------
# recursions

def recurse_first_kind(r: Sequence[int], seeds: Sequence[ExactPolynomial],
                       n: int) -> ExactPolynomial:
    """Level-n transform from the per-edge increment vector r.

    Seeds are the transforms at levels 1..len(seeds) with len(seeds) >=
    len(r) (r is padded to length two if needed).  Intermediate monomial
    shifts may dip below exponent zero; the final polynomial is checked
    to be a genuine polynomial on construction.
    """
    r = tuple(int(x) for x in r)
    if not r:
        raise ValueError("empty increment vector")
    if len(r) == 1:
        r = r + (0,)
    k = len(r)
    if len(seeds) < k:
        raise InsufficientSeed(f"need {k} seed levels, got {len(seeds)}")
    if n < 1:
        raise ValueError("level must be >= 1")
    if n <= len(seeds):
        return seeds[n - 1]
    levels = list(seeds)
    prefix = [sum(r[:j]) for j in range(k)]  # prefix[j] = r_1 + ... + r_j
    for m in range(len(seeds) + 1, n + 1):
        acc: dict[int, Fraction] = {}

        def add(poly: ExactPolynomial, shift: int, scale: int):
            for e, c in poly.items():
                key = e + shift
                acc[key] = acc.get(key, Fraction(0)) + scale * c

        add(levels[m - 2], 0, 1)
        add(levels[m - 2], r[0], m)
        for j in range(2, k + 1):
            if r[j - 1] == 0:
                continue
            add(levels[m - j - 1], r[j - 1] + prefix[j - 1], m - j + 1)
            add(levels[m - j - 1], prefix[j - 1], -(m - j + 1))
        levels.append(ExactPolynomial(acc))
    return levels[n - 1]


def recurse_second_kind(law: SecondKindInput, seed: ExactPolynomial,
                        n: int, kind: str = FULL) -> ExactPolynomial:
    """Level-n transform from the insertion law (alpha, beta; q).

    ``seed`` is the level-1 transform.  The step multiplies by
    q*t^alpha + (children - q)*t^beta and adds (t^(alpha+1) -
    t^(beta+1)) times the derivative, where children counts the level's
    child arity (m+1 on the full tree, 2m-1 on the pair tree).
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    cur = seed
    t_a = ExactPolynomial.monomial(law.alpha)
    t_b = ExactPolynomial.monomial(law.beta)
    deriv_factor = (ExactPolynomial.monomial(law.alpha + 1)
                    - ExactPolynomial.monomial(law.beta + 1))
    for m in range(2, n + 1):
        arity = (m + 1) if kind == FULL else (2 * m - 1)
        mult = t_a.scaled(law.q) + t_b.scaled(arity - law.q)
        cur = mult * cur + deriv_factor * cur.derivative()
    return cur


def recursion_transform(stat: Statistic, n: int, kind: str = FULL,
                        max_n: Optional[int] = None) -> ExactPolynomial:
    """Level-n transform via the statistic's transition law, seeded by
    tiny brute-forced levels."""
    from .stats import second_kind_input
    if kind == FULL and stat.family in ("blocks", "blocks_of_size",
                                        "blocks_at_least3"):
        r = first_kind_input(stat)
        k = max(len(r), 2)
        if n <= k:
            return bruteforce_transform(stat, n, kind, max_n)
        seeds = [bruteforce_transform(stat, m, kind, max_n)
                 for m in range(1, k + 1)]
        return recurse_first_kind(r, seeds, n)
    law = second_kind_input(stat, kind)
    seed = bruteforce_transform(stat, 1, kind, max_n)
    return recurse_second_kind(law, seed, n, kind)


# ---------------------------------------------------------------------------
# moments

def expectation_from_laplace(poly: ExactPolynomial) -> Fraction:
    """Mean of the statistic whose transform is ``poly``."""
    total = poly.evaluate(1)
    if total == 0:
        raise ZeroPolynomial("transform sums to zero")
    return poly.derivative().evaluate(1) / total


def variance_from_laplace(poly: ExactPolynomial) -> Fraction:
    """Variance of the statistic whose transform is ``poly``."""
    total = poly.evaluate(1)
    if total == 0:
        raise ZeroPolynomial("transform sums to zero")
    d1 = poly.derivative()
    first = d1.evaluate(1)
    second = d1.derivative().evaluate(1)
    mean = first / total
    return (second + first) / total - mean * mean
