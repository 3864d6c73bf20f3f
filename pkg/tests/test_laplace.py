"""Level transforms: enumeration, recursions, caches, sharding."""

from fractions import Fraction

import pytest

from mton import laplace
from mton.laplace import (InsufficientSeed, SizeBoundExceeded, ZeroPolynomial,
                          bruteforce_transform, expectation_from_laplace,
                          level_histograms, recurse_first_kind,
                          recurse_second_kind, recursion_transform,
                          scan_chunk, variance_from_laplace)
from mton.polynomials import ExactPolynomial, NegativeExponent
from mton.stats import (AREA, BLOCKS, INTERVAL_PAIRS, LARGE_BLOCKS, OUTER,
                        SecondKindInput, blocks_of_size)
from mton.tree import FULL, PAIR, level_count


def test_frozen_block_count_transforms():
    assert bruteforce_transform(BLOCKS, 1) == ExactPolynomial({1: 1})
    assert bruteforce_transform(BLOCKS, 2) == ExactPolynomial({1: 1, 2: 2})
    assert bruteforce_transform(BLOCKS, 3) == ExactPolynomial({1: 1, 2: 5, 3: 6})


def test_frozen_singleton_transform():
    got = bruteforce_transform(blocks_of_size(1), 3)
    assert got == ExactPolynomial({3: 6, 1: 5, 0: 1})
    assert expectation_from_laplace(got) == Fraction(23, 12)


def test_frozen_outer_transform():
    got = bruteforce_transform(OUTER, 3)
    assert got == ExactPolynomial({1: 2, 2: 4, 3: 6})
    assert expectation_from_laplace(got) == Fraction(7, 3)


def test_frozen_area_transform():
    got = bruteforce_transform(AREA, 2, PAIR)
    assert got == ExactPolynomial({2: 2, 4: 1})
    assert expectation_from_laplace(got) == Fraction(8, 3)


def test_transform_total_mass_is_level_count():
    for n in range(1, 7):
        poly = bruteforce_transform(BLOCKS, n)
        assert poly.evaluate(1) == level_count(n, FULL)
    for n in range(1, 6):
        poly = bruteforce_transform(AREA, n, PAIR)
        assert poly.evaluate(1) == level_count(n, PAIR)


def test_recursions_match_enumeration_all_stats():
    for s in (BLOCKS, blocks_of_size(1), blocks_of_size(2), blocks_of_size(3),
              LARGE_BLOCKS):
        for n in range(1, 8):
            assert recursion_transform(s, n) == bruteforce_transform(s, n)
    for s, kind in ((OUTER, FULL), (OUTER, PAIR), (INTERVAL_PAIRS, PAIR)):
        for n in range(1, 7):
            assert (recursion_transform(s, n, kind)
                    == bruteforce_transform(s, n, kind))


def test_first_kind_recursion_needs_enough_seeds():
    with pytest.raises(InsufficientSeed):
        recurse_first_kind((1, -1), [ExactPolynomial({1: 1})], 5)


def test_first_kind_recursion_rejects_negative_shift():
    with pytest.raises(NegativeExponent):
        recurse_first_kind((0, -1), [ExactPolynomial.zero(),
                                     ExactPolynomial({0: 1})], 4)


def test_second_kind_seeded_recursion_direct():
    # outer blocks on the full tree from the depth-1 seed
    law = SecondKindInput(1, 0, 1)
    seed = ExactPolynomial({1: 1})
    assert recurse_second_kind(law, seed, 3, FULL) \
        == bruteforce_transform(OUTER, 3)


def test_size_guard():
    with pytest.raises(SizeBoundExceeded):
        bruteforce_transform(BLOCKS, laplace.DEFAULT_MAX_FULL + 1)
    with pytest.raises(SizeBoundExceeded):
        bruteforce_transform(AREA, laplace.DEFAULT_MAX_PAIR + 1, PAIR)
    # explicit override allows it (kept tiny here)
    poly = bruteforce_transform(BLOCKS, 4, max_n=4)
    assert poly.evaluate(1) == level_count(4, FULL)


def test_zero_polynomial_moments():
    with pytest.raises(ZeroPolynomial):
        expectation_from_laplace(ExactPolynomial.zero())
    with pytest.raises(ZeroPolynomial):
        variance_from_laplace(ExactPolynomial.zero())


def test_variance_from_frozen_transform():
    poly = bruteforce_transform(BLOCKS, 3)
    assert variance_from_laplace(poly) == Fraction(59, 144)


def test_shard_merge_equals_full_scan():
    laplace.clear_scan_cache()
    whole = level_histograms(FULL, 6)
    total = level_count(6, FULL)
    cuts = [0, total // 3, 2 * total // 3 + 5, total]
    parts = [scan_chunk(FULL, 6, cuts[i], cuts[i + 1]) for i in range(3)]
    merged = laplace._merge(parts)
    assert merged == whole


def test_scan_cache_serves_shallower_depths():
    laplace.clear_scan_cache()
    deep = level_histograms(FULL, 6)
    shallow = level_histograms(FULL, 4)
    assert set(shallow) == set(range(1, 5))
    for level in shallow:
        assert shallow[level] == deep[level]
