"""Per-node statistics, path area, transition inputs, certificates."""

import io
from collections import Counter
from fractions import Fraction

import pytest

from mton import laplace, stats
from mton.partitions import validate_noncrossing
from mton.polynomials import ExactPolynomial
from mton.stats import (AREA, BLOCKS, INTERVAL_PAIRS, LARGE_BLOCKS, OUTER,
                        AreaRequiresPairPartition, NotFirstKind, NotSecondKind,
                        SecondKindInput, Statistic, VerificationFailed, area,
                        blocks_of_size, certify_first_kind,
                        certify_second_kind, dyck_path, evaluate,
                        first_kind_input, path_area, second_kind_input,
                        write_stats_csv)
from mton.tree import FULL, PAIR, decode, iter_level, TreeCode


def test_statistic_names_and_parse():
    assert BLOCKS.name == "Y"
    assert blocks_of_size(2).name == "Y2"
    assert LARGE_BLOCKS.name == "Yge3"
    assert OUTER.name == "Out"
    assert INTERVAL_PAIRS.name == "Int"
    assert AREA.name == "Area"
    for s in (BLOCKS, blocks_of_size(1), blocks_of_size(7), LARGE_BLOCKS,
              OUTER, INTERVAL_PAIRS, AREA):
        assert Statistic.parse(s.name) == s
    with pytest.raises(ValueError):
        Statistic.parse("Y0")
    with pytest.raises(ValueError):
        Statistic.parse("nope")


def test_evaluate_on_frozen_node():
    op = decode(TreeCode(FULL, (2, 3, 4, 3, 2, 7, 0, 9)))
    # blocks: (3 4 7 9), (8), (5 6), (1 2)
    assert evaluate(BLOCKS, op) == 4
    assert evaluate(blocks_of_size(1), op) == 1
    assert evaluate(blocks_of_size(2), op) == 2
    assert evaluate(blocks_of_size(4), op) == 1
    assert evaluate(LARGE_BLOCKS, op) == 1
    assert evaluate(OUTER, op) == 2
    assert evaluate(INTERVAL_PAIRS, op) == 2


def test_block_size_statistics_decompose_pointwise():
    for n in range(1, 8):
        for op in iter_level(n, FULL):
            total = sum(evaluate(blocks_of_size(size), op)
                        for size in range(1, n + 1))
            assert total == evaluate(BLOCKS, op)
            assert (evaluate(LARGE_BLOCKS, op)
                    == evaluate(BLOCKS, op)
                    - evaluate(blocks_of_size(1), op)
                    - evaluate(blocks_of_size(2), op))


def test_area_only_on_pair_partitions():
    with pytest.raises(AreaRequiresPairPartition):
        area(validate_noncrossing([[1, 2, 3]], 3))
    p = validate_noncrossing([[1, 4], [2, 3]], 4)
    # trapezoid rule over heights 1, 2, 1, 0
    assert area(p) == 4


def test_dyck_path_and_area_examples():
    p = validate_noncrossing([[1, 4], [2, 3]], 4)
    assert dyck_path(p) == (1, 1, -1, -1)
    assert path_area(dyck_path(p)) == 4
    q = validate_noncrossing([[1, 2], [3, 4]], 4)
    assert dyck_path(q) == (1, -1, 1, -1)
    assert path_area(dyck_path(q)) == 2


def test_path_area_rejects_broken_paths():
    with pytest.raises(ValueError):
        path_area((1, 1, -1))
    with pytest.raises(ValueError):
        path_area((1, -1, -1, 1))


def test_area_statistic_matches_path_area():
    for n in range(1, 6):
        for op in iter_level(n, PAIR):
            p = op.partition()
            assert evaluate(AREA, op) == path_area(dyck_path(p))


def test_first_kind_inputs():
    assert first_kind_input(BLOCKS) == (1,)
    assert first_kind_input(blocks_of_size(1)) == (1, -1)
    assert first_kind_input(blocks_of_size(2)) == (0, 1, -1)
    assert first_kind_input(blocks_of_size(3)) == (0, 0, 1, -1)
    assert first_kind_input(LARGE_BLOCKS) == (0, 0, 1)
    with pytest.raises(NotFirstKind):
        first_kind_input(OUTER)
    with pytest.raises(NotFirstKind):
        first_kind_input(AREA)


def test_second_kind_inputs():
    assert second_kind_input(OUTER, FULL) == SecondKindInput(1, 0, 1)
    assert second_kind_input(OUTER, PAIR) == SecondKindInput(1, 0, 1)
    assert second_kind_input(INTERVAL_PAIRS, PAIR) == SecondKindInput(0, 1, 0)
    with pytest.raises(NotSecondKind):
        second_kind_input(INTERVAL_PAIRS, FULL)
    with pytest.raises(NotSecondKind):
        second_kind_input(BLOCKS, FULL)


def test_certificates_pass_at_small_bounds():
    certify_first_kind(BLOCKS, bound=5)
    certify_first_kind(blocks_of_size(1), bound=5)
    certify_first_kind(LARGE_BLOCKS, bound=5)
    certify_second_kind(OUTER, FULL, bound=5)
    certify_second_kind(OUTER, PAIR, bound=4)
    certify_second_kind(INTERVAL_PAIRS, PAIR, bound=4)


def test_certificate_rejects_wrong_vector():
    with pytest.raises(VerificationFailed):
        certify_first_kind(BLOCKS, bound=4, vector=(1, 1))
    with pytest.raises(VerificationFailed):
        certify_second_kind(OUTER, FULL, bound=4,
                            law=SecondKindInput(1, 0, 2))


def test_joint_distribution_streaming_pass():
    # one walk per level feeds every first-kind statistic at once
    for n in range(1, 8):
        tallies = {s: Counter() for s in (BLOCKS, blocks_of_size(1),
                                          blocks_of_size(2), LARGE_BLOCKS)}
        for op in iter_level(n, FULL):
            for s in tallies:
                tallies[s][evaluate(s, op)] += 1
        for s, counter in tallies.items():
            direct = laplace.bruteforce_transform(s, n)
            assert ExactPolynomial.from_counts(counter) == direct


def test_csv_writer_layout():
    out = io.StringIO()
    write_stats_csv(out, 2, FULL, [BLOCKS, OUTER])
    lines = out.getvalue().strip().splitlines()
    assert lines[0] == "rank,n,Y,Out"
    assert lines[1] == "0,2,2,2"
    assert lines[2] == "1,2,2,2"
    assert lines[3] == "2,2,1,1"
    assert lines[4] == "mean,2,5/3,5/3"


def test_csv_writer_pair_area():
    out = io.StringIO()
    write_stats_csv(out, 2, PAIR, [AREA])
    lines = out.getvalue().strip().splitlines()
    assert lines[0] == "rank,n,Area"
    assert [l.split(",")[2] for l in lines[1:4]] == ["2", "4", "2"]
    assert lines[4] == "mean,2,8/3"
