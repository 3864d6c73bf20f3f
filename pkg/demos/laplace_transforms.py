"""Level transforms two ways: enumeration versus recursion.

The transform of a statistic over a level is the polynomial whose
coefficient at t^v counts the nodes taking value v.  Statistics whose
child increments depend only on the size of the max-label block admit a
linear recursion in the level index; the recursion and the brute-force
walk must agree coefficient by coefficient.
"""

from mton import (BLOCKS, FULL, INTERVAL_PAIRS, OUTER, PAIR, blocks_of_size,
                  bruteforce_transform, expectation_from_laplace,
                  recursion_transform, variance_from_laplace)


def compare(stat, n, kind=FULL):
    brute = bruteforce_transform(stat, n, kind)
    rec = recursion_transform(stat, n, kind)
    verdict = "agree" if brute == rec else "DIFFER"
    print(f"  {stat.name:5} n={n} ({kind}):  {brute}")
    print(f"        recursion {verdict},"
          f"  mean {expectation_from_laplace(brute)},"
          f"  variance {variance_from_laplace(brute)}")


def main():
    print("block count: the transform factors as t(1+2t)...(1+nt)")
    for n in (2, 3, 4):
        compare(BLOCKS, n)

    print()
    print("singleton count: the settled level-3 value")
    compare(blocks_of_size(1), 3)

    print()
    print("outer blocks need the child-subset law, not a size-only rule")
    compare(OUTER, 4)
    compare(OUTER, 4, PAIR)
    compare(INTERVAL_PAIRS, 4, PAIR)

    print()
    print("growing the block-count transform one level at a time:")
    poly = bruteforce_transform(BLOCKS, 1)
    print("  level 1:", poly)
    for n in range(2, 7):
        poly = recursion_transform(BLOCKS, n)
        total = poly.evaluate(1)
        print(f"  level {n}: mass {total}, degree {poly.degree}")


if __name__ == "__main__":
    main()
