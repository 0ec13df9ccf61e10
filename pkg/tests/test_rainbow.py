"""Rainbow neighbourhood evaluation, r-values, and the closed-form engine."""

import itertools
import random
from fractions import Fraction

import pytest

from rainbowgraph import (
    CapExceededError,
    ColourPartition,
    FamilySpec,
    GraphError,
    InvalidPartitionError,
    build,
    chromatic_number,
    enumerate_chromatic_partitions,
    enumerate_graphs,
    formula_r,
    r_conv,
    r_max,
    r_min,
    rainbow_set,
)
from rainbowgraph import families
from rainbowgraph.graph import bipartition, closed_neighbourhood, is_connected
from rainbowgraph.transforms import disjoint_union, join


def naive_yields(g, partition):
    """Second, deliberately different implementation of the yield predicate."""
    out = []
    for v in range(g.n):
        closed = closed_neighbourhood(g, v)
        touched = sum(1 for klass in partition.classes if klass & closed)
        out.append(touched == len(partition.classes))
    return tuple(out)


class TestRainbowSet:
    def test_c9_convention_classes(self):
        g = families.cycle(9)
        partition = ColourPartition.from_classes([{0, 2, 4, 6}, {1, 3, 5, 7}, {8}])
        report = rainbow_set(g, partition)
        assert report.count == 3
        assert report.yielding() == (0, 7, 8)

    def test_complete_all_yield(self):
        for n in (1, 3, 5):
            g = families.complete(n)
            partition = ColourPartition.from_classes([{v} for v in range(n)])
            assert rainbow_set(g, partition).count == n

    def test_c9_periodic_colouring_all_yield(self):
        g = families.cycle(9)
        partition = ColourPartition.from_classes(
            [{0, 3, 6}, {1, 4, 7}, {2, 5, 8}]
        )
        assert rainbow_set(g, partition).count == 9

    def test_invalid_partition_rejected(self):
        g = families.path(3)
        with pytest.raises(InvalidPartitionError):
            rainbow_set(g, ColourPartition.from_classes([{0, 1}, {2}]))
        with pytest.raises(InvalidPartitionError):
            rainbow_set(g, ColourPartition.from_classes([{0, 2}, {1}, {3}]))

    def test_matches_naive_implementation(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected_only=True):
                for partition in enumerate_chromatic_partitions(g):
                    assert rainbow_set(g, partition).flags == naive_yields(g, partition)


class TestRValues:
    def test_petersen(self):
        g = families.petersen()
        assert r_conv(g).value == 9
        assert r_min(g).value == 9
        assert r_max(g).value == 9

    def test_wheel_rim5(self):
        assert r_conv(families.wheel(5)).value == 4

    def test_octahedron(self):
        assert r_conv(families.complete_multipartite((2, 2, 2))).value == 6

    def test_c9(self):
        g = families.cycle(9)
        assert r_conv(g).value == 3
        assert r_min(g).value == 3
        assert r_max(g).value == 9

    def test_union_min_example(self):
        g = disjoint_union(families.path(3), families.complete(3))
        assert r_min(g).value == 3

    def test_witnesses_are_valid(self):
        g = families.wheel(6)
        for fn in (r_conv, r_min, r_max):
            value = fn(g)
            assert value.method == "oracle"
            value.witness.validate(g)
            assert rainbow_set(g, value.witness).count == value.value

    def test_sandwich_bounds_on_corpus(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected_only=True):
                chi = chromatic_number(g)
                low = r_min(g).value
                conv = r_conv(g).value
                high = r_max(g).value
                assert chi <= low <= conv <= high <= g.n

    def test_connected_bipartite_always_n(self):
        for n in range(2, 7):
            for g in enumerate_graphs(n, connected_only=True):
                if bipartition(g) is None:
                    continue
                for partition in enumerate_chromatic_partitions(g):
                    assert rainbow_set(g, partition).count == g.n

    def test_join_additivity_random_pairs(self):
        rng = random.Random(99)
        pool = [g for n in range(1, 6) for g in enumerate_graphs(n, connected_only=True)]
        for _ in range(25):
            g, h = rng.choice(pool), rng.choice(pool)
            if g.n + h.n > 11:
                continue
            joined = join(g, h)
            assert r_conv(joined).value == r_conv(g).value + r_conv(h).value
            assert r_min(joined).value == r_min(g).value + r_min(h).value


def brute_r_values(g):
    """Independent oracle: sweep raw colour assignments, not partitions.

    Returns (r_min, r_conv, r_max) by enumerating all proper chi-colourings
    with itertools, grouping them into partitions, and scanning yield counts.
    """
    chi = chromatic_number(g)
    seen = set()
    counts = []
    vectors = {}
    for assignment in itertools.product(range(chi), repeat=g.n):
        if any(assignment[u] == assignment[v] for u, v in g.edges()):
            continue
        if len(set(assignment)) != chi:
            continue
        classes = {}
        for v, c in enumerate(assignment):
            classes.setdefault(c, set()).add(v)
        key = frozenset(frozenset(c) for c in classes.values())
        if key in seen:
            continue
        seen.add(key)
        partition = ColourPartition.from_classes(classes.values())
        count = rainbow_set(g, partition).count
        counts.append(count)
        vectors.setdefault(partition.size_vector, []).append(count)
    best_vector = max(vectors)
    return min(counts), min(vectors[best_vector]), max(counts)


class TestIndependentOracle:
    def test_r_values_match_assignment_sweep(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n, connected_only=True):
                low, conv, high = brute_r_values(g)
                assert r_min(g).value == low
                assert r_conv(g).value == conv
                assert r_max(g).value == high


class TestFormulaFallback:
    def test_bipartite_catalog_graph(self):
        value = r_conv(families.named_graph("foster"))
        assert value.value == 90
        assert value.method == "formula" and value.claim == "THM2.2"

    def test_odd_cycle_beyond_cap(self):
        value = r_conv(families.cycle(19))
        assert value.value == 3 and value.claim == "PROP2.1b"

    def test_complete_beyond_cap(self):
        value = r_conv(families.complete(20))
        assert value.value == 20 and value.claim == "PROP2.1c"

    def test_odd_wheel_beyond_cap(self):
        value = r_conv(families.wheel(15))
        assert value.value == 4 and value.claim == "PROP2.1d"

    def test_even_wheel_beyond_cap(self):
        value = r_conv(families.wheel(16))
        assert value.value == 17 and value.claim == "PROP2.1d"

    def test_even_wheel_formula_agrees_with_oracle_at_cap(self):
        g = families.wheel(12)  # 13 vertices, within the oracle cap
        assert r_conv(g).method == "oracle"
        assert r_conv(g).value == 13

    def test_multipartite_beyond_cap(self):
        value = r_conv(families.complete_multipartite((6, 5, 4)))
        assert value.value == 15 and value.claim == "PROP2.1e"

    def test_oracle_preferred_within_cap(self):
        assert r_conv(families.cycle(9)).method == "oracle"

    def test_unrecognised_raises_cap_error(self):
        g = families.thorn_cycle(15, 0, 1)  # odd cycle with a pendant
        with pytest.raises(CapExceededError):
            r_conv(g)
        with pytest.raises(CapExceededError):
            r_min(g)

    def test_allow_large_runs_oracle(self):
        value = r_conv(families.cycle(15), allow_large=True)
        assert value.method == "oracle" and value.value == 3


class TestFormulaEngine:
    def test_family_values(self):
        assert formula_r("family", spec=FamilySpec("path", (7,))).values["r"] == 7
        assert formula_r("family", spec=FamilySpec("cycle", (8,))).values["r"] == 8
        assert formula_r("family", spec=FamilySpec("cycle", (7,))).values["r"] == 3
        assert formula_r("family", spec=FamilySpec("wheel", (6,))).values["r"] == 7
        assert formula_r("family", spec=FamilySpec("ladder", (5,))).values["r"] == 10
        assert formula_r("family", spec=FamilySpec("complete_multipartite", (2, 2, 2))).values["r"] == 6

    def test_ladder_pair(self):
        values = formula_r("line_pair", spec=FamilySpec("ladder", (4,))).values
        assert values["sum"] == 16 and values["product"] == 64

    def test_complete_pair(self):
        values = formula_r("line_pair", spec=FamilySpec("complete", (4,))).values
        assert values["sum"] == 10 and values["product"] == 24

    def test_path_pair(self):
        values = formula_r("line_pair", spec=FamilySpec("path", (7,))).values
        assert values["sum"] == 13 and values["product"] == 42

    def test_multipartite_pair_verbatim(self):
        values = formula_r("line_pair", spec=FamilySpec("complete_multipartite", (2, 2, 1))).values
        assert values["sum"] == Fraction(11)
        assert values["product"] == Fraction(30)

    def test_operation_formulas(self):
        assert formula_r("join", r_g=3, r_h=4).values["r"] == 7
        assert formula_r("union", r_g=3, r_h=4, chi_g=2, chi_h=2).values["relation"] == "eq"
        assert formula_r("union", r_g=3, r_h=4, chi_g=2, chi_h=3).values["relation"] == "lt"
        assert formula_r("corona", n_g=3, r_g=3, r_h=2, chi_g=3, chi_h=2).values["r"] == 9
        assert formula_r("corona", n_g=4, r_g=4, r_h=1, chi_g=4, chi_h=1).values["r"] == 4
        assert formula_r("k1_join", r_g=5).values["r"] == 6
        assert formula_r("chithra_k1", t=3, r_g=5).values["r"] == 8
        assert formula_r("g_star", a=6, b=2).values == {"r": 6, "chi": 2}

    def test_unknown_kind(self):
        with pytest.raises(GraphError):
            formula_r("mystery")
