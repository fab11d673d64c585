import itertools
import random
from collections import defaultdict

import pytest

from lightsout.counts import embedded_table
from lightsout.errors import UnsupportedSizeError
from lightsout.exact import (brute_force_universally_solvable,
                             enumerate_fixed_graphs, exact_counts)
from lightsout.graphs import (Graph, Permutation, apply_permutation,
                              canonical_form, is_universally_solvable,
                              pair_count)

# (total, solvable, connected, connected_solvable) for n = 1..8.
CENSUS_ROWS = {
    1: (1, 1, 1, 1),
    2: (2, 1, 1, 0),
    3: (4, 2, 2, 1),
    4: (11, 4, 6, 2),
    5: (34, 13, 21, 9),
    6: (156, 47, 112, 33),
    7: (1044, 339, 853, 290),
    8: (12346, 4043, 11117, 3692),
}


class TestEnumerateFixedGraphs:
    def test_four_cycle_has_four_fixed_graphs(self):
        rep = Permutation(4, (2, 3, 4, 1))
        graphs = list(enumerate_fixed_graphs(rep))
        assert len(graphs) == 4
        assert len(set(graphs)) == 4

    def test_identity_yields_all_graphs(self):
        graphs = set(enumerate_fixed_graphs(Permutation.identity(3)))
        assert graphs == {Graph(3, bits) for bits in range(8)}

    def test_every_yield_is_fixed(self):
        rng = random.Random(12)
        for _ in range(30):
            n = rng.randint(1, 6)
            images = list(range(1, n + 1))
            rng.shuffle(images)
            p = Permutation(n, tuple(images))
            for g in enumerate_fixed_graphs(p):
                assert apply_permutation(g, p) == g

    def test_guard_on_large_orbit_count(self):
        with pytest.raises(UnsupportedSizeError):
            next(enumerate_fixed_graphs(Permutation.identity(10)))


class TestExactCounts:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_known_tables(self, n):
        row = exact_counts(n)
        assert (row.total, row.solvable, row.connected, row.connected_solvable) \
            == CENSUS_ROWS[n]

    @pytest.mark.slow
    def test_n8_matches_known_tables(self):
        row = exact_counts(8)
        assert (row.total, row.solvable, row.connected, row.connected_solvable) \
            == CENSUS_ROWS[8]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_total_equals_graph_count(self, n):
        assert exact_counts(n).total == embedded_table().get(n)

    def test_size_guard(self):
        with pytest.raises(UnsupportedSizeError):
            exact_counts(9)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_labeled_census_cross_check(self, n):
        """Group all labeled graphs by isomorphism class and recount."""
        by_class = defaultdict(list)
        for bits in range(1 << pair_count(n)):
            g = Graph(n, bits)
            by_class[canonical_form(g)].append(g)
        # Solvability is constant on each class, and per-class tallies
        # reproduce the Burnside census.
        solvable = 0
        for members in by_class.values():
            verdicts = {is_universally_solvable(g) for g in members}
            assert len(verdicts) == 1
            solvable += verdicts.pop()
        row = exact_counts(n)
        assert len(by_class) == row.total
        assert solvable == row.solvable


class TestBruteForceOracle:
    def test_path_p4(self):
        g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
        assert brute_force_universally_solvable(g)

    def test_k4(self):
        g = Graph.from_edges(4, itertools.combinations(range(1, 5), 2))
        assert not brute_force_universally_solvable(g)

    def test_agrees_with_invertibility_n4_exhaustive(self):
        for bits in range(64):
            g = Graph(4, bits)
            assert brute_force_universally_solvable(g) == is_universally_solvable(g)

    def test_agrees_with_invertibility_n5_random(self):
        rng = random.Random(13)
        for _ in range(1000):
            g = Graph(5, rng.getrandbits(10))
            assert brute_force_universally_solvable(g) == is_universally_solvable(g)

    def test_size_guard(self):
        with pytest.raises(UnsupportedSizeError):
            brute_force_universally_solvable(Graph(6, 0))
