import itertools
import math
import random
from collections import Counter

import pytest

from lightsout.counts import (GraphCountTable, compute_gn, embedded_table,
                              graph_count, load_cache, save_cache)
from lightsout.errors import InternalInvariantError, UnsupportedSizeError
from lightsout.graphs import (Graph, Permutation, apply_permutation,
                              canonical_form, pair_count)
from lightsout.partitions import (Partition, class_weight, partition_stream,
                                  representative_permutation)
from lightsout.rng import TrialStream, uniform_below
from lightsout.sampling import (pair_orbits, sample_fixed_graph,
                                sample_uniform_connected_graph,
                                sample_uniform_graph, select_partition)


class FakeStream:
    """Replays scripted getrandbits results, checking requested widths."""

    def __init__(self, draws):
        self.draws = list(draws)

    def getrandbits(self, k):
        width, value = self.draws.pop(0)
        assert width == k, f"expected a {width}-bit draw, sampler asked for {k}"
        return value


class TestComputeGn:
    @pytest.mark.parametrize("n,expected", [(1, 1), (4, 11), (11, 1018997864)])
    def test_known_values(self, n, expected):
        assert compute_gn(n) == expected

    def test_guard(self):
        with pytest.raises(UnsupportedSizeError):
            compute_gn(61)

    @pytest.mark.parametrize("n", range(1, 41))
    def test_matches_embedded_table(self, n):
        assert compute_gn(n) == embedded_table().get(n)


class TestGraphCountTable:
    def test_pinned_prefix_enforced(self):
        with pytest.raises(InternalInvariantError):
            GraphCountTable(4, (1, 2, 5, 11))

    def test_lookup_bounds(self):
        table = embedded_table()
        assert table.get(1) == 1
        with pytest.raises(UnsupportedSizeError):
            table.get(table.max_n + 1)

    def test_graph_count_beyond_table(self):
        with pytest.raises(UnsupportedSizeError):
            graph_count(embedded_table().max_n + 1)

    def test_cache_roundtrip(self, tmp_path):
        path = tmp_path / "gn_cache.txt"
        save_cache({1: 1, 2: 2, 13: 50502031367952}, path)
        assert load_cache(path) == {1: 1, 2: 2, 13: 50502031367952}

    def test_cache_prefix_validated(self, tmp_path):
        path = tmp_path / "gn_cache.txt"
        path.write_text("1 1\n3 5\n")
        with pytest.raises(InternalInvariantError):
            load_cache(path)

    def test_graph_count_computes_and_caches(self, tmp_path):
        path = tmp_path / "gn_cache.txt"
        assert graph_count(9, compute=True, cache_path=path) == 274668
        assert load_cache(path)[9] == 274668


class TestSelectPartition:
    def test_walk_boundaries_n4(self):
        # Cumulative weights at n=4: 64, 160, 192, 216, 264.
        w = 24 * 11
        bits = w.bit_length()
        for t, parts in [(0, [1, 1, 1, 1]), (50, [1, 1, 1, 1]), (63, [1, 1, 1, 1]),
                         (64, [2, 1, 1]), (100, [2, 1, 1]), (159, [2, 1, 1]),
                         (160, [3, 1]), (216, [2, 2]), (263, [2, 2])]:
            p = select_partition(4, FakeStream([(bits, t)]))
            assert p.parts() == parts

    def test_single_vertex(self):
        assert select_partition(1, FakeStream([])).parts() == [1]

    def test_rejection_redraws_out_of_range_blocks(self):
        w = 24 * 11
        bits = w.bit_length()
        p = select_partition(4, FakeStream([(bits, 300), (bits, 280), (bits, 100)]))
        assert p.parts() == [2, 1, 1]

    def test_draw_residues_equidistributed(self):
        rng = random.Random(99)
        w = 264
        counts = Counter(uniform_below(rng, w) for _ in range(264_000))
        expected = 264_000 / w
        chi = sum((counts.get(v, 0) - expected) ** 2 / expected for v in range(w))
        # Wilson-Hilferty upper bound for chi-square df=263 at alpha=0.001.
        df = w - 1
        z = 3.0902
        crit = df * (1 - 2 / (9 * df) + z * math.sqrt(2 / (9 * df))) ** 3
        assert chi < crit


class TestPairOrbits:
    def test_identity_singletons(self):
        orbits = pair_orbits(Permutation.identity(4))
        assert orbits.count == 6
        assert all(len(o) == 1 for o in orbits.orbits)

    def test_four_cycle_orbits(self):
        orbits = pair_orbits(Permutation(4, (2, 3, 4, 1)))
        assert [set(o) for o in orbits.orbits] == [
            {(1, 2), (2, 3), (3, 4), (1, 4)},
            {(1, 3), (2, 4)},
        ]

    def test_transposition_orbit_count(self):
        assert pair_orbits(Permutation(4, (2, 1, 3, 4))).count == 4

    @pytest.mark.parametrize("n", range(1, 13))
    def test_count_matches_closed_form(self, n):
        for p in partition_stream(n):
            rep = representative_permutation(p)
            assert pair_orbits(rep).count == class_weight(p).c

    def test_partitions_pair_set(self):
        for images in itertools.permutations(range(1, 6)):
            orbits = pair_orbits(Permutation(5, images))
            flat = [pair for o in orbits.orbits for pair in o]
            assert sorted(flat) == sorted(itertools.combinations(range(1, 6), 2))


class TestSampleFixedGraph:
    def test_identity_all_heads_is_complete(self):
        g = sample_fixed_graph(Permutation.identity(4), FakeStream([(6, 0b111111)]))
        assert g.edge_count == 6

    def test_four_cycle_coins(self):
        rep = Permutation(4, (2, 3, 4, 1))
        g = sample_fixed_graph(rep, FakeStream([(2, 0b01)]))
        assert g.edges == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})

    def test_all_tails_is_edgeless(self):
        for images in [(2, 3, 4, 1), (1, 2, 3, 4), (2, 1, 4, 3)]:
            rep = Permutation(4, images)
            m = pair_orbits(rep).count
            assert sample_fixed_graph(rep, FakeStream([(m, 0)])).edge_bits == 0

    def test_output_fixed_by_permutation(self):
        rng = random.Random(7)
        for n in range(1, 13):
            for p in partition_stream(n):
                rep = representative_permutation(p)
                g = sample_fixed_graph(rep, rng)
                assert apply_permutation(g, rep) == g


class TestUniformSampling:
    def test_single_vertex(self):
        rng = random.Random(1)
        for _ in range(20):
            g = sample_uniform_graph(1, rng)
            assert g == Graph(1, 0)

    def test_two_vertex_frequencies(self):
        rng = random.Random(11)
        hits = sum(sample_uniform_graph(2, rng).edge_count for _ in range(100_000))
        assert abs(hits / 100_000 - 0.5) < 0.01

    def test_partition_frequencies_n4(self):
        # Class probabilities are (64, 96, 32, 24, 48)/264 in stream order.
        rng = random.Random(2024)
        draws = 264_000
        counts = Counter(select_partition(4, rng).counts for _ in range(draws))
        weights = {(4, 0, 0, 0): 64, (2, 1, 0, 0): 96, (1, 0, 1, 0): 32,
                   (0, 0, 0, 1): 24, (0, 2, 0, 0): 48}
        for key, w in weights.items():
            expected = draws * w / 264
            sigma = math.sqrt(draws * (w / 264) * (1 - w / 264))
            assert abs(counts[key] - expected) <= 3 * sigma


class TestConnectedSampling:
    def test_two_vertices_always_k2(self):
        rng = random.Random(3)
        for _ in range(50):
            assert sample_uniform_connected_graph(2, rng).edge_count == 1

    def test_three_vertex_frequencies(self):
        rng = random.Random(4)
        triangles = 0
        trials = 100_000
        for _ in range(trials):
            g = sample_uniform_connected_graph(3, rng)
            assert g.edge_count in (2, 3)
            triangles += g.edge_count == 3
        assert abs(triangles / trials - 0.5) < 0.01

    def test_canonical_buckets_n4_connected(self):
        rng = random.Random(5)
        forms = {canonical_form(sample_uniform_connected_graph(4, rng))
                 for _ in range(2000)}
        assert len(forms) == 6  # the six connected 4-vertex graphs


class TestTrialStreamDraws:
    def test_uniform_below_trivial_bound(self):
        assert uniform_below(FakeStream([]), 1) == 0

    def test_streams_differ_by_index(self):
        a = TrialStream(1, 0).getrandbits(128)
        b = TrialStream(1, 1).getrandbits(128)
        assert a != b

    def test_stream_reproducible(self):
        assert TrialStream(9, 42).getrandbits(64) == TrialStream(9, 42).getrandbits(64)

    def test_seed_range_checked(self):
        with pytest.raises(ValueError):
            TrialStream(1 << 64, 0)
