import itertools
import random

import numpy as np
import pytest

from ktss.automata import dfa_equivalent, dfa_union, to_dfa
from ktss.canonical import union_is_exact
from ktss.clustering import (
    Linkage,
    LinkageRow,
    cut,
    distance_matrix,
    final_clusters,
    learn_union,
    merge_distances_consistent,
    naive_closure_union,
    nn_chain_linkage,
)
from ktss.core import alpha, bottom, distance, is_member, join, make_vector
from ktss.errors import InvalidTarget, KMismatch, UnreachedTargetWarning
from strategies import (
    SMALL_DISTANCES,
    SMALL_LINKAGE,
    SMALL_WORDS,
    JOB_WORDS,
    small_vectors,
    nonclosure_pair,
    random_word,
)

Z = small_vectors()


def member_rows(vectors, linkage):
    members = {i: frozenset({i}) for i in range(len(vectors))}
    out = set()
    for r in linkage.rows:
        out.add((members[r.left], members[r.right], r.distance))
        members[r.new] = members[r.left] | members[r.right]
    return out


def partition(clusters):
    return [list(c.members) for c in clusters]


class TestDistanceMatrix:
    def test_small(self):
        assert distance_matrix(Z).tolist() == SMALL_DISTANCES

    def test_single(self):
        assert distance_matrix([Z[0]]).tolist() == [[0]]

    def test_copies(self):
        assert distance_matrix([Z[0], Z[0]]).tolist() == [[0, 0], [0, 0]]

    def test_matches_pairwise_distance(self):
        rng = random.Random(5)
        vs = [alpha(3, [random_word(rng, "abcd", 10)]) for _ in range(30)] + [bottom(3), alpha(3, ["a", ""])]
        m = distance_matrix(vs)
        for i, j in itertools.product(range(len(vs)), repeat=2):
            assert m[i, j] == distance(vs[i], vs[j])

    def test_k_mismatch(self):
        with pytest.raises(KMismatch):
            distance_matrix([Z[0], bottom(2)])


class TestLinkage:
    def test_small(self):
        linkage = nn_chain_linkage(Z)
        assert member_rows(Z, linkage) == SMALL_LINKAGE
        assert [r.new for r in linkage.rows] == list(range(8, 13))
        assert len(final_clusters(Z, linkage)) == 3

    def test_singleton(self):
        assert nn_chain_linkage([Z[0]]).rows == []

    def test_incompatible_pair(self):
        assert nn_chain_linkage(list(nonclosure_pair())).rows == []

    def test_rows_are_exact_unions(self):
        rng = random.Random(11)
        vs = [alpha(3, [random_word(rng, "abc", 7)]) for _ in range(25)]
        linkage = nn_chain_linkage(vs)
        nodes = dict(enumerate(vs))
        for r in linkage.rows:
            assert union_is_exact(nodes[r.left], nodes[r.right])
            nodes[r.new] = join(nodes[r.left], nodes[r.right])
        assert merge_distances_consistent(vs, linkage)

    def test_stops_only_when_nothing_merges(self):
        rng = random.Random(3)
        vs = [alpha(2, [random_word(rng, "ab", 6)]) for _ in range(20)]
        final = final_clusters(vs, nn_chain_linkage(vs))
        for a, b in itertools.combinations(final, 2):
            assert not union_is_exact(a.vector, b.vector)

    def test_language_preserved(self):
        rng = random.Random(7)
        words = [random_word(rng, "ab", 6) for _ in range(12)]
        vs = [alpha(3, [w]) for w in words]
        final = final_clusters(vs, nn_chain_linkage(vs))

        def union_dfa(vectors):
            d = to_dfa(vectors[0])
            for z in vectors[1:]:
                d = dfa_union(d, to_dfa(z))
            return d

        assert dfa_equivalent(union_dfa(vs), union_dfa([c.vector for c in final]))

    def test_deterministic(self):
        rng = random.Random(2)
        vs = [alpha(3, [random_word(rng, "abc", 8)]) for _ in range(40)]
        assert nn_chain_linkage(vs).rows == nn_chain_linkage(list(vs)).rows

    def test_sorted_rows_respect_dependencies(self):
        link = Linkage(3, [LinkageRow(0, 1, 5, 3), LinkageRow(2, 3, 1, 4)])
        assert [r.new for r in link.sorted_rows()] == [3, 4]
        link = Linkage(4, [LinkageRow(0, 1, 5, 4), LinkageRow(2, 3, 1, 5)])
        assert [r.new for r in link.sorted_rows()] == [5, 4]


class TestCut:
    def test_small_three(self):
        clusters = cut(Z, nn_chain_linkage(Z), 3)
        assert partition(clusters) == [[0, 7], [1, 4, 6], [2, 3, 5]]

    def test_small_four(self):
        clusters = cut(Z, nn_chain_linkage(Z), 4)
        assert partition(clusters) == [[0, 7], [1, 4, 6], [2], [3, 5]]

    def test_all_singletons(self):
        assert partition(cut(Z, nn_chain_linkage(Z), 8)) == [[i] for i in range(8)]
        assert partition(cut(Z, nn_chain_linkage(Z), 20)) == [[i] for i in range(8)]

    def test_unreached(self):
        with pytest.warns(UnreachedTargetWarning):
            clusters = cut(Z, nn_chain_linkage(Z), 1)
        assert len(clusters) == 3

    @pytest.mark.parametrize("target", [0, -1])
    def test_invalid(self, target):
        with pytest.raises(InvalidTarget):
            cut(Z, nn_chain_linkage(Z), target)

    def test_cluster_vector_is_join(self):
        for c in cut(Z, nn_chain_linkage(Z), 3):
            expected = Z[c.members[0]]
            for i in c.members[1:]:
                expected = join(expected, Z[i])
            assert c.vector == expected


class TestLearnUnion:
    def test_small(self):
        assert partition(learn_union(SMALL_WORDS, 3, 3)) == [[0, 7], [1, 4, 6], [2, 3, 5]]

    def test_jobs(self):
        clusters = learn_union(JOB_WORDS, 3, 4)
        assert partition(clusters) == [[0, 1], [2, 3], [4, 5], [6]]

    def test_single_word(self):
        clusters = learn_union(["abc"], 3)
        assert partition(clusters) == [[0]]
        assert clusters[0].vector == alpha(3, ["abc"])

    def test_sample_coverage(self):
        rng = random.Random(4)
        words = [random_word(rng, "abc", 9) for _ in range(30)]
        for c in learn_union(words, 3):
            assert all(is_member(c.vector, words[i]) for i in c.members)

    def test_empty(self):
        with pytest.raises(ValueError):
            learn_union([], 3)


class TestNaive:
    def test_small_dedup(self):
        vs = naive_closure_union(SMALL_WORDS, 3)
        assert len(vs) == 6
        assert vs == [Z[0], Z[1], Z[2], Z[3], Z[4], Z[7]]

    def test_repeated(self):
        assert naive_closure_union(["baba", "baba"], 3) == [Z[0]]

    def test_short_words(self):
        assert naive_closure_union(["a", "aa"], 3) == [
            make_vector(3, (), (), (), {"a"}),
            make_vector(3, {"aa"}, {"aa"}, ()),
        ]


def test_distance_matrix_is_integer_typed():
    assert distance_matrix(Z).dtype == np.int64
