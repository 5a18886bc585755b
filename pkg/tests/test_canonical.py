import pytest

from ktss.automata import dfa_equivalent, dfa_union, to_dfa
from ktss.canonical import (
    Color,
    Kind,
    Vertex,
    build_graph,
    canonicalize,
    is_canonical,
    union_graph,
    union_is_exact,
)
from ktss.core import alpha, bottom, join, make_vector
from ktss.errors import KMismatch, NotCanonical
from strategies import SMALL_WORDS, brute_member, small_vectors, nonclosure_pair, words_upto

Z = small_vectors()
Z1, Z2, Z3, Z4, Z5, Z6, Z7, Z8 = Z


def V(kind, s):
    return Vertex(kind, tuple(s))


class TestCanonicalize:
    def test_alpha_is_canonical(self):
        for word in SMALL_WORDS:
            assert is_canonical(alpha(3, [word]))
        assert canonicalize(Z1) == Z1

    def test_bottom(self):
        assert is_canonical(bottom(3))

    def test_all_junk(self):
        z = make_vector(3, {"aa"}, {"ab"}, {"aaa"})
        assert not is_canonical(z)
        assert canonicalize(z) == bottom(3)
        # independent check: the language is empty
        assert not any(brute_member(z, u) for u in words_upto("ab", 8))

    def test_word_of_length_k_minus_1_keeps_prefix_and_suffix(self):
        z = make_vector(3, {"ab"}, {"ab"}, {"aba"})
        assert canonicalize(z) == make_vector(3, {"ab"}, {"ab"}, ())

    def test_short_strings_untouched(self):
        z = make_vector(4, {"abc"}, (), {"abca"}, {"", "a", "ab"})
        assert canonicalize(z) == make_vector(4, (), (), (), {"", "a", "ab"})

    def test_k1(self):
        assert canonicalize(make_vector(1, {""}, (), {"a"})) == bottom(1)
        z = make_vector(1, {""}, {""}, {"a"})
        assert canonicalize(z) == z


class TestBuildGraph:
    def test_z1_z8(self):
        g = build_graph(Z1, Z8)
        c = g.color
        assert c[V(Kind.START, "ba")] is Color.WHITE
        assert c[V(Kind.SEGMENT, "bab")] is Color.WHITE
        assert c[V(Kind.SEGMENT, "aba")] is Color.WHITE
        assert c[V(Kind.SEGMENT, "abc")] is Color.BLUE
        assert c[V(Kind.END, "ba")] is Color.RED
        assert c[V(Kind.END, "bc")] is Color.BLUE
        edges = set(g.edges())
        assert (V(Kind.START, "ba"), V(Kind.SEGMENT, "bab")) in edges
        assert (V(Kind.SEGMENT, "bab"), V(Kind.SEGMENT, "abc")) in edges
        # tail "ba" of aba does not overlap head "ab" of abc
        assert (V(Kind.SEGMENT, "aba"), V(Kind.SEGMENT, "abc")) not in edges

    def test_self_all_white(self):
        g = build_graph(Z3, Z3)
        assert set(g.color.values()) == {Color.WHITE}

    def test_nonclosure_colors(self):
        z, z2 = nonclosure_pair()
        c = build_graph(z, z2).color
        assert c[V(Kind.SEGMENT, "aaa")] is Color.WHITE
        assert c[V(Kind.START, "aa")] is Color.RED
        assert c[V(Kind.SEGMENT, "aab")] is Color.BLUE

    def test_edges_overlap(self):
        g = build_graph(Z1, Z8)
        for a, b in g.edges():
            tail = a.word if a.kind is Kind.START else a.word[1:]
            head = b.word if b.kind is Kind.END else b.word[:-1]
            assert tail == head and len(tail) == 2

    def test_requires_canonical(self):
        with pytest.raises(NotCanonical):
            build_graph(make_vector(3, {"aa"}, {"ab"}, {"aaa"}), Z1)

    def test_dot(self):
        dot = build_graph(Z1, Z8).to_dot()
        assert '"•ba"' in dot and '"bc•"' in dot and "color=blue" in dot
        assert dot == build_graph(Z1, Z8).to_dot()


class TestUnionIsExact:
    def test_small_merge(self):
        assert union_is_exact(Z1, Z8)

    def test_nonclosure(self):
        assert not union_is_exact(*nonclosure_pair())

    def test_self(self):
        for z in Z:
            assert union_is_exact(z, z)

    def test_small_forbidden_unions(self):
        a = join(Z1, Z8)
        b = join(join(Z2, Z5), Z7)
        c = join(join(Z3, Z4), Z6)
        assert not union_is_exact(a, b)
        assert not union_is_exact(a, c)
        assert not union_is_exact(b, c)

    def test_junk_inputs(self):
        junk = make_vector(3, {"aa", "ba", "cc"}, {"ba", "ca"}, {"bab", "aba", "aab", "ccc"})
        assert not is_canonical(junk)
        assert union_is_exact(junk, Z1)

    def test_junk_can_break_exactness(self):
        # b alone denotes nothing, yet its segment turns {a} into a+ in the join
        a = make_vector(2, {"a"}, {"a"}, ())
        b = make_vector(2, (), (), {"aa"})
        assert canonicalize(b) == bottom(2)
        assert not union_is_exact(a, b)
        assert union_is_exact(a, canonicalize(b))
        g = union_graph(a, b)
        assert g.reaches(Color.BLUE, Color.RED) or g.reaches(Color.RED, Color.BLUE)

    def test_union_graph_drops_junk(self):
        junk = make_vector(3, {"cc"}, (), {"ccc"})
        g = union_graph(join(Z1, junk), Z8)
        assert V(Kind.START, "cc") not in g.color and V(Kind.SEGMENT, "ccc") not in g.color
        assert g.color == build_graph(Z1, Z8).color

    def test_k1_uses_automata(self):
        a = make_vector(1, {""}, {""}, {"a"})
        b = make_vector(1, {""}, {""}, {"b"})
        assert not union_is_exact(a, b)
        assert union_is_exact(a, bottom(1))

    def test_k_mismatch(self):
        with pytest.raises(KMismatch):
            union_is_exact(Z1, bottom(2))

    @pytest.mark.parametrize("pair", [(0, 7), (1, 4), (2, 3), (0, 2), (3, 7)])
    def test_matches_oracle_on_small(self, pair):
        a, b = Z[pair[0]], Z[pair[1]]
        expected = dfa_equivalent(to_dfa(join(a, b)), dfa_union(to_dfa(a), to_dfa(b)))
        assert union_is_exact(a, b) == expected
