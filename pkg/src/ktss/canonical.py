"""Junk removal and the exact-union test.

Both operations work on the overlap graph of a vector: start vertices
``•u`` for allowed prefixes, one vertex per segment, end vertices ``u•`` for
allowed suffixes, with an edge wherever the length-(k-1) tail of one vertex
equals the length-(k-1) head of the next. Paths from a start vertex to an end
vertex spell exactly the words of length >= k-1 in the language.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple

from ktss.core import KTestVector, Word, _check_k, join
from ktss.errors import NotCanonical

MARKER = "•"


class Kind(str, Enum):
    START = "start"
    SEGMENT = "segment"
    END = "end"


class Color(str, Enum):
    RED = "red"
    BLUE = "blue"
    WHITE = "white"


class Vertex(NamedTuple):
    kind: Kind
    word: Word

    def label(self, separator: str = "") -> str:
        text = separator.join(self.word)
        if self.kind is Kind.START:
            return MARKER + separator + text if text else MARKER
        if self.kind is Kind.END:
            return text + separator + MARKER if text else MARKER
        return text


def _reachable_grams(starts, index, step) -> set[Word]:
    seen = set(starts)
    todo = list(seen)
    while todo:
        u = todo.pop()
        for v in index.get(u, ()):
            nxt = step(v)
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen


def _head(v: Word) -> Word:
    return v[:-1]


def _tail(v: Word) -> Word:
    return v[1:]


def canonicalize(z: KTestVector) -> KTestVector:
    """Remove junk prefixes, suffixes and segments.

    The result denotes the same language and is the least vector that does.
    """
    by_head: dict[Word, list[Word]] = defaultdict(list)
    by_tail: dict[Word, list[Word]] = defaultdict(list)
    for v in z.segments:
        by_head[v[:-1]].append(v)
        by_tail[v[1:]].append(v)
    # (k-1)-grams reachable from some prefix / co-reachable to some suffix
    fwd = _reachable_grams(z.prefixes, by_head, _tail)
    bwd = _reachable_grams(z.suffixes, by_tail, _head)
    segments = frozenset(v for v in z.segments if v[:-1] in fwd and v[1:] in bwd)
    return KTestVector(z.k, z.prefixes & bwd, z.suffixes & fwd, segments, z.short)


def is_canonical(z: KTestVector) -> bool:
    return canonicalize(z) == z


@dataclass
class CompatibilityGraph:
    """Colored overlap graph of two vectors.

    Successors are found through an index on the length-(k-1) head of each
    segment, so edges are never materialized unless :meth:`edges` is called.
    """

    k: int
    color: dict[Vertex, Color]
    _by_head: dict[Word, list[Vertex]] = field(repr=False)
    _ends: frozenset[Word] = field(repr=False)

    @property
    def vertices(self) -> list[Vertex]:
        order = {Kind.START: 0, Kind.SEGMENT: 1, Kind.END: 2}
        return sorted(self.color, key=lambda v: (order[v.kind], v.word))

    def successors(self, v: Vertex) -> Iterator[Vertex]:
        if v.kind is Kind.END:
            return
        overlap = v.word if v.kind is Kind.START else v.word[1:]
        yield from self._by_head.get(overlap, ())
        if overlap in self._ends:
            yield Vertex(Kind.END, overlap)

    def edges(self) -> Iterator[tuple[Vertex, Vertex]]:
        for v in self.vertices:
            for w in sorted(self.successors(v), key=lambda x: (x.kind is Kind.END, x.word)):
                yield v, w

    def reaches(self, sources: Color, targets: Color) -> bool:
        """Whether some vertex colored ``sources`` has a path to one colored ``targets``."""
        color = self.color
        queue = deque(v for v, c in color.items() if c is sources)
        seen = set(queue)
        while queue:
            v = queue.popleft()
            for w in self.successors(v):
                if w in seen:
                    continue
                if color[w] is targets:
                    return True
                seen.add(w)
                queue.append(w)
        return False

    def to_dot(self, separator: str = "") -> str:
        ids = {v: f"v{i}" for i, v in enumerate(self.vertices)}
        lines = ["digraph compatibility {", "  rankdir=LR;", "  node [style=filled];"]
        fill = {Color.RED: "tomato", Color.BLUE: "lightblue", Color.WHITE: "white"}
        for v, name in ids.items():
            c = self.color[v]
            lines.append(
                f'  {name} [label="{_escape(v.label(separator))}", color={c.value}, fillcolor={fill[c]}];'
            )
        for v, w in self.edges():
            lines.append(f"  {ids[v]} -> {ids[w]};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _color(in_left: bool, in_right: bool) -> Color:
    if in_left and in_right:
        return Color.WHITE
    return Color.RED if in_left else Color.BLUE


def build_graph(z1: KTestVector, z2: KTestVector) -> CompatibilityGraph:
    """Colored overlap graph of two canonical vectors (red: only ``z1``, blue: only ``z2``)."""
    _check_k(z1, z2)
    for name, z in (("left", z1), ("right", z2)):
        if not is_canonical(z):
            raise NotCanonical(f"{name} vector has junk elements; canonicalize it first")
    return _build_graph(z1, z2)


def _build_graph(z1: KTestVector, z2: KTestVector, support: KTestVector | None = None) -> CompatibilityGraph:
    support = join(z1, z2) if support is None else support
    color: dict[Vertex, Color] = {}
    by_head: dict[Word, list[Vertex]] = defaultdict(list)
    for u in support.prefixes:
        color[Vertex(Kind.START, u)] = _color(u in z1.prefixes, u in z2.prefixes)
    for v in support.segments:
        vx = Vertex(Kind.SEGMENT, v)
        color[vx] = _color(v in z1.segments, v in z2.segments)
        by_head[v[:-1]].append(vx)
    for u in support.suffixes:
        color[Vertex(Kind.END, u)] = _color(u in z1.suffixes, u in z2.suffixes)
    return CompatibilityGraph(z1.k, color, dict(by_head), support.suffixes)


def union_graph(z1: KTestVector, z2: KTestVector) -> CompatibilityGraph:
    """Colored graph of the non-junk part of the join, for inputs that may carry junk.

    The union is exact iff no red vertex reaches a blue one and vice versa.
    """
    _check_k(z1, z2)
    return _build_graph(z1, z2, canonicalize(join(z1, z2)))


def union_is_exact(z1: KTestVector, z2: KTestVector) -> bool:
    """Whether the join of the two vectors denotes exactly the union of their languages.

    Inputs may carry junk. For ``k == 1`` the automaton check is used instead
    of the overlap graph.
    """
    _check_k(z1, z2)
    if z1.k == 1:
        from ktss.automata import dfa_equivalent, dfa_union, to_dfa

        return dfa_equivalent(to_dfa(join(z1, z2)), dfa_union(to_dfa(z1), to_dfa(z2)))
    return not _mixed_path(z1, z2)


_ONLY_LEFT, _ONLY_RIGHT = 1, 2


def _mixed_path(z1: KTestVector, z2: KTestVector) -> bool:
    """Whether some start-to-end path of the joined graph uses both a red and a blue element.

    Such a path spells a word of the join that is in neither language. The
    search walks (k-1)-grams carrying the colors seen so far, and only enters
    grams from which some suffix is still reachable, so junk never counts.
    """

    def bits(x: Word, left: frozenset, right: frozenset) -> int:
        return (0 if x in right else _ONLY_LEFT) | (0 if x in left else _ONLY_RIGHT)

    by_head: dict[Word, list[tuple[Word, int]]] = defaultdict(list)
    by_tail: dict[Word, list[Word]] = defaultdict(list)
    for v in z1.segments | z2.segments:
        by_head[v[:-1]].append((v[1:], bits(v, z1.segments, z2.segments)))
        by_tail[v[1:]].append(v)
    ends = {u: bits(u, z1.suffixes, z2.suffixes) for u in z1.suffixes | z2.suffixes}
    live = _reachable_grams(ends, by_tail, _head)

    both = _ONLY_LEFT | _ONLY_RIGHT
    todo = [(u, bits(u, z1.prefixes, z2.prefixes)) for u in z1.prefixes | z2.prefixes if u in live]
    seen = set(todo)
    while todo:
        g, f = todo.pop()
        if g in ends and f | ends[g] == both:
            return True
        for t, b in by_head.get(g, ()):
            nf = f | b
            if t not in live or (t, nf) in seen:
                continue
            if nf == both:
                return True
            seen.add((t, nf))
            todo.append((t, nf))
    return False
