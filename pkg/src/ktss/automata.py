"""Sliding-window automata for k-TSS languages.

This module is deliberately independent of :mod:`ktss.canonical`: it is the
oracle used to check the graph-based union test and the algebraic laws.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Hashable, Iterable

from ktss.core import KTestVector, Symbol, Word, WordLike, as_word, size_guard
from ktss.errors import SizeGuard

State = Hashable

DEFAULT_MAX_LEN = 12


@dataclass(frozen=True)
class Dfa:
    """Partial deterministic automaton; missing transitions go to an implicit reject sink."""

    initial: State
    transitions: dict[State, dict[Symbol, State]]
    accepting: frozenset
    alphabet: frozenset[Symbol]

    @property
    def states(self) -> list[State]:
        """Reachable states in breadth-first order over sorted symbols."""
        order = [self.initial]
        seen = {self.initial}
        queue = deque(order)
        while queue:
            q = queue.popleft()
            row = self.transitions.get(q, {})
            for a in sorted(row):
                r = row[a]
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order

    def step(self, q: State, a: Symbol) -> State | None:
        return self.transitions.get(q, {}).get(a)

    def accepts(self, w: WordLike) -> bool:
        q: State | None = self.initial
        for a in as_word(w):
            q = self.step(q, a)
            if q is None:
                return False
        return q in self.accepting

    def to_dot(self, separator: str = "") -> str:
        del separator  # symbols are labelled individually
        names = {q: f"q{i}" for i, q in enumerate(self.states)}
        lines = ["digraph dfa {", "  rankdir=LR;", '  __start [shape=point, label=""];']
        for q, name in names.items():
            shape = "doublecircle" if q in self.accepting else "circle"
            lines.append(f'  {name} [shape={shape}, label="{name}"];')
        lines.append(f"  __start -> {names[self.initial]};")
        for q, name in names.items():
            row = self.transitions.get(q, {})
            for a in sorted(row):
                label = a.replace("\\", "\\\\").replace('"', '\\"')
                lines.append(f'  {name} -> {names[row[a]]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def to_dfa(z: KTestVector) -> Dfa:
    """Trimmed sliding-window automaton accepting exactly the language of ``z``.

    States ``("short", w)`` remember the whole input while it is shorter than
    ``k - 1``; states ``("window", u)`` remember the last ``k - 1`` symbols.
    """
    k = z.k
    sigma = sorted(z.alphabet)
    next_window: dict[Word, list[tuple[Symbol, Word]]] = defaultdict(list)
    for v in sorted(z.segments):
        next_window[v[:-1]].append((v[-1], v[1:]))
    # only prefixes of short strings and allowed prefixes are live short states
    live_short = {w[:i] for w in z.short | z.prefixes for i in range(len(w) + 1)}

    if k == 1:
        initial: State = ("window", ()) if () in z.prefixes else ("short", ())
    else:
        initial = ("short", ())

    transitions: dict[State, dict[Symbol, State]] = {}
    accepting = set()
    seen = {initial}
    queue = deque([initial])
    while queue:
        q = queue.popleft()
        kind, w = q
        row: dict[Symbol, State] = {}
        if kind == "short":
            if w in z.short:
                accepting.add(q)
            if k >= 2:
                for a in sigma:
                    wa = w + (a,)
                    if len(w) < k - 2 and wa in live_short:
                        row[a] = ("short", wa)
                    elif len(w) == k - 2 and wa in z.prefixes:
                        row[a] = ("window", wa)
        else:
            if w in z.suffixes:
                accepting.add(q)
            for a, nxt in next_window.get(w, ()):
                row[a] = ("window", nxt)
        if row:
            transitions[q] = row
        for r in row.values():
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return Dfa(initial, transitions, frozenset(accepting), frozenset(sigma))


def _product(a: Dfa, b: Dfa, accept) -> Dfa:
    sigma = sorted(a.alphabet | b.alphabet)
    initial = (a.initial, b.initial)
    transitions: dict[State, dict[Symbol, State]] = {}
    accepting = set()
    seen = {initial}
    queue = deque([initial])
    while queue:
        p = queue.popleft()
        qa, qb = p
        if accept(qa in a.accepting if qa is not None else False,
                  qb in b.accepting if qb is not None else False):
            accepting.add(p)
        row = {}
        for s in sigma:
            ra = a.step(qa, s) if qa is not None else None
            rb = b.step(qb, s) if qb is not None else None
            if ra is None and rb is None:
                continue
            r = (ra, rb)
            row[s] = r
            if r not in seen:
                seen.add(r)
                queue.append(r)
        if row:
            transitions[p] = row
    return Dfa(initial, transitions, frozenset(accepting), frozenset(sigma))


def dfa_union(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x or y)


def dfa_equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality, by searching the product for a state where acceptance differs."""
    diff = _product(a, b, lambda x, y: x != y)
    return not diff.accepting


def counterexample(a: Dfa, b: Dfa) -> Word | None:
    """A shortest word accepted by exactly one of the two automata, if any."""
    diff = _product(a, b, lambda x, y: x != y)
    parent: dict[State, tuple[State, Symbol] | None] = {diff.initial: None}
    queue = deque([diff.initial])
    while queue:
        q = queue.popleft()
        if q in diff.accepting:
            out: list[Symbol] = []
            while parent[q] is not None:
                q, s = parent[q]
                out.append(s)
            return tuple(reversed(out))
        row = diff.transitions.get(q, {})
        for s in sorted(row):
            r = row[s]
            if r not in parent:
                parent[r] = (q, s)
                queue.append(r)
    return None


def enumerate_dfa(d: Dfa, max_len: int, cap: int | None = None) -> list[Word]:
    cap = size_guard() if cap is None else cap
    out: list[Word] = []
    level: list[tuple[Word, State]] = [((), d.initial)]
    for n in range(max_len + 1):
        for w, q in level:
            if q in d.accepting:
                out.append(w)
                if len(out) > cap:
                    raise SizeGuard(f"enumeration exceeds the size guard {cap}")
        if n == max_len:
            break
        nxt = []
        for w, q in level:
            row = d.transitions.get(q, {})
            for s in sorted(row):
                nxt.append((w + (s,), row[s]))
        if len(nxt) > cap:
            raise SizeGuard(f"enumeration frontier exceeds the size guard {cap}")
        level = nxt
    return out


def enumerate_words(
    z: KTestVector, max_len: int, *, max_len_guard: int = DEFAULT_MAX_LEN, cap: int | None = None
) -> list[Word]:
    """All words of the language up to ``max_len``, shortest first, then lexicographic."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if max_len > max_len_guard and len(z.alphabet) > 1:
        raise SizeGuard(f"max_len {max_len} exceeds the guard {max_len_guard}")
    return enumerate_dfa(to_dfa(z), max_len, cap)


def language_equal_upto(a: Dfa, b: Dfa, max_len: int) -> bool:
    """Language equality restricted to words of length at most ``max_len``."""
    w = counterexample(a, b)
    return w is None or len(w) > max_len


def all_words(alphabet: Iterable[Symbol], max_len: int) -> list[Word]:
    """Every word over ``alphabet`` up to ``max_len``, in length-lexicographic order."""
    sigma = sorted(set(alphabet))
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        frontier = [w + (a,) for w in frontier for a in sigma]
        out.extend(frontier)
    return out
