"""k-test vectors and their algebra.

A word is a tuple of symbols; a symbol is any string (a single character in
the default tokenization). Plain ``str`` arguments are accepted wherever a
word is expected and are split into characters.

Only the short strings of length strictly below ``k - 1`` are stored. The
short strings of length exactly ``k - 1`` are always ``I & F``, so they are
derived on demand (:attr:`KTestVector.short_full`). This keeps the
``I & F == C & Sigma^(k-1)`` condition true by construction and makes join,
meet and symmetric difference plain componentwise set operations.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence, Union

from ktss.errors import KMismatch, LengthViolation, SizeGuard

Symbol = str
Word = tuple[Symbol, ...]
WordLike = Union[str, Sequence[Symbol]]

DEFAULT_SIZE_GUARD = 10**6

__all__ = [
    "Word",
    "KTestVector",
    "as_word",
    "make_vector",
    "alpha",
    "is_member",
    "leq",
    "join",
    "meet",
    "sym_diff",
    "cardinality",
    "distance",
    "bottom",
    "top",
    "size_guard",
    "format_word",
]


def size_guard() -> int:
    """Materialization cap, overridable through ``KTSS_SIZE_GUARD``."""
    raw = os.environ.get("KTSS_SIZE_GUARD")
    if raw is None:
        return DEFAULT_SIZE_GUARD
    return int(raw)


def as_word(w: WordLike) -> Word:
    if isinstance(w, str):
        return tuple(w)
    return tuple(w)


def format_word(w: Word, separator: str = "") -> str:
    return separator.join(w)


def _word_set(words: Iterable[WordLike]) -> frozenset[Word]:
    return frozenset(as_word(w) for w in words)


@dataclass(frozen=True)
class KTestVector:
    """Immutable k-test vector ``<I, F, T, C>`` in reduced form.

    Build through :func:`make_vector` (validated) or :func:`alpha`.
    """

    k: int
    prefixes: frozenset[Word]
    suffixes: frozenset[Word]
    segments: frozenset[Word]
    short: frozenset[Word]

    @property
    def short_full(self) -> frozenset[Word]:
        """The full short-string set ``C`` including its derived length-(k-1) part."""
        return self.short | (self.prefixes & self.suffixes)

    @property
    def alphabet(self) -> frozenset[Symbol]:
        syms: set[Symbol] = set()
        for comp in (self.prefixes, self.suffixes, self.segments, self.short):
            for w in comp:
                syms.update(w)
        return frozenset(syms)

    def __contains__(self, w: object) -> bool:
        return is_member(self, w)  # type: ignore[arg-type]

    def __str__(self) -> str:
        def fmt(ws: AbstractSet[Word]) -> str:
            return "{" + ",".join("".join(w) or "λ" for w in sorted(ws)) + "}"

        return "<{},{},{},{}>".format(
            fmt(self.prefixes), fmt(self.suffixes), fmt(self.segments), fmt(self.short)
        )


def _trusted(k, prefixes, suffixes, segments, short) -> KTestVector:
    return KTestVector(k, frozenset(prefixes), frozenset(suffixes), frozenset(segments), frozenset(short))


def make_vector(
    k: int,
    prefixes: Iterable[WordLike] = (),
    suffixes: Iterable[WordLike] = (),
    segments: Iterable[WordLike] = (),
    short: Iterable[WordLike] = (),
) -> KTestVector:
    """Validated constructor.

    ``short`` may also contain words of length ``k - 1``; those are only legal
    when they already belong to ``prefixes & suffixes`` and are then dropped,
    since that part of ``C`` is derived.
    """
    if not isinstance(k, int) or k < 1:
        raise LengthViolation(f"window size must be a positive integer, got {k!r}")
    I, F, T, C = (_word_set(x) for x in (prefixes, suffixes, segments, short))
    for name, comp, n in (("prefix", I, k - 1), ("suffix", F, k - 1), ("segment", T, k)):
        for w in comp:
            if len(w) != n:
                raise LengthViolation(f"{name} {''.join(w)!r} has length {len(w)}, expected {n}")
    reduced = set()
    both = I & F
    for w in C:
        if len(w) < k - 1:
            reduced.add(w)
        elif len(w) == k - 1 and w in both:
            continue
        else:
            raise LengthViolation(
                f"short string {''.join(w)!r} has length {len(w)}; "
                f"expected < {k - 1} (or exactly {k - 1} and in both I and F)"
            )
    return KTestVector(k, I, F, T, frozenset(reduced))


def alpha(k: int, sample: Iterable[WordLike]) -> KTestVector:
    """The k-test vector extracted from a finite sample."""
    if k < 1:
        raise LengthViolation(f"window size must be a positive integer, got {k!r}")
    I: set[Word] = set()
    F: set[Word] = set()
    T: set[Word] = set()
    C: set[Word] = set()
    for w in sample:
        w = as_word(w)
        n = len(w)
        if n < k - 1:
            C.add(w)
            continue
        I.add(w[: k - 1])
        F.add(w[n - k + 1 :])
        for i in range(n - k + 1):
            T.add(w[i : i + k])
    return _trusted(k, I, F, T, C)


def is_member(z: KTestVector, w: WordLike) -> bool:
    """Whether ``w`` belongs to the language denoted by ``z``."""
    w = as_word(w)
    k = z.k
    n = len(w)
    if n < k - 1:
        return w in z.short
    if w[: k - 1] not in z.prefixes or w[n - k + 1 :] not in z.suffixes:
        return False
    segs = z.segments
    return all(w[i : i + k] in segs for i in range(n - k + 1))


def _check_k(z1: KTestVector, z2: KTestVector) -> None:
    if z1.k != z2.k:
        raise KMismatch(f"window sizes differ: {z1.k} vs {z2.k}")


def leq(z1: KTestVector, z2: KTestVector) -> bool:
    _check_k(z1, z2)
    return (
        z1.prefixes <= z2.prefixes
        and z1.suffixes <= z2.suffixes
        and z1.segments <= z2.segments
        and z1.short <= z2.short
    )


def join(z1: KTestVector, z2: KTestVector) -> KTestVector:
    _check_k(z1, z2)
    return KTestVector(
        z1.k,
        z1.prefixes | z2.prefixes,
        z1.suffixes | z2.suffixes,
        z1.segments | z2.segments,
        z1.short | z2.short,
    )


def meet(z1: KTestVector, z2: KTestVector) -> KTestVector:
    _check_k(z1, z2)
    return KTestVector(
        z1.k,
        z1.prefixes & z2.prefixes,
        z1.suffixes & z2.suffixes,
        z1.segments & z2.segments,
        z1.short & z2.short,
    )


def sym_diff(z1: KTestVector, z2: KTestVector) -> KTestVector:
    _check_k(z1, z2)
    return KTestVector(
        z1.k,
        z1.prefixes ^ z2.prefixes,
        z1.suffixes ^ z2.suffixes,
        z1.segments ^ z2.segments,
        z1.short ^ z2.short,
    )


def cardinality(z: KTestVector) -> int:
    return len(z.prefixes) + len(z.suffixes) + len(z.segments) + len(z.short)


def distance(z1: KTestVector, z2: KTestVector) -> int:
    _check_k(z1, z2)
    return (
        len(z1.prefixes ^ z2.prefixes)
        + len(z1.suffixes ^ z2.suffixes)
        + len(z1.segments ^ z2.segments)
        + len(z1.short ^ z2.short)
    )


def bottom(k: int) -> KTestVector:
    if k < 1:
        raise LengthViolation(f"window size must be a positive integer, got {k!r}")
    empty: frozenset[Word] = frozenset()
    return KTestVector(k, empty, empty, empty, empty)


def top(k: int, alphabet: Iterable[Symbol], cap: int | None = None) -> KTestVector:
    """Greatest vector over ``alphabet``; every word up to length ``k`` is materialized."""
    if k < 1:
        raise LengthViolation(f"window size must be a positive integer, got {k!r}")
    sigma = sorted(set(alphabet))
    if not sigma:
        raise ValueError("top() needs a nonempty alphabet")
    cap = size_guard() if cap is None else cap
    if len(sigma) ** k > cap:
        raise SizeGuard(f"|Sigma|^k = {len(sigma)}^{k} exceeds the size guard {cap}")

    def words(n: int) -> frozenset[Word]:
        return frozenset(itertools.product(sigma, repeat=n))

    short = frozenset().union(*(words(n) for n in range(k - 1)))
    return KTestVector(k, words(k - 1), words(k - 1), words(k), short)
