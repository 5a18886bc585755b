"""Command-line interface.

Exit codes: 0 on success, 1 on I/O failure, 2 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from typing import Sequence

from ktss.automata import to_dfa
from ktss.canonical import union_graph, union_is_exact
from ktss.clustering import cut, dendrogram_dot, final_clusters, nn_chain_linkage
from ktss.core import alpha, distance, is_member
from ktss.errors import KTSSError
from ktss.serialize import (
    dumps,
    join_word,
    load_vector,
    read_words,
    result_doc,
    split_word,
    vector_to_doc,
    write_text,
)

PROG = "ktss"


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def cmd_learn(args: argparse.Namespace) -> None:
    words = read_words(args.input, args.separator)
    if not words:
        raise UsageError("empty sample")
    vectors = [alpha(args.k, [w]) for w in words]
    linkage = nn_chain_linkage(vectors)
    if args.clusters is None:
        clusters = final_clusters(vectors, linkage)
    else:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            clusters = cut(vectors, linkage, args.clusters)
        for w in caught:
            print(f"{PROG}: warning: {w.message}", file=sys.stderr)
    _emit(dumps(result_doc(args.k, words, linkage, clusters, args.separator)), args.out)
    if args.dendrogram:
        labels = [join_word(w, args.separator) or "λ" for w in words]
        write_text(args.dendrogram, dendrogram_dot(linkage, labels))


def cmd_vector(args: argparse.Namespace) -> None:
    words = read_words(args.input, args.separator)
    if args.per_word:
        doc = [vector_to_doc(alpha(args.k, [w]), args.separator) for w in words]
    else:
        doc = vector_to_doc(alpha(args.k, words), args.separator)
    _emit(dumps(doc), args.out)


def cmd_member(args: argparse.Namespace) -> None:
    z, sep = load_vector(args.vector)
    word = split_word(args.word, args.separator or sep)
    print("true" if is_member(z, word) else "false")


def cmd_compatible(args: argparse.Namespace) -> None:
    a, sep = load_vector(args.a)
    b, _ = load_vector(args.b)
    print("true" if union_is_exact(a, b) else "false")
    if args.graph_debug:
        graph = union_graph(a, b)
        write_text(args.graph_debug, graph.to_dot(sep or ""))


def cmd_distance(args: argparse.Namespace) -> None:
    a, _ = load_vector(args.a)
    b, _ = load_vector(args.b)
    print(distance(a, b))


def cmd_dfa(args: argparse.Namespace) -> None:
    z, _ = load_vector(args.vector)
    _emit(to_dfa(z).to_dot(), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("learn", help="cluster a word file into a union of k-TSS languages")
    p.add_argument("input")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--clusters", type=_positive)
    p.add_argument("--out")
    p.add_argument("--dendrogram")
    p.add_argument("--separator")
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("vector", help="k-test vector of a word file")
    p.add_argument("input")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--per-word", action="store_true")
    p.add_argument("--separator")
    p.add_argument("--out")
    p.set_defaults(func=cmd_vector)

    p = sub.add_parser("member", help="membership of a word in a vector's language")
    p.add_argument("vector")
    p.add_argument("word")
    p.add_argument("--separator")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("compatible", help="whether two vectors can be merged exactly")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--graph-debug")
    p.set_defaults(func=cmd_compatible)

    p = sub.add_parser("distance", help="distance between two vectors")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("dfa", help="DOT automaton for a vector")
    p.add_argument("vector")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dfa)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, KTSSError, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
