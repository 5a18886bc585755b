"""JSON documents and word-file parsing used by the command line."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from ktss.clustering import ClusterNode, Linkage
from ktss.core import KTestVector, Word, make_vector
from ktss.errors import KTSSError

_COMPONENTS = (("prefixes", "prefixes"), ("suffixes", "suffixes"), ("segments", "segments"), ("short_strings", "short"))


class DocumentError(KTSSError):
    """A JSON document does not describe a valid object."""


def split_word(text: str, separator: str | None = None) -> Word:
    if not separator:
        return tuple(text)
    if text == "":
        return ()
    return tuple(tok for tok in text.split(separator) if tok)


def join_word(w: Word, separator: str | None = None) -> str:
    return (separator or "").join(w)


def read_words(path: str | Path, separator: str | None = None) -> list[Word]:
    """One word per line, UTF-8; blank lines are skipped."""
    text = Path(path).read_text(encoding="utf-8")
    return [split_word(line.strip(), separator) for line in text.splitlines() if line.strip()]


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def vector_to_doc(z: KTestVector, separator: str | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {"k": z.k}
    for key, attr in _COMPONENTS:
        doc[key] = sorted(join_word(w, separator) for w in getattr(z, attr))
    if separator:
        doc["separator"] = separator
    return doc


def vector_from_doc(doc: Any) -> KTestVector:
    if not isinstance(doc, dict):
        raise DocumentError("vector document must be a JSON object")
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DocumentError(f"'k' must be a positive integer, got {k!r}")
    sep = doc.get("separator")
    if sep is not None and not isinstance(sep, str):
        raise DocumentError("'separator' must be a string")
    parts = {}
    for key, attr in _COMPONENTS:
        items = doc.get(key, [])
        if not isinstance(items, list) or not all(isinstance(x, str) for x in items):
            raise DocumentError(f"'{key}' must be an array of strings")
        parts[attr] = [split_word(x, sep) for x in items]
    return make_vector(k, parts["prefixes"], parts["suffixes"], parts["segments"], parts["short"])


def load_vector(path: str | Path) -> tuple[KTestVector, str | None]:
    """Vector and the separator it was written with."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: not valid JSON ({exc.msg})") from None
    z = vector_from_doc(doc)
    return z, doc.get("separator")


def result_doc(
    k: int,
    words: Sequence[Word],
    linkage: Linkage,
    clusters: Sequence[ClusterNode],
    separator: str | None = None,
) -> dict[str, Any]:
    alphabet = sorted({a for w in words for a in w})
    doc: dict[str, Any] = {
        "k": k,
        "alphabet": alphabet,
        "words": [join_word(w, separator) for w in words],
        "linkage": [
            {"left": r.left, "right": r.right, "distance": r.distance, "new": r.new} for r in linkage.rows
        ],
        "clusters": [
            {"id": c.id, "members": list(c.members), "vector": vector_to_doc(c.vector, separator)}
            for c in clusters
        ],
    }
    if separator:
        doc["separator"] = separator
    return doc
