"""Agglomerative clustering of k-test vectors.

Only pairs whose join denotes exactly the union of their languages are ever
merged. The linkage is built with a nearest-neighbor chain in which an
incompatible pair has infinite distance; distances from a merged node are
recomputed from its joined vector rather than derived by an update formula.
"""

from __future__ import annotations

import heapq
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy import sparse

from ktss.canonical import union_is_exact
from ktss.core import KTestVector, Word, WordLike, alpha, as_word, distance, join
from ktss.errors import InvalidTarget, KMismatch, UnreachedTargetWarning


@dataclass(frozen=True)
class ClusterNode:
    id: int
    vector: KTestVector
    members: tuple[int, ...]


@dataclass(frozen=True)
class LinkageRow:
    left: int
    right: int
    distance: int
    new: int


@dataclass
class Linkage:
    """Merge records in discovery order; ``m`` is the number of leaves."""

    m: int
    rows: list[LinkageRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def sorted_rows(self) -> list[LinkageRow]:
        """Rows by increasing distance, never before the rows that create their children.

        Ties keep discovery order.
        """
        creator = {r.new: i for i, r in enumerate(self.rows)}
        waiting: dict[int, list[int]] = {}
        blockers = []
        heap: list[tuple[int, int]] = []
        for i, r in enumerate(self.rows):
            deps = [creator[c] for c in (r.left, r.right) if c in creator]
            blockers.append(len(deps))
            for d in deps:
                waiting.setdefault(d, []).append(i)
            if not deps:
                heapq.heappush(heap, (r.distance, i))
        out = []
        while heap:
            _, i = heapq.heappop(heap)
            out.append(self.rows[i])
            for j in waiting.get(i, ()):
                blockers[j] -= 1
                if blockers[j] == 0:
                    heapq.heappush(heap, (self.rows[j].distance, j))
        return out


def _check_same_k(vectors: Sequence[KTestVector]) -> None:
    ks = {z.k for z in vectors}
    if len(ks) > 1:
        raise KMismatch(f"vectors mix window sizes {sorted(ks)}")


class _FeatureSpace:
    """0/1 incidence rows over every component element seen in the input.

    Joins only ever union elements, so the feature set is fixed by the leaves.
    """

    def __init__(self, vectors: Sequence[KTestVector]):
        index: dict[tuple[int, Word], int] = {}
        rows, cols = [], []
        for i, z in enumerate(vectors):
            for tag, comp in enumerate((z.prefixes, z.suffixes, z.segments, z.short)):
                for w in comp:
                    j = index.setdefault((tag, w), len(index))
                    rows.append(i)
                    cols.append(j)
        self.index = index
        data = np.ones(len(rows), dtype=np.float64)
        self.matrix = sparse.csr_matrix(
            (data, (rows, cols)), shape=(len(vectors), max(len(index), 1))
        )


def distance_matrix(vectors: Sequence[KTestVector]) -> np.ndarray:
    """Symmetric matrix of pairwise distances, as integers."""
    _check_same_k(vectors)
    if not vectors:
        return np.zeros((0, 0), dtype=np.int64)
    x = _FeatureSpace(vectors).matrix
    gram = (x @ x.T).toarray()
    sizes = np.diag(gram)
    d = sizes[:, None] + sizes[None, :] - 2.0 * gram
    return np.rint(d).astype(np.int64)


class _Compat:
    """Memoized exact-union test between node ids (ids are never reused)."""

    def __init__(self, vectors: dict[int, KTestVector]):
        self.vectors = vectors
        self.cache: dict[tuple[int, int], bool] = {}
        self.calls = 0

    def __call__(self, a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        hit = self.cache.get(key)
        if hit is None:
            self.calls += 1
            hit = union_is_exact(self.vectors[a], self.vectors[b])
            self.cache[key] = hit
        return hit


def nn_chain_linkage(vectors: Sequence[KTestVector]) -> Linkage:
    """Linkage of compatible vectors by the nearest-neighbor chain.

    Stops when a single node is left or when no two remaining nodes can be
    merged without changing the represented language.
    """
    _check_same_k(vectors)
    m = len(vectors)
    linkage = Linkage(m)
    if m < 2:
        return linkage

    dist = distance_matrix(vectors).astype(np.float64)
    feat = _FeatureSpace(vectors).matrix.toarray()
    sizes = feat.sum(axis=1)

    node_vec: dict[int, KTestVector] = dict(enumerate(vectors))
    compat = _Compat(node_vec)
    # node ids live in slots of the distance matrix; a merged node reuses a slot
    slot_of = {i: i for i in range(m)}
    id_at = np.arange(m)
    in_pool = np.ones(m, dtype=bool)
    pool = set(range(m))
    stuck: set[int] = set()
    chain: list[int] = []
    next_id = m

    def nearest(a: int, prev: int | None) -> int | None:
        s = slot_of[a]
        cand = np.flatnonzero(in_pool)
        cand = cand[cand != s]
        if cand.size == 0:
            return None
        d = dist[s, cand]
        order = cand[np.lexsort((id_at[cand], d))]
        for t in order:
            c = int(id_at[t])
            if compat(a, c):
                best = dist[s, t]
                if prev is not None and prev != c and dist[s, slot_of[prev]] == best and compat(a, prev):
                    return prev
                return c
        return None

    while len(pool) > 1:
        if not chain:
            chain.append(min(pool))
        a = chain[-1]
        b = chain[-2] if len(chain) > 1 else None
        c = nearest(a, b)
        if c is None:
            # a cannot merge with anything that exists right now
            chain.pop()
            pool.discard(a)
            in_pool[slot_of[a]] = False
            stuck.add(a)
            continue
        if c == b:
            chain.pop()
            chain.pop()
            left, right = min(a, b), max(a, b)
            sl, sr = slot_of[left], slot_of[right]
            d = int(dist[sl, sr])
            new = next_id
            next_id += 1
            linkage.rows.append(LinkageRow(left, right, d, new))

            merged = join(node_vec[left], node_vec[right])
            node_vec[new] = merged
            for old in (left, right):
                pool.discard(old)
                del slot_of[old]
            in_pool[sr] = False
            id_at[sl] = new
            slot_of[new] = sl
            feat[sl] = np.maximum(feat[sl], feat[sr])
            sizes[sl] = feat[sl].sum()
            row = sizes[sl] + sizes - 2.0 * (feat @ feat[sl])
            dist[sl, :] = row
            dist[:, sl] = row
            dist[sl, sl] = 0.0
            pool.add(new)
            in_pool[sl] = True
            for s in sorted(stuck):
                if compat(s, new):
                    stuck.discard(s)
                    pool.add(s)
                    in_pool[slot_of[s]] = True
            continue
        if c in chain:
            # distances changed under an older part of the chain; restart from c
            del chain[chain.index(c) + 1 :]
            continue
        chain.append(c)
    return linkage


def _leaves(vectors: Sequence[KTestVector]) -> dict[int, ClusterNode]:
    return {i: ClusterNode(i, z, (i,)) for i, z in enumerate(vectors)}


def _replay(vectors: Sequence[KTestVector], rows: Iterable[LinkageRow]) -> dict[int, ClusterNode]:
    active = _leaves(vectors)
    for r in rows:
        a, b = active.pop(r.left), active.pop(r.right)
        active[r.new] = ClusterNode(r.new, join(a.vector, b.vector), tuple(sorted(a.members + b.members)))
    return active


def _ordered(active: dict[int, ClusterNode]) -> list[ClusterNode]:
    return sorted(active.values(), key=lambda n: n.members[0])


def cut(vectors: Sequence[KTestVector], linkage: Linkage, target: int) -> list[ClusterNode]:
    """Flat clustering with ``target`` clusters.

    Merges are replayed cheapest first. If the linkage stops above ``target``
    clusters, the final clustering is returned and an
    :class:`UnreachedTargetWarning` is emitted.
    """
    if not isinstance(target, (int, np.integer)) or target < 1:
        raise InvalidTarget(f"target must be a positive integer, got {target!r}")
    m = len(vectors)
    rows = linkage.sorted_rows()
    final = m - len(rows)
    if target < final:
        warnings.warn(
            f"only {final} clusters are reachable; {target} requested",
            UnreachedTargetWarning,
            stacklevel=2,
        )
    n_merges = max(0, min(len(rows), m - target))
    return _ordered(_replay(vectors, rows[:n_merges]))


def final_clusters(vectors: Sequence[KTestVector], linkage: Linkage) -> list[ClusterNode]:
    """Clusters after every merge in the linkage."""
    return _ordered(_replay(vectors, linkage.rows))


def learn_union(sample: Sequence[WordLike], k: int, target: int | None = None) -> list[ClusterNode]:
    """Cluster the per-word vectors of ``sample``; without ``target`` every allowed merge is applied."""
    if not sample:
        raise ValueError("empty sample")
    vectors = [alpha(k, [w]) for w in sample]
    linkage = nn_chain_linkage(vectors)
    if target is None:
        return final_clusters(vectors, linkage)
    return cut(vectors, linkage, target)


def naive_closure_union(sample: Iterable[WordLike], k: int) -> list[KTestVector]:
    """Distinct per-word vectors in first-occurrence order; their languages' union is the hypothesis."""
    seen: dict[KTestVector, None] = {}
    for w in sample:
        seen.setdefault(alpha(k, [as_word(w)]), None)
    return list(seen)


def merge_distances_consistent(vectors: Sequence[KTestVector], linkage: Linkage) -> bool:
    """Every row's distance equals the distance between its children's vectors."""
    active = _leaves(vectors)
    for r in linkage.rows:
        a, b = active.pop(r.left), active.pop(r.right)
        if distance(a.vector, b.vector) != r.distance:
            return False
        active[r.new] = ClusterNode(r.new, join(a.vector, b.vector), a.members + b.members)
    return True


def dendrogram_dot(linkage: Linkage, labels: Sequence[str]) -> str:
    """DOT rendering of the linkage; merged nodes are labelled with their merge distance."""
    lines = ["digraph dendrogram {", "  node [shape=box];"]
    for i, text in enumerate(labels):
        esc = text.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  n{i} [label="{esc}"];')
    for r in linkage.rows:
        lines.append(f'  n{r.new} [shape=ellipse, label="{r.distance}"];')
        lines.append(f"  n{r.new} -> n{r.left};")
        lines.append(f"  n{r.new} -> n{r.right};")
    lines.append("}")
    return "\n".join(lines) + "\n"
