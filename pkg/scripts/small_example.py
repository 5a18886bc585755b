"""Cluster the eight small example words and print vectors, distances, linkage and cuts."""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from ktss import alpha, cut, distance_matrix, nn_chain_linkage
from ktss.serialize import read_words

DATA = Path(__file__).resolve().parents[1] / "data"


@dataclass
class Config:
    words: Path = DATA / "small_words.txt"
    k: int = 3
    targets: tuple[int, ...] = (3, 4)


def run(cfg: Config) -> None:
    words = read_words(cfg.words)
    vectors = [alpha(cfg.k, [w]) for w in words]
    for i, (w, z) in enumerate(zip(words, vectors), start=1):
        print(f"Z{i} {''.join(w):<10} {z}")

    print("\ndistances")
    for row in distance_matrix(vectors):
        print(" ".join(f"{d:3d}" for d in row))

    linkage = nn_chain_linkage(vectors)
    print("\nlinkage (left, right, distance, new)")
    for r in linkage:
        print(f"  {r.left:2d} {r.right:2d} {r.distance:3d} -> {r.new}")

    for t in cfg.targets:
        groups = [[f"Z{i + 1}" for i in c.members] for c in cut(vectors, linkage, t)]
        print(f"\ncut at {t}: {groups}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--words", type=Path, default=Config.words)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--targets", type=int, nargs="+", default=list(Config.targets))
    a = p.parse_args()
    run(Config(a.words, a.k, tuple(a.targets)))


if __name__ == "__main__":
    main()
