"""Group job strings by their repeating pattern.

Prints the per-cluster vectors and a few accepted words of each, so the
learned pattern can be read off directly.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from ktss import enumerate_words, learn_union
from ktss.serialize import read_words

DATA = Path(__file__).resolve().parents[1] / "data"


@dataclass
class Config:
    jobs: Path = DATA / "jobs.txt"
    k: int = 3
    clusters: int | None = 4
    show_len: int = 9


def run(cfg: Config) -> None:
    words = read_words(cfg.jobs)
    for c in learn_union(words, cfg.k, cfg.clusters):
        sample = ["".join(w) for w in enumerate_words(c.vector, cfg.show_len)][:6]
        print(f"jobs {list(c.members)}: {c.vector}")
        print(f"    accepts {', '.join(sample)}{', ...' if sample else '(nothing short)'}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--jobs", type=Path, default=Config.jobs)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--clusters", type=int, default=Config.clusters)
    p.add_argument("--show-len", type=int, default=Config.show_len)
    a = p.parse_args()
    run(Config(a.jobs, a.k, a.clusters, a.show_len))


if __name__ == "__main__":
    main()
