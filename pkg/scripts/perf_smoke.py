"""Time the learning pipeline on random words and one large compatibility check."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from ktss import alpha, learn_union, union_is_exact


@dataclass
class Config:
    words: int = 2000
    alphabet: str = "0123456789"
    k: int = 3
    max_len: int = 12
    compat_k: int = 5
    compat_len: int = 10_600
    seed: int = 10


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)

    def word(n: int) -> str:
        return "".join(rng.choice(cfg.alphabet) for _ in range(n))

    sample = [word(rng.randint(1, cfg.max_len)) for _ in range(cfg.words)]
    t0 = time.perf_counter()
    clusters = learn_union(sample, cfg.k)
    print(f"learn: {cfg.words} words -> {len(clusters)} clusters in {time.perf_counter() - t0:.2f}s")

    a = alpha(cfg.compat_k, [word(cfg.compat_len)])
    b = alpha(cfg.compat_k, [word(cfg.compat_len)])
    for x, y, name in ((a, b, "distinct"), (a, a, "identical")):
        t0 = time.perf_counter()
        exact = union_is_exact(x, y)
        ms = 1000 * (time.perf_counter() - t0)
        print(f"compat ({name}, |T|={len(x.segments)}): exact={exact} in {ms:.1f}ms")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--words", type=int, default=Config.words)
    p.add_argument("--k", type=int, default=Config.k)
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(words=a.words, k=a.k, seed=a.seed))


if __name__ == "__main__":
    main()
