"""Census of multiplicative partition primes, with the cases the norm/length test misses."""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from partring.factorization import census, sufficient_condition_failures
from partring.numtheory import is_prime


@dataclass
class Config:
    max_weight: int = 18


def run(cfg: Config) -> None:
    t0 = time.perf_counter()
    rows = census(cfg.max_weight)
    print(f"{'w':>3} {'p(w)':>6} {'primes':>7} {'covered':>8} {'extra':>6}")
    for r in rows:
        print(f"{r.weight:3d} {r.total:6d} {r.primes:7d} {r.by_sufficient_condition:8d} {r.extra:6d}")
    fails = sufficient_condition_failures(cfg.max_weight)
    by_len = Counter(len(a) for a, _ in fails)
    print(f"\n{len(fails)} partitions pass the prime norm/length test but factor")
    print("all of them via a scalar left factor:", all(len(w.left) == 1 for _, w in fails))
    print("none has prime norm:", not any(is_prime(a.norm) for a, _ in fails))
    print("by length:", dict(sorted(by_len.items())))
    print(f"[{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-weight", type=int, default=Config.max_weight)
    run(Config(ap.parse_args().max_weight))
