"""Time the four p(n) engines and confirm they agree."""

import argparse
import time
from dataclasses import dataclass

from partring.partition_count import ENGINES, first_disagreement


@dataclass
class Config:
    n_max: int = 2000


def run(cfg: Config) -> None:
    tables = []
    for name, build in ENGINES.items():
        t0 = time.perf_counter()
        tables.append(build(cfg.n_max))
        print(f"{name:6s} {time.perf_counter() - t0:8.3f}s")
    bad = first_disagreement(tables)
    print("agree" if bad is None else f"disagree at n={bad}")
    print(f"p({cfg.n_max}) has {len(str(tables[0][cfg.n_max]))} digits")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    run(Config(ap.parse_args().n_max))
