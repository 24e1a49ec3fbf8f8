"""Tail and cycle lengths of x -> x^2 + c in R(N, M) against the birthday bound."""

import argparse
from dataclasses import dataclass, field

from partring.modular import ModRingParams, rho_experiment


@dataclass
class Config:
    moduli: list[tuple[int, int]] = field(
        default_factory=lambda: [(3, 2), (4, 5), (5, 7), (6, 5), (7, 3), (7, 11)]
    )
    trials: int = 100
    seed: int = 0


def run(cfg: Config) -> None:
    print(f"{'N':>3} {'M':>3} {'|R|':>10} {'sqrt|R|':>9} {'tail':>7} {'cycle':>7} {'rho/sqrt':>9}")
    for n, m in cfg.moduli:
        rep = rho_experiment(ModRingParams(n, m), cfg.trials, cfg.seed)
        d = rep.to_dict()
        print(
            f"{n:3d} {m:3d} {d['ring_size']:10d} {d['birthday_bound']:9.1f} "
            f"{d['mean_tail']:7.2f} {d['mean_cycle']:7.2f} {d['rho_ratio']:9.3f}"
        )


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    run(Config(trials=a.trials, seed=a.seed))
