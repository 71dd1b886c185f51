"""Random search for codimension-2 subspaces missing Sigma and meeting Sigma_2 in N points."""

import argparse
from collections import Counter
from dataclasses import dataclass

from rankgeo import linset as ls
from rankgeo.field import make_field


@dataclass
class Config:
    q: int = 2
    n: int = 4
    trials: int = 1000
    seed: int = 0
    targets: tuple = (0, 1, 2, 3, 4, 5, 6, 7)


def main(cfg: Config):
    F = make_field(cfg.q, 1, cfg.n)
    for N in cfg.targets:
        found = ls.search_weight2_configs(F, N, cfg.trials, cfg.seed)
        comps = Counter(c.companion_w0 for c in found)
        print(f"N={N}: {len(found)} subspaces; companion weight distributions {dict(comps)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--targets", type=int, nargs="+", default=list(range(8)))
    a = ap.parse_args()
    main(Config(a.q, a.n, a.trials, a.seed, tuple(a.targets)))
