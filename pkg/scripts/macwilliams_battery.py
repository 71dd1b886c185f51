"""Compare the MacWilliams recursion with enumerated dual distributions on random codes."""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from rankgeo import code as cd
from rankgeo import macwilliams as mw
from rankgeo.field import make_field


@dataclass
class Config:
    q: int = 2
    n: int = 4
    scalars: str = "big"
    dim: int = 2  # F_{q^n}-dimension for "big", F_q-dimension for "q"
    codes: int = 20
    seed: int = 0


def run(cfg: Config):
    F = make_field(cfg.q, 1, cfg.n)
    rng = np.random.default_rng(cfg.seed)
    agree = 0
    for _ in range(cfg.codes):
        C = cd.random_code(F, cfg.scalars, cfg.dim, rng)
        A = cd.rank_distribution(C).A
        B = mw.dual_distribution(mw.DistributionVector(A, cfg.n, cfg.n, C.dim), cfg.q).entries
        D = cd.rank_distribution(cd.delsarte_dual(C)).A
        agree += B == D
        print(f"A={A}  B={B}  {'ok' if B == D else 'MISMATCH ' + str(D)}")
    return agree


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name}", type=type(default), default=default)
    cfg = Config(**vars(ap.parse_args()))
    t = time.perf_counter()
    ok = run(cfg)
    print(f"{ok}/{cfg.codes} agree in {time.perf_counter() - t:.1f}s")
