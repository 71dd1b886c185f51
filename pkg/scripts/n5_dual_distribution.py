"""Dual rank distribution of the n=5, k=2 example, symbolically and at small q."""

import argparse
from dataclasses import dataclass

from rankgeo import macwilliams as mw
from rankgeo.macwilliams import Q


@dataclass
class Config:
    qs: tuple = (2, 3, 4, 5)


def n5_pair_input():
    top = (Q**5 - 1) * (Q**5 - Q**2).divexact(Q - 1)
    return mw.DistributionVector((1, 0, 0, Q**5 - 1, top, (Q**5 - 1) * Q**5 - top), 5, 5, 10)


def main(cfg: Config):
    B = mw.dual_distribution(n5_pair_input(), Q)
    for i, b in enumerate(B.entries):
        print(f"B_{i} = {b}")
    for q in cfg.qs:
        vals = B.evaluate(q).entries
        print(f"q={q}: B = {vals}  sum = {sum(vals)} = q^15: {sum(vals) == q**15}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qs", type=int, nargs="+", default=[2, 3, 4, 5])
    main(Config(tuple(ap.parse_args().qs)))
