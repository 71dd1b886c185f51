"""Point and hyperplane scatteredness of three rank-n linear sets in the projective plane."""

import argparse
from dataclasses import dataclass

from rankgeo import linset as ls
from rankgeo.field import make_field
from rankgeo.linpoly import LinearizedPoly


@dataclass
class Config:
    qs: tuple = (2, 3)


def examples(q):
    F5, F4 = make_field(q, 1, 5), make_field(q, 1, 4)
    m = LinearizedPoly.monomial
    return {
        "(x, x^q, Tr), n=5": [m(F5, 0), m(F5, 1), LinearizedPoly.trace_map(F5)],
        "(x, x^q, x^q^2), n=5": [m(F5, 0), m(F5, 1), m(F5, 2)],
        "(x, x^q^2, Tr), n=4": [m(F4, 0), m(F4, 2), LinearizedPoly.trace_map(F4)],
    }


def main(cfg: Config):
    for q in cfg.qs:
        for name, fs in examples(q).items():
            L = ls.build_linear_set(fs)
            c = ls.classify(L)
            print(f"q={q} {name}: points={L.size} w0={L.w0} w_hyp={L.w_hyp} "
                  f"scattered={c.scattered} hyperplane-scattered={c.scattered_wrt_hyperplanes}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qs", type=int, nargs="+", default=[2, 3])
    main(Config(tuple(ap.parse_args().qs)))
