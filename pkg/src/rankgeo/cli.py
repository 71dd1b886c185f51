"""Command-line front end: ``rankgeo <group> <command> [flags]``.

Exit status: 0 on success, 2 when a verification identity fails, 1 on errors.
"""

from __future__ import annotations

import argparse
import json
import platform
import re
import sys
from dataclasses import dataclass, field

import numpy

from . import __version__
from . import code as cd
from . import linpoly as lp
from . import linset as ls
from . import macwilliams as mw
from .errors import ExponentOutOfRange, PolySyntaxError, RankGeoError, UnknownSymbol
from .field import DEFAULT_BUDGET, FieldContext, make_field
from .linpoly import LinearizedPoly

COMMANDS = {
    "field": ["info"],
    "poly": ["eval", "rank", "compose"],
    "code": ["rank-dist", "dual", "is-mrd", "companion", "kernel-check"],
    "linset": ["build", "classify", "hyp-weights", "project-verify", "bw-verify",
               "sigma2-profile", "wt2-search"],
    "mw": ["gauss", "dual", "b1", "b2", "sum-check"],
}

# ---------------------------------------------------------------- parsing

_COEF = r"g\^-?\d+|\d+|\[[\d,]*\]"
_TERM = re.compile(rf"^(?:({_COEF})\*)?(x(?:\^q\^(\d+))?|Tr)$")


def parse_element(text: str, ctx: FieldContext) -> int:
    """coef := "g^" INT | INT (prime-field embedding) | "[" digit-list "]"."""
    t = re.sub(r"\s+", "", text)
    if re.fullmatch(r"g\^-?\d+", t):
        return ctx.gpow(int(t[2:]))
    if re.fullmatch(r"\d+", t):
        return int(t) % ctx.p
    if re.fullmatch(r"\[[\d,]*\]", t):
        digits = [int(d) for d in t[1:-1].split(",") if d]
        digits += [0] * (ctx.degree - len(digits))  # trailing zero digits may be omitted
        try:
            return ctx.from_digits(digits)
        except ValueError as exc:
            raise PolySyntaxError(str(exc)) from None
    if re.search(r"[A-Za-z]", t.replace("g", "")):
        raise UnknownSymbol(f"unknown symbol in element {text!r}")
    raise PolySyntaxError(f"cannot parse element {text!r}")


def parse_poly(text: str, ctx: FieldContext) -> LinearizedPoly:
    """expression := term ("+" term)*; term := [coef "*"] var; var := "x" | "x^q^" INT | "Tr"."""
    t = re.sub(r"\s+", "", text)
    if not t:
        raise PolySyntaxError("empty polynomial")
    coeffs = [0] * ctx.n
    for term in t.split("+"):
        m = _TERM.match(term)
        if not m:
            if re.search(r"[A-Za-fh-pr-wyzA-Z]", term.replace("Tr", "")):
                raise UnknownSymbol(f"unknown symbol in term {term!r}")
            raise PolySyntaxError(f"cannot parse term {term!r}")
        coef = parse_element(m.group(1), ctx) if m.group(1) else 1
        if m.group(2) == "Tr":
            exps = range(ctx.n)
        else:
            i = int(m.group(3)) if m.group(3) is not None else 0
            if i >= ctx.n:
                raise ExponentOutOfRange(f"x^q^{i} needs exponent < n={ctx.n}")
            exps = [i]
        for i in exps:
            coeffs[i] = ctx.add(coeffs[i], coef)
    return LinearizedPoly(ctx, tuple(coeffs))


def render_element(ctx: FieldContext, a: int) -> str:
    if a < ctx.p:
        return str(a)
    return f"g^{ctx.log(a)}"


def render_poly(f: LinearizedPoly) -> str:
    ctx = f.ctx
    terms = []
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        var = "x" if i == 0 else f"x^q^{i}"
        terms.append(var if a == 1 else f"{render_element(ctx, a)}*{var}")
    return " + ".join(terms) if terms else "0*x"


def parse_q_expr(text: str):
    """Integer polynomial in q from an arithmetic expression (exact division only)."""
    import sympy
    from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

    qs = sympy.Symbol("q")
    try:
        expr = parse_expr(text, local_dict={"q": qs},
                          transformations=standard_transformations + (convert_xor,))
    except Exception as exc:  # sympy raises a zoo of exception types
        raise PolySyntaxError(f"cannot parse {text!r}: {exc}") from None
    if expr.free_symbols - {qs}:
        raise UnknownSymbol(f"unknown symbols in {text!r}")
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    pn, pd = sympy.Poly(num, qs), sympy.Poly(den, qs)
    if pd.degree() > 0:
        raise mw.NonPolynomialResult(f"{text!r} is not a polynomial in q")
    c = pd.LC()
    terms = {}
    for (e,), v in pn.terms():
        v = sympy.Rational(v) / c
        if v.q != 1:
            raise mw.NonPolynomialResult(f"{text!r} has non-integer coefficients")
        terms[int(e)] = int(v)
    return mw.IntPolynomial(terms)


# ---------------------------------------------------------------- jobs


@dataclass
class JobSpec:
    group: str
    command: str
    p: int | None = None
    e: int = 1
    n: int | None = None
    modulus: tuple | None = None
    basis: list = field(default_factory=list)
    fs: list = field(default_factory=list)
    scalars: str = "big"
    x: str | None = None
    A: str | None = None
    logC: int | None = None
    k: int | None = None
    m: int | None = None
    a: int | None = None
    b: int | None = None
    symbolic: bool = False
    q_value: int | None = None
    target: int = 0
    seed: int = 0
    trials: int = 100
    budget: int | None = None
    format: str = "json"

    def field_ctx(self) -> FieldContext:
        if self.p is None or self.n is None:
            raise RankGeoError("this command needs --p and --n")
        return make_field(self.p, self.e, self.n, self.modulus,
                          self.budget if self.budget else DEFAULT_BUDGET)


class Outcome:
    def __init__(self, results: dict, ok: bool = True):
        self.results, self.ok = results, ok


def _digits(ctx, a):
    return ctx.digits(int(a))


def _poly_json(f: LinearizedPoly):
    return {"text": render_poly(f), "coeffs": [f.ctx.digits(a) for a in f.coeffs]}


def _value_json(v):
    return str(v) if isinstance(v, mw.IntPolynomial) else int(v)


def _points_json(ctx, pts: dict):
    return [{"point": [_digits(ctx, a) for a in p], "weight": w} for p, w in sorted(pts.items())]


def _code(job, ctx):
    polys = [parse_poly(t, ctx) for t in job.basis]
    return cd.make_code(ctx, job.scalars, polys)


def _fs(job, ctx):
    return [parse_poly(t, ctx) for t in (job.fs or job.basis)]


def _q(job):
    if job.symbolic:
        return mw.Q
    if job.q_value is None:
        if job.p is not None:
            return job.p**job.e
        raise RankGeoError("give --q-value or --symbolic")
    return job.q_value


def _A(job, q):
    if not job.A:
        raise RankGeoError("--A is required")
    vals = []
    for part in job.A.split(";"):
        poly = parse_q_expr(part.strip())
        vals.append(poly if mw._symbolic(q) else poly(q))
    return vals


def _do_field(job):
    ctx = job.field_ctx()
    return Outcome({
        "q": ctx.q, "order": ctx.order,
        "generator": _digits(ctx, ctx.generator),
        "subfield": [_digits(ctx, a) for a in ctx.subfield],
        "fq_power_basis": [_digits(ctx, a) for a in ctx.fq_power_basis],
    })


def _do_poly(job):
    ctx = job.field_ctx()
    polys = [parse_poly(t, ctx) for t in job.basis]
    if not polys:
        raise RankGeoError("--basis needs at least one polynomial")
    f = polys[0]
    if job.command == "eval":
        if job.x is None:
            raise RankGeoError("poly eval needs --x")
        x = parse_element(job.x, ctx)
        return Outcome({"value": _digits(ctx, lp.eval_raw(ctx, f.coeffs, x))})
    if job.command == "rank":
        r, kd = lp.rank(f), lp.kernel_dim(f)
        return Outcome({"rank": r, "kernel_dim": kd, "invertible": r == ctx.n,
                        "consistent": r + kd == ctx.n}, ok=r + kd == ctx.n)
    if len(polys) != 2:
        raise RankGeoError("poly compose needs exactly two polynomials: g f")
    return Outcome({"composition": _poly_json(lp.compose(polys[0], polys[1]))})


def _do_code(job):
    ctx = job.field_ctx()
    C = _code(job, ctx)
    if job.command == "rank-dist":
        rd = cd.rank_distribution(C, job.budget)
        return Outcome({"A": list(rd.vector_counts), "v": list(rd.projective_counts)})
    if job.command in ("dual", "companion"):
        D = cd.companion(C) if job.command == "companion" else cd.delsarte_dual(C)
        return Outcome({"basis": [_poly_json(f) for f in D.basis], "dim_fq": D.dim})
    if job.command == "is-mrd":
        return Outcome({"is_mrd": cd.is_mrd(C, job.budget), "min_rank": cd.min_rank(C, job.budget)})
    trivial = cd.common_kernel_trivial(C)
    meets = cd.dual_meets_sigma(C, job.budget)
    return Outcome({"common_kernel_trivial": trivial, "dual_meets_sigma": meets,
                    "consistent": trivial != meets}, ok=trivial != meets)


def _do_linset(job):
    ctx = job.field_ctx()
    cmd = job.command
    if cmd == "build":
        L = ls.build_linear_set(_fs(job, ctx), budget=job.budget)
        return Outcome({"rank": L.rank, "span_dim": L.span_dim, "num_points": L.size,
                        "w0": list(L.w0), "w_hyp": list(L.w_hyp), "points": _points_json(ctx, L.points)})
    if cmd == "classify":
        c = ls.classify(_fs(job, ctx), job.budget)
        return Outcome(c._asdict())
    if cmd == "hyp-weights":
        fs = _fs(job, ctx)
        direct = ls.hyperplane_weight_distribution(fs, job.budget)
        via = ls.hyperplane_distribution_from_ranks(fs, job.budget)
        return Outcome({"w_hyp": list(direct), "from_rank_distribution": list(via),
                        "equal": direct == via}, ok=direct == via)
    if cmd == "wt2-search":
        found = ls.search_weight2_configs(ctx, job.target, job.trials, job.seed, job.budget)
        return Outcome({"found": [{"basis": [_poly_json(f) for f in c.code.basis],
                                   "sigma1_hits": c.profile.sigma1_hits,
                                   "sigma2_hits": c.profile.sigma2_hits,
                                   "companion_w0": list(c.companion_w0)} for c in found]})
    C = cd.make_code(ctx, cd.Scalars.FQN, _fs(job, ctx))
    if cmd == "project-verify":
        r = ls.project_subgeometry(C)
        return Outcome({"matches": r.matches, "weights_match": r.weights_match,
                        "det_phi": _digits(ctx, r.det),
                        "phi": [[_digits(ctx, a) for a in row] for row in r.phi],
                        "g": [_poly_json(g) for g in r.g],
                        "projected_points": _points_json(ctx, r.projected_points)},
                       ok=r.matches and r.weights_match)
    if cmd == "bw-verify":
        r = ls.bw_check(C, job.budget)
        return Outcome(r._asdict(), ok=r.equal)
    r = ls.sigma2_profile(C, job.budget)
    return Outcome(r._asdict())


def _do_mw(job):
    q = _q(job)
    cmd = job.command
    if cmd == "gauss":
        if job.a is None or job.b is None:
            raise RankGeoError("mw gauss needs --a and --b")
        return Outcome({"value": _value_json(mw.gauss(job.a, job.b, q))})
    A = _A(job, q)
    if cmd == "dual":
        k = job.k if job.k is not None else job.n
        m = job.m if job.m is not None else k
        if k is None or job.logC is None:
            raise RankGeoError("mw dual needs --k (or --n) and --logC")
        B = mw.dual_distribution(mw.DistributionVector(tuple(A), k, m, job.logC), q)
        res = {"B": [_value_json(b) for b in B.entries], "logC_dual": B.log_c}
        if not mw._symbolic(q):
            res["total"] = sum(B.entries)
        return Outcome(res)
    n = job.n
    if n is None:
        raise RankGeoError("this command needs --n")
    if cmd == "b1":
        ok = mw.b1_is_zero(A, n, q)
        return Outcome({"B1_is_zero": ok}, ok=ok)
    if cmd == "b2":
        r = mw.b2_identity(A, n, q)
        return Outcome({"lhs": _value_json(r.lhs), "rhs": _value_json(r.rhs), "equal": r.equal}, ok=r.equal)
    ok = mw.sum_identity_check(A, n, q)
    top = mw.a_top_formula(A, n, q)
    return Outcome({"holds": ok, "A_top_formula": _value_json(top)}, ok=ok)


_DISPATCH = {"field": _do_field, "poly": _do_poly, "code": _do_code,
             "linset": _do_linset, "mw": _do_mw}


def _inputs(job: JobSpec) -> dict:
    keys = ["basis", "fs", "scalars", "x", "A", "logC", "k", "m", "a", "b", "symbolic",
            "q_value", "target", "seed", "trials", "budget"]
    return {k: getattr(job, k) for k in keys if getattr(job, k) not in (None, [], False)}


def run(job: JobSpec) -> tuple[int, str]:
    """Execute one job; returns (exit status, serialized report)."""
    try:
        out = _DISPATCH[job.group](job)
    except RankGeoError as exc:
        report = {"command": f"{job.group} {job.command}", "error": f"{type(exc).__name__}: {exc}"}
        return 1, json.dumps(report, sort_keys=True)
    if job.group != "mw":
        ctx = job.field_ctx()
        fld = {"p": ctx.p, "e": ctx.e, "n": ctx.n, "modulus": list(ctx.modulus)}
    else:
        # the recursion needs no field; echo whatever was supplied
        fld = {"p": job.p, "e": job.e, "n": job.n,
               "modulus": list(job.modulus) if job.modulus else None}
    report = {
        "command": f"{job.group} {job.command}",
        "field": fld,
        "inputs": _inputs(job),
        "results": out.results,
        "versions": {"rankgeo": __version__, "numpy": numpy.__version__,
                     "python": platform.python_version()},
    }
    if job.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = _table(report)
    return (0 if out.ok else 2), text


def _table(report: dict) -> str:
    lines = [f"# {report['command']}"]
    if report["field"]:
        f = report["field"]
        lines.append(f"field: p={f['p']} e={f['e']} n={f['n']} modulus={f['modulus']}")
    width = max((len(k) for k in report["results"]), default=0)
    for k, v in report["results"].items():
        if isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(item, sort_keys=True)}" for item in v)
        else:
            lines.append(f"{k.ljust(width)}  {json.dumps(v) if not isinstance(v, str) else v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankgeo", description=__doc__.splitlines()[0])
    groups = ap.add_subparsers(dest="group", required=True)
    for group, cmds in COMMANDS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="command", required=True)
        for c in cmds:
            _add_flags(sub.add_parser(c))
    return ap


def _add_flags(p: argparse.ArgumentParser):
    p.add_argument("--p", type=int)
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--modulus", type=str, help="little-endian coefficients, e.g. 1,1,0,1")
    p.add_argument("--basis", nargs="+", default=[])
    p.add_argument("--fs", nargs="+", default=[])
    p.add_argument("--scalars", choices=["q", "big"], default="big")
    p.add_argument("--x", type=str)
    p.add_argument("--A", type=str, help="semicolon-separated entries, expressions in q allowed")
    p.add_argument("--logC", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--symbolic", action="store_true")
    p.add_argument("--q-value", type=int, dest="q_value")
    p.add_argument("--target", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=["table", "json"], default="json")
    p.add_argument("--out", type=str)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    modulus = None
    if args.modulus:
        modulus = tuple(int(c) for c in re.split(r"[,\s]+", args.modulus.strip("[] ")) if c)
    job = JobSpec(group=args.group, command=args.command, p=args.p, e=args.e, n=args.n,
                  modulus=modulus, basis=args.basis, fs=args.fs, scalars=args.scalars,
                  x=args.x, A=args.A, logC=args.logC, k=args.k, m=args.m, a=args.a, b=args.b,
                  symbolic=args.symbolic, q_value=args.q_value, target=args.target,
                  seed=args.seed, trials=args.trials, budget=args.budget, format=args.format)
    status, text = run(job)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if status == 1:
        print(json.loads(text)["error"], file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
