"""Linearised polynomials x -> sum a_i x^(q^i) as F_q-linear endomorphisms of F_{q^n}."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import LengthMismatch, MixedContexts, ZeroVector
from .field import FieldContext, FieldElement


@dataclass(frozen=True, eq=False)
class LinearizedPoly:
    ctx: FieldContext
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.n:
            raise LengthMismatch(f"need exactly n={self.ctx.n} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, (0,) * ctx.n)

    @classmethod
    def monomial(cls, ctx, i: int, coef: int = 1):
        """coef * x^(q^i); ``coef`` is an integer encoding."""
        c = [0] * ctx.n
        c[i % ctx.n] = coef
        return cls(ctx, tuple(c))

    @classmethod
    def identity(cls, ctx):
        return cls.monomial(ctx, 0)

    @classmethod
    def trace_map(cls, ctx):
        return cls(ctx, (1,) * ctx.n)

    def coefficient(self, i: int) -> FieldElement:
        return FieldElement(self.ctx, self.coeffs[i])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other):
        _same(self, other)
        return LinearizedPoly(self.ctx, tuple(self.ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        _same(self, other)
        return LinearizedPoly(self.ctx, tuple(self.ctx.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, s: int) -> LinearizedPoly:
        return LinearizedPoly(self.ctx, tuple(self.ctx.mul(s, a) for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, LinearizedPoly):
            return NotImplemented
        return self.ctx.spec == other.ctx.spec and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.spec, self.coeffs))

    def __repr__(self):
        return f"LinearizedPoly({list(self.coeffs)})"


def _same(*polys):
    spec = polys[0].ctx.spec
    if any(f.ctx.spec != spec for f in polys[1:]):
        raise MixedContexts("linearised polynomials over different fields")


def eval_raw(ctx, coeffs, x: int) -> int:
    if not x:
        return 0
    s = 0
    for i, a in enumerate(coeffs):
        if a:
            s = ctx.add(s, ctx.mul(a, ctx.frob(x, i)))
    return s


def evaluate(f: LinearizedPoly, x) -> FieldElement:
    if isinstance(x, FieldElement):
        if x.ctx.spec != f.ctx.spec:
            raise MixedContexts("point and polynomial over different fields")
        x = x.value
    return FieldElement(f.ctx, eval_raw(f.ctx, f.coeffs, x))


def lincomb(scalars, polys) -> LinearizedPoly:
    """sum lambda_i f_i. Scalars are FieldElements (or raw integer encodings)."""
    scalars, polys = list(scalars), list(polys)
    if len(scalars) != len(polys):
        raise LengthMismatch("scalars and polynomials differ in length")
    if not polys:
        raise LengthMismatch("empty linear combination")
    _same(*polys)
    ctx = polys[0].ctx
    out = [0] * ctx.n
    for s, f in zip(scalars, polys):
        if isinstance(s, FieldElement):
            if s.ctx.spec != ctx.spec:
                raise MixedContexts("scalar from a different field")
            s = s.value
        if s:
            out = [ctx.add(o, ctx.mul(s, a)) for o, a in zip(out, f.coeffs)]
    return LinearizedPoly(ctx, tuple(out))


def compose(g: LinearizedPoly, f: LinearizedPoly) -> LinearizedPoly:
    """g o f, i.e. x -> g(f(x)), reduced mod x^(q^n) - x by index arithmetic."""
    _same(g, f)
    ctx, n = g.ctx, g.ctx.n
    out = [0] * n
    for m, gm in enumerate(g.coeffs):
        if not gm:
            continue
        for i in range(n):
            fi = f.coeffs[(i - m) % n]
            if fi:
                out[i] = ctx.add(out[i], ctx.mul(gm, ctx.frob(fi, m)))
    return LinearizedPoly(ctx, tuple(out))


def dot(f: LinearizedPoly, g: LinearizedPoly) -> FieldElement:
    _same(f, g)
    return FieldElement(f.ctx, dot_raw(f.ctx, f.coeffs, g.coeffs))


def dot_raw(ctx, a, b) -> int:
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = ctx.add(s, ctx.mul(x, y))
    return s


def trace_form(f: LinearizedPoly, g: LinearizedPoly) -> FieldElement:
    _same(f, g)
    return FieldElement(f.ctx, f.ctx.trace(dot_raw(f.ctx, f.coeffs, g.coeffs)))


def twist_matrix(f: LinearizedPoly):
    """n x n matrix with entry (i, j) = a_{(j-i) mod n}^(q^i); row i is x^(q^i) o f."""
    return twist_raw(f.ctx, f.coeffs)


def twist_raw(ctx, coeffs):
    n = ctx.n
    return [[ctx.frob(coeffs[(j - i) % n], i) for j in range(n)] for i in range(n)]


def rank(f: LinearizedPoly) -> int:
    return linalg.rank(f.ctx, twist_raw(f.ctx, f.coeffs))


def rank_raw(ctx, coeffs) -> int:
    return linalg.rank(ctx, twist_raw(ctx, coeffs))


def kernel_dim(f: LinearizedPoly) -> int:
    """log_q of the number of roots in F_{q^n}, found by evaluating at every element."""
    ctx = f.ctx
    ctx.check_budget(ctx.order, "kernel enumeration")
    roots = sum(1 for x in ctx.elements() if not eval_raw(ctx, f.coeffs, x))
    return _log_q(ctx, roots)


def _log_q(ctx, count: int) -> int:
    d, c = 0, count
    while c > 1 and c % ctx.q == 0:
        c //= ctx.q
        d += 1
    if c != 1:
        raise AssertionError(f"{count} is not a power of q={ctx.q}")
    return d


def is_invertible(f: LinearizedPoly) -> bool:
    return rank(f) == f.ctx.n


def point_rank_stratum(f: LinearizedPoly, i: int) -> bool:
    """Whether the projective point <f> lies in Sigma_i (rank at most i)."""
    if f.is_zero():
        raise ZeroVector("the zero map is not a projective point")
    return rank(f) <= i


# ---------------------------------------------------------------- batched


def twist_stack(ctx, coeff_rows) -> np.ndarray:
    """Twist matrices for an array of coefficient vectors, shape (B, n) -> (B, n, n)."""
    C = np.asarray(coeff_rows, dtype=np.int64)
    n = ctx.n
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n  # (i, j) -> j - i
    out = np.empty((C.shape[0], n, n), dtype=np.int64)
    for i in range(n):
        out[:, i, :] = ctx.vfrob(C[:, idx[i]], i)
    return out


def ranks(ctx, coeff_rows, chunk: int = 1 << 15) -> np.ndarray:
    """Twist-matrix ranks of many linearised polynomials at once."""
    C = np.asarray(coeff_rows, dtype=np.int64).reshape(-1, ctx.n)
    out = np.empty(C.shape[0], dtype=np.int64)
    for s in range(0, C.shape[0], chunk):
        out[s:s + chunk] = linalg.batched_rank(ctx, twist_stack(ctx, C[s:s + chunk]))
    return out


def evaluate_many(ctx, coeff_rows, xs) -> np.ndarray:
    """Values f_b(x) for every row b and every x; shape (B, len(xs))."""
    C = np.asarray(coeff_rows, dtype=np.int64).reshape(-1, ctx.n)
    xs = np.asarray(xs, dtype=np.int64)
    out = np.zeros((C.shape[0], xs.shape[0]), dtype=np.int64)
    for i in range(ctx.n):
        out = ctx.vadd(out, ctx.vmul(C[:, i, None], ctx.vfrob(xs, i)[None, :]))
    return out


def kernel_dims(ctx, coeff_rows, chunk: int = 4096) -> np.ndarray:
    """Root-count kernel dimensions of many polynomials (vectorised enumeration oracle)."""
    ctx.check_budget(ctx.order, "kernel enumeration")
    C = np.asarray(coeff_rows, dtype=np.int64).reshape(-1, ctx.n)
    xs = np.arange(ctx.order)
    out = np.empty(C.shape[0], dtype=np.int64)
    logq = {ctx.q**d: d for d in range(ctx.n + 1)}
    for s in range(0, C.shape[0], chunk):
        roots = (evaluate_many(ctx, C[s:s + chunk], xs) == 0).sum(axis=1)
        out[s:s + chunk] = [logq[int(r)] for r in roots]
    return out
