"""Rank-metric codes as F_q- or F_{q^n}-subspaces of End_{F_q}(F_{q^n})."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import linalg
from . import linpoly as lp
from .errors import BudgetExceeded, DependentBasis, MixedContexts, WrongScalarField
from .field import FieldContext
from .linpoly import LinearizedPoly

CODE_BUDGET = 2**22


class Scalars(str, Enum):
    FQ = "q"
    FQN = "big"


@dataclass(frozen=True, eq=False)
class RankMetricCode:
    ctx: FieldContext
    scalar_field: Scalars
    basis: tuple[LinearizedPoly, ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        """Dimension over F_q."""
        return self.k * self.ctx.n if self.scalar_field is Scalars.FQN else self.k

    @property
    def size(self) -> int:
        return self.ctx.q**self.dim

    @property
    def big(self) -> bool:
        return self.scalar_field is Scalars.FQN

    def basis_rows(self) -> np.ndarray:
        return np.array([f.coeffs for f in self.basis], dtype=np.int64).reshape(-1, self.ctx.n)

    def __repr__(self):
        return f"RankMetricCode({self.scalar_field.value}, {[list(f.coeffs) for f in self.basis]})"


@dataclass(frozen=True)
class RankDistribution:
    """``vector_counts[i]`` = codewords of rank i; ``projective_counts[i]`` = points of Omega(C) of rank i.

    Both are indexed 0..n; ``projective_counts[0]`` is always 0.
    """

    vector_counts: tuple[int, ...]
    projective_counts: tuple[int, ...]

    @property
    def A(self):
        return self.vector_counts


def make_code(ctx: FieldContext, scalar_field, basis) -> RankMetricCode:
    scalar_field = Scalars(scalar_field)
    basis = tuple(basis)
    if any(f.ctx.spec != ctx.spec for f in basis):
        raise MixedContexts("basis polynomials over a different field")
    C = RankMetricCode(ctx, scalar_field, basis)
    if basis:
        if scalar_field is Scalars.FQN:
            r = linalg.rank(ctx, [list(f.coeffs) for f in basis])
        else:
            r = linalg.rank(ctx, fq_coordinates(ctx, basis))
        if r != len(basis):
            raise DependentBasis(f"basis of size {len(basis)} spans only dimension {r}")
    return C


def zero_code(ctx, scalar_field=Scalars.FQN) -> RankMetricCode:
    return RankMetricCode(ctx, Scalars(scalar_field), ())


def fq_coordinates(ctx, polys):
    """n^2 F_q-coordinates of each polynomial (coefficient i, basis element l)."""
    return [[c for a in f.coeffs for c in ctx.fq_coords(a)] for f in polys]


def fq_basis(C: RankMetricCode) -> list[LinearizedPoly]:
    """An F_q-basis of C."""
    if not C.big:
        return list(C.basis)
    return [f.scale(b) for f in C.basis for b in C.ctx.fq_power_basis]


def as_fq(C: RankMetricCode) -> RankMetricCode:
    return RankMetricCode(C.ctx, Scalars.FQ, tuple(fq_basis(C)))


def same_space(C1: RankMetricCode, C2: RankMetricCode) -> bool:
    """Whether two codes are equal as sets (compared through their F_q-spans)."""
    if C1.ctx.spec != C2.ctx.spec:
        raise MixedContexts("codes over different fields")
    ctx = C1.ctx
    a, b = fq_basis(C1), fq_basis(C2)
    if len(a) != len(b):
        return False
    if not a:
        return True
    return linalg.rank(ctx, fq_coordinates(ctx, a + b)) == len(a)


# ---------------------------------------------------------------- enumeration


def _scalars(C: RankMetricCode):
    ctx = C.ctx
    return list(ctx.elements()) if C.big else list(ctx.subfield)


def _combine(ctx, lam: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """lam (B, k) times basis rows (k, n) over F_{q^n}."""
    out = np.zeros((lam.shape[0], ctx.n), dtype=np.int64)
    for j in range(rows.shape[0]):
        out = ctx.vadd(out, ctx.vmul(lam[:, j, None], rows[j][None, :]))
    return out


def _check(C: RankMetricCode, count: int, budget: int | None):
    budget = CODE_BUDGET if budget is None else budget
    if count > budget:
        raise BudgetExceeded(f"enumerating {count} codewords exceeds budget {budget}")


def codewords(C: RankMetricCode, budget: int | None = None) -> np.ndarray:
    """Every codeword's coefficient vector, scalars in generator-power order with zero first."""
    _check(C, C.size, budget)
    if not C.basis:
        return np.zeros((1, C.ctx.n), dtype=np.int64)
    S = np.array(_scalars(C), dtype=np.int64)
    lam = index_grid(len(S), C.k)
    return _combine(C.ctx, S[lam], C.basis_rows())


def index_grid(m: int, r: int) -> np.ndarray:
    """All r-tuples over range(m) in lexicographic order, shape (m**r, r)."""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((m,) * r, dtype=np.int64).reshape(r, -1).T


def scalar_tuples(S, k: int) -> np.ndarray:
    """Nonzero k-tuples over S (S[0] = 0, S[1] = 1) whose first nonzero entry is 1."""
    S = np.asarray(S, dtype=np.int64)
    blocks = []
    for lead in range(k):
        tail = k - lead - 1
        idx = index_grid(len(S), tail)
        blk = np.zeros((idx.shape[0], k), dtype=np.int64)
        blk[:, lead] = 1
        blk[:, lead + 1:] = S[idx]
        blocks.append(blk)
    return np.concatenate(blocks) if blocks else np.zeros((0, k), dtype=np.int64)


def representatives(C: RankMetricCode, budget: int | None = None) -> np.ndarray:
    """One codeword per class of nonzero codewords modulo the scalar group of C.

    Ranks are constant on these classes, so rank counts only need the
    representatives: (|C| - 1) / (|S| - 1) of them.
    """
    S = _scalars(C)
    count = (C.size - 1) // (len(S) - 1)
    _check(C, count, budget)
    if not C.basis:
        return np.zeros((0, C.ctx.n), dtype=np.int64)
    return _combine(C.ctx, scalar_tuples(S, C.k), C.basis_rows())


def normalize_rows(ctx, rows: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so its first nonzero entry is 1."""
    rows = np.asarray(rows, dtype=np.int64)
    first = np.argmax(rows != 0, axis=1)
    lead = rows[np.arange(rows.shape[0]), first]
    return ctx.vmul(rows, ctx.vinv(lead)[:, None])


def projective_points(C: RankMetricCode, budget: int | None = None) -> np.ndarray:
    """Normalized coefficient vectors of the points of Omega(C) in PG(n-1, q^n)."""
    reps = representatives(C, budget)
    if C.big:
        return reps
    if reps.shape[0] == 0:
        return reps
    return np.unique(normalize_rows(C.ctx, reps), axis=0)


def rank_distribution(C: RankMetricCode, budget: int | None = None,
                      exhaustive: bool = False) -> RankDistribution:
    """Rank counts of C.

    By default each rank is computed once per scalar class (see
    :func:`representatives`) and weighted by the class size; ``exhaustive=True``
    ranks every codeword individually.
    """
    ctx, n = C.ctx, C.ctx.n
    if exhaustive:
        r = lp.ranks(ctx, codewords(C, budget))
        A = np.bincount(r, minlength=n + 1)
    else:
        reps = representatives(C, budget)
        r = lp.ranks(ctx, reps)
        mult = len(_scalars(C)) - 1
        A = np.bincount(r, minlength=n + 1) * mult
        A[0] += 1
    if C.big:
        v = A // (ctx.order - 1)
        v[0] = 0
    else:
        pts = projective_points(C, budget)
        v = np.bincount(lp.ranks(ctx, pts), minlength=n + 1) if pts.shape[0] else np.zeros(n + 1, dtype=np.int64)
    return RankDistribution(tuple(int(x) for x in A), tuple(int(x) for x in v))


# ---------------------------------------------------------------- duality


def delsarte_dual(C: RankMetricCode) -> RankMetricCode:
    """Annihilator of C: under the dot product for F_{q^n}-linear C, under tr(f . g) otherwise."""
    ctx, n = C.ctx, C.ctx.n
    if C.big:
        rows = [list(f.coeffs) for f in C.basis]
        basis = linalg.nullspace(ctx, rows, n)
        return RankMetricCode(ctx, Scalars.FQN, tuple(LinearizedPoly(ctx, tuple(v)) for v in basis))
    return trace_dual(C)


def trace_dual(C: RankMetricCode) -> RankMetricCode:
    """F_q-linear dual under (f, g) -> tr(sum f_i g_i), solved in n^2 F_q-coordinates."""
    ctx, n = C.ctx, C.ctx.n
    b = ctx.fq_power_basis
    rows = [[ctx.trace(ctx.mul(f.coeffs[i], b[l])) for i in range(n) for l in range(n)]
            for f in fq_basis(C)]
    basis = []
    for d in linalg.nullspace(ctx, rows, n * n):
        coeffs = tuple(ctx.from_fq_coords(d[i * n:(i + 1) * n]) for i in range(n))
        basis.append(LinearizedPoly(ctx, coeffs))
    return RankMetricCode(ctx, Scalars.FQ, tuple(basis))


def companion(C: RankMetricCode) -> RankMetricCode:
    if not C.big:
        raise WrongScalarField("companion is defined for F_{q^n}-linear codes")
    return delsarte_dual(C)


def is_mrd(C: RankMetricCode, budget: int | None = None) -> bool:
    if not C.big:
        raise WrongScalarField("MRD test expects an F_{q^n}-linear code")
    n, k = C.ctx.n, C.k
    if k == 0:
        return False
    A = rank_distribution(C, budget).vector_counts
    return not any(A[1:n - k + 1])


def min_rank(C: RankMetricCode, budget: int | None = None) -> int:
    A = rank_distribution(C, budget).vector_counts
    return next((i for i in range(1, len(A)) if A[i]), 0)


def common_kernel(C: RankMetricCode) -> list[int]:
    """Elements x with g(x) = 0 for every basis element g (by enumeration)."""
    ctx = C.ctx
    ctx.check_budget(ctx.order, "kernel enumeration")
    xs = np.arange(ctx.order)
    if not C.basis:
        return [int(x) for x in xs]
    vals = lp.evaluate_many(ctx, C.basis_rows(), xs)
    return [int(x) for x in xs[(vals == 0).all(axis=0)]]


def common_kernel_trivial(C: RankMetricCode) -> bool:
    return len(common_kernel(C)) == 1


def dual_meets_sigma(C: RankMetricCode, budget: int | None = None) -> bool:
    """Whether Omega(C^perp) contains a rank-1 point, by enumerating the points of the dual."""
    D = delsarte_dual(C)
    pts = projective_points(D, budget)
    return bool(pts.shape[0]) and bool((lp.ranks(C.ctx, pts) == 1).any())


def random_code(ctx, scalar_field, k: int, rng, kernel_trivial: bool = False,
                max_tries: int = 1000) -> RankMetricCode:
    """A uniformly drawn k-dimensional code (F_q-dimension k for F_q scalars).

    With ``kernel_trivial`` the draw is repeated until the basis maps share no
    nonzero root.
    """
    scalar_field = Scalars(scalar_field)
    for _ in range(max_tries):
        rows = rng.integers(0, ctx.order, size=(k, ctx.n)).tolist()
        basis = tuple(LinearizedPoly(ctx, tuple(r)) for r in rows)
        try:
            C = make_code(ctx, scalar_field, basis)
        except DependentBasis:
            continue
        if kernel_trivial and not common_kernel_trivial(C):
            continue
        return C
    raise RuntimeError(f"no suitable code after {max_tries} draws")
