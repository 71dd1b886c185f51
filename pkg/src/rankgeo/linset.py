"""Linear sets L_{f_1,...,f_k} of rank n in PG(k-1, q^n).

Points and hyperplanes are normalized coordinate tuples (first nonzero entry
1).  Weight distributions are tuples indexed by weight 0..n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import code as cd
from . import linalg
from . import linpoly as lp
from .errors import (
    BudgetExceeded,
    CommonKernelNontrivial,
    LengthMismatch,
    MixedContexts,
    NoSkewComplement,
    NotProper,
    ZeroCovector,
)
from .linpoly import LinearizedPoly
from .macwilliams import gauss

ProjPoint = tuple  # normalized tuple of integer-encoded field elements


@dataclass(frozen=True)
class LinearSetSummary:
    defining_tuple: tuple[LinearizedPoly, ...]
    points: dict = field(repr=False)
    rank: int
    w0: tuple
    w_hyp: tuple | None
    span_dim: int

    @property
    def ctx(self):
        return self.defining_tuple[0].ctx

    @property
    def k(self) -> int:
        return len(self.defining_tuple)

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def max_weight(self) -> int:
        return max(self.points.values())


def _check_tuple(fs):
    fs = tuple(fs)
    if len(fs) < 2:
        raise LengthMismatch("a linear set needs k >= 2 maps")
    spec = fs[0].ctx.spec
    if any(f.ctx.spec != spec for f in fs):
        raise MixedContexts("maps over different fields")
    return fs, fs[0].ctx


def _rows(fs):
    return np.array([f.coeffs for f in fs], dtype=np.int64)


def _log_q(q, count):
    d = 0
    while count > 1:
        if count % q:
            raise AssertionError(f"count {count} is not a power of {q}")
        count //= q
        d += 1
    return d


def num_points(Qn: int, k: int) -> int:
    return (Qn**k - 1) // (Qn - 1)


def vector_table(fs) -> np.ndarray:
    """(f_1(x), ..., f_k(x)) for every x, in element-encoding order; shape (q^n, k)."""
    fs, ctx = _check_tuple(fs)
    ctx.check_budget(ctx.order, "linear set enumeration")
    return lp.evaluate_many(ctx, _rows(fs), np.arange(ctx.order)).T


def build_linear_set(fs, hyperplanes: bool = True, budget: int | None = None) -> LinearSetSummary:
    """Enumerate x in F_{q^n}^*, bucket the directions of (f_1(x), ..., f_k(x)) and weigh them.

    The weight of a point P is dim_{F_q}(U cap P), read off from the number of
    x landing on P.  ``w_hyp`` is filled by :func:`hyperplane_weight_distribution`
    when ``hyperplanes`` is set.
    """
    fs, ctx = _check_tuple(fs)
    q, n, k = ctx.q, ctx.n, len(fs)
    U = vector_table(fs)[1:]  # drop x = 0
    nz = U.any(axis=1)
    kernel = 1 + int((~nz).sum())
    kd = _log_q(q, kernel)
    pts, counts = np.unique(cd.normalize_rows(ctx, U[nz]), axis=0, return_counts=True)
    points = {}
    for pt, c in zip(pts, counts):
        points[tuple(int(v) for v in pt)] = _log_q(q, 1 + int(c) // kernel)
    w0 = [0] * (n + 1)
    for w in points.values():
        w0[w] += 1
    w0[0] = num_points(ctx.order, k) - len(points)
    span = linalg.rank(ctx, [list(f.coeffs) for f in fs]) - 1
    w_hyp = hyperplane_weight_distribution(fs, budget) if hyperplanes else None
    return LinearSetSummary(fs, points, n - kd, tuple(w0), w_hyp, span)


def point_weight(summary: LinearSetSummary, P) -> int:
    P = linalg.normalize(summary.ctx, [int(x) for x in P])
    if P is None:
        raise ZeroCovector("the zero vector is not a point")
    return summary.points.get(P, 0)


def hyperplane_weight(fs, a) -> int:
    """Weight of the hyperplane a^perp, as n - rank(sum a_i f_i)."""
    fs, ctx = _check_tuple(fs)
    a = [x.value if hasattr(x, "value") else int(x) for x in a]
    if len(a) != len(fs):
        raise LengthMismatch("covector length differs from k")
    if not any(a):
        raise ZeroCovector("zero covector defines no hyperplane")
    return ctx.n - lp.rank(lp.lincomb(a, fs))


def covectors(ctx, k: int, budget: int | None = None) -> np.ndarray:
    """Normalized representatives of all points (equivalently hyperplanes) of PG(k-1, q^n)."""
    count = num_points(ctx.order, k)
    limit = cd.CODE_BUDGET if budget is None else budget
    if count > limit:
        raise BudgetExceeded(f"{count} hyperplanes exceed budget {limit}")
    return cd.scalar_tuples(list(ctx.elements()), k)


def hyperplane_weight_distribution(fs, budget: int | None = None, chunk: int = 2048) -> tuple:
    """w_{k-2}: for every hyperplane a^perp count the vectors of U inside it (= q^weight)."""
    fs, ctx = _check_tuple(fs)
    q, n, k = ctx.q, ctx.n, len(fs)
    U = vector_table(fs)  # includes x = 0
    A = covectors(ctx, k, budget)
    logq = {q**d: d for d in range(n + 1)}
    dist = [0] * (n + 1)
    for s in range(0, A.shape[0], chunk):
        a = A[s:s + chunk]
        acc = np.zeros((a.shape[0], U.shape[0]), dtype=np.int64)
        for i in range(k):
            acc = ctx.vadd(acc, ctx.vmul(a[:, i, None], U[None, :, i]))
        for c in (acc == 0).sum(axis=1):
            dist[logq[int(c)]] += 1
    return tuple(dist)


def hyperplane_distribution_from_ranks(fs, budget: int | None = None) -> tuple:
    """n.1 - rk(Omega(C)) for C = <fs>, reindexed so entry j counts hyperplanes of weight j."""
    fs, ctx = _check_tuple(fs)
    n = ctx.n
    v = cd.rank_distribution(cd.make_code(ctx, cd.Scalars.FQN, fs), budget).projective_counts
    return tuple(v[n - j] for j in range(n + 1))


class Classification(NamedTuple):
    scattered: bool
    scattered_wrt_hyperplanes: bool
    spans: bool


def classify(fs, budget: int | None = None) -> Classification:
    L = fs if isinstance(fs, LinearSetSummary) else build_linear_set(fs, budget=budget)
    k, n = L.k, L.ctx.n
    w_hyp = L.w_hyp if L.w_hyp is not None else hyperplane_weight_distribution(L.defining_tuple, budget)
    spans = L.span_dim == k - 1
    hyp_ok = not any(w_hyp[k:])
    return Classification(L.max_weight <= 1, spans and hyp_ok, spans)


# ---------------------------------------------------------------- projection


@dataclass(frozen=True)
class ProjectionResult:
    projected_points: dict = field(repr=False)  # point in basis g -> weight from Sigma-side count
    phi: list
    det: int
    g: tuple
    matches: bool
    weights_match: bool


def _skew_basis(ctx, fs, dual_basis):
    """A basis g of a (k-1)-space skew from Omega(C)^perp: fs itself, else a unit-vector completion."""
    k = len(fs)
    phi = [[lp.dot_raw(ctx, f.coeffs, g.coeffs) for f in fs] for g in fs]
    if linalg.det(ctx, phi):
        return list(fs)
    rows = [list(h.coeffs) for h in dual_basis]
    chosen = []
    for j in range(ctx.n):
        e = [0] * ctx.n
        e[j] = 1
        if linalg.rank(ctx, rows + [e]) > len(rows):
            rows.append(e)
            chosen.append(LinearizedPoly(ctx, tuple(e)))
        if len(chosen) == k:
            return chosen
    raise NoSkewComplement("could not complete the dual to a basis of V")


def project_subgeometry(C: cd.RankMetricCode) -> ProjectionResult:
    """Project Sigma from Omega(C)^perp onto a complement and compare with L_{f_1..f_k}.

    For each beta != 0 the point (beta, beta^q, ..., beta^(q^(n-1))) of Sigma is
    written as sum a_i g_i + t with t in C^perp; the projected point is <a>.
    ``matches`` asserts that {<a . phi>} is exactly the point set of the linear
    set, with phi_ij = f_j . g_i, and ``weights_match`` that the number of beta
    projecting onto each point reproduces the weight.
    """
    ctx, n = C.ctx, C.ctx.n
    if not C.big:
        raise ValueError("projection needs an F_{q^n}-linear code")
    if not cd.common_kernel_trivial(C):
        raise CommonKernelNontrivial("the basis maps share a nonzero root")
    fs = C.basis
    k = len(fs)
    D = cd.delsarte_dual(C)
    g = _skew_basis(ctx, fs, D.basis)
    phi = [[lp.dot_raw(ctx, f.coeffs, gi.coeffs) for f in fs] for gi in g]
    det = linalg.det(ctx, phi)
    if not det:
        raise NoSkewComplement("phi is singular")
    M = [list(gi.coeffs) for gi in g] + [list(h.coeffs) for h in D.basis]
    Minv = np.array(linalg.inverse(ctx, M), dtype=np.int64)

    betas = np.array(ctx.nonzero(), dtype=np.int64)
    sigma = np.stack([ctx.vfrob(betas, i) for i in range(n)], axis=1)  # (Q-1, n)
    coords = np.zeros((betas.shape[0], n), dtype=np.int64)
    for r in range(n):
        coords = ctx.vadd(coords, ctx.vmul(sigma[:, r, None], Minv[r][None, :]))
    a = coords[:, :k]
    if not a.any(axis=1).all():
        raise CommonKernelNontrivial("a point of Sigma lies in Omega(C)^perp")
    pts, counts = np.unique(cd.normalize_rows(ctx, a), axis=0, return_counts=True)
    projected = {tuple(int(x) for x in p): _log_q(ctx.q, int(c) + 1) for p, c in zip(pts, counts)}

    L = build_linear_set(fs, hyperplanes=False)
    phi_np = np.array(phi, dtype=np.int64)
    image = {}
    for p, w in projected.items():
        v = np.zeros(k, dtype=np.int64)
        for i in range(k):
            v = ctx.vadd(v, ctx.vmul(np.int64(p[i]), phi_np[i]))
        image[linalg.normalize(ctx, [int(x) for x in v])] = w
    matches = set(image) == set(L.points)
    weights_match = matches and all(L.points[p] == w for p, w in image.items())
    return ProjectionResult(projected, phi, det, tuple(g), matches, weights_match)


# ---------------------------------------------------------------- lines


class BWCheck(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def rank_profile(C: cd.RankMetricCode, budget: int | None = None) -> np.ndarray:
    """Counts of projective points of Omega(C) by rank (index 0..n)."""
    pts = cd.projective_points(C, budget)
    if not pts.shape[0]:
        return np.zeros(C.ctx.n + 1, dtype=np.int64)
    return np.bincount(lp.ranks(C.ctx, pts), minlength=C.ctx.n + 1)


def bw_check(C: cd.RankMetricCode, budget: int | None = None) -> BWCheck:
    """Rank-2 points of Omega(C)^perp against sum_{i>=2} W_i [i choose 2] for a 2-dim code."""
    ctx, n = C.ctx, C.ctx.n
    if not C.big or C.k != 2:
        raise ValueError("bw_check expects a 2-dimensional F_{q^n}-linear code")
    if n < 3:
        raise ValueError("need n >= 3")
    if not cd.common_kernel_trivial(C):
        raise CommonKernelNontrivial("the basis maps share a nonzero root")
    L = build_linear_set(C.basis, hyperplanes=False)
    if L.size <= 1:
        raise NotProper("the linear set is a single point")
    lhs = int(rank_profile(cd.delsarte_dual(C), budget)[2])
    rhs = sum(L.w0[i] * gauss(i, 2, ctx.q) for i in range(2, n))
    return BWCheck(lhs, rhs, lhs == rhs)


class Sigma2Profile(NamedTuple):
    sigma1_hits: int
    sigma2_hits: int


def sigma2_profile(C: cd.RankMetricCode, budget: int | None = None) -> Sigma2Profile:
    """Numbers of rank-1 and rank-2 points on Omega(C) (typically a codimension-2 subspace)."""
    prof = rank_profile(C, budget)
    return Sigma2Profile(int(prof[1]), int(prof[2]))


@dataclass(frozen=True)
class Weight2Config:
    code: cd.RankMetricCode
    profile: Sigma2Profile
    companion_w0: tuple  # weight distribution of L_{C^perp}


def search_weight2_configs(ctx, target_N: int, trials: int, seed: int,
                           budget: int | None = None) -> list[Weight2Config]:
    """Sample random (n-2)-dim subspaces; keep those missing Sigma and meeting Sigma_2 in target_N points."""
    n = ctx.n
    if n < 3:
        raise ValueError("need n >= 3")
    rng = np.random.default_rng(seed)
    found, seen = [], set()
    for _ in range(trials):
        M = rng.integers(0, ctx.order, size=(n - 2, n)).tolist()
        R, piv = linalg.rref(ctx, M)
        if len(piv) < n - 2:
            continue
        key = tuple(tuple(r) for r in R)
        basis = tuple(LinearizedPoly(ctx, tuple(r)) for r in R)
        C = cd.RankMetricCode(ctx, cd.Scalars.FQN, basis)
        prof = sigma2_profile(C, budget)
        if prof.sigma1_hits == 0 and prof.sigma2_hits == target_N and key not in seen:
            seen.add(key)
            comp = build_linear_set(cd.delsarte_dual(C).basis, hyperplanes=False)
            found.append(Weight2Config(C, prof, comp.w0))
    return found
