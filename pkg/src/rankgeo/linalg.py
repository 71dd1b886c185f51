"""Gaussian elimination over F_{q^n} on integer-encoded matrices.

Matrices are lists of row lists.  Because F_q is a subfield, the same routines
do linear algebra over F_q when every entry already lies in F_q.
"""

from __future__ import annotations

import numpy as np

from .errors import DivisionByZero


def rref(ctx, M):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    R = [list(r) for r in M]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    add, mul, neg, inv = ctx.add, ctx.mul, ctx.neg, ctx.inv
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        s = inv(R[r][c])
        if s != 1:
            R[r] = [mul(s, x) for x in R[r]]
        prow = R[r]
        for i in range(rows):
            if i != r and R[i][c]:
                f = neg(R[i][c])
                R[i] = [add(x, mul(f, y)) for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(ctx, M) -> int:
    """Rank by forward elimination only."""
    R = [list(r) for r in M if any(r)]
    if not R:
        return 0
    cols = len(R[0])
    add, mul, neg, inv = ctx.add, ctx.mul, ctx.neg, ctx.inv
    rk = 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[rk], R[piv] = R[piv], R[rk]
        prow = R[rk]
        s = inv(prow[c])
        for i in range(rk + 1, len(R)):
            if R[i][c]:
                f = neg(mul(R[i][c], s))
                R[i] = [add(x, mul(f, y)) for x, y in zip(R[i], prow)]
        rk += 1
        if rk == len(R):
            break
    return rk


def nullspace(ctx, M, ncols: int | None = None):
    """Basis of {v : M v = 0} (right kernel), as a list of vectors."""
    if ncols is None:
        ncols = len(M[0])
    if not M:
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(ctx, M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in enumerate(pivots):
            v[pc] = ctx.neg(R[row][fcol])
        basis.append(v)
    return basis


def inverse(ctx, M):
    k = len(M)
    aug = [list(row) + [1 if i == j else 0 for j in range(k)] for i, row in enumerate(M)]
    R, pivots = rref(ctx, aug)
    if pivots[:k] != list(range(k)):
        raise DivisionByZero("singular matrix")
    return [row[k:] for row in R]


def det(ctx, M):
    A = [list(r) for r in M]
    k = len(A)
    d = 1
    for c in range(k):
        piv = next((i for i in range(c, k) if A[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = ctx.neg(d)
        d = ctx.mul(d, A[c][c])
        s = ctx.inv(A[c][c])
        for i in range(c + 1, k):
            if A[i][c]:
                f = ctx.neg(ctx.mul(A[i][c], s))
                A[i] = [ctx.add(x, ctx.mul(f, y)) for x, y in zip(A[i], A[c])]
    return d


def vec_mat(ctx, v, M):
    """Row vector times matrix."""
    cols = len(M[0])
    out = [0] * cols
    for a, row in zip(v, M):
        if a:
            out = [ctx.add(o, ctx.mul(a, x)) for o, x in zip(out, row)]
    return out


def normalize(ctx, v):
    """Scale so the first nonzero entry is 1; returns a tuple. Zero vector -> None."""
    for x in v:
        if x:
            s = ctx.inv(x)
            return tuple(ctx.mul(s, y) for y in v)
    return None


def batched_rank(ctx, mats) -> np.ndarray:
    """Ranks of a stack of matrices, shape (B, r, c), via lockstep elimination."""
    A = np.array(mats, dtype=np.int64, copy=True)
    B, rows, cols = A.shape
    rk = np.zeros(B, dtype=np.int64)
    ridx = np.arange(rows)
    for c in range(cols):
        cand = (A[:, :, c] != 0) & (ridx[None, :] >= rk[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        tgt = rk[b]
        prow = A[b, piv].copy()
        A[b, piv] = A[b, tgt]
        A[b, tgt] = prow
        # scale pivot row to 1
        prow = ctx.vmul(prow, ctx.vinv(prow[:, c])[:, None])
        A[b, tgt] = prow
        # eliminate below the pivot row
        below = ridx[None, :] > tgt[:, None]
        f = np.where(below, A[b, :, c], 0)
        A[b] = ctx.vsub(A[b], ctx.vmul(f[:, :, None], prow[:, None, :]))
        rk[b] += 1
    return rk
