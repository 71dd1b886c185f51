import numpy as np
import pytest

from rankgeo import code as cd
from rankgeo import errors
from rankgeo import linalg
from rankgeo import linpoly as lp
from rankgeo import linset as ls
from rankgeo import macwilliams as mw
from rankgeo.field import make_field
from rankgeo.linpoly import LinearizedPoly


def mono(ctx, i, c=1):
    return LinearizedPoly.monomial(ctx, i, c)


def tr(ctx):
    return LinearizedPoly.trace_map(ctx)


def naive_points(fs):
    """Oracle: per-x loop with scalar normalization, weights from the subspace U cap <P>."""
    ctx = fs[0].ctx
    U = {}
    for x in ctx.nonzero():
        v = [lp.eval_raw(ctx, f.coeffs, x) for f in fs]
        P = linalg.normalize(ctx, v)
        if P is not None:
            U.setdefault(P, set()).add(tuple(v))
    out = {}
    for P, vecs in U.items():
        size = len(vecs) + 1
        out[P] = round(np.log(size) / np.log(ctx.q))
    return out


def test_gabidulin_line(F16):
    L = ls.build_linear_set([mono(F16, 0), mono(F16, 1)])
    assert L.size == 15 and set(L.points.values()) == {1}
    assert L.rank == 4
    assert L.w_hyp == (2, 15, 0, 0, 0)
    assert ls.classify(L).scattered


def test_x_tr_line(F16):
    L = ls.build_linear_set([mono(F16, 0), tr(F16)])
    assert ls.point_weight(L, (1, 0)) == 3
    assert sorted(L.points.values()) == [1] * 8 + [3]
    # weight-1 points are exactly (1 : c) with Tr(1/c) = 1
    ones = {P for P, w in L.points.items() if w == 1}
    assert ones == {(1, c) for c in F16.nonzero() if F16.trace(F16.inv(c)) == 1}
    assert (2**3 - 1) + 8 * (2 - 1) == 15
    assert ls.point_weight(L, (0, 1)) == 0
    with pytest.raises(errors.ZeroCovector):
        ls.point_weight(L, (0, 0))


def test_non_proper(F16):
    L = ls.build_linear_set([mono(F16, 0), mono(F16, 0)])
    assert L.points == {(1, 1): 4}


@pytest.mark.parametrize("p,n,k", [(2, 3, 2), (2, 4, 2), (2, 4, 3), (3, 3, 2), (2, 5, 2), (3, 3, 3)])
def test_points_vs_naive_and_partition(p, n, k):
    F = make_field(p, 1, n)
    rng = np.random.default_rng(21)
    for _ in range(6):
        C = cd.random_code(F, "big", k, rng)
        L = ls.build_linear_set(C.basis, hyperplanes=False)
        assert L.points == naive_points(C.basis)
        assert sum(F.q**w - 1 for w in L.points.values()) == F.q**L.rank - 1
        assert (L.rank == n) == cd.common_kernel_trivial(C)


def test_hyperplane_weights(F8):
    F = make_field(2, 1, 5)
    L1 = [mono(F, 0), mono(F, 1), tr(F)]
    assert ls.hyperplane_weight(L1, (0, 0, 1)) == 4
    assert ls.hyperplane_weight([mono(F8, 0), mono(F8, 1)], (1, 0)) == 0
    assert ls.hyperplane_weight([mono(F8, 0), mono(F8, 1)], (1, 1)) == 1
    with pytest.raises(errors.ZeroCovector):
        ls.hyperplane_weight(L1, (0, 0, 0))


@pytest.mark.parametrize("p,n,k", [(2, 3, 2), (2, 4, 2), (2, 4, 3), (3, 3, 2), (2, 5, 3)])
def test_hyperplane_identity(p, n, k):
    F = make_field(p, 1, n)
    rng = np.random.default_rng(4)
    for _ in range(5):
        C = cd.random_code(F, "big", k, rng, kernel_trivial=True)
        direct = ls.hyperplane_weight_distribution(C.basis)
        assert direct == ls.hyperplane_distribution_from_ranks(C.basis)
        assert sum(direct) == ls.num_points(F.order, k)
        if k == 2:
            L = ls.build_linear_set(C.basis)
            assert direct == L.w0


@pytest.mark.parametrize("q", [2, 3])
def test_plane_classification(q):
    F5 = make_field(q, 1, 5)
    F4 = make_field(q, 1, 4)
    L1 = ls.classify([mono(F5, 0), mono(F5, 1), tr(F5)])
    L2 = ls.classify([mono(F5, 0), mono(F5, 1), mono(F5, 2)])
    L3 = ls.classify([mono(F4, 0), mono(F4, 2), tr(F4)])
    assert L1.scattered and not L1.scattered_wrt_hyperplanes
    assert L2.scattered and L2.scattered_wrt_hyperplanes
    assert not L3.scattered and not L3.scattered_wrt_hyperplanes
    assert cd.is_mrd(cd.make_code(F5, "big", [mono(F5, 0), mono(F5, 1), mono(F5, 2)]))


def test_mrd_gives_hyperplane_scattered():
    for q, n, k in [(2, 4, 2), (2, 5, 3), (3, 4, 3)]:
        F = make_field(q, 1, n)
        fs = [mono(F, i) for i in range(k)]
        assert not any(ls.hyperplane_weight_distribution(fs)[k:])


def test_projection_examples(F16):
    r = ls.project_subgeometry(cd.make_code(F16, "big", [mono(F16, 0), mono(F16, 1)]))
    assert r.matches and r.weights_match and r.det
    F = make_field(2, 1, 5)
    r = ls.project_subgeometry(cd.make_code(F, "big", [mono(F, 0), mono(F, 1), mono(F, 2)]))
    assert r.matches and len(r.projected_points) == 31
    with pytest.raises(errors.CommonKernelNontrivial):
        # Tr and x + x^q both vanish at 1
        ls.project_subgeometry(cd.make_code(F16, "big", [tr(F16), LinearizedPoly(F16, (1, 1, 0, 0))]))


def test_projection_when_code_meets_its_dual(F16):
    """<x^q + x^q^3> is self-orthogonal, so the default complement is not skew."""
    f = LinearizedPoly(F16, (0, 1, 0, 1))
    g = mono(F16, 0)
    C = cd.make_code(F16, "big", [f, g])
    phi = [[lp.dot(a, b).value for a in C.basis] for b in C.basis]
    r = ls.project_subgeometry(C)
    assert r.matches and r.weights_match and r.det
    assert linalg.det(F16, phi) == 0
    assert r.g != C.basis


@pytest.mark.parametrize("p,n", [(2, 4), (2, 5), (3, 4)])
def test_projection_weight_oracle(p, n):
    """The number of beta landing on a projected point reproduces the point's weight."""
    F = make_field(p, 1, n)
    rng = np.random.default_rng(9)
    for _ in range(5):
        C = cd.random_code(F, "big", 2, rng, kernel_trivial=True)
        r = ls.project_subgeometry(C)
        assert r.weights_match
        L = ls.build_linear_set(C.basis, hyperplanes=False)
        assert sorted(r.projected_points.values()) == sorted(L.points.values())


def test_bw_examples(F16):
    r = ls.bw_check(cd.make_code(F16, "big", [mono(F16, 0), tr(F16)]))
    assert r == (7, 7, True) and mw.gauss(3, 2, 2) == 7
    r = ls.bw_check(cd.make_code(F16, "big", [mono(F16, 0), mono(F16, 1)]))
    assert r.lhs == r.rhs == 0
    assert mw.gauss(2, 2, 2) == mw.gauss(2, 2, 3) == 1
    with pytest.raises(errors.NotProper):
        # bypass make_code: (x, x) is dependent but spells out the one-point set
        ls.bw_check(cd.RankMetricCode(F16, cd.Scalars.FQN, (mono(F16, 0), mono(F16, 0))))


@pytest.mark.parametrize("p,n", [(2, 4), (2, 5), (3, 4)])
def test_bw_bridge_to_recursion(p, n):
    """R_2 = B_2/(q^n-1) and W_i = A_{n-i}/(q^n-1) turn the geometric identity into the recursive one."""
    F = make_field(p, 1, n)
    rng = np.random.default_rng(33)
    for _ in range(5):
        C = cd.random_code(F, "big", 2, rng, kernel_trivial=True)
        bw = ls.bw_check(C)
        A = cd.rank_distribution(C).A
        B = mw.dual_distribution(mw.DistributionVector(A, n, n, 2 * n), F.q)
        assert bw.lhs * (F.order - 1) == B[2]
        W = [A[n - i] // (F.order - 1) for i in range(n + 1)]
        assert bw.rhs == sum(W[i] * mw.gauss(i, 2, F.q) for i in range(2, n))
        assert mw.b2_identity(A, n, F.q).equal


def test_sigma2_profile(F16):
    assert ls.sigma2_profile(cd.make_code(F16, "big", [mono(F16, 2), mono(F16, 3)])) == (0, 0)
    D = cd.delsarte_dual(cd.make_code(F16, "big", [mono(F16, 0), tr(F16)]))
    assert ls.sigma2_profile(D) == (0, 7)
    assert ls.sigma2_profile(cd.make_code(F16, "big", [tr(F16), mono(F16, 1)])).sigma1_hits >= 1


def test_weight2_search(F16):
    assert ls.search_weight2_configs(F16, 0, 0, 1) == []
    found = ls.search_weight2_configs(F16, 0, 500, 1)
    assert found
    for c in found:
        assert ls.sigma2_profile(c.code) == c.profile == (0, 0)
        assert cd.is_mrd(c.code)
    again = ls.search_weight2_configs(F16, 0, 500, 1)
    assert [c.code.basis for c in again] == [c.code.basis for c in found]
    seven = ls.search_weight2_configs(F16, 7, 300, 2)
    for c in seven:
        assert ls.sigma2_profile(c.code) == (0, 7)
        # the companion carries exactly one point of weight 3 (one 3-club-like point)
        assert c.companion_w0[3] == 1
