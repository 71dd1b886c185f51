import itertools

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rankgeo import errors
from rankgeo.field import FieldElement, arith, frobenius, in_subfield, make_field, rel_trace

SMALL = [(2, 1, 3), (2, 1, 4), (3, 1, 3), (2, 2, 2), (5, 1, 2), (3, 2, 2), (2, 1, 5)]


def brute_mul(ctx, a, b):
    """Schoolbook polynomial product of digit vectors, reduced by the modulus."""
    p, d = ctx.p, ctx.degree
    x, y = ctx.digits(a), ctx.digits(b)
    prod = [0] * (2 * d - 1)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            prod[i + j] = (prod[i + j] + xi * yj) % p
    mod = list(ctx.modulus)
    for top in range(2 * d - 2, d - 1, -1):
        c = prod[top]
        if c:
            for i in range(d + 1):
                prod[top - d + i] = (prod[top - d + i] - c * mod[i]) % p
    return ctx.from_digits(prod[:d])


def test_conway_f8():
    F = make_field(2, 1, 3)
    assert F.order == 8
    assert tuple(F.modulus) == (1, 1, 0, 1)
    assert sympy.Poly([1, 0, 1, 1], sympy.Symbol("t"), modulus=2).is_irreducible


def test_not_prime():
    with pytest.raises(errors.NotPrime):
        make_field(4, 1, 3)


def test_bad_parameters():
    with pytest.raises(errors.ReducibleModulus):
        make_field(2, 1, 3, (1, 0, 0, 1))  # t^3 + 1 = (t + 1)(t^2 + t + 1)
    with pytest.raises(errors.NoDefaultModulus):
        make_field(2, 1, 20)
    with pytest.raises(errors.BudgetExceeded):
        make_field(2, 1, 12, budget=2**10)
    with pytest.raises(ValueError):
        make_field(2, 1, 1)


def test_subfield_f4_in_f16():
    F = make_field(2, 2, 2)
    assert F.q == 4 and F.order == 16
    fixed = [x for x in F.elements() if F.pow(x, 4) == x]
    assert len(fixed) == 4
    assert sorted(fixed) == sorted(F.subfield)


@pytest.mark.parametrize("p,e,n", SMALL)
def test_generator_primitive_and_least(p, e, n):
    F = make_field(p, e, n)
    Q = F.order
    order = next(k for k in range(1, Q) if F.pow(F.generator, k) == 1)
    assert order == Q - 1
    # least by encoding (digits read as a base-p number, constant term lowest)
    for a in range(1, F.generator):
        assert any(F.pow(a, (Q - 1) // r) == 1 for r in sympy.primefactors(Q - 1))


@pytest.mark.parametrize("p,e,n", SMALL)
def test_mul_matches_schoolbook(p, e, n):
    F = make_field(p, e, n)
    els = list(range(F.order))
    for a, b in itertools.product(els[:40], els):
        assert F.mul(a, b) == brute_mul(F, a, b)


def test_t_times_t2_in_f8(F8):
    t, t2 = F8.from_digits([0, 1, 0]), F8.from_digits([0, 0, 1])
    assert F8.digits(F8.mul(t, t2)) == [1, 1, 0]
    assert F8.digits(F8.frob(t, 1)) == [0, 0, 1]


@pytest.mark.parametrize("p,e,n", SMALL)
def test_field_axioms(p, e, n):
    F = make_field(p, e, n)
    for x in F.nonzero():
        assert F.mul(x, F.inv(x)) == 1
    assert F.pow(F.generator, F.order - 1) == 1
    with pytest.raises(errors.DivisionByZero):
        F.inv(0)


@pytest.mark.parametrize("p,e,n", SMALL)
def test_frobenius_laws(p, e, n):
    F = make_field(p, e, n)
    for x in F.elements():
        assert F.frob(x, 0) == x
        assert F.frob(x, n) == x
        assert F.frob(x, 1) == F.pow(x, F.q)
        for i in range(n):
            for j in range(n):
                assert F.frob(x, i + j) == F.frob(F.frob(x, i), j)


@pytest.mark.parametrize("p,e,n", SMALL)
def test_trace_and_subfield_counts(p, e, n):
    F = make_field(p, e, n)
    assert sum(F.in_subfield(x) for x in F.elements()) == F.q
    assert sum(F.trace(x) == 0 for x in F.elements()) == F.q ** (n - 1)
    for x in F.elements():
        tr = 0
        for i in range(n):
            tr = F.add(tr, F.frob(x, i))
        assert F.trace(x) == tr
        assert F.in_subfield(F.trace(x))


@pytest.mark.parametrize("p,e,n", SMALL)
def test_fq_coordinates_roundtrip(p, e, n):
    F = make_field(p, e, n)
    seen = set()
    for x in F.elements():
        c = F.fq_coords(x)
        assert all(F.in_subfield(ci) for ci in c)
        assert F.from_fq_coords(c) == x
        seen.add(tuple(c))
    assert len(seen) == F.order


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_trace_is_fq_linear(pen, data):
    F = make_field(*pen)
    x = data.draw(st.integers(0, F.order - 1))
    y = data.draw(st.integers(0, F.order - 1))
    lam = data.draw(st.sampled_from(F.subfield))
    assert F.trace(F.add(F.mul(lam, x), y)) == F.add(F.mul(lam, F.trace(x)), F.trace(y))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_vector_ops_match_scalar(pen, data):
    import numpy as np

    F = make_field(*pen)
    xs = np.array(data.draw(st.lists(st.integers(0, F.order - 1), min_size=1, max_size=20)))
    ys = np.array(data.draw(st.lists(st.integers(0, F.order - 1), min_size=len(xs), max_size=len(xs))))
    assert F.vmul(xs, ys).tolist() == [F.mul(int(a), int(b)) for a, b in zip(xs, ys)]
    assert F.vadd(xs, ys).tolist() == [F.add(int(a), int(b)) for a, b in zip(xs, ys)]
    assert F.vsub(xs, ys).tolist() == [F.sub(int(a), int(b)) for a, b in zip(xs, ys)]
    assert F.vfrob(xs, 1).tolist() == [F.frob(int(a), 1) for a in xs]
    assert F.vtrace(xs).tolist() == [F.trace(int(a)) for a in xs]


def test_element_wrapper(F8):
    g = F8.element(F8.generator)
    assert g ** 7 == 1
    assert (g * ~g) == 1
    assert g / g == 1
    assert g - g == 0
    assert frobenius(g, 3) == g
    assert rel_trace(F8.element(1)) == 1
    assert in_subfield(F8.element(0)) and in_subfield(F8.element(1))
    assert arith(g, g, "mul") == g * g
    assert arith(g, None, "inv") == ~g
    with pytest.raises(errors.MixedContexts):
        g + make_field(2, 1, 4).element(2)
    with pytest.raises(errors.DivisionByZero):
        g / FieldElement(F8, 0)


def test_rel_trace_kernel_f16(F16):
    assert sum(F16.trace(x) == 0 for x in F16.elements()) == 8
