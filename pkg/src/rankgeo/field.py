"""Exact arithmetic in F_{q^n}, q = p^e, with the subfield F_q as Frobenius fixed points.

Elements are encoded as integers ``v = sum(d_i * p**i)`` where ``d_i`` are the
coordinates in the power basis ``1, t, ..., t^(e*n-1)`` of the modulus root
``t``.  Hot loops work on these integers directly; :class:`FieldElement` wraps
an integer together with its context for the public, context-checked API.

Multiplication uses exp/log tables relative to a primitive element, addition
uses XOR in characteristic 2 and Zech logarithms otherwise.  Every table also
has a numpy twin so batched routines can operate on whole arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from .conway import CONWAY
from .errors import (
    BudgetExceeded,
    DivisionByZero,
    MixedContexts,
    NoDefaultModulus,
    NotPrime,
    ReducibleModulus,
)

DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    n: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def degree(self) -> int:
        return self.e * self.n

    @property
    def order(self) -> int:
        return self.p**self.degree


class FieldContext:
    """The tower F_p < F_q < F_{q^n} for one fixed modulus.

    Immutable after construction.  Attributes of interest:

    ``q``, ``n``, ``order`` (= q^n), ``generator`` (least primitive element in
    integer-encoding order), ``fq_power_basis`` (1, g, ..., g^(n-1)) and
    ``subfield`` (the q elements fixed by x -> x^q, zero first then in
    generator-power order).
    """

    def __init__(self, spec: FieldSpec, budget: int = DEFAULT_BUDGET):
        self.spec = spec
        self.p, self.e, self.n = spec.p, spec.e, spec.n
        self.q = spec.q
        self.degree = spec.degree
        self.order = spec.order
        self.modulus = spec.modulus
        self.budget = budget
        Q = self.order
        self._m = Q - 1

        self.generator = _least_primitive(spec)
        self._build_tables()

        # F_q* = <g^((Q-1)/(q-1))>
        step = self._m // (self.q - 1)
        self.subfield = (0,) + tuple(self._exp[step * i] for i in range(self.q - 1))
        self.fq_power_basis = tuple(self._exp[i] for i in range(self.n))
        self._dual_basis = self._trace_dual_basis()

    # ------------------------------------------------------------------ tables
    def _build_tables(self):
        p, d, Q, m = self.p, self.degree, self.order, self._m
        top = p ** (d - 1)
        low = self.modulus[:d]
        # reduction of c * t^d, i.e. -c * (m_0 + m_1 t + ... )
        red = [_encode([(-c * a) % p for a in low], p) for c in range(p)]
        add_raw = (lambda a, b: a ^ b) if p == 2 else (lambda a, b: _add_digits(a, b, p, d))

        def mul_t(v):
            hi, rest = divmod(v, top)
            return add_raw(rest * p, red[hi])

        gdig = _decode(self.generator, p, d)

        def mul_g(v):
            acc, cur = 0, v
            for c in gdig:
                if c:
                    term = cur
                    for _ in range(c - 1):
                        term = add_raw(term, cur)
                    acc = add_raw(acc, term)
                cur = mul_t(cur)
            return acc

        mul_step = mul_t if self.generator == p else mul_g
        exp = [0] * (2 * m)
        log = [-1] * Q
        v = 1
        for i in range(m):
            exp[i] = v
            log[v] = i
            v = mul_step(v)
        if v != 1 or exp[1:m].count(1):
            raise AssertionError("generator is not primitive")
        exp[m:] = exp[:m]
        self._exp, self._log = exp, log

        # zech[i] = log(1 + g^i), -1 when 1 + g^i = 0
        zech = [0] * m
        for i in range(m):
            x = exp[i]
            d0 = x % p
            y = x - d0 + (d0 + 1) % p
            zech[i] = log[y] if y else -1
        self._zech = zech
        self._neg_shift = 0 if p == 2 else m // 2
        self._qpow = [pow(self.q, i, m) for i in range(self.n)]

        self.exp_np = np.array(exp, dtype=np.int64)
        self.log_np = np.array([max(x, 0) for x in log], dtype=np.int64)
        self.zech_np = np.array(zech, dtype=np.int64)
        inv = [0] * Q
        for x in range(1, Q):
            inv[x] = exp[(m - log[x]) % m]
        self._inv = inv
        self.inv_np = np.array(inv, dtype=np.int64)

        if p == 2:
            self.add = self._add_xor
            self.sub = self._add_xor
        else:
            self.add = self._add_zech
            self.sub = self._sub_zech

    def _trace_dual_basis(self):
        from . import linalg

        b = self.fq_power_basis
        gram = [[self.trace(self.mul(x, y)) for y in b] for x in b]
        gi = linalg.inverse(self, gram)
        return tuple(
            _sum(self, [self.mul(gi[i][j], b[j]) for j in range(self.n)]) for i in range(self.n)
        )

    # ---------------------------------------------------------- scalar ops
    def _add_xor(self, a: int, b: int) -> int:
        return a ^ b

    def _add_zech(self, a: int, b: int) -> int:
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._m]
        return 0 if z < 0 else self._exp[la + z]

    def _sub_zech(self, a: int, b: int) -> int:
        return self._add_zech(a, self.neg(b))

    def neg(self, a: int) -> int:
        if not a or not self._neg_shift:
            return a
        return self._exp[self._log[a] + self._neg_shift]

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero("inverse of zero")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if not a:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self._m]

    def gpow(self, k: int) -> int:
        """g**k for the fixed generator g."""
        return self._exp[k % self._m]

    def log(self, a: int) -> int:
        if not a:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def frob(self, a: int, i: int = 1) -> int:
        """a**(q**i), i taken mod n."""
        if not a:
            return 0
        return self._exp[(self._log[a] * self._qpow[i % self.n]) % self._m]

    def trace(self, a: int) -> int:
        """Relative trace F_{q^n} -> F_q."""
        s = 0
        for i in range(self.n):
            s = self.add(s, self.frob(a, i))
        return s

    def in_subfield(self, a: int) -> bool:
        return self.frob(a, 1) == a

    def fq_coords(self, a: int) -> list[int]:
        """Coordinates of ``a`` in ``fq_power_basis`` (entries lie in F_q)."""
        return [self.trace(self.mul(a, d)) for d in self._dual_basis]

    def from_fq_coords(self, coords) -> int:
        return _sum(self, [self.mul(c, b) for c, b in zip(coords, self.fq_power_basis)])

    def digits(self, a: int) -> list[int]:
        return _decode(a, self.p, self.degree)

    def from_digits(self, digits) -> int:
        digits = list(digits)
        if len(digits) != self.degree or any(not 0 <= d < self.p for d in digits):
            raise ValueError(f"expected {self.degree} digits in [0, {self.p})")
        return _encode(digits, self.p)

    def element(self, a: int) -> FieldElement:
        return FieldElement(self, a)

    def elements(self):
        """All elements: zero, then generator powers g^0, g^1, ..."""
        yield 0
        yield from self._exp[: self._m]

    def nonzero(self):
        return self._exp[: self._m]

    def check_budget(self, size: int, what: str = "enumeration"):
        if size > self.budget:
            raise BudgetExceeded(f"{what} of size {size} exceeds budget {self.budget}")

    # ---------------------------------------------------------- numpy ops
    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self.exp_np[self.log_np[a] + self.log_np[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        la = self.log_np[a]
        z = self.zech_np[(self.log_np[b] - la) % self._m]
        r = np.where(z < 0, 0, self.exp_np[la + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, r))

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return np.where(a == 0, 0, self.exp_np[self.log_np[a] + self._neg_shift])

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vinv(self, a):
        return self.inv_np[np.asarray(a, dtype=np.int64)]

    def vfrob(self, a, i: int = 1):
        a = np.asarray(a, dtype=np.int64)
        r = self.exp_np[(self.log_np[a] * self._qpow[i % self.n]) % self._m]
        return np.where(a == 0, 0, r)

    def vtrace(self, a):
        s = np.zeros_like(np.asarray(a, dtype=np.int64))
        for i in range(self.n):
            s = self.vadd(s, self.vfrob(a, i))
        return s

    def __repr__(self):
        return f"FieldContext(p={self.p}, e={self.e}, n={self.n}, modulus={list(self.modulus)})"


class FieldElement:
    """An element of F_{q^n} bound to its context; supports + - * / ** and ``~``."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldContext, value: int):
        if not 0 <= value < ctx.order:
            raise ValueError(f"encoding {value} outside field of order {ctx.order}")
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx.spec != self.ctx.spec:
                raise MixedContexts("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            # prime-field embedding
            return other % self.ctx.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.div(o, self.value))

    def __pow__(self, k: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, k))

    def __invert__(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx.spec == other.ctx.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.p and self.value < self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.spec, self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def digits(self) -> list[int]:
        return self.ctx.digits(self.value)

    def __repr__(self):
        return f"FieldElement({self.digits})"


# ---------------------------------------------------------------- module API


@lru_cache(maxsize=None)
def make_field(p: int, e: int, n: int, modulus: tuple[int, ...] | None = None,
               budget: int = DEFAULT_BUDGET) -> FieldContext:
    """Build (and cache) the context for F_{q^n}, q = p**e.

    ``modulus`` is a little-endian coefficient sequence of a monic polynomial
    of degree e*n over F_p; when omitted the bundled Conway polynomial is used.
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or n < 2:
        raise ValueError("need e >= 1 and n >= 2")
    d = e * n
    if p**d > budget:
        raise BudgetExceeded(f"field order {p}^{d} exceeds budget {budget}")
    if modulus is None:
        try:
            modulus = CONWAY[(p, d)]
        except KeyError:
            raise NoDefaultModulus(f"no bundled Conway polynomial for p={p}, degree {d}") from None
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != d + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {d}")
    if not gf_irreducible_p(list(reversed(modulus)), p, ZZ):
        raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
    return FieldContext(FieldSpec(p, e, n, modulus), budget)


def frobenius(x: FieldElement, i: int) -> FieldElement:
    return FieldElement(x.ctx, x.ctx.frob(x.value, i))


def rel_trace(x: FieldElement) -> FieldElement:
    return FieldElement(x.ctx, x.ctx.trace(x.value))


def in_subfield(x: FieldElement) -> bool:
    return x.ctx.in_subfield(x.value)


def arith(x: FieldElement, y: FieldElement | int | None, op: str) -> FieldElement:
    """Dispatch helper: op in {add, sub, mul, div, inv, pow} (``y`` is the exponent for pow)."""
    if op == "inv":
        return ~x
    if op == "pow":
        return x**y
    return {"add": x.__add__, "sub": x.__sub__, "mul": x.__mul__, "div": x.__truediv__}[op](y)


# ---------------------------------------------------------------- helpers


def _encode(digits, p):
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _decode(v, p, d):
    out = []
    for _ in range(d):
        v, r = divmod(v, p)
        out.append(r)
    return out


def _add_digits(a, b, p, d):
    v, scale = 0, 1
    for _ in range(d):
        a, ra = divmod(a, p)
        b, rb = divmod(b, p)
        v += ((ra + rb) % p) * scale
        scale *= p
    return v


def _sum(ctx, xs):
    s = 0
    for x in xs:
        s = ctx.add(s, x)
    return s


def _least_primitive(spec: FieldSpec) -> int:
    p, d, Q = spec.p, spec.degree, spec.order
    mod = [ZZ(c) for c in reversed(spec.modulus)]
    cofactors = [(Q - 1) // r for r in factorint(Q - 1)]
    for v in range(2, Q):
        poly = [ZZ(c) for c in reversed(_decode(v, p, d))]
        while poly and poly[0] == 0:
            poly.pop(0)
        if gf_pow_mod(poly, Q - 1, mod, p, ZZ) != [1]:
            continue
        if all(gf_pow_mod(poly, c, mod, p, ZZ) != [1] for c in cofactors):
            return v
    raise AssertionError("no primitive element found")
