"""Gaussian binomials and the rank-metric MacWilliams recursion.

Everything works in two modes: integer mode (``q`` is a concrete int) and
symbolic mode (``q`` is :data:`Q`, the formal variable, and values are
:class:`IntPolynomial`).  All divisions are exact or raise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import InexactDivision, NegativeCount, NonPolynomialResult


class IntPolynomial:
    """Integer Laurent polynomial in q, stored as {exponent: coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms}
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def var(cls):
        return cls({1: 1})

    @staticmethod
    def coerce(x):
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return IntPolynomial(x)
        return NotImplemented

    def __add__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return IntPolynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (e, c), = self.terms.items()
                if c in (1, -1):
                    return IntPolynomial({e * k: c**k})
            raise NonPolynomialResult("negative power of a non-monomial")
        out = IntPolynomial(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, s: int) -> IntPolynomial:
        """Multiply by q**s (s may be negative)."""
        return IntPolynomial({e + s: c for e, c in self.terms.items()})

    def __eq__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    @property
    def low_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def is_polynomial(self) -> bool:
        return self.low_degree >= 0

    def divexact(self, other) -> IntPolynomial:
        """Exact quotient; raises InexactDivision when other does not divide self."""
        other = IntPolynomial.coerce(other)
        if not other:
            raise InexactDivision("division by the zero polynomial")
        if not self:
            return IntPolynomial()
        sa, sb = self.low_degree, other.low_degree
        num = self.shift(-sa).terms
        den = other.shift(-sb).terms
        db, lead = max(den), den[max(den)]
        num = dict(num)
        quot = {}
        while num:
            dn = max(num)
            if dn < db:
                raise InexactDivision("nonzero remainder")
            c, r = divmod(num[dn], lead)
            if r:
                raise InexactDivision("leading coefficient does not divide")
            quot[dn - db] = c
            for e, cc in den.items():
                k = e + dn - db
                v = num.get(k, 0) - c * cc
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return IntPolynomial(quot).shift(sa - sb)

    def __call__(self, q: int) -> int:
        """Evaluate at an integer; negative exponents must divide out exactly."""
        s = self.low_degree
        val = sum(c * q ** (e - min(s, 0)) for e, c in self.terms.items())
        if s < 0:
            d = q ** (-s)
            if val % d:
                raise InexactDivision(f"{self} is not an integer at q={q}")
            val //= d
        return val

    def coefficients(self) -> list[int]:
        """Ascending coefficient list (requires nonnegative exponents)."""
        if not self.is_polynomial():
            raise NonPolynomialResult(str(self))
        return [self.terms.get(e, 0) for e in range(self.degree + 1)]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"IntPolynomial({self})"


Q = IntPolynomial.var()
Value = Union[int, IntPolynomial]


def _symbolic(q) -> bool:
    return isinstance(q, IntPolynomial)


def _divexact(a: Value, b: Value) -> Value:
    if isinstance(a, IntPolynomial) or isinstance(b, IntPolynomial):
        return IntPolynomial.coerce(a).divexact(b)
    if b == 0 or a % b:
        raise InexactDivision(f"{b} does not divide {a}")
    return a // b


def _qpow(q: Value, s: int, value: Value) -> Value:
    """value * q**s, exactly."""
    if _symbolic(q):
        return IntPolynomial.coerce(value).shift(s)
    if s >= 0:
        return value * q**s
    return _divexact(value, q ** (-s))


def gauss(a: int, b: int, q: Value) -> Value:
    """Gaussian binomial [a choose b]_q; 0 outside 0 <= b <= a."""
    if b < 0 or b > a:
        return IntPolynomial() if _symbolic(q) else 0
    num = IntPolynomial(1) if _symbolic(q) else 1
    den = IntPolynomial(1) if _symbolic(q) else 1
    for i in range(b):
        num = num * (q ** (a - i) - 1)
        den = den * (q ** (i + 1) - 1)
    return _divexact(num, den)


@dataclass(frozen=True)
class DistributionVector:
    """Rank counts A_0..A_k of an F_q-linear code in Mat(k x m, F_q) with |C| = q**log_c."""

    entries: tuple
    k: int
    m: int
    log_c: int

    def __post_init__(self):
        ents = tuple(self.entries) + (0,) * (self.k + 1 - len(self.entries))
        if len(ents) > self.k + 1:
            raise ValueError(f"at most k+1={self.k + 1} entries allowed")
        object.__setattr__(self, "entries", ents)
        if ents[0] != 1:
            raise ValueError("A_0 must be 1")

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def evaluate(self, q: int) -> DistributionVector:
        ents = tuple(e(q) if isinstance(e, IntPolynomial) else e for e in self.entries)
        return DistributionVector(ents, self.k, self.m, self.log_c)


def dual_distribution(A: DistributionVector, q: Value) -> DistributionVector:
    """Rank distribution B of the Delsarte dual, by the MacWilliams recursion.

    a_v = q^(m v) / |C| * sum_{i=0}^{k-v} A_i [k-i choose v]
    B_0 = 1,  B_v = a_v - sum_{j<v} B_j [k-j choose v-j].
    """
    k, m, d = A.k, A.m, A.log_c
    symbolic = _symbolic(q)
    B = [IntPolynomial(1) if symbolic else 1]
    for v in range(1, k + 1):
        s = sum((A[i] * gauss(k - i, v, q) for i in range(k - v + 1)), IntPolynomial() if symbolic else 0)
        a_v = _qpow(q, m * v - d, s)
        b = a_v - sum((B[j] * gauss(k - j, v - j, q) for j in range(v)), IntPolynomial() if symbolic else 0)
        B.append(b)
    for v, b in enumerate(B):
        if symbolic:
            if not b.is_polynomial():
                raise NonPolynomialResult(f"B_{v} = {b} has negative exponents")
        elif b < 0:
            raise NegativeCount(f"B_{v} = {b} < 0: input is not a rank distribution")
    return DistributionVector(tuple(B), k, m, k * m - d)


def _entries(A):
    return A.entries if isinstance(A, DistributionVector) else tuple(A)


def _zero(q):
    return IntPolynomial() if _symbolic(q) else 0


def sum_identity_check(A, n: int, q: Value) -> bool:
    """sum_{i=1}^{n-1} A_i [n-i choose 1] == (q^n - 1) [n choose 1] for 2-dim F_{q^n}-linear codes."""
    A = _entries(A)
    lhs = sum((A[i] * gauss(n - i, 1, q) for i in range(1, n)), _zero(q))
    rhs = (q**n - 1) * gauss(n, 1, q)
    return lhs == rhs


def a_top_formula(A, n: int, q: Value) -> Value:
    """Closed form for A_{n-1} of a 2-dim F_{q^n}-linear code with a proper linear set."""
    A = _entries(A)
    head = _divexact((q**n - 1) * (q**n - 1), q - 1)
    s = sum((A[i] * gauss(n - i, 1, q) for i in range(n - 1)), _zero(q))
    return head - s + gauss(n, 1, q)


def _pair_dual(A, n, q):
    if not isinstance(A, DistributionVector):
        A = DistributionVector(tuple(A), n, n, 2 * n)
    return dual_distribution(A, q)


def b1_is_zero(A, n: int, q: Value) -> bool:
    return _pair_dual(A, n, q)[1] == 0


class Identity(NamedTuple):
    lhs: Value
    rhs: Value
    equal: bool


def b2_identity(A, n: int, q: Value) -> Identity:
    """B_2 from the recursion against sum_{i=1}^{n-2} A_i [n-i choose 2]."""
    lhs = _pair_dual(A, n, q)[2]
    ents = _entries(A)
    rhs = sum((ents[i] * gauss(n - i, 2, q) for i in range(1, n - 1)), _zero(q))
    return Identity(lhs, rhs, lhs == rhs)
