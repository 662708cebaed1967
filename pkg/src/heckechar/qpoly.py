"""Exact Laurent polynomials and rational functions in a single variable q.

Coefficients are Python ints or :class:`fractions.Fraction` (integral
fractions are stored as ints, which keeps the common case fast).  Both
classes are immutable and hashable.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, NotPolynomial, PoleAtPoint

Number = Union[int, Fraction]


def _norm(c) -> Number:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


def _parse_rational(s: str) -> Number:
    return _norm(Fraction(s))


def _fmt_rational(c: Number) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class LaurentPoly:
    """Finite sum of c_e q^e with e any integer; zero coefficients are never stored."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, Number] | Iterable[tuple[int, Number]] | None = None):
        t: dict[int, Number] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                c = _norm(c)
                if c:
                    e = int(e)
                    s = t.get(e, 0) + c
                    if s:
                        t[e] = s
                    else:
                        t.pop(e, None)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p._t = t
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        c = _norm(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "LaurentPoly":
        c = _norm(c)
        return cls._raw({e: c} if c else {})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        return cls.const(x)

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> dict[int, Number]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def is_one(self) -> bool:
        return len(self._t) == 1 and self._t.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    @property
    def min_exp(self) -> int:
        return min(self._t)

    @property
    def max_exp(self) -> int:
        return max(self._t)

    def coeff(self, e: int) -> Number:
        return self._t.get(e, 0)

    def leading_coeff(self) -> Number:
        return self._t[max(self._t)]

    def has_integer_coeffs(self) -> bool:
        return all(isinstance(c, int) for c in self._t.values())

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, RationalFn):
                return NotImplemented
            other = LaurentPoly.const(other)
        if len(self._t) < len(other._t):
            a, b = other._t, self._t
        else:
            a, b = self._t, other._t
        t = dict(a)
        for e, c in b.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, RationalFn):
                return NotImplemented
            other = LaurentPoly.const(other)
        t = dict(self._t)
        for e, c in other._t.items():
            s = t.get(e, 0) - c
            if s:
                t[e] = s
            else:
                del t[e]
        return LaurentPoly._raw(t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, RationalFn):
                return NotImplemented
            c = _norm(other)
            if not c:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: v * c for e, v in self._t.items()})
        a, b = self._t, other._t
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly._raw({ea + e: ca * c for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly._raw({eb + e: cb * c for e, c in a.items()})
        t: dict[int, Number] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                t[e] = t.get(e, 0) + ca * cb
        return LaurentPoly._raw({e: _norm(c) for e, c in t.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._t) != 1:
                raise NotPolynomial("negative power of a non-monomial Laurent polynomial")
            (e, c), = self._t.items()
            return LaurentPoly._raw({e * k: _norm(Fraction(1) / Fraction(c) ** (-k))})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return RationalFn(self, other)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def invert_q(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-e: c for e, c in self._t.items()})

    def evaluate(self, x) -> Number:
        x = _norm(x)
        if x == 0 and self._t and min(self._t) < 0:
            raise PoleAtPoint("negative power of q at q = 0")
        total = Fraction(0)
        for e, c in self._t.items():
            total += c * Fraction(x) ** e
        return _norm(total)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, RationalFn):
            return other == self
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a) if isinstance(a, int) else f"{a.numerator}/{a.denominator}"
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if a == 1:
                    body = mono
                elif isinstance(a, int):
                    body = f"{a}{mono}"
                else:
                    body = f"({a.numerator}/{a.denominator}){mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("-" if neg else "+") + body)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> list:
        return [[e, _fmt_rational(c)] for e, c in sorted(self._t.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), _parse_rational(c)) for e, c in data)


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly.const(0)


# -- dense polynomial helpers (ascending coefficient lists over Q) -------------

def _dense(p: LaurentPoly) -> list[Fraction]:
    lo = p.min_exp
    out = [Fraction(0)] * (p.max_exp - lo + 1)
    for e, c in p._t.items():
        out[e - lo] = Fraction(c)
    return out


def _sparse(coeffs: list[Fraction], shift: int = 0) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: _norm(c) for i, c in enumerate(coeffs) if c})


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_dense(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        quot[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return _trim(quot), _trim(a[:db])


def _gcd_dense(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


class RationalFn:
    """num/den with den != 0, kept in a canonical reduced form.

    Canonical form: num and den share no polynomial factor other than powers
    of q, den is a polynomial with nonzero constant term and leading
    coefficient 1.  Equality is therefore structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = LaurentPoly.coerce(num) if not isinstance(num, RationalFn) else num
        den = LaurentPoly.coerce(den) if not isinstance(den, RationalFn) else den
        if isinstance(num, RationalFn) or isinstance(den, RationalFn):
            num = RationalFn.coerce(num)
            den = RationalFn.coerce(den)
            n, d = num.num * den.den, num.den * den.num
        else:
            n, d = num, den
        self.num, self.den = _canonical(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RationalFn":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        r._hash = None
        return r

    @classmethod
    def coerce(cls, x) -> "RationalFn":
        if isinstance(x, RationalFn):
            return x
        return cls._raw(LaurentPoly.coerce(x), ONE)

    def is_poly(self) -> bool:
        return self.den.is_one()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def exact_poly(self) -> LaurentPoly:
        """Return the Laurent polynomial equal to self, or raise NotPolynomial."""
        if self.den.is_one():
            return self.num
        raise NotPolynomial(f"{self} is not a Laurent polynomial")

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = RationalFn.coerce(other)
        if self.den.is_one() and other.den.is_one():
            return RationalFn._raw(self.num + other.num, ONE)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other):
        return RationalFn.coerce(other) - self

    def __mul__(self, other):
        other = RationalFn.coerce(other)
        if self.den.is_one() and other.den.is_one():
            return RationalFn._raw(self.num * other.num, ONE)
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFn.coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFn(ONE) / (self ** (-k))
        return RationalFn._raw(self.num ** k, self.den ** k)

    def invert_q(self) -> "RationalFn":
        return RationalFn(self.num.invert_q(), self.den.invert_q())

    def evaluate(self, x) -> Number:
        x = _norm(x)
        try:
            d = self.den.evaluate(x)
        except PoleAtPoint:
            raise
        if d == 0:
            raise PoleAtPoint(f"denominator {self.den} vanishes at q = {x}")
        return _norm(Fraction(self.num.evaluate(x)) / d)

    # -- comparison / rendering ----------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFn):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (LaurentPoly, int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFn({self})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFn":
        return cls(LaurentPoly.from_json(data["num"]), LaurentPoly.from_json(data["den"]))


def _canonical(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return ZERO, ONE
    if den.is_monomial():
        (e, c), = den._t.items()
        if c == 1:
            return num.shift(-e), ONE
        inv = _norm(Fraction(1) / Fraction(c))
        return (num * inv).shift(-e), ONE
    sn, sd = num.min_exp, den.min_exp
    nd, dd = _dense(num), _dense(den)
    g = _gcd_dense(nd, dd)
    if len(g) > 1:
        nd, _ = _divmod_dense(nd, g)
        dd, _ = _divmod_dense(dd, g)
    lead = dd[-1]
    if lead != 1:
        nd = [c / lead for c in nd]
        dd = [c / lead for c in dd]
    if len(dd) == 1:
        return _sparse(nd, sn - sd), ONE
    return _sparse(nd, sn - sd), _sparse(dd)


# -- module-level operations ----------------------------------------------------

def poly_arith(a: LaurentPoly, b: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown kind {kind!r}")


def ratfn_arith(a, b, kind: str) -> RationalFn:
    a, b = RationalFn.coerce(a), RationalFn.coerce(b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown kind {kind!r}")


def exact_poly(a) -> LaurentPoly:
    if isinstance(a, LaurentPoly):
        return a
    return RationalFn.coerce(a).exact_poly()


@lru_cache(maxsize=None)
def f_coeff(p: int) -> LaurentPoly:
    """f_p with g^p = f_p g + q f_{p-1}; f_0 = 0, f_1 = 1, f_p = (q-1) f_{p-1} + q f_{p-2}."""
    if p < 0:
        raise ValueError("f_coeff needs p >= 0")
    if p == 0:
        return ZERO
    if p == 1:
        return ONE
    return (Q - 1) * f_coeff(p - 1) + Q * f_coeff(p - 2)


@lru_cache(maxsize=None)
def q_integer(x: int) -> RationalFn:
    """[x]_q = (q^x - 1)/(q - 1), valid for negative x as well."""
    if x >= 0:
        return RationalFn._raw(LaurentPoly._raw({i: 1 for i in range(x)}), ONE)
    return RationalFn._raw(LaurentPoly._raw({i: -1 for i in range(x, 0)}), ONE)


def specialize(p, q0) -> Number:
    """Evaluate a LaurentPoly or RationalFn at the rational point q0."""
    if isinstance(p, (int, Fraction)):
        return _norm(p)
    return p.evaluate(q0)


def dumps(p) -> str:
    return json.dumps(p.to_json(), separators=(",", ":"))


def loads(s: str):
    data = json.loads(s)
    if isinstance(data, dict):
        return RationalFn.from_json(data)
    return LaurentPoly.from_json(data)

