"""Arithmetic in H_n(q) on the permutation (T-) basis.

Basis rule, derived from g_i^2 = (q-1) g_i + q:

    T_w g_i = T_{w s_i}                     if l(w s_i) > l(w)
            = (q-1) T_w + q T_{w s_i}       otherwise

and symmetrically on the left.  Permutations are one-line tuples; s_i x
swaps the values i and i+1, x s_i swaps positions i and i+1.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

import numpy as np

from . import kernel
from .errors import AmbientMismatch, IndexOutOfRange
from .qpoly import ONE, Q, LaurentPoly, RationalFn

DEFAULT_CAP = 7
HARD_CAP = 8

_QM1 = RationalFn(Q - 1)
_Q = RationalFn(Q)


class Permutation(tuple):
    """One-line notation (images of 1..n)."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    @property
    def length(self) -> int:
        return sum(1 for i in range(len(self)) for j in range(i + 1, len(self)) if self[i] > self[j])

    def compose(self, other: "Permutation") -> "Permutation":
        """(self o other)(j) = self(other(j))."""
        return tuple.__new__(Permutation, (self[other[j] - 1] for j in range(len(self))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for j, v in enumerate(self):
            inv[v - 1] = j + 1
        return tuple.__new__(Permutation, inv)

    def left_descent(self, i: int) -> bool:
        """l(s_i self) < l(self): i+1 appears before i."""
        return self.index(i + 1) < self.index(i)

    def right_descent(self, i: int) -> bool:
        return self[i - 1] > self[i]

    def left_mul(self, i: int) -> "Permutation":
        """s_i self."""
        return tuple.__new__(Permutation, (i + 1 if v == i else i if v == i + 1 else v for v in self))

    def right_mul(self, i: int) -> "Permutation":
        """self s_i."""
        t = list(self)
        t[i - 1], t[i] = t[i], t[i - 1]
        return tuple.__new__(Permutation, t)

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word (peel the smallest left descent)."""
        return _reduced_word(tuple(self))

    def to_str(self) -> str:
        return "".join(map(str, self)) if len(self) < 10 else ",".join(map(str, self))


@lru_cache(maxsize=None)
def _reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    p = tuple.__new__(Permutation, w)
    out = []
    while True:
        for i in range(1, len(p)):
            if p.left_descent(i):
                out.append(i)
                p = p.left_mul(i)
                break
        else:
            return tuple(out)


@dataclass(frozen=True)
class Word:
    """A product of generators g_{i_1} ... g_{i_k} in H_n(q)."""

    indices: tuple[int, ...]
    n: int

    def __init__(self, indices: Iterable[int], n: int):
        idx = tuple(int(i) for i in indices)
        for i in idx:
            if not 1 <= i <= n - 1:
                raise IndexOutOfRange(f"generator g_{i} not in H_{n}(q)")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "n", int(n))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __add__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise AmbientMismatch("words live in different algebras")
        return Word(self.indices + other.indices, self.n)

    @classmethod
    def parse(cls, s: str, n: int) -> "Word":
        s = s.strip()
        if not s:
            return cls((), n)
        return cls((int(x) for x in s.split(",")), n)

    def to_str(self) -> str:
        return ",".join(map(str, self.indices))


def asc_seq(i: int, length: int, n: int) -> Word:
    """(g_i)_l = g_i g_{i+1} ... g_{i+l-1}."""
    return Word(range(i, i + length), n)


def hump(i: int, length: int, n: int) -> Word:
    """(g_i)^{(l)} = g_i ... g_{i+l-1} ... g_i."""
    up = list(range(i, i + length))
    return Word(up + up[-2::-1], n)


# -- per-n lookup tables --------------------------------------------------------

@dataclass(frozen=True)
class BasisTables:
    n: int
    perms: tuple[Permutation, ...]
    index: Mapping[tuple, int]
    lmul: np.ndarray   # lmul[i-1, x] = index of s_i x
    ldesc: np.ndarray  # ldesc[i-1, x] = s_i is a left descent of x


@lru_cache(maxsize=None)
def basis_tables(n: int) -> BasisTables:
    if n > HARD_CAP:
        raise IndexOutOfRange(f"n = {n} exceeds the hard cap {HARD_CAP}")
    perms = tuple(tuple.__new__(Permutation, p) for p in permutations(range(1, n + 1)))
    index = {p: k for k, p in enumerate(perms)}
    lmul = np.zeros((max(n - 1, 0), len(perms)), dtype=np.intc)
    ldesc = np.zeros((max(n - 1, 0), len(perms)), dtype=np.uint8)
    for k, p in enumerate(perms):
        pos = {v: j for j, v in enumerate(p)}
        for i in range(1, n):
            lmul[i - 1, k] = index[p.left_mul(i)]
            ldesc[i - 1, k] = pos[i + 1] < pos[i]
    return BasisTables(n, perms, index, lmul, ldesc)


# -- elements -------------------------------------------------------------------

class HeckeElement:
    """Finite combination sum_w c_w T_w with RationalFn coefficients."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        t = {}
        if terms:
            for w, c in terms.items():
                w = w if isinstance(w, Permutation) else Permutation(w)
                if len(w) != n:
                    raise AmbientMismatch(f"{w} is not a permutation of {n} letters")
                c = RationalFn.coerce(c)
                if c:
                    t[w] = t[w] + c if w in t else c
                    if not t[w]:
                        del t[w]
        self._t = t

    @classmethod
    def _raw(cls, n: int, t: dict) -> "HeckeElement":
        h = object.__new__(cls)
        h.n = n
        h._t = t
        return h

    @classmethod
    def identity(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {Permutation.identity(n): RationalFn(ONE)})

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls._raw(n, {})

    @classmethod
    def basis(cls, w: Permutation) -> "HeckeElement":
        return cls._raw(len(w), {Permutation(w): RationalFn(ONE)})

    @property
    def terms(self) -> dict[Permutation, RationalFn]:
        return dict(self._t)

    def coeff(self, w) -> RationalFn:
        return self._t.get(tuple(w), RationalFn(0))

    def __len__(self):
        return len(self._t)

    def _check(self, other: "HeckeElement"):
        if self.n != other.n:
            raise AmbientMismatch(f"H_{self.n}(q) vs H_{other.n}(q)")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        t = dict(self._t)
        for w, c in other._t.items():
            s = t[w] + c if w in t else c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        return HeckeElement._raw(self.n, t)

    def __neg__(self):
        return HeckeElement._raw(self.n, {w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = RationalFn.coerce(c)
        if not c:
            return HeckeElement.zero(self.n)
        return HeckeElement._raw(self.n, {w: v * c for w, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._t == other._t

    def __hash__(self):
        return hash((self.n, frozenset(self._t.items())))

    def __repr__(self):
        parts = [f"({c})*T[{w.to_str()}]" for w, c in sorted(self._t.items())]
        return f"HeckeElement(n={self.n}: " + (" + ".join(parts) or "0") + ")"

    def specialize(self, q0) -> dict[Permutation, object]:
        out = {}
        for w, c in self._t.items():
            v = c.evaluate(q0)
            if v:
                out[w] = v
        return out

    def to_json(self) -> dict:
        return {w.to_str(): c.to_json() for w, c in sorted(self._t.items())}

    @classmethod
    def from_json(cls, n: int, data: Mapping) -> "HeckeElement":
        t = {}
        for k, v in data.items():
            images = [int(x) for x in (k.split(",") if "," in k else k)]
            t[Permutation(images)] = RationalFn.from_json(v)
        return cls(n, t)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _add_into(t: dict, w, c):
    if w in t:
        s = t[w] + c
        if s:
            t[w] = s
        else:
            del t[w]
    else:
        t[w] = c


def mul_by_generator(h: HeckeElement, i: int, side: str = "right") -> HeckeElement:
    if not 1 <= i <= h.n - 1:
        raise IndexOutOfRange(f"generator g_{i} not in H_{h.n}(q)")
    t: dict = {}
    if side == "right":
        for w, c in h._t.items():
            ws = w.right_mul(i)
            if w[i - 1] < w[i]:
                _add_into(t, ws, c)
            else:
                _add_into(t, w, c * _QM1)
                _add_into(t, ws, c * _Q)
    elif side == "left":
        for w, c in h._t.items():
            sw = w.left_mul(i)
            if w.left_descent(i):
                _add_into(t, w, c * _QM1)
                _add_into(t, sw, c * _Q)
            else:
                _add_into(t, sw, c)
    else:
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return HeckeElement._raw(h.n, t)


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    out = HeckeElement.zero(a.n)
    for w, c in b._t.items():
        part = a
        for i in w.reduced_word():
            part = mul_by_generator(part, i, "right")
        out = out + part.scale(c)
    return out


def word_to_element(w: Word) -> HeckeElement:
    h = HeckeElement.identity(w.n)
    for i in w.indices:
        h = mul_by_generator(h, i, "right")
    return h


def generator(i: int, n: int) -> HeckeElement:
    return word_to_element(Word((i,), n))


def murphy_op(p: int, n: int) -> HeckeElement:
    """L_p = sum_{i=1}^{p-1} q^{-(p-1-i)} (g_i)^{(p-i)}."""
    if not 2 <= p <= n:
        raise IndexOutOfRange(f"L_{p} is not defined in H_{n}(q)")
    out = HeckeElement.zero(n)
    for i in range(1, p):
        out = out + word_to_element(hump(i, p - i, n)).scale(LaurentPoly.monomial(-(p - 1 - i)))
    return out


def fundamental_invariant(n: int) -> HeckeElement:
    """C_n = L_2 + ... + L_n."""
    if n < 2:
        raise IndexOutOfRange("C_n needs n >= 2")
    out = HeckeElement.zero(n)
    for p in range(2, n + 1):
        out = out + murphy_op(p, n)
    return out


# -- regular-representation trace ------------------------------------------------

@lru_cache(maxsize=None)
def _word_trace(word: tuple[int, ...], n: int) -> LaurentPoly:
    tb = basis_tables(n)
    coeffs = kernel.word_trace(word, tb.lmul, tb.ldesc)
    return LaurentPoly(enumerate(coeffs))


def word_regular_trace(w: Word | Iterable[int], n: int | None = None) -> LaurentPoly:
    """Trace of left multiplication by a generator word on the n!-dim basis."""
    if isinstance(w, Word):
        return _word_trace(w.indices, w.n)
    return _word_trace(Word(w, n).indices, n)


def regular_trace(h: HeckeElement) -> RationalFn:
    """sum_x [T_x](h T_x), via linearity over the T-basis."""
    total = RationalFn(0)
    for w, c in h._t.items():
        total = total + c * RationalFn(_word_trace(w.reduced_word(), h.n))
    return total


def regular_trace_direct(h: HeckeElement) -> RationalFn:
    """Definitional version: builds h T_x for every basis element (small n only)."""
    total = RationalFn(0)
    for x in basis_tables(h.n).perms:
        total = total + multiply(h, HeckeElement.basis(x)).coeff(x)
    return total


def regular_trace_at(w: Word, q0) -> object:
    """Regular trace of a word at the rational point q0."""
    return word_regular_trace(w).evaluate(q0)


def random_word(n: int, length: int, rng: random.Random) -> Word:
    return Word((rng.randint(1, n - 1) for _ in range(length)), n)
