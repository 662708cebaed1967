"""Closed-form f-expansions for a reduced prefix times a Murphy hump.

The prefix is g_1 ... g_p with some generators ("cuts") removed; the hump is
(g_k)^{(p+r-k+1)} = g_k ... g_{p+r} ... g_k.  Everything reduces to the
no-overlap traces

    V(S, h) = tr(S . (g_h)^{(top-h+1)}),   max(S) < h,

which expand binomially.  These formulas are an optimisation and a test
surface; :mod:`heckechar.reduce` is the authoritative reducer.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable

from .errors import DoesNotFit, MalformedSpec
from .hecke import Word, hump
from .qpoly import ONE, Q, LaurentPoly, RationalFn, f_coeff
from .reduce import Lengths, ReducedTraceCombo, runs

_QM1 = Q - 1
_INV_QM1 = RationalFn(ONE, _QM1)

Terminal = tuple[frozenset, int]


def _acc(out: dict, key, c):
    if key in out:
        s = out[key] + c
        if s:
            out[key] = s
        else:
            del out[key]
    elif c:
        out[key] = c


@dataclass(frozen=True)
class CutSequenceSpec:
    """tr((g_1 ... g_p with cuts removed) (g_k)^{(p+r-k+1)})."""

    p: int
    cuts: tuple[int, ...]
    k: int
    r: int

    def __post_init__(self):
        cuts = tuple(self.cuts)
        if self.p < 1 or self.r < 1:
            raise MalformedSpec(f"need p >= 1 and r >= 1: {self}")
        if not 1 <= self.k <= self.p + 1:
            raise MalformedSpec(f"hump start k={self.k} outside 1..{self.p + 1}")
        if list(cuts) != sorted(set(cuts)) or any(not 1 <= m <= self.p - 1 for m in cuts):
            raise MalformedSpec(f"cuts must be strictly increasing inside 1..{self.p - 1}: {cuts}")
        object.__setattr__(self, "cuts", cuts)

    @property
    def prefix(self) -> frozenset:
        return frozenset(range(1, self.p + 1)) - set(self.cuts)

    @property
    def top(self) -> int:
        return self.p + self.r

    def word(self, n: int) -> Word:
        if n < self.top + 1:
            raise DoesNotFit(f"{self} needs n >= {self.top + 1}")
        return Word(sorted(self.prefix), n) + hump(self.k, self.top - self.k + 1, n)


# -- terminal expansion ------------------------------------------------------------

def expand_terminal(S: Iterable[int], h: int, top: int) -> dict[Lengths, RationalFn]:
    """tr(S (g_h)^{(r)}) = sum_l C(r-1,l) q^l (q-1)^{r-1-l} tr(S g_h ... g_{top-l})."""
    S = frozenset(S)
    r = top - h + 1
    if r < 1:
        raise MalformedSpec("empty hump")
    if S and max(S) >= h:
        raise MalformedSpec("terminal traces need the prefix strictly below the hump")
    out: dict[Lengths, RationalFn] = {}
    for l in range(r):
        c = LaurentPoly.monomial(l, comb(r - 1, l)) * _QM1 ** (r - 1 - l)
        _acc(out, runs(S | set(range(h, top - l + 1))), RationalFn(c))
    return out


def _V(S: frozenset, h: int, top: int) -> dict[Lengths, RationalFn]:
    return expand_terminal(S, h, top)


# -- overlap without cuts ----------------------------------------------------------

def overlap_coefficients(p: int, l: int) -> list[tuple[int, LaurentPoly]]:
    """tr((g_1..g_p)(g_l..g_{p+r}..g_l)) = sum_j c_j V_j, V_j = prefix cut at j (j=0: none)."""
    if not 1 <= l <= p + 1:
        raise MalformedSpec(f"overlap start l={l} outside 1..{p + 1}")
    out = [(0, f_coeff(2 * (p - l) + 3))]
    for j in range(1, p - l + 2):
        out.append((j, _QM1 * LaurentPoly.monomial(j) * f_coeff(2 * (p - l - j) + 3)))
    return out


# -- general cut reduction -----------------------------------------------------------

def _a1(p: int, S: frozenset, k: int) -> dict[Terminal, RationalFn]:
    return dict(_a1_cached(p, S, k))


@lru_cache(maxsize=None)
def _a1_cached(p: int, S: frozenset, k: int) -> tuple:
    """Reduce tr(S (g_k)^{(..)}), S a subset of 1..p, into terminals (S', p+1)."""
    out: dict[Terminal, RationalFn] = {}
    if k == p + 1:
        return (((S, p + 1), RationalFn(ONE)),)
    cuts = [i for i in range(1, p + 1) if i not in S]
    m = max(cuts) if cuts else 0
    if k > m:
        # the blocks below the last cut are spectators; expand the top block
        lower = frozenset(i for i in S if i < m)
        block = frozenset(range(m + 1, p + 1))
        for j, c in overlap_coefficients(p - m, k - m):
            key = (lower | (block - {m + j}) if j else S, p + 1)
            _acc(out, key, RationalFn(c))
    elif k == m:
        filled = S | {m}
        for key, c in _a1(p, filled, m).items():
            _acc(out, key, c * _INV_QM1)
        for key, c in _a1(p, filled, m + 1).items():
            _acc(out, key, -c * RationalFn(Q) * _INV_QM1)
    else:
        lower = frozenset(i for i in S if i < m)
        upper = frozenset(i for i in S if i > m)
        for (s_low, h), c in _a1(m - 1, lower, k).items():
            assert h == m
            for key, d in _a1(p, s_low | upper, m).items():
                _acc(out, key, c * d)
    return tuple(out.items())


def _expand(terminals: dict[Terminal, RationalFn], top: int) -> dict[Lengths, RationalFn]:
    out: dict[Lengths, RationalFn] = {}
    for (S, h), c in terminals.items():
        for lengths, v in _V(S, h, top).items():
            _acc(out, lengths, c * v)
    return out


def reduce_hump_product(spec: CutSequenceSpec, n: int | None = None) -> ReducedTraceCombo:
    """Reduced form of a cut sequence times a hump via the f-expansions."""
    n = spec.top + 1 if n is None else n
    if n < spec.top + 1:
        raise DoesNotFit(f"{spec} needs n >= {spec.top + 1}")
    terms = _expand(_a1(spec.p, spec.prefix, spec.k), spec.top)
    return ReducedTraceCombo.from_lengths(n, terms)


# -- named special cases --------------------------------------------------------------

def _combo(n: int, terms: dict[Lengths, object]) -> ReducedTraceCombo:
    return ReducedTraceCombo.from_lengths(n, terms)


def _ratio_pow(i: int) -> RationalFn:
    return RationalFn(_QM1 ** i, LaurentPoly.monomial(i))


def tr_hump(p: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)^{(p)}) = q^{p-1} sum_i C(p-1,i) ((q-1)/q)^i tr((g_1)_{i+1})."""
    n = n or p + 1
    out: dict = {}
    for i in range(p):
        _acc(out, (i + 1,), RationalFn(LaurentPoly.monomial(p - 1, comb(p - 1, i))) * _ratio_pow(i))
    return _combo(n, out)


def seq_times_hump(p: int, ell: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)_p (g_1)^{(ell)}) for ell > p, via f_{2p+1} and the cut traces."""
    if ell <= p:
        raise DoesNotFit("needs ell > p")
    n = n or ell + 1
    top = ell
    out: dict = {}
    full = frozenset(range(1, p + 1))
    for lengths, v in _V(full, p + 1, top).items():
        _acc(out, lengths, RationalFn(f_coeff(2 * p + 1)) * v)
    for j in range(1, p + 1):
        c = RationalFn(_QM1 * LaurentPoly.monomial(j) * f_coeff(2 * (p - j) + 1))
        for lengths, v in _V(full - {j}, p + 1, top).items():
            _acc(out, lengths, c * v)
    return _combo(n, out)


def seq2_times_hump(ell: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)_2 (g_1)^{(ell)}) with the three explicit terms."""
    if ell <= 2:
        raise DoesNotFit("needs ell > 2")
    n = n or ell + 1
    out: dict = {}
    pieces = [
        (RationalFn(f_coeff(5)), frozenset({1, 2}), 3),
        (RationalFn(Q * _QM1 * f_coeff(3)), frozenset({1}), 2),
        (RationalFn(Q ** 2 * _QM1), frozenset({1}), 3),
    ]
    for c, S, h in pieces:
        # (g_1)(g_2)^{(ell-2)} reaches g_{ell-1}; the others reach g_ell
        top = h + ell - 3
        for lengths, v in _V(S, h, top).items():
            _acc(out, lengths, c * v)
    return _combo(n, out)


def seq_times_adjacent_hump(ell: int, m: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)_{ell-1} (g_ell)^{(m+1)}) = q^m sum_i C(m,i) ((q-1)/q)^i tr((g_1)_{ell+i})."""
    if ell < 1 or m < 0:
        raise DoesNotFit("needs ell >= 1 and m >= 0")
    n = n or ell + m + 1
    out: dict = {}
    for i in range(m + 1):
        _acc(out, (ell + i,), RationalFn(LaurentPoly.monomial(m, comb(m, i))) * _ratio_pow(i))
    return _combo(n, out)


def seq_times_overlapping_hump(ell: int, m: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)_ell (g_ell)^{(m+1)}).

    For m >= 1 this is q^m sum_i {(q-1) C(m,i) + q/(q-1) C(m-1,i-1)} ((q-1)/q)^i
    tr((g_1)_{ell+i}); for m = 0 it is the quadratic relation.
    """
    if ell < 1 or m < 0:
        raise DoesNotFit("needs ell >= 1 and m >= 0")
    n = n or ell + m + 1
    out: dict = {}
    if m == 0:
        _acc(out, (ell,), RationalFn(_QM1))
        _acc(out, (ell - 1,) if ell > 1 else (), RationalFn(Q))
        return _combo(n, out)
    for i in range(m + 1):
        brace = RationalFn(_QM1 * comb(m, i))
        if i >= 1:
            brace = brace + RationalFn(Q * comb(m - 1, i - 1), _QM1)
        _acc(out, (ell + i,), RationalFn(LaurentPoly.monomial(m)) * brace * _ratio_pow(i))
    return _combo(n, out)


def seq_times_seq_tail(ell: int, m: int, variant: str, n: int | None = None) -> ReducedTraceCombo:
    if variant == "touching":
        return seq_times_adjacent_hump(ell, m, n)
    if variant == "overlapping_one":
        return seq_times_overlapping_hump(ell, m, n)
    raise ValueError(f"unknown variant {variant!r}")


def seq_tail_word(ell: int, m: int, variant: str, n: int) -> Word:
    if variant == "touching":
        return Word(range(1, ell), n) + hump(ell, m + 1, n)
    return Word(range(1, ell + 1), n) + hump(ell, m + 1, n)


def seq3_times_shifted_hump(k: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1)_3 (g_2)^{(k)}), k > 2."""
    if k <= 2:
        raise DoesNotFit("needs k > 2")
    n = n or k + 2
    top = k + 1
    out: dict = {}
    pieces = [
        (RationalFn(f_coeff(5)), frozenset({1, 2, 3}), 4, top),
        (RationalFn(Q * _QM1 * f_coeff(3)), frozenset({1, 2}), 3, top - 1),
        (RationalFn(Q ** 2 * _QM1), frozenset({1, 3}), 4, top),
    ]
    for c, S, h, t in pieces:
        for lengths, v in _V(S, h, t).items():
            _acc(out, lengths, c * v)
    return _combo(n, out)


def overlap_no_cut(p: int, l: int, r: int, n: int | None = None) -> ReducedTraceCombo:
    """tr((g_1..g_p)(g_l..g_{p+r}..g_l)) from the f_{2(p-l-j)+3} closed form."""
    n = n or p + r + 1
    full = frozenset(range(1, p + 1))
    out: dict = {}
    for j, c in overlap_coefficients(p, l):
        for lengths, v in _V(full - {j} if j else full, p + 1, p + r).items():
            _acc(out, lengths, RationalFn(c) * v)
    return _combo(n, out)


def hump_prefix_expansion(s: int, p: int, r: int, n: int | None = None) -> ReducedTraceCombo:
    """A_s = tr((g_1..g_s..g_1)(g_1..g_p)(g_{p+1})^{(r)})
    = f_{2s} V_0 + (q-1) sum_{m=1}^{s-1} q^m f_{2(s-m)} V_m + q^s V_s."""
    if not 1 <= s <= p:
        raise DoesNotFit("needs 1 <= s <= p")
    n = n or p + r + 1
    full = frozenset(range(1, p + 1))
    coeffs = [(0, f_coeff(2 * s))]
    coeffs += [(m, _QM1 * LaurentPoly.monomial(m) * f_coeff(2 * (s - m))) for m in range(1, s)]
    coeffs.append((s, LaurentPoly.monomial(s)))
    out: dict = {}
    for j, c in coeffs:
        for lengths, v in _V(full - {j} if j else full, p + 1, p + r).items():
            _acc(out, lengths, RationalFn(c) * v)
    return _combo(n, out)


def hump_prefix_word(s: int, p: int, r: int, n: int) -> Word:
    return hump(1, s, n) + Word(range(1, p + 1), n) + hump(p + 1, r, n)


def seq_prefix_expansion(k: int, p: int, r: int, n: int | None = None) -> ReducedTraceCombo:
    """B_k = tr((g_1..g_k)(g_1..g_p)(g_{p+1})^{(r)}) from the even/odd closed forms."""
    n = n or p + r + 1
    full = frozenset(range(1, p + 1))
    half, odd = divmod(k, 2)
    if odd:
        coeffs = [(0, f_coeff(2 * half + 2))]
        coeffs += [(m, _QM1 * LaurentPoly.monomial(m) * f_coeff(2 * (half - m + 1))) for m in range(1, half + 1)]
        coeffs.append((half + 1, LaurentPoly.monomial(half + 1)))
    else:
        coeffs = [(0, f_coeff(2 * half + 1))]
        coeffs += [(m, _QM1 * LaurentPoly.monomial(m) * f_coeff(2 * (half - m) + 1)) for m in range(1, half + 1)]
    if max(j for j, _ in coeffs) > p:
        raise DoesNotFit("cut position beyond the prefix")
    out: dict = {}
    for j, c in coeffs:
        for lengths, v in _V(full - {j} if j else full, p + 1, p + r).items():
            _acc(out, lengths, RationalFn(c) * v)
    return _combo(n, out)


def seq_prefix_word(k: int, p: int, r: int, n: int) -> Word:
    return Word(range(1, k + 1), n) + Word(range(1, p + 1), n) + hump(p + 1, r, n)
