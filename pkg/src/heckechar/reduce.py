"""Reduction of tr(g_{i_1} ... g_{i_k}) to a combination of reduced traces.

A reduced trace is the trace of a product of disjoint connected sequences;
its value in every irrep depends only on the multiset of sequence lengths
(the cycle type), so results are keyed by sorted length tuples.

Rewriting proceeds level by level.  At level l the trace has the form
tr(phi W) with phi an increasing product of distinct generators below l and
W made of generators >= l.  If g_l occurs at least twice in W, W is rotated
so that it starts with g_l and the segment between the first two g_l is
simplified:

* no g_{l+1} inside: commute and apply g^2 = (q-1) g + q;
* exactly one g_{l+1}: carry the g_l's next to it and braid;
* otherwise: simplify the leftmost g_{l+1} ... g_{l+1} segment the same way.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DoesNotFit, NotSquareFree
from .hecke import Word
from .qpoly import ONE, Q, LaurentPoly, RationalFn
from .young import CycleType

_QM1 = Q - 1

Lengths = tuple[int, ...]


def runs(indices: Iterable[int]) -> Lengths:
    """Sorted lengths of maximal runs of consecutive integers in a set."""
    s = sorted(indices)
    out = []
    k = 0
    while k < len(s):
        j = k
        while j + 1 < len(s) and s[j + 1] == s[j] + 1:
            j += 1
        out.append(j - k + 1)
        k = j + 1
    return tuple(sorted(out))


def lengths_size(lengths: Lengths) -> int:
    return sum(x + 1 for x in lengths)


@dataclass(frozen=True)
class ReducedTraceCombo:
    """sum_c coeff_c tr(representative(c)), valid in every irrep of H_n(q)."""

    n: int
    terms: Mapping[CycleType, RationalFn]

    @classmethod
    def from_lengths(cls, n: int, terms: Mapping[Lengths, object]) -> "ReducedTraceCombo":
        t = {}
        for lengths, c in terms.items():
            c = RationalFn.coerce(c)
            if c:
                t[CycleType(lengths, n)] = c
        return cls(n, dict(sorted(t.items(), key=lambda kv: sweep_key(kv[0].seq_lengths))))

    def by_lengths(self) -> dict[Lengths, RationalFn]:
        return {c.seq_lengths: v for c, v in self.terms.items()}

    def __eq__(self, other):
        if not isinstance(other, ReducedTraceCombo):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self) -> dict[str, str]:
        return {c.key(): str(v) for c, v in self.terms.items()}

    def combine(self, values: Mapping[Lengths, object]) -> RationalFn:
        """Evaluate sum_c coeff_c values[c]."""
        total = RationalFn(0)
        for c, v in self.terms.items():
            total = total + v * RationalFn.coerce(values[c.seq_lengths])
        return total


def sweep_key(lengths: Lengths) -> tuple:
    """Ascending total generator count, then lexicographic on sorted lengths."""
    return (sum(lengths), tuple(sorted(lengths)))


def canonical_cycle_type(w: Word) -> CycleType:
    idx = w.indices
    if len(set(idx)) != len(idx):
        raise NotSquareFree(f"word {w.to_str()} repeats a generator")
    return CycleType(runs(idx), w.n)


def representative_indices(lengths: Lengths) -> tuple[int, ...]:
    """(g_1)_{l_1} (g_{l_1+2})_{l_2} ... with lengths ascending and minimal gaps."""
    out = []
    start = 1
    for ell in sorted(lengths):
        out.extend(range(start, start + ell))
        start += ell + 1
    return tuple(out)


def representative_word(c: CycleType) -> Word:
    if c.size > c.n:
        raise DoesNotFit(f"{c.key()} does not fit in H_{c.n}(q)")
    return Word(representative_indices(c.seq_lengths), c.n)


# -- trace-equivalence key ------------------------------------------------------------

def _lex_normal(w: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest word reachable by commuting far-apart letters."""
    rest = list(w)
    out = []
    while rest:
        best = None
        blocked: set[int] = set()
        for k, a in enumerate(rest):
            if a not in blocked and (best is None or a < rest[best]):
                best = k
            blocked.update((a - 1, a, a + 1))
        out.append(rest.pop(best))
    return tuple(out)


def trace_key(w: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal representative over cyclic rotations followed by commutations."""
    if len(w) < 2:
        return tuple(w)
    return min(_lex_normal(w[k:] + w[:k]) for k in range(len(w)))


# -- the rewriting engine ------------------------------------------------------------

class TraceReducer:
    """Memoized reduction of words under the trace.

    The cache maps trace keys to {lengths: LaurentPoly}; entries are
    canonical, so concurrent writers can only ever store equal values.
    """

    def __init__(self):
        self._memo: dict[tuple[int, ...], dict[Lengths, LaurentPoly]] = {}

    def __len__(self):
        return len(self._memo)

    def clear(self):
        self._memo.clear()

    def reduce(self, word: Iterable[int]) -> dict[Lengths, LaurentPoly]:
        w = tuple(word)
        if len(set(w)) == len(w):
            return {runs(w): ONE}
        key = trace_key(w)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._reduce(key)
        self._memo[key] = out
        return out

    def _reduce(self, w: tuple[int, ...]) -> dict[Lengths, LaurentPoly]:
        phi: list[int] = []
        rest = list(w)
        level = 1
        top = max(rest)
        while level <= top:
            pos = [k for k, a in enumerate(rest) if a == level]
            if len(pos) == 1:
                p = pos[0]
                phi.append(level)
                rest = rest[p + 1:] + rest[:p]
            elif len(pos) >= 2:
                p = pos[0]
                rest = rest[p:] + rest[:p]
                second = pos[1] - p
                out: dict[Lengths, LaurentPoly] = {}
                for coef, new in _simplify_segment(tuple(rest), 0, second, level):
                    for lengths, c in self.reduce(tuple(phi) + new).items():
                        s = out.get(lengths)
                        s = c * coef if s is None else s + c * coef
                        if s:
                            out[lengths] = s
                        else:
                            out.pop(lengths, None)
                return out
            level += 1
        raise AssertionError("square-free words are handled before _reduce")


def _simplify_segment(w: tuple[int, ...], a: int, b: int, j: int) -> list[tuple[LaurentPoly, tuple[int, ...]]]:
    """One rewrite of g_j X g_j = w[a..b], where every letter of X exceeds j."""
    pos = [k for k in range(a + 1, b) if w[k] == j + 1]
    if not pos:
        # X commutes with g_j
        return [
            (_QM1, w[:b] + w[b + 1:]),
            (Q, w[:a] + w[a + 1:b] + w[b + 1:]),
        ]
    if len(pos) == 1:
        r = pos[0]
        return [(ONE, w[:a] + w[a + 1:r] + (j + 1, j, j + 1) + w[r + 1:b] + w[b + 1:])]
    return _simplify_segment(w, pos[0], pos[1], j + 1)


_default = TraceReducer()


def default_reducer() -> TraceReducer:
    return _default


def reduce_trace(w: Word, reducer: TraceReducer | None = None) -> ReducedTraceCombo:
    """tr(w) = sum_c coeff_c tr(representative(c)) in every irrep of H_n(q)."""
    red = reducer or _default
    return ReducedTraceCombo.from_lengths(w.n, red.reduce(w.indices))


sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
