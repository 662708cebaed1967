"""Irrep traces of Murphy-operator products by summing over Young-lattice chains.

Murphy operators act diagonally on the chain (Young) basis of each irrep:
L_k multiplies the vector of a chain by q[c]_q, where c is the content of the
box added at step k.  A trace is therefore a sum over chains, which is
accumulated level by level without building any matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .errors import InvalidProduct, SizeMismatch
from .qpoly import RationalFn
from .young import YoungDiagram, branch_up, content_eigenvalue, dimension, enumerate_diagrams


@dataclass(frozen=True, order=True)
class MurphyProduct:
    """L_{a_1} L_{a_2} ... with 2 <= a_1, a_{i+1} >= a_i + 2; the empty product is 1."""

    indices: tuple[int, ...] = ()

    def __init__(self, indices: Iterable[int] = ()):
        idx = tuple(int(a) for a in indices)
        if idx and idx[0] < 2:
            raise InvalidProduct(f"Murphy indices start at 2: {idx}")
        for a, b in zip(idx, idx[1:]):
            if b < a + 2:
                raise InvalidProduct(f"indices must increase by at least 2: {idx}")
        object.__setattr__(self, "indices", idx)

    def __len__(self):
        return len(self.indices)

    @property
    def top(self) -> int:
        return self.indices[-1] if self.indices else 0

    def append(self, m: int) -> "MurphyProduct":
        return MurphyProduct(self.indices + (m,))

    def key(self) -> str:
        return "L(" + ",".join(map(str, self.indices)) + ")"

    @classmethod
    def parse(cls, s: str) -> "MurphyProduct":
        s = s.strip().removeprefix("L(").removesuffix(")")
        return cls(int(x) for x in s.split(",") if x.strip())

    def __str__(self):
        return "".join(f"L{a}" for a in self.indices) or "1"


@dataclass
class BranchingAccumulator:
    """Partial chain sums at one level of the Young lattice."""

    level: int
    values: dict[YoungDiagram, RationalFn]

    @classmethod
    def start(cls, level: int) -> "BranchingAccumulator":
        return cls(level, {g: RationalFn(dimension(g)) for g in enumerate_diagrams(level)})

    def step(self, weighted: bool) -> "BranchingAccumulator":
        out: dict[YoungDiagram, RationalFn] = {}
        for g, v in self.values.items():
            for h, box in branch_up(g):
                w = v * content_eigenvalue(box) if weighted else v
                out[h] = out[h] + w if h in out else w
        return BranchingAccumulator(self.level + 1, out)


@lru_cache(maxsize=None)
def _accumulate(marks: tuple[int, ...], level: int) -> BranchingAccumulator:
    """Accumulator at `level` for the marked levels (all <= level)."""
    if level == marks[0] - 1:
        return BranchingAccumulator.start(level)
    prev = _accumulate(tuple(a for a in marks if a < level), level - 1) if level - 1 >= marks[0] else None
    if prev is None:
        prev = BranchingAccumulator.start(level - 1)
    return prev.step(level in marks)


def _chain_value(g: YoungDiagram, marks: tuple[int, ...]) -> RationalFn:
    n = g.size
    if not marks:
        return RationalFn(dimension(g))
    if marks[-1] > n:
        raise InvalidProduct(f"L_{marks[-1]} does not exist in H_{n}(q)")
    return _accumulate(marks, n).values[g]


def murphy_product_trace(g: YoungDiagram, m: MurphyProduct) -> RationalFn:
    """tr(L_{a_1} ... L_{a_k}) in the irrep labelled by g."""
    if not isinstance(m, MurphyProduct):
        m = MurphyProduct(m)
    return _chain_value(g, m.indices)


def murphy_monomial_trace(g: YoungDiagram, indices: Iterable[int]) -> RationalFn:
    """tr(L_{a_1} ... L_{a_k}) for any indices (repeats and neighbours allowed).

    Uses an explicit walk over every standard tableau, independent of the
    shared accumulators above.
    """
    idx = list(indices)
    n = g.size
    if any(not 1 <= a <= n for a in idx):
        raise InvalidProduct(f"indices {idx} out of range for size {n}")
    total = RationalFn(0)
    for chain in _chains(g):
        v = RationalFn(1)
        for a in idx:
            if a >= 2:
                v = v * content_eigenvalue(chain[a - 1])
        total = total + v
    return total


def _chains(g: YoungDiagram):
    """Yield each standard tableau as the list of boxes in order of addition."""
    def rec(shape: YoungDiagram, boxes: list):
        if shape.size == g.size:
            if shape == g:
                yield list(boxes)
            return
        for h, box in branch_up(shape):
            if len(h) <= len(g) and all(a <= b for a, b in zip(h, g)):
                boxes.append(box)
                yield from rec(h, boxes)
                boxes.pop()
    yield from rec(YoungDiagram(()), [])


def valid_products(n: int, max_factors: int | None = None) -> list[MurphyProduct]:
    """Every non-consecutive product with indices in 2..n."""
    max_factors = n if max_factors is None else max_factors
    out = []
    for k in range(0, max_factors + 1):
        for idx in combinations(range(2, n + 1), k):
            if all(b >= a + 2 for a, b in zip(idx, idx[1:])):
                out.append(MurphyProduct(idx))
    return out


def murphy_trace_table(n: int, max_factors: int | None = None) -> dict[tuple[MurphyProduct, YoungDiagram], RationalFn]:
    """tr(product) for every valid product and every irrep of H_n(q)."""
    if n < 1:
        raise SizeMismatch("n must be positive")
    table = {}
    diagrams = enumerate_diagrams(n)
    for m in sorted(valid_products(n, max_factors), key=lambda p: (p.indices[:1], p.indices)):
        for g in diagrams:
            table[(m, g)] = murphy_product_trace(g, m)
    return table
