"""Young diagrams, the branching lattice, box contents and cycle types."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DoesNotFit
from .qpoly import Q, RationalFn, q_integer


class YoungDiagram(tuple):
    """A partition, stored as its weakly decreasing positive row lengths."""

    def __new__(cls, rows: Iterable[int] = ()):
        rows = tuple(int(r) for r in rows)
        if any(r < 1 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        return super().__new__(cls, rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self):
        return f"YoungDiagram({self.to_str()})"

    def to_str(self) -> str:
        return ",".join(map(str, self))

    @classmethod
    def parse(cls, s: str) -> "YoungDiagram":
        s = s.strip().strip("()")
        if not s:
            return cls(())
        return cls(int(x) for x in s.split(","))


@dataclass(frozen=True, order=True)
class Box:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError(f"box indices are 1-based: {self}")

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True, order=True)
class CycleType:
    """Lengths of disjoint connected generator sequences (not S_n cycle lengths).

    A sequence of length l is a cycle of length l+1; ``n`` is the ambient
    H_n(q) and only matters for realizability.
    """

    seq_lengths: tuple[int, ...]
    n: int

    def __init__(self, seq_lengths: Iterable[int], n: int):
        lengths = tuple(sorted(int(x) for x in seq_lengths))
        if any(x < 1 for x in lengths):
            raise ValueError(f"sequence lengths must be positive: {lengths}")
        if sum(x + 1 for x in lengths) > n:
            raise DoesNotFit(f"cycle type {lengths} does not fit in H_{n}(q)")
        object.__setattr__(self, "seq_lengths", lengths)
        object.__setattr__(self, "n", int(n))

    @property
    def total_generators(self) -> int:
        return sum(self.seq_lengths)

    @property
    def size(self) -> int:
        """Smallest n in which this type is realizable."""
        return sum(x + 1 for x in self.seq_lengths)

    def key(self) -> str:
        return "{" + ",".join(map(str, self.seq_lengths)) + "}"

    def with_n(self, n: int) -> "CycleType":
        return CycleType(self.seq_lengths, n)

    def __str__(self):
        return self.key()

    @classmethod
    def parse(cls, s: str, n: int) -> "CycleType":
        s = s.strip().strip("{}()")
        return cls([int(x) for x in s.split(",") if x.strip()], n)


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[YoungDiagram, ...]:
    return tuple(YoungDiagram(p) for p in _partitions(n, n))


def enumerate_diagrams(n: int) -> list[YoungDiagram]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    return list(_enumerate(n))


def branch_down(g: YoungDiagram) -> list[tuple[YoungDiagram, Box]]:
    """Diagrams obtained by removing one corner box, with the box removed."""
    if not g:
        raise ValueError("the empty diagram has no boxes to remove")
    out = []
    rows = list(g)
    for i, r in enumerate(rows):
        if i + 1 == len(rows) or rows[i + 1] < r:
            smaller = rows[:i] + [r - 1] + rows[i + 1:]
            if smaller[-1] == 0:
                smaller.pop()
            out.append((YoungDiagram(smaller), Box(i + 1, r)))
    return out


def branch_up(g: YoungDiagram) -> list[tuple[YoungDiagram, Box]]:
    """Diagrams obtained by adding one box, with the box added."""
    out = []
    rows = list(g)
    for i in range(len(rows) + 1):
        cur = rows[i] if i < len(rows) else 0
        if i == 0 or rows[i - 1] > cur:
            bigger = rows[:i] + [cur + 1] + rows[i + 1:]
            out.append((YoungDiagram(bigger), Box(i + 1, cur + 1)))
    return out


@lru_cache(maxsize=None)
def _content_eigenvalue(c: int) -> RationalFn:
    return q_integer(c) * Q


def content_eigenvalue(b: Box) -> RationalFn:
    """Eigenvalue q [col - row]_q of the Murphy operator that adds box b."""
    return _content_eigenvalue(b.content)


@lru_cache(maxsize=None)
def dimension(g: YoungDiagram) -> int:
    """Number of standard tableaux, via the branching sum rule."""
    if sum(g) <= 1:
        return 1
    return sum(dimension(h) for h, _ in branch_down(g))


def conjugate(g: YoungDiagram) -> YoungDiagram:
    if not g:
        return YoungDiagram(())
    return YoungDiagram(sum(1 for r in g if r > j) for j in range(g[0]))


def cycle_type_partition(c: CycleType) -> YoungDiagram:
    parts = sorted((x + 1 for x in c.seq_lengths), reverse=True)
    parts += [1] * (c.n - sum(parts))
    return YoungDiagram(parts)


def cycle_types(n: int) -> list[CycleType]:
    """All cycle types realizable in H_n(q), one per conjugacy class of S_n."""
    out = []
    for lam in enumerate_diagrams(n):
        out.append(CycleType([p - 1 for p in lam if p > 1], n))
    return out
