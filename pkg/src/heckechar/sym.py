"""Symmetric-group characters from the Murnaghan-Nakayama rule.

Kept deliberately independent of the Hecke machinery: partitions are plain
tuples and the recursion removes border strips through beta-numbers.
"""
from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Sequence

from .errors import SizeMismatch


def _norm(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in p if x > 0), reverse=True))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    # beta-numbers: removing a k-strip moves one bead from b to b-k
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    present = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in present:
            continue
        # height = number of beads strictly between nb and b
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((nb if c == b else c for c in beta), reverse=True)
        new_lam = tuple(x - (L - 1 - i) for i, x in enumerate(new_beta))
        total += (-1) ** height * _mn(_norm(new_lam), rest)
    return total


def mn_character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Value of the S_n irreducible character lam on the class of cycle type mu."""
    lam, mu = _norm(lam), _norm(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in reverse-lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(rem: int, largest: int, acc: tuple[int, ...]):
        if rem == 0:
            out.append(acc)
            return
        for first in range(min(rem, largest), 0, -1):
            rec(rem - first, first, acc + (first,))

    rec(n, n, ())
    return out


def sn_table(n: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], int]:
    """{(lam, mu): chi_lam(mu)} for all partitions lam, mu of n."""
    ps = partitions(n)
    return {(lam, mu): mn_character(lam, mu) for lam in ps for mu in ps}


def class_size(mu: Sequence[int]) -> int:
    """Number of permutations of cycle type mu."""
    mu = _norm(mu)
    z = 1
    for part, mult in Counter(mu).items():
        z *= part ** mult * factorial(mult)
    return factorial(sum(mu)) // z


def dump_table(n: int) -> str:
    ps = partitions(n)
    rows = {",".join(map(str, lam)): [mn_character(lam, mu) for mu in ps] for lam in ps}
    return json.dumps({"n": n, "classes": [",".join(map(str, mu)) for mu in ps], "rows": rows}, indent=1)
