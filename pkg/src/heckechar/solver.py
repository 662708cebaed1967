"""Murphy-operator expressions for reduced traces and full character tables.

Every reduced trace tr(Psi_c) is written as a combination of traces of
non-consecutive Murphy products.  Single sequences are inverted directly;
a type with one more sequence is obtained by evaluating tr(Psi_base L_m) in
two ways: once by expanding L_m into humps and reducing, once by pushing
L_m into each Murphy product of the base combination.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

from .cache import ComboCache
from .errors import DoesNotFit, IndexOutOfRange, SingularPivot
from .hecke import DEFAULT_CAP, HARD_CAP, Word, hump, word_regular_trace
from .murphy import MurphyProduct, murphy_product_trace
from .qpoly import ONE, Q, LaurentPoly, RationalFn
from .reduce import Lengths, TraceReducer, default_reducer, representative_indices, representative_word, sweep_key
from .sym import mn_character
from .young import CycleType, YoungDiagram, conjugate, cycle_type_partition, cycle_types, dimension, enumerate_diagrams

log = logging.getLogger(__name__)

_QM1 = Q - 1


class MurphyCombo:
    """sum_P coeff_P tr(P) over Murphy products P."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MurphyProduct, object] | None = None):
        t = {}
        for p, c in (terms or {}).items():
            c = RationalFn.coerce(c)
            if c:
                t[p] = c
        self.terms: dict[MurphyProduct, RationalFn] = dict(sorted(t.items(), key=lambda kv: kv[0].indices))

    def __eq__(self, other):
        return isinstance(other, MurphyCombo) and self.terms == other.terms

    def __repr__(self):
        return "MurphyCombo(" + ", ".join(f"{p}: {c}" for p, c in self.terms.items()) + ")"

    def __add__(self, other: "MurphyCombo") -> "MurphyCombo":
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t[p] + c if p in t else c
        return MurphyCombo(t)

    def scale(self, c) -> "MurphyCombo":
        c = RationalFn.coerce(c)
        return MurphyCombo({p: v * c for p, v in self.terms.items()})

    def __sub__(self, other: "MurphyCombo") -> "MurphyCombo":
        return self + other.scale(-1)

    def append(self, m: int) -> "MurphyCombo":
        """Multiply every product on the right by L_m."""
        return MurphyCombo({p.append(m): c for p, c in self.terms.items()})

    @property
    def max_index(self) -> int:
        return max((p.top for p in self.terms), default=0)

    def evaluate(self, g: YoungDiagram) -> RationalFn:
        total = RationalFn(0)
        for p, c in self.terms.items():
            total = total + c * murphy_product_trace(g, p)
        return total

    def to_json(self) -> dict:
        return {p.key(): c.to_json() for p, c in self.terms.items()}

    @classmethod
    def from_json(cls, data: Mapping) -> "MurphyCombo":
        return cls({MurphyProduct.parse(k): RationalFn.from_json(v) for k, v in data.items()})

    def to_strings(self) -> dict[str, str]:
        return {str(p): str(c) for p, c in self.terms.items()}


# -- single sequences ---------------------------------------------------------------

def single_cycle_combo(k: int) -> MurphyCombo:
    """tr((g_1)_{k-1}) = (q/(q-1))^{k-2} sum_i (-1)^i C(k-1,i) tr(L_{k-i})."""
    if k < 1:
        raise IndexOutOfRange(f"k={k} must be at least 1")
    if k == 1:
        return MurphyCombo({MurphyProduct(): 1})
    pre = RationalFn(Q ** (k - 2), _QM1 ** (k - 2))
    return MurphyCombo({MurphyProduct([k - i]): pre * ((-1) ** i * comb(k - 1, i)) for i in range(k - 1)})


def murphy_forward(k: int) -> dict[Lengths, RationalFn]:
    """tr(L_k) = sum_i C(k-1,i+1) ((q-1)/q)^i tr((g_1)_{i+1})."""
    return {(i + 1,): RationalFn(_QM1 ** i * comb(k - 1, i + 1), Q ** i) for i in range(k - 1)}


# -- extension by one sequence -------------------------------------------------------------

def murphy_hump_terms(m: int, n: int) -> list[tuple[LaurentPoly, Word]]:
    """L_m = sum_{i=1}^{m-1} q^{-(m-1-i)} (g_i)^{(m-i)}."""
    return [(LaurentPoly.monomial(-(m - 1 - i)), hump(i, m - i, n)) for i in range(1, m)]


def extend_cycle_combo(
    base: Lengths,
    base_combo: MurphyCombo,
    ell_new: int,
    solved: Mapping[Lengths, MurphyCombo],
    n: int | None = None,
    reducer: TraceReducer | None = None,
) -> MurphyCombo:
    """Combination for sorted(base + (ell_new,)) from tr(Psi_base L_m)."""
    base = tuple(sorted(base))
    if base and ell_new < base[-1]:
        raise ValueError("the new sequence must be at least as long as the others")
    target = tuple(sorted(base + (ell_new,)))
    m = sum(base) + len(base) + ell_new + 1
    n = m if n is None else n
    if m > n:
        raise DoesNotFit(f"L_{m} needed for {target} does not exist in H_{n}(q)")
    red = reducer or default_reducer()
    psi = Word(representative_indices(base), n)
    lhs: dict[Lengths, RationalFn] = {}
    for coef, h in murphy_hump_terms(m, n):
        for lengths, c in red.reduce((psi + h).indices).items():
            v = RationalFn(c * coef)
            lhs[lengths] = lhs[lengths] + v if lengths in lhs else v
    lhs = {k: v for k, v in lhs.items() if v}
    pivot = lhs.pop(target, None)
    if pivot is None or not pivot:
        raise SingularPivot(f"coefficient of {target} vanishes when expanding tr(Psi{base} L_{m})")
    unsolved = sorted(k for k in lhs if k not in solved)
    if unsolved:
        raise SingularPivot(f"solving {target} also exposes unsolved types {unsolved}")
    rest = base_combo.append(m)
    for lengths, c in lhs.items():
        rest = rest - solved[lengths].scale(c)
    return rest.scale(RationalFn(ONE) / pivot)


# -- sweep ----------------------------------------------------------------------------

ORDERS: dict[str, Callable[[Lengths], tuple]] = {
    "total": sweep_key,
    "cycles": lambda lengths: (len(lengths), sum(lengths), tuple(sorted(lengths))),
}

SOLVE_ORDER = "cycles"


def realizable_lengths(n: int) -> list[Lengths]:
    return [c.seq_lengths for c in cycle_types(n)]


def _all_up_to(n: int) -> list[Lengths]:
    seen: set[Lengths] = set()
    for k in range(1, n + 1):
        seen.update(realizable_lengths(k))
    return sorted(seen)


def solve_all(
    n: int,
    cache: ComboCache | None = None,
    order: str = SOLVE_ORDER,
    reducer: TraceReducer | None = None,
) -> dict[CycleType, MurphyCombo]:
    """MurphyCombo for every cycle type of H_n(q); each solved in H_{size}(q)."""
    if not 2 <= n <= HARD_CAP:
        raise DoesNotFit(f"n={n} outside 2..{HARD_CAP}")
    red = reducer or default_reducer()
    key = ORDERS[order]
    solved: dict[Lengths, MurphyCombo] = {}
    for lengths in sorted(_all_up_to(n), key=key):
        hit = cache.load(lengths) if cache is not None else None
        if hit is not None:
            solved[lengths] = MurphyCombo.from_json(hit)
            continue
        if len(lengths) <= 1:
            combo = single_cycle_combo(lengths[0] + 1 if lengths else 1)
        else:
            base, ell = lengths[:-1], lengths[-1]
            combo = extend_cycle_combo(base, solved[base], ell, solved, reducer=red)
        log.debug("solved %s with %d Murphy terms", lengths, len(combo.terms))
        solved[lengths] = combo
        if cache is not None:
            cache.store(lengths, combo.to_json())
    return {c: solved[c.seq_lengths] for c in cycle_types(n)}


# -- character tables -----------------------------------------------------------------

@dataclass
class CharacterTable:
    n: int
    diagrams: list[YoungDiagram]
    classes: list[CycleType]
    entries: dict[tuple[YoungDiagram, CycleType], LaurentPoly]

    def __getitem__(self, key: tuple[YoungDiagram, CycleType]) -> LaurentPoly:
        g, c = key
        return self.entries[(YoungDiagram(g), c)]

    def row(self, g: YoungDiagram) -> list[LaurentPoly]:
        return [self.entries[(g, c)] for c in self.classes]

    def class_headers(self) -> list[str]:
        return ["(" + cycle_type_partition(c).to_str() + ")" for c in self.classes]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": [{"cycle_type": c.key(), "partition": cycle_type_partition(c).to_str()} for c in self.classes],
            "rows": [{"diagram": g.to_str(), "values": [str(v) for v in self.row(g)]} for g in self.diagrams],
        }

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["diagram"] + self.class_headers())
        for g in self.diagrams:
            w.writerow(["(" + g.to_str() + ")"] + [str(v) for v in self.row(g)])
        return buf.getvalue()

    def to_latex(self) -> str:
        cols = "l|" + "c" * len(self.classes)
        lines = [f"\\begin{{tabular}}{{{cols}}}", " & ".join([""] + [f"${h}$" for h in self.class_headers()]) + " \\\\", "\\hline"]
        for g in self.diagrams:
            cells = [f"$({g.to_str()})$"] + [f"${_latex_poly(v)}$" for v in self.row(g)]
            lines.append(" & ".join(cells) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"


def _latex_poly(p: LaurentPoly) -> str:
    import re

    return re.sub(r"q\^(-?\d+)", r"q^{\1}", str(p))


def character_table(
    n: int,
    cache: ComboCache | None = None,
    combos: Mapping[CycleType, MurphyCombo] | None = None,
) -> CharacterTable:
    combos = combos if combos is not None else solve_all(n, cache)
    diagrams = enumerate_diagrams(n)
    classes = sorted(combos, key=lambda c: sweep_key(c.seq_lengths))
    entries = {}
    for g in diagrams:
        for c in classes:
            entries[(g, c)] = combos[c].evaluate(g).exact_poly()
    return CharacterTable(n, diagrams, classes, entries)


# -- verification -------------------------------------------------------------------------

CHECKS = ("q1", "conjugate", "regular")


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name} ({self.checked} entries checked, {len(self.counterexamples)} failures)"


@dataclass
class VerifyReport:
    n: int
    results: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "checks": {r.name: {"passed": r.passed, "checked": r.checked, "counterexamples": r.counterexamples} for r in self.results},
        }


def _check_q1(t: CharacterTable) -> CheckResult:
    res = CheckResult("q1", True)
    for g in t.diagrams:
        for c in t.classes:
            got = t.entries[(g, c)].evaluate(1)
            want = mn_character(tuple(g), tuple(cycle_type_partition(c)))
            res.checked += 1
            if got != want:
                res.counterexamples.append(f"({g.to_str()}) {c.key()}: {got} != {want}")
    res.passed = not res.counterexamples
    return res


def _check_conjugate(t: CharacterTable) -> CheckResult:
    res = CheckResult("conjugate", True)
    for g in t.diagrams:
        gc = conjugate(g)
        for c in t.classes:
            ell = c.total_generators
            want = t.entries[(g, c)].invert_q().shift(ell) * ((-1) ** ell)
            res.checked += 1
            if t.entries[(gc, c)] != want:
                res.counterexamples.append(f"({gc.to_str()}) {c.key()}: {t.entries[(gc, c)]} != {want}")
    res.passed = not res.counterexamples
    return res


def _check_regular(t: CharacterTable, points: Iterable[Fraction] | None = None) -> CheckResult:
    """Sum_lam dim(lam) chi_lam(c) against the regular representation.

    With `points` the comparison is made at those rational values of q;
    otherwise the polynomials are compared exactly.
    """
    res = CheckResult("regular", True)
    pts = list(points) if points is not None else None
    for c in t.classes:
        total = LaurentPoly()
        for g in t.diagrams:
            total = total + t.entries[(g, c)] * dimension(g)
        want = word_regular_trace(representative_word(c))
        res.checked += 1
        if pts is None:
            ok = total == want
        else:
            ok = all(total.evaluate(x) == want.evaluate(x) for x in pts)
        if not ok:
            res.counterexamples.append(f"{c.key()}: {total} != {want}")
    res.passed = not res.counterexamples
    return res


def random_rational_points(k: int, seed: int = 0) -> list[Fraction]:
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < k:
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        if x not in (0, 1, -1) and x not in out:
            out.append(x)
    return out


def verify_table(t: CharacterTable, checks: Iterable[str] = CHECKS) -> VerifyReport:
    runners = {"q1": _check_q1, "conjugate": _check_conjugate, "regular": _check_regular}
    results = []
    for name in checks:
        if name not in runners:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
        results.append(runners[name](t))
    return VerifyReport(t.n, results)


__all__ = [
    "CHECKS",
    "DEFAULT_CAP",
    "CharacterTable",
    "CheckResult",
    "MurphyCombo",
    "VerifyReport",
    "character_table",
    "extend_cycle_combo",
    "murphy_forward",
    "murphy_hump_terms",
    "random_rational_points",
    "single_cycle_combo",
    "solve_all",
    "verify_table",
]
