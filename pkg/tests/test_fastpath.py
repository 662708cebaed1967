from itertools import combinations
from math import comb

import pytest

from heckechar.errors import DoesNotFit, MalformedSpec
from heckechar.fastpath import (
    CutSequenceSpec,
    hump_prefix_expansion,
    hump_prefix_word,
    seq_prefix_expansion,
    seq_prefix_word,
    overlap_coefficients,
    expand_terminal,
    overlap_no_cut,
    reduce_hump_product,
    seq2_times_hump,
    seq3_times_shifted_hump,
    seq_tail_word,
    seq_times_hump,
    seq_times_seq_tail,
    tr_hump,
)
from heckechar.hecke import Word, hump
from heckechar.qpoly import Q, RationalFn, f_coeff
from heckechar.reduce import ReducedTraceCombo, TraceReducer, reduce_trace

_red = TraceReducer()


def generic(w: Word) -> ReducedTraceCombo:
    return ReducedTraceCombo.from_lengths(w.n, _red.reduce(w.indices))


def all_specs(max_total=8):
    for total in range(2, max_total + 1):
        for p in range(1, total):
            r = total - p
            for j in range(p):
                for cuts in combinations(range(1, p), j):
                    for k in range(1, p + 2):
                        yield CutSequenceSpec(p, cuts, k, r)


def test_spec_validation():
    with pytest.raises(MalformedSpec):
        CutSequenceSpec(3, (), 5, 1)
    with pytest.raises(MalformedSpec):
        CutSequenceSpec(3, (3,), 1, 1)
    with pytest.raises(MalformedSpec):
        CutSequenceSpec(3, (2, 1), 1, 1)
    with pytest.raises(MalformedSpec):
        CutSequenceSpec(3, (), 1, 0)
    with pytest.raises(DoesNotFit):
        CutSequenceSpec(2, (), 1, 2).word(4)
    with pytest.raises(MalformedSpec):
        expand_terminal({3}, 2, 4)


def test_spec_word():
    s = CutSequenceSpec(4, (2,), 3, 1)
    assert s.word(6).indices == (1, 3, 4, 3, 4, 5, 4, 3)


def test_no_cut_no_overlap_is_terminal_expansion():
    for p in range(1, 4):
        for r in range(1, 4):
            s = CutSequenceSpec(p, (), p + 1, r)
            want = {}
            for l in range(r):
                want[(p + r - l,)] = Q ** l * (Q - 1) ** (r - 1 - l) * comb(r - 1, l)
            assert reduce_hump_product(s).by_lengths() == want


def test_fast_path_matches_generic_exhaustively():
    mismatches = [s for s in all_specs(8) if reduce_hump_product(s) != generic(s.word(s.top + 1))]
    assert not mismatches


def test_fast_path_in_larger_ambient():
    s = CutSequenceSpec(3, (1,), 2, 2)
    assert reduce_hump_product(s, 8) == generic(s.word(8))


def test_overlap_coefficients_shape():
    # overlap starting at l: f_{2(p-l)+3} for no cut, then one weight per cut position
    assert overlap_coefficients(3, 2) == [
        (0, f_coeff(5)),
        (1, (Q - 1) * Q * f_coeff(3)),
        (2, (Q - 1) * Q ** 2 * f_coeff(1)),
    ]
    with pytest.raises(MalformedSpec):
        overlap_coefficients(2, 4)


@pytest.mark.parametrize("p", range(1, 8))
def test_single_hump(p):
    assert tr_hump(p) == reduce_trace(hump(1, p, p + 1))


@pytest.mark.parametrize("p,ell", [(p, ell) for p in range(1, 5) for ell in range(p + 1, 7)])
def test_sequence_times_hump(p, ell):
    n = ell + 1
    assert seq_times_hump(p, ell) == generic(Word(range(1, p + 1), n) + hump(1, ell, n))


@pytest.mark.parametrize("ell", range(3, 7))
def test_two_sequence_times_hump(ell):
    n = ell + 1
    assert seq2_times_hump(ell) == generic(Word((1, 2), n) + hump(1, ell, n))


@pytest.mark.parametrize("k", range(3, 7))
def test_three_sequence_times_shifted_hump(k):
    n = k + 2
    assert seq3_times_shifted_hump(k) == generic(Word((1, 2, 3), n) + hump(2, k, n))


@pytest.mark.parametrize("variant", ["touching", "overlapping_one"])
@pytest.mark.parametrize("ell,m", [(ell, m) for ell in range(1, 6) for m in range(0, 5)])
def test_seq_times_seq_tail(variant, ell, m):
    n = ell + m + 1
    assert seq_times_seq_tail(ell, m, variant, n) == generic(seq_tail_word(ell, m, variant, n))


def test_seq_times_seq_tail_small_cases():
    assert seq_times_seq_tail(4, 0, "touching").by_lengths() == {(4,): 1}
    assert seq_times_seq_tail(3, 0, "overlapping_one").by_lengths() == {(3,): Q - 1, (2,): Q}
    with pytest.raises(ValueError):
        seq_times_seq_tail(2, 1, "sideways")
    with pytest.raises(DoesNotFit):
        seq_times_seq_tail(0, 1, "touching")


@pytest.mark.parametrize("p", range(2, 7))
def test_generator_times_shifted_hump(p):
    # tr(g_1 (g_2)^{(p-1)}) = q^{p-2} sum_i C(p-2,i) ((q-1)/q)^i tr((g_1)_{i+2})
    n = p + 1
    want = {(i + 2,): RationalFn(Q ** (p - 2 - i) * (Q - 1) ** i * comb(p - 2, i)) for i in range(p - 1)}
    assert generic(Word((1,), n) + hump(2, p - 1, n)).by_lengths() == want


@pytest.mark.parametrize("s,p,r", [(s, p, r) for p in range(1, 6) for r in range(1, 4) for s in range(1, p + 1)])
def test_hump_prefix_recurrence(s, p, r):
    n = p + r + 1
    assert hump_prefix_expansion(s, p, r) == generic(hump_prefix_word(s, p, r, n))


@pytest.mark.parametrize("k,p,r", [(k, p, r) for p in range(1, 6) for r in range(1, 4) for k in range(1, p + 1)])
def test_sequence_prefix_closed_forms(k, p, r):
    n = p + r + 1
    assert seq_prefix_expansion(k, p, r) == generic(seq_prefix_word(k, p, r, n))


def test_overlap_closed_form():
    for p in range(1, 6):
        for r in range(1, 4):
            for l in range(1, p + 2):
                n = p + r + 1
                assert overlap_no_cut(p, l, r) == generic(Word(range(1, p + 1), n) + hump(l, p + r - l + 1, n))
