from math import factorial

import pytest
from hypothesis import given, strategies as st

from heckechar.errors import DoesNotFit
from heckechar.qpoly import ONE, Q, RationalFn
from heckechar.young import (
    Box,
    CycleType,
    YoungDiagram,
    branch_down,
    branch_up,
    conjugate,
    content_eigenvalue,
    cycle_type_partition,
    cycle_types,
    dimension,
    enumerate_diagrams,
)

Y = YoungDiagram


def _partition_count(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        return 1
    return sum(_partition_count(n - k, k) for k in range(1, min(n, largest) + 1))


def _standard_tableaux(shape):
    """Count fillings by brute force: place 1..n one at a time."""
    n = sum(shape)

    def rec(filled):
        if sum(filled) == n:
            return 1
        total = 0
        for i, r in enumerate(shape):
            if filled[i] < r and (i == 0 or filled[i - 1] > filled[i]):
                filled[i] += 1
                total += rec(filled)
                filled[i] -= 1
        return total

    return rec([0] * len(shape))


def test_enumerate_small():
    assert enumerate_diagrams(1) == [Y((1,))]
    assert enumerate_diagrams(3) == [Y((3,)), Y((2, 1)), Y((1, 1, 1))]


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_count_matches_partition_count(n):
    assert len(enumerate_diagrams(n)) == _partition_count(n)
    assert len(enumerate_diagrams(n)) == len(set(enumerate_diagrams(n)))


def test_invalid_diagram():
    with pytest.raises(ValueError):
        Y((1, 2))
    with pytest.raises(ValueError):
        Y((2, 0))


def test_branch_down():
    assert branch_down(Y((4,))) == [(Y((3,)), Box(1, 4))]
    assert branch_down(Y((2, 1))) == [(Y((1, 1)), Box(1, 2)), (Y((2,)), Box(2, 1))]
    assert branch_down(Y((2, 2))) == [(Y((2, 1)), Box(2, 2))]


def test_branch_up_inverts_branch_down():
    for n in range(1, 7):
        for g in enumerate_diagrams(n):
            for h, box in branch_up(g):
                assert (g, box) in branch_down(h)


def test_content_eigenvalue():
    assert content_eigenvalue(Box(1, 2)) == Q
    assert content_eigenvalue(Box(2, 1)) == -1
    assert content_eigenvalue(Box(3, 1)) == RationalFn(-(Q + 1), Q)
    assert content_eigenvalue(Box(1, 1)) == 0


def test_dimension_examples():
    assert dimension(Y((5,))) == 1
    assert dimension(Y((2, 1))) == 2
    assert dimension(Y((2, 2))) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_dimension_properties(n):
    diagrams = enumerate_diagrams(n)
    assert sum(dimension(g) ** 2 for g in diagrams) == factorial(n)
    for g in diagrams:
        assert dimension(g) == dimension(conjugate(g))
        if n <= 6:
            assert dimension(g) == _standard_tableaux(tuple(g))


def test_conjugate():
    assert conjugate(Y((3,))) == Y((1, 1, 1))
    assert conjugate(Y((2, 1))) == Y((2, 1))
    assert conjugate(Y((4, 2, 1))) == Y((3, 2, 1, 1))


@given(st.integers(1, 8).flatmap(lambda n: st.sampled_from(enumerate_diagrams(n))))
def test_conjugate_is_involution(g):
    assert conjugate(conjugate(g)) == g
    assert conjugate(g).size == g.size


def test_cycle_type_partition():
    assert cycle_type_partition(CycleType((), 4)) == Y((1, 1, 1, 1))
    assert cycle_type_partition(CycleType((1, 1), 4)) == Y((2, 2))
    assert cycle_type_partition(CycleType((2,), 5)) == Y((3, 1, 1))


def test_cycle_type_basics():
    c = CycleType((2, 1), 5)
    assert c.seq_lengths == (1, 2)
    assert c.total_generators == 3
    assert c.size == 5
    assert c.key() == "{1,2}"
    assert CycleType.parse("{1,2}", 5) == c
    with pytest.raises(DoesNotFit):
        CycleType((2, 2), 5)


@pytest.mark.parametrize("n", range(2, 9))
def test_cycle_types_biject_with_partitions(n):
    parts = [cycle_type_partition(c) for c in cycle_types(n)]
    assert sorted(parts) == sorted(enumerate_diagrams(n))


def test_diagram_string_roundtrip():
    assert Y.parse("4,2,1") == Y((4, 2, 1))
    assert Y((4, 2, 1)).to_str() == "4,2,1"
