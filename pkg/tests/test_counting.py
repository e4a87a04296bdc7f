import pytest

from minupsets import (
    count_unique_closed,
    count_unique_linear,
    count_unique_recurrence,
    decompose,
    denormalize,
    enumerate_unique_normvecs,
    is_unique_min,
    validate_feasible,
)
from minupsets.counting import ROOTS, characteristic_poly, count_table
from minupsets.uniqueness import Decomposition


def test_seeds():
    assert [count_unique_recurrence(n) for n in range(5)] == [1, 1, 1, 2, 4]
    assert [count_unique_linear(n) for n in range(5)] == [1, 1, 1, 2, 4]


def test_small_values_from_enumeration():
    # oracle: build every decomposable vector and count
    assert len(enumerate_unique_normvecs(5)) == 8
    assert len(enumerate_unique_normvecs(6)) == 15
    assert count_unique_recurrence(5) == 8
    assert count_unique_recurrence(6) == 15
    assert count_unique_linear(5) == 2 * 4 - 1 + 1


def test_recurrence_paths_agree():
    table = count_table(200)
    assert all(count_unique_linear(n) == table[n] for n in range(201))
    assert count_unique_linear(40) == count_unique_recurrence(40)
    assert all(table[n] < table[n + 1] for n in range(3, 200))


def test_exact_beyond_64_bits():
    assert count_unique_recurrence(150) > 2 ** 64


def test_roots_solve_quartic():
    for lam in ROOTS:
        assert abs(characteristic_poly(lam)) < 1e-12


@pytest.mark.parametrize("n", range(1, 31))
def test_closed_form(n):
    res = count_unique_closed(n, tolerance=1e-6)
    exact = count_unique_recurrence(n)
    assert res.value == exact
    assert abs(res.raw - exact) < 1e-6 * exact
    assert res.imaginary < 1e-6
    assert not res.flagged


def test_closed_form_flags_residual():
    assert count_unique_closed(4).residual < 1e-9
    assert count_unique_closed(1).value == 1
    res = count_unique_closed(4, tolerance=0.0)
    assert res.value == 4
    assert res.residual > 0 and res.flagged


def test_enumerate_unique_normvecs():
    assert [v.entries for v in enumerate_unique_normvecs(1)] == [(0,)]
    assert [v.entries for v in enumerate_unique_normvecs(3)] == [(0, 0, 0), (1, 0, -1)]
    five = [v.entries for v in enumerate_unique_normvecs(5)]
    assert (2, 1, 0, -1, -2) in five
    assert five == sorted(five)
    assert denormalize((2, 1, 0, -1, -2)).scores == (2, 2, 2, 2, 2)


@pytest.mark.parametrize("n", range(1, 19))
def test_enumeration_count(n):
    vecs = enumerate_unique_normvecs(n)
    assert len(vecs) == count_unique_recurrence(n)
    assert len(set(vecs)) == len(vecs)


@pytest.mark.parametrize("n", range(1, 13))
def test_every_vector_is_a_unique_sequence(n):
    for h in enumerate_unique_normvecs(n):
        assert isinstance(decompose(h), Decomposition)
        r = denormalize(h)
        assert validate_feasible(r)
        assert is_unique_min(r)
