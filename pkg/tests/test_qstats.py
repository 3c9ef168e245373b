import itertools

import pytest
from hypothesis import given, strategies as st

from naples import (
    NotAKNaplesParkingFunction,
    NotAParkingFunction,
    QPolynomial,
    area,
    area_distribution,
    area_k,
    fiber_area_poly,
    fiber_members,
    is_naples_pf,
    q_int,
    qt_distribution,
)
from naples.oracle import all_permutations
from naples.qstats import inversions
from naples.reference import AREA_DISTRIBUTIONS, normalize_latex

from strategies import permutations, with_k


def histogram(prefs, stat):
    counts = {}
    for p in prefs:
        e = stat(p)
        counts[e] = counts.get(e, 0) + 1
    return QPolynomial([counts.get(e, 0) for e in range(max(counts) + 1)])


def test_worked_areas():
    assert area_k((3, 2, 2), 1) == 1
    assert area((1, 1, 1)) == 3
    assert area((3, 2, 1)) == 0
    with pytest.raises(NotAParkingFunction):
        area((3, 3, 3))
    with pytest.raises(NotAKNaplesParkingFunction):
        area_k((3, 3, 3), 1)


def test_area_k_reduces_to_area():
    for p in itertools.product(range(1, 5), repeat=4):
        if is_naples_pf(p, 0):
            assert area_k(p, 0) == area(p)


@pytest.mark.parametrize("n", range(1, 6))
def test_fiber_q_identity_exhaustive(n):
    for k in range(n):
        for sigma in all_permutations(n):
            members = list(fiber_members(sigma, k))
            assert fiber_area_poly(sigma, k) == histogram(members, lambda p: area_k(p, k))


@given(with_k(permutations(max_n=6)))
def test_fiber_poly_at_one_is_size(case):
    sigma, k = case
    assert fiber_area_poly(sigma, k)(1) == len(list(fiber_members(sigma, k)))


@pytest.mark.parametrize("n,k", sorted(AREA_DISTRIBUTIONS))
def test_table_rows(n, k):
    assert area_distribution(n, k).to_latex() == normalize_latex(AREA_DISTRIBUTIONS[(n, k)])


@pytest.mark.parametrize("n", range(1, 5))
def test_distribution_against_filter(n):
    for k in range(n):
        prefs = [p for p in itertools.product(range(1, n + 1), repeat=n) if is_naples_pf(p, k)]
        assert area_distribution(n, k) == histogram(prefs, lambda p: area_k(p, k))


def test_distribution_threads():
    assert area_distribution(7, 2, threads=1) == area_distribution(7, 2, threads=4)


def test_q_int_and_arithmetic():
    assert q_int(0) == QPolynomial()
    assert q_int(3) == QPolynomial([1, 1, 1])
    assert q_int(2) * q_int(3) == QPolynomial([1, 2, 2, 1])
    assert (q_int(2) + 1) == QPolynomial([2, 1])
    assert QPolynomial([0, 0]).degree == -1
    assert QPolynomial.monomial(3, 2)[3] == 2


@given(st.lists(st.integers(-5, 5), max_size=6), st.lists(st.integers(-5, 5), max_size=6),
       st.integers(-3, 3))
def test_polynomial_evaluation_is_a_ring_map(a, b, x):
    p, q = QPolynomial(a), QPolynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_latex_style():
    assert QPolynomial([6, 9, 7, 2]).to_latex() == "2q^3+7q^2+9q+6"
    assert QPolynomial([1] + [0] * 9 + [1]).to_latex() == "q^{10}+1"
    assert QPolynomial().to_latex() == "0"


def test_qt_distribution_marginals():
    for n in range(1, 5):
        for k in range(n):
            qt = qt_distribution(n, inversions, k)
            assert qt.at_t1() == area_distribution(n, k)
            weighted = {}
            for sigma in all_permutations(n):
                inv = inversions(sigma)
                weighted[inv] = weighted.get(inv, 0) + fiber_area_poly(sigma, k)(1)
            assert qt.at_q1() == dict(sorted(weighted.items()))
    assert qt_distribution(1, inversions).terms == {(0, 0): 1}
