from math import factorial, prod

import pytest
from hypothesis import given

from naples import admissible_sets, ell, ell_profile, fiber_members, fiber_size, phi_k
from naples.oracle import all_permutations, oracle_fibers
from naples.reference import FIBERS

from strategies import brute_fiber, permutations, with_k


@pytest.mark.parametrize("sigma,k", list(FIBERS))
def test_listed_fibers(sigma, k):
    members = list(fiber_members(sigma, k))
    assert members == FIBERS[(sigma, k)]
    assert fiber_size(sigma, k) == len(members)


def test_fiber_sizes():
    assert fiber_size((2, 3, 5, 1, 4), 0) == 12
    assert fiber_size((5, 1, 4, 2, 3), 2) == 9
    assert fiber_size((1, 2, 3, 4), 0) == factorial(4)
    assert sorted(fiber_members((1, 2, 3), 0)) == [
        (1, x, y) for x in (1, 2) for y in (1, 2, 3)
    ]


def test_ell_basics():
    assert [ell(i, (1, 2, 3, 4)) for i in range(1, 5)] == [1, 2, 3, 4]
    assert [ell(i, (2, 3, 5, 1, 4)) for i in range(1, 6)] == [1, 2, 3, 1, 2]


@given(with_k(permutations()))
def test_profile_shape(case):
    sigma, k = case
    prof = ell_profile(sigma, k)
    assert prod(prof.ell_k) == fiber_size(sigma, k)
    for i in range(len(sigma)):
        assert 1 <= prof.y[i] <= k + 1
        assert prof.x[i] == ell(i + 1, sigma) - 1
        assert 1 <= prof.ell_k[i] <= len(sigma)


@given(permutations())
def test_k0_reduces_to_ell(sigma):
    assert list(ell_profile(sigma, 0).ell_k) == [ell(i, sigma) for i in range(1, len(sigma) + 1)]


@given(with_k(permutations(max_n=5)))
def test_constructed_fiber_matches_brute_force(case):
    sigma, k = case
    assert sorted(fiber_members(sigma, k)) == brute_fiber(sigma, k)


@given(with_k(permutations()))
def test_members_map_to_sigma(case):
    sigma, k = case
    boxes = admissible_sets(sigma, k)
    assert boxes.size == fiber_size(sigma, k)
    for p in boxes:
        assert phi_k(p, k) == sigma
        assert boxes.from_offsets(boxes.to_offsets(p)) == p


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_oracle_fibers_exhaustive(n):
    for k in range(n):
        fibers = oracle_fibers(n, k)
        for sigma in all_permutations(n):
            assert sorted(fibers[sigma]) == sorted(fiber_members(sigma, k))
