from math import factorial

import pytest

from naples import (
    IndexedSeries,
    ResourceLimit,
    c_coeff,
    count_npf_permsum,
    count_npf_recursive,
    count_pf_closed,
    fiber_gf_direct,
    fiber_gf_recursive,
    fiber_size,
    is_naples_pf,
    log_gf,
)
from naples.enumeration import chunk_depth, divisors, permutation_prefixes
from naples.oracle import all_permutations, oracle_count
from naples.reference import FIBER_SIZE_SERIES

# |PF_{n,k}| for n <= 5, from filtering [n]^n through the simulator
KNOWN = {
    1: [1], 2: [3, 4], 3: [16, 24, 27], 4: [125, 203, 240, 256],
    5: [1296, 2225, 2731, 3000, 3125],
}


def test_closed_form():
    assert [count_pf_closed(n) for n in range(1, 7)] == [1, 3, 16, 125, 1296, 16807]


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_against_oracle(n):
    for k in range(n):
        expected = oracle_count(n, k)
        assert expected == KNOWN[n][k]
        assert count_npf_recursive(n, k) == expected
        assert count_npf_permsum(n, k) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_recursion_matches_permutation_sum(n):
    for k in range(n):
        assert count_npf_recursive(n, k) == count_npf_permsum(n, k)
    assert count_npf_recursive(n, 0) == (n + 1) ** (n - 1)
    assert count_npf_recursive(n, n - 1) == n ** n


def test_large_k_clamps():
    assert count_npf_recursive(4, 9) == 256
    assert count_npf_permsum(4, 9) == 256


def test_thread_count_is_irrelevant():
    single = count_npf_permsum(8, 3, threads=1)
    assert count_npf_permsum(8, 3, threads=4) == single
    assert fiber_gf_direct(7, 2, threads=1) == fiber_gf_direct(7, 2, threads=3)


def test_prefix_chunks_cover_every_permutation():
    for n in range(1, 7):
        prefixes = list(permutation_prefixes(n, 2 if n > 2 else 0))
        assert len({p for p in prefixes}) == len(prefixes)
    assert chunk_depth(4) == 0
    assert chunk_depth(12) > 0


def test_guard():
    with pytest.raises(ResourceLimit):
        count_npf_permsum(11)
    assert count_npf_permsum(4, 1, max_n=4) == 203


def test_guard_env(monkeypatch):
    monkeypatch.setenv("NAPLES_MAX_N", "3")
    with pytest.raises(ResourceLimit):
        count_npf_permsum(4)


@pytest.mark.parametrize("n", sorted(FIBER_SIZE_SERIES))
def test_listed_series(n):
    assert fiber_gf_direct(n) == FIBER_SIZE_SERIES[n]


def test_series_from_brute_force():
    for n in range(1, 6):
        for k in range(n):
            hist = {}
            for sigma in all_permutations(n):
                size = fiber_size(sigma, k)
                hist[size] = hist.get(size, 0) + 1
            assert fiber_gf_direct(n, k) == hist


@pytest.mark.parametrize("n", range(1, 8))
def test_three_routes_agree(n):
    direct = fiber_gf_direct(n)
    assert fiber_gf_recursive(n) == direct
    assert log_gf(n) == direct
    assert direct.total() == factorial(n)
    assert direct.weighted_total() == count_pf_closed(n)


def test_c_coeff():
    assert c_coeff(3, 6) == 1
    assert c_coeff(4, 7) == 0
    assert sum(c_coeff(4, i) for i in range(1, 25)) == 24


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_indexed_series_algebra():
    a = IndexedSeries({1: 1, 2: 1})
    b = IndexedSeries({1: 2, 3: 1})
    assert a * b == {1: 2, 3: 1, 2: 2, 6: 1}
    assert a + b == {1: 3, 2: 1, 3: 1}
    assert a.scale_index(2) == {2: 1, 4: 1}
    assert (a * 3) == {1: 3, 2: 3}
    assert list(a) == [(1, 1), (2, 1)]


def test_is_naples_pf_clamps_k():
    assert is_naples_pf((3, 3, 3), 50)
