"""Exhaustive ground truth: simulate every preference in ``[n]^n``."""

from __future__ import annotations

from itertools import permutations, product

from . import _backend
from .core import ParkingPreference, check_k
from .errors import ResourceLimit

ORACLE_MAX_N = 8


def _check(n, max_n):
    if n < 1:
        raise ValueError("n must be positive")
    limit = ORACLE_MAX_N if max_n is None else max_n
    if n > limit:
        raise ResourceLimit("oracle", n, limit)


def all_permutations(n):
    """``S_n`` in lexicographic order, so list position equals rank."""
    return list(permutations(range(1, n + 1)))


def oracle_fibers(n: int, k: int = 0, *, max_n: int | None = None) -> dict:
    """``{sigma: [preferences with outcome sigma]}``; failures are left out.

    Keys run over all of ``S_n`` in lexicographic order; preference lists are
    lexicographic too.
    """
    _check(n, max_n)
    k = min(check_k(k), n)
    ranks = _backend.kernels().oracle_ranks(n, k)
    perms = all_permutations(n)
    groups = {sigma: [] for sigma in perms}
    for prefs, r in zip(product(range(1, n + 1), repeat=n), ranks):
        if r >= 0:
            groups[perms[r]].append(ParkingPreference(prefs))
    return groups


def oracle_failures(n: int, k: int = 0, *, max_n: int | None = None) -> list:
    """Preferences under which some car drives off the street."""
    _check(n, max_n)
    k = min(check_k(k), n)
    ranks = _backend.kernels().oracle_ranks(n, k)
    return [prefs for prefs, r in zip(product(range(1, n + 1), repeat=n), ranks) if r < 0]


def oracle_count(n: int, k: int = 0, *, max_n: int | None = None) -> int:
    _check(n, max_n)
    k = min(check_k(k), n)
    return sum(1 for r in _backend.kernels().oracle_ranks(n, k) if r >= 0)


def tuple_at(n: int, index: int) -> tuple:
    """The ``index``-th tuple of ``[n]^n`` in lexicographic order."""
    digits = []
    for _ in range(n):
        index, d = divmod(index, n)
        digits.append(d + 1)
    return tuple(reversed(digits))
