"""Counting k-Naples parking functions and fiber-size generating functions.

Three independent counts of ``|PF_{n,k}|``: the closed form ``(n+1)^(n-1)``
(k = 0 only), the recursion over the position of the first empty prefix,
and the sum of fiber sizes over all permutations.  The permutation sum is
the expensive one; it runs on the active kernel backend, optionally split
across threads over disjoint permutation prefixes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from . import _backend
from .core import check_k
from .errors import ResourceLimit

DEFAULT_MAX_N = 10
# target permutations per chunk; keeps histogram buffers small
_CHUNK_TARGET = 50_000


def default_max_n() -> int:
    env = os.environ.get("NAPLES_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


def guard(what: str, n: int, max_n: int | None) -> None:
    limit = default_max_n() if max_n is None else max_n
    if n > limit:
        raise ResourceLimit(what, n, limit)


class IndexedSeries:
    """Sparse exact series ``{index: coefficient}`` with positive coefficients.

    Serves both as ``F_n(q) = sum c_{n,i} q^i`` and as the logarithmic
    ``G_n(q) = sum c_{n,i} q^(ln i)``; in the latter reading the product of
    two terms multiplies their indices, which is what ``*`` does here.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, coeff in dict(terms or {}).items():
            key, coeff = int(key), int(coeff)
            if key < 1:
                raise ValueError(f"index must be positive, got {key}")
            if coeff < 0:
                raise ValueError(f"coefficient must be non-negative, got {coeff}")
            if coeff:
                clean[key] = clean.get(key, 0) + coeff
        self._terms = dict(sorted(clean.items()))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, IndexedSeries):
            return self._terms == other._terms
        if isinstance(other, dict):
            return self._terms == IndexedSeries(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        return f"IndexedSeries({self._terms})"

    def __add__(self, other):
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            out[key] = out.get(key, 0) + coeff
        return IndexedSeries(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IndexedSeries({key: c * other for key, c in self._terms.items()})
        out = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                out[a * b] = out.get(a * b, 0) + ca * cb
        return IndexedSeries(out)

    __rmul__ = __mul__

    def scale_index(self, factor: int) -> "IndexedSeries":
        """Multiply every index by ``factor`` (a ``q^(ln factor)`` factor)."""
        return IndexedSeries({key * factor: c for key, c in self._terms.items()})

    def total(self) -> int:
        return sum(self._terms.values())

    def weighted_total(self) -> int:
        return sum(key * c for key, c in self._terms.items())


# ---------------------------------------------------------------------------
# permutation chunks

def chunk_depth(n: int) -> int:
    """Prefix length so that each chunk holds at most ~``_CHUNK_TARGET`` perms."""
    depth = 0
    while depth < n - 1 and factorial(n - depth) > _CHUNK_TARGET:
        depth += 1
    return depth


def permutation_prefixes(n: int, depth: int | None = None):
    if depth is None:
        depth = chunk_depth(n)
    return list(permutations(range(1, n + 1), depth))


def map_permutation_chunks(kernel_name, n, k, threads):
    kern = getattr(_backend.kernels(n), kernel_name)
    k = min(k, n)
    prefixes = permutation_prefixes(n)
    if threads is None or threads <= 1 or len(prefixes) == 1:
        return [kern(n, k, p) for p in prefixes]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda p: kern(n, k, p), prefixes))


# ---------------------------------------------------------------------------
# counts

def count_pf_closed(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 1) ** (n - 1)


@lru_cache(maxsize=None)
def count_npf_recursive(n: int, k: int = 0) -> int:
    """``|PF_{n,k}|`` by recursion on the length of the first block."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k = check_k(k)
    if n == 0:
        return 1
    m = n - 1
    total = 0
    for i in range(m + 1):
        # (m - i + 1)^(m - i - 1) is 1 at i = m
        tail = (m - i + 1) ** (m - i - 1) if i < m else 1
        total += comb(m, i) * min(i + 1 + k, m + 1) * count_npf_recursive(i, k) * tail
    return total


def count_npf_permsum(n: int, k: int = 0, *, threads: int = 1, max_n: int | None = None) -> int:
    """``|PF_{n,k}|`` as the sum of fiber sizes over ``S_n``."""
    if n < 1:
        raise ValueError("n must be positive")
    k = check_k(k)
    guard("count_npf_permsum", n, max_n)
    return sum(map_permutation_chunks("chunk_fiber_total", n, k, threads))


def fiber_gf_direct(n: int, k: int = 0, *, threads: int = 1, max_n: int | None = None) -> IndexedSeries:
    """Histogram ``{fiber size: number of permutations}`` over ``S_n``."""
    if n < 1:
        raise ValueError("n must be positive")
    k = check_k(k)
    guard("fiber_gf_direct", n, max_n)
    out = {}
    for hist in map_permutation_chunks("chunk_fiber_histogram", n, k, threads):
        for size, count in hist.items():
            out[size] = out.get(size, 0) + count
    return IndexedSeries(out)


# ---------------------------------------------------------------------------
# recursions on the position of the largest car

def divisors(m: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def c_coeff(n: int, i: int) -> int:
    """Number of permutations of ``S_n`` whose fiber has size ``i``."""
    if n < 0 or i < 1:
        return 0
    if n == 0:
        return 1 if i == 1 else 0
    if i > factorial(n):
        return 0
    total = 0
    for d in divisors(i):
        if d > n:
            break
        rest = i // d
        inner = 0
        for j in divisors(rest):
            left = c_coeff(d - 1, j)
            if left:
                inner += left * c_coeff(n - d, rest // j)
        total += comb(n - 1, d - 1) * inner
    return total


def fiber_gf_recursive(n: int) -> IndexedSeries:
    """``F_n`` assembled from :func:`c_coeff` over the divisors of ``n!``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return IndexedSeries({i: c_coeff(n, i) for i in divisors(factorial(n))})


@lru_cache(maxsize=None)
def log_gf(n: int) -> IndexedSeries:
    """``G_n`` by the binomial recursion; indices stand for ``q^(ln i)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return IndexedSeries({1: 1})
    out = IndexedSeries()
    for i in range(n):
        out = out + (log_gf(i) * log_gf(n - 1 - i)).scale_index(i + 1) * comb(n - 1, i)
    return out
