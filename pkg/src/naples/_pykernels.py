"""Pure-Python kernels.

Reference implementation of the hot loops, and the fallback used when the
compiled ``naples._kernels`` extension is unavailable.  Both modules expose
the same functions with the same return types.

Conventions shared by both kernel modules:

* preferences and permutations are sequences of 1-based ints;
* permutation ranks are lexicographic ranks in ``S_n`` starting at 0;
* preference tuples are indexed in lexicographic order of ``[n]^n``.
"""

from array import array
from itertools import permutations, product

# No fixed-width accumulators here; Python ints never overflow.
MAX_N = None


def park(prefs, k):
    """Run the k-Naples rule.

    Returns ``(sigma, 0)`` where ``sigma[s-1]`` is the car in spot ``s``,
    or ``(None, i)`` when car ``i`` fails to park.
    """
    n = len(prefs)
    spot_car = [0] * (n + 1)
    for car, a in enumerate(prefs, 1):
        if spot_car[a] == 0:
            spot_car[a] = car
            continue
        stop = max(1, a - k)
        s = a - 1
        while s >= stop and spot_car[s]:
            s -= 1
        if s >= stop:
            spot_car[s] = car
            continue
        s = a + 1
        while s <= n and spot_car[s]:
            s += 1
        if s > n:
            return None, car
        spot_car[s] = car
    return tuple(spot_car[1:]), 0


def ell_k_values(sigma, k):
    """Per-spot fiber factors for ``sigma`` (list, spot order)."""
    n = len(sigma)
    out = []
    for p in range(n):
        v = sigma[p]
        x = 0
        j = p - 1
        while j >= 0 and sigma[j] < v:
            x += 1
            j -= 1
        y = 1
        last = min(n - 1, p + k)
        j = p + 1
        while j <= last and sigma[j] <= v:
            y += 1
            j += 1
        if x == p:
            out.append(x + y)
        else:
            out.append(max(x - k, 0) + y)
    return out


def perm_rank(sigma):
    n = len(sigma)
    r = 0
    for i in range(n):
        v = sigma[i]
        c = 0
        for j in range(i + 1, n):
            if sigma[j] < v:
                c += 1
        r = r * (n - i) + c
    return r


def _chunk(n, prefix):
    rest = sorted(set(range(1, n + 1)).difference(prefix))
    head = tuple(prefix)
    for tail in permutations(rest):
        yield head + tail


def chunk_fiber_total(n, k, prefix):
    """Sum of fiber sizes over permutations starting with ``prefix``."""
    total = 0
    for sigma in _chunk(n, prefix):
        size = 1
        for m in ell_k_values(sigma, k):
            size *= m
        total += size
    return total


def chunk_fiber_histogram(n, k, prefix):
    """``{fiber size: number of permutations}`` over the chunk."""
    hist = {}
    for sigma in _chunk(n, prefix):
        size = 1
        for m in ell_k_values(sigma, k):
            size *= m
        hist[size] = hist.get(size, 0) + 1
    return hist


def _times_qint(coeffs, m):
    # multiply by 1 + q + ... + q^(m-1) with a sliding window sum
    out = [0] * (len(coeffs) + m - 1)
    running = 0
    for j in range(len(out)):
        if j < len(coeffs):
            running += coeffs[j]
        if j >= m:
            running -= coeffs[j - m]
        out[j] = running
    return out


def chunk_area_poly(n, k, prefix):
    """Coefficient list of the summed fiber q-polynomials over the chunk."""
    acc = [0]
    for sigma in _chunk(n, prefix):
        poly = [1]
        for m in ell_k_values(sigma, k):
            if m > 1:
                poly = _times_qint(poly, m)
        if len(poly) > len(acc):
            acc.extend([0] * (len(poly) - len(acc)))
        for e, c in enumerate(poly):
            acc[e] += c
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


def oracle_ranks(n, k):
    """Outcome rank of every tuple in ``[n]^n`` (``-1`` where a car fails)."""
    out = array("q")
    for prefs in product(range(1, n + 1), repeat=n):
        sigma, _ = park(prefs, k)
        out.append(-1 if sigma is None else perm_rank(sigma))
    return out


def oracle_tally(n, k, lo, hi):
    """Simulate every tuple and test it against per-outcome preference boxes.

    ``lo``/``hi`` are flat sequences of length ``n! * n``: entry
    ``rank * n + (car - 1)`` bounds the preference of ``car`` among tuples
    whose outcome has that rank.  Returns ``(counts, outside, first)`` where
    ``counts[rank]`` is the number of tuples with that outcome, ``outside``
    counts parked tuples lying outside their box and ``first`` is the
    lexicographic index of the first such tuple (``-1`` if none).
    """
    nfact = 1
    for i in range(2, n + 1):
        nfact *= i
    counts = array("q", bytes(8 * nfact))
    outside = 0
    first = -1
    for index, prefs in enumerate(product(range(1, n + 1), repeat=n)):
        sigma, _ = park(prefs, k)
        if sigma is None:
            continue
        r = perm_rank(sigma)
        counts[r] += 1
        base = r * n
        for c in range(n):
            if not lo[base + c] <= prefs[c] <= hi[base + c]:
                outside += 1
                if first < 0:
                    first = index
                break
    return counts, outside, first
