# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; mirrors ``naples._pykernels`` function for function."""

from array import array

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc, qsort

# Chunk accumulators are uint64: every per-permutation product is at most
# n! and every sum at most n^n, both below 2**64 while n <= 15.
MAX_N = 15


cdef int _park(int n, int k, const int* prefs, int* spot_car) noexcept nogil:
    # spot_car[1..n], 0 marks an empty spot; returns the failing car or 0
    cdef int car, a, s, stop
    for s in range(n + 1):
        spot_car[s] = 0
    for car in range(1, n + 1):
        a = prefs[car - 1]
        if spot_car[a] == 0:
            spot_car[a] = car
            continue
        stop = a - k
        if stop < 1:
            stop = 1
        s = a - 1
        while s >= stop and spot_car[s] != 0:
            s -= 1
        if s >= stop:
            spot_car[s] = car
            continue
        s = a + 1
        while s <= n and spot_car[s] != 0:
            s += 1
        if s > n:
            return car
        spot_car[s] = car
    return 0


cdef void _ell_k(int n, int k, const int* s, int* out) noexcept nogil:
    cdef int p, j, x, y, last, v
    for p in range(n):
        v = s[p]
        x = 0
        j = p - 1
        while j >= 0 and s[j] < v:
            x += 1
            j -= 1
        y = 1
        last = p + k
        if last > n - 1:
            last = n - 1
        j = p + 1
        while j <= last and s[j] <= v:
            y += 1
            j += 1
        if x == p:
            out[p] = x + y
        elif x > k:
            out[p] = x - k + y
        else:
            out[p] = y


cdef int64_t _rank(int n, const int* s) noexcept nogil:
    cdef int i, j, c
    cdef int64_t r = 0
    for i in range(n):
        c = 0
        for j in range(i + 1, n):
            if s[j] < s[i]:
                c += 1
        r = r * (n - i) + c
    return r


cdef bint _next_perm(int* a, int lo, int n) noexcept nogil:
    # lexicographic successor of a[lo:n]; False once exhausted
    cdef int i = n - 2, j, t
    while i >= lo and a[i] >= a[i + 1]:
        i -= 1
    if i < lo:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]
    a[i] = a[j]
    a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]
        a[i] = a[j]
        a[j] = t
        i += 1
        j -= 1
    return True


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t*>a)[0]
    cdef uint64_t y = (<const uint64_t*>b)[0]
    return (x > y) - (x < y)


cdef int* _start_perm(int n, prefix) except NULL:
    cdef int* perm = <int*>malloc(n * sizeof(int))
    if perm == NULL:
        raise MemoryError()
    head = list(prefix)
    rest = sorted(set(range(1, n + 1)).difference(head))
    for i, v in enumerate(head + rest):
        perm[i] = v
    return perm


def _check_n(int n):
    if n < 1 or n > MAX_N:
        raise OverflowError(f"compiled kernels support 1 <= n <= {MAX_N}, got {n}")


def park(prefs, int k):
    cdef int n = len(prefs)
    cdef int* p = <int*>malloc(n * sizeof(int))
    cdef int* spot_car = <int*>malloc((n + 1) * sizeof(int))
    cdef int failed
    if p == NULL or spot_car == NULL:
        free(p)
        free(spot_car)
        raise MemoryError()
    try:
        for i in range(n):
            p[i] = prefs[i]
        if k > n:
            k = n
        failed = _park(n, k, p, spot_car)
        if failed:
            return None, failed
        return tuple([spot_car[s] for s in range(1, n + 1)]), 0
    finally:
        free(p)
        free(spot_car)


def ell_k_values(sigma, int k):
    cdef int n = len(sigma)
    cdef int* s = <int*>malloc(n * sizeof(int))
    cdef int* out = <int*>malloc(n * sizeof(int))
    try:
        for i in range(n):
            s[i] = sigma[i]
        _ell_k(n, k, s, out)
        return [out[i] for i in range(n)]
    finally:
        free(s)
        free(out)


def perm_rank(sigma):
    cdef int n = len(sigma)
    cdef int* s = <int*>malloc(n * sizeof(int))
    try:
        for i in range(n):
            s[i] = sigma[i]
        return _rank(n, s)
    finally:
        free(s)


def chunk_fiber_total(int n, int k, prefix):
    _check_n(n)
    cdef int lo = len(prefix)
    cdef int* perm = _start_perm(n, prefix)
    cdef int* ell = <int*>malloc(n * sizeof(int))
    cdef uint64_t total = 0, size
    cdef int p
    try:
        with nogil:
            while True:
                _ell_k(n, k, perm, ell)
                size = 1
                for p in range(n):
                    size *= ell[p]
                total += size
                if not _next_perm(perm, lo, n):
                    break
        return total
    finally:
        free(perm)
        free(ell)


def chunk_fiber_histogram(int n, int k, prefix):
    _check_n(n)
    cdef int lo = len(prefix)
    cdef Py_ssize_t count = 1, i, m = 0
    for i in range(2, n - lo + 1):
        count *= i
    cdef int* perm = _start_perm(n, prefix)
    cdef int* ell = <int*>malloc(n * sizeof(int))
    cdef uint64_t* sizes = <uint64_t*>malloc(count * sizeof(uint64_t))
    cdef uint64_t size
    cdef int p
    if ell == NULL or sizes == NULL:
        free(perm)
        free(ell)
        free(sizes)
        raise MemoryError()
    try:
        with nogil:
            while True:
                _ell_k(n, k, perm, ell)
                size = 1
                for p in range(n):
                    size *= ell[p]
                sizes[m] = size
                m += 1
                if not _next_perm(perm, lo, n):
                    break
            qsort(sizes, m, sizeof(uint64_t), _cmp_u64)
        hist = {}
        i = 0
        while i < m:
            size = sizes[i]
            p = 0
            while i < m and sizes[i] == size:
                i += 1
                p += 1
            hist[size] = p
        return hist
    finally:
        free(perm)
        free(ell)
        free(sizes)


def chunk_area_poly(int n, int k, prefix):
    _check_n(n)
    cdef int lo = len(prefix)
    # sum of (ell - 1) is at most n * (n - 1)
    cdef int cap = n * (n - 1) + 1
    cdef int* perm = _start_perm(n, prefix)
    cdef int* ell = <int*>malloc(n * sizeof(int))
    cdef uint64_t* cur = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef uint64_t* acc = <uint64_t*>calloc(cap, sizeof(uint64_t))
    cdef uint64_t* tmp
    cdef uint64_t running
    cdef int p, j, m, deg, newdeg, top = 0
    if ell == NULL or cur == NULL or nxt == NULL or acc == NULL:
        free(perm)
        free(ell)
        free(cur)
        free(nxt)
        free(acc)
        raise MemoryError()
    try:
        with nogil:
            while True:
                _ell_k(n, k, perm, ell)
                cur[0] = 1
                deg = 0
                for p in range(n):
                    m = ell[p]
                    if m == 1:
                        continue
                    newdeg = deg + m - 1
                    running = 0
                    for j in range(newdeg + 1):
                        if j <= deg:
                            running += cur[j]
                        if j >= m:
                            running -= cur[j - m]
                        nxt[j] = running
                    tmp = cur
                    cur = nxt
                    nxt = tmp
                    deg = newdeg
                for j in range(deg + 1):
                    acc[j] += cur[j]
                if deg > top:
                    top = deg
                if not _next_perm(perm, lo, n):
                    break
        while top > 0 and acc[top] == 0:
            top -= 1
        return [acc[j] for j in range(top + 1)]
    finally:
        free(perm)
        free(ell)
        free(cur)
        free(nxt)
        free(acc)


def oracle_ranks(int n, int k):
    if n < 1:
        raise ValueError("n must be positive")
    cdef int64_t total = 1
    cdef int i
    for i in range(n):
        total *= n
    out = array("q", bytes(8 * total))
    cdef int64_t[::1] view = out
    cdef int* prefs = <int*>malloc(n * sizeof(int))
    cdef int* spot_car = <int*>malloc((n + 1) * sizeof(int))
    cdef int64_t index
    cdef int kk = k if k < n else n
    if prefs == NULL or spot_car == NULL:
        free(prefs)
        free(spot_car)
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                prefs[i] = 1
            for index in range(total):
                if _park(n, kk, prefs, spot_car):
                    view[index] = -1
                else:
                    view[index] = _rank(n, spot_car + 1)
                i = n - 1
                while i >= 0 and prefs[i] == n:
                    prefs[i] = 1
                    i -= 1
                if i >= 0:
                    prefs[i] += 1
        return out
    finally:
        free(prefs)
        free(spot_car)


def oracle_tally(int n, int k, lo, hi):
    if n < 1:
        raise ValueError("n must be positive")
    cdef int64_t total = 1, nfact = 1
    cdef int i
    for i in range(n):
        total *= n
        nfact *= i + 1
    lo_arr = array("i", lo)
    hi_arr = array("i", hi)
    if len(lo_arr) != nfact * n or len(hi_arr) != nfact * n:
        raise ValueError("box arrays must have length n! * n")
    counts = array("q", bytes(8 * nfact))
    cdef int[::1] lov = lo_arr
    cdef int[::1] hiv = hi_arr
    cdef int64_t[::1] cv = counts
    cdef int* prefs = <int*>malloc(n * sizeof(int))
    cdef int* spot_car = <int*>malloc((n + 1) * sizeof(int))
    cdef int64_t index, r, base, outside = 0, first = -1
    cdef int c
    cdef int kk = k if k < n else n
    if prefs == NULL or spot_car == NULL:
        free(prefs)
        free(spot_car)
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                prefs[i] = 1
            for index in range(total):
                if not _park(n, kk, prefs, spot_car):
                    r = _rank(n, spot_car + 1)
                    cv[r] += 1
                    base = r * n
                    for c in range(n):
                        if prefs[c] < lov[base + c] or prefs[c] > hiv[base + c]:
                            outside += 1
                            if first < 0:
                                first = index
                            break
                i = n - 1
                while i >= 0 and prefs[i] == n:
                    prefs[i] = 1
                    i -= 1
                if i >= 0:
                    prefs[i] += 1
        return counts, outside, first
    finally:
        free(prefs)
        free(spot_car)
