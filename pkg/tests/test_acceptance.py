"""Acceptance criteria, one test each.

Every criterion prints a single ``PASS``/``FAIL`` line.  Under pytest the
lines are collected and shown in the terminal summary; run this file directly
(``python tests/test_acceptance.py``) to see them without pytest.
"""

import itertools
import subprocess
import sys
import time

import pytest

from naples import (
    area_distribution,
    area_k,
    c_coeff,
    count_npf_permsum,
    count_npf_recursive,
    decreasing_npf_check,
    fiber_area_poly,
    fiber_gf_direct,
    fiber_gf_recursive,
    fiber_members,
    fiber_size,
    is_naples_pf,
    is_parking_function,
    labeled_dyck_to_pf,
    log_gf,
    pf_to_labeled_dyck,
    phi_k,
)
from naples.oracle import all_permutations, oracle_fibers
from naples.qstats import QPolynomial
from naples.reference import AREA_DISTRIBUTIONS, DYCK_EXAMPLE, FIBERS, FIBER_SIZE_SERIES, normalize_latex

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"criterion {number} {title}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return ok


def crit_1():
    checks = {
        "phi((4,2,2,4,1))": (phi_k((4, 2, 2, 4, 1), 0), (5, 2, 3, 1, 4)),
        "phi_1((4,2,2,4,1))": (phi_k((4, 2, 2, 4, 1), 1), (3, 2, 4, 1, 5)),
        "phi_1((3,2,2))": (phi_k((3, 2, 2), 1), (3, 2, 1)),
        "area_1((3,2,2))": (area_k((3, 2, 2), 1), 1),
    }
    bad = [name for name, (got, want) in checks.items() if got != want]
    return report(1, "golden examples", not bad, ", ".join(bad))


def crit_2():
    a = (2, 3, 5, 1, 4)
    b = (5, 1, 4, 2, 3)
    ok = (
        fiber_size(a, 0) == 12
        and set(fiber_members(a, 0)) == set(FIBERS[(a, 0)])
        and len(FIBERS[(a, 0)]) == 12
        and fiber_size(b, 2) == 9
        and set(fiber_members(b, 2)) == set(FIBERS[(b, 2)])
        and len(FIBERS[(b, 2)]) == 9
    )
    return report(2, "fiber formula", ok)


def crit_3():
    start = time.perf_counter()
    bad = []
    for n in range(1, 8):
        for k in range(n):
            permsum, rec = count_npf_permsum(n, k), count_npf_recursive(n, k)
            if permsum != rec:
                bad.append((n, k))
        if count_npf_recursive(n, 0) != (n + 1) ** (n - 1) or count_npf_permsum(n, 0) != (n + 1) ** (n - 1):
            bad.append((n, 0, "closed"))
        if count_npf_recursive(n, n - 1) != n ** n or count_npf_permsum(n, n - 1) != n ** n:
            bad.append((n, n - 1, "n^n"))
    elapsed = time.perf_counter() - start
    return report(3, "counting agreement", not bad and elapsed < 30, f"{elapsed:.2f}s {bad or ''}".strip())


def crit_4():
    start = time.perf_counter()
    bad = None
    for n in range(1, 7):
        for k in range(n):
            grouped = oracle_fibers(n, k)
            for sigma in all_permutations(n):
                if sorted(grouped[sigma]) != sorted(fiber_members(sigma, k)):
                    bad = (n, k, sigma)
                    break
            if bad:
                break
        if bad:
            break
    elapsed = time.perf_counter() - start
    return report(4, "oracle equivalence", bad is None and elapsed < 30, f"{elapsed:.2f}s {bad or ''}".strip())


def crit_5():
    bad = [n for n, series in FIBER_SIZE_SERIES.items() if fiber_gf_direct(n) != series]
    for n in range(1, 7):
        direct = fiber_gf_direct(n)
        by_coeff = {i: c for i in range(1, max(dict(direct.terms)) + 1) if (c := c_coeff(n, i))}
        if not (fiber_gf_recursive(n) == direct and log_gf(n) == direct and direct == by_coeff):
            bad.append(n)
    return report(5, "generating functions", not bad, str(bad) if bad else "")


def crit_6():
    bad = None
    for n in range(1, 6):
        for k in range(n):
            for sigma in all_permutations(n):
                counts = {}
                for p in fiber_members(sigma, k):
                    e = area_k(p, k)
                    counts[e] = counts.get(e, 0) + 1
                hist = QPolynomial([counts.get(e, 0) for e in range(max(counts) + 1)])
                if fiber_area_poly(sigma, k) != hist:
                    bad = (n, k, sigma)
    return report(6, "q-identities", bad is None, str(bad) if bad else "")


def crit_7():
    # math-mode whitespace is insignificant and the printed rows space
    # inconsistently, so rows are compared with whitespace removed
    bad = [nk for nk, row in AREA_DISTRIBUTIONS.items()
           if area_distribution(*nk).to_latex().encode() != normalize_latex(row).encode()]
    ok = not bad and len(AREA_DISTRIBUTIONS) == 15
    return report(7, "area_k distribution table", ok, str(bad) if bad else "15 rows")


def crit_8():
    bad = []
    for n in range(1, 7):
        for p in itertools.product(range(1, n + 1), repeat=n):
            if is_parking_function(p) and labeled_dyck_to_pf(pf_to_labeled_dyck(p)) != p:
                bad.append(p)
        for c in itertools.combinations_with_replacement(range(1, n + 1), n):
            p = tuple(sorted(c, reverse=True))
            for k in range(n):
                if decreasing_npf_check(p, k) != is_naples_pf(p, k):
                    bad.append((p, k))
    path = pf_to_labeled_dyck(DYCK_EXAMPLE["pref"])
    runs = tuple(path.column_runs()[: len(DYCK_EXAMPLE["runs"])])
    labels = tuple(tuple(c) for c in path.label_columns() if c)
    if runs != DYCK_EXAMPLE["runs"] or labels != DYCK_EXAMPLE["labels"]:
        bad.append("figure")
    return report(8, "bijections", not bad, str(bad[:3]) if bad else "")


def crit_9():
    outs = []
    for method in ("recursive", "permsum"):
        for threads in ("1", "8"):
            cmd = [sys.executable, "-m", "naples", "count", "--n", "7", "--k", "3",
                   "--method", method, "--threads", threads]
            outs.append(subprocess.run(cmd, capture_output=True, check=True).stdout)
    ok = outs[0] == outs[1] and outs[2] == outs[3] and outs[0] == outs[2]
    return report(9, "determinism under threads", ok, outs[0].decode().strip())


CRITERIA = [crit_1, crit_2, crit_3, crit_4, crit_5, crit_6, crit_7, crit_8, crit_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_criterion(criterion):
    assert criterion()


if __name__ == "__main__":
    sys.exit(0 if all([c() for c in CRITERIA]) else 1)
