"""Cross-validation of every identity the library relies on.

Each check walks its inputs by increasing ``n`` and then lexicographically,
stopping at the first failure, so a reported counterexample is the minimal
one.  Checks whose cost grows like ``n^n * n!`` or worse are capped; the
range actually covered is recorded in the report.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import prod
from typing import Any, Callable, Iterable, Optional

from . import _backend
from .core import is_naples_pf, phi_k, simulate
from .enumeration import (
    c_coeff,
    count_npf_permsum,
    count_npf_recursive,
    count_pf_closed,
    fiber_gf_direct,
    fiber_gf_recursive,
    log_gf,
)
from .fibers import admissible_sets, ell, ell_profile, fiber_members, fiber_size
from .oracle import ORACLE_MAX_N, all_permutations, tuple_at
from .paths import (
    LatticePath,
    all_labeled_dyck_paths,
    count_decreasing_npf,
    decreasing_npf_check,
    decreasing_to_klattice,
    labeled_dyck_to_pf,
    pf_to_labeled_dyck,
)
from .qstats import QPolynomial, area, area_distribution, area_k, fiber_area_poly
from .reference import (
    AREA_DISTRIBUTIONS,
    DYCK_EXAMPLE,
    FIBER_SIZE_SERIES,
    FIBERS,
    KLATTICE_EXAMPLE,
    OUTCOMES,
    normalize_latex,
)

# per-check ceilings on n for the super-exponential checks
FIBER_HISTOGRAM_MAX_N = 6
DYCK_MAX_N = 6
DYCK_REVERSE_MAX_N = 5
TABLE_MAX_N = 5


@dataclass
class CheckResult:
    name: str
    params: str
    passed: bool
    counterexample: Optional[Any] = None
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    n_max: int
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }


def _first_failure(cases: Iterable) -> Optional[Any]:
    """``cases`` yields ``(input, ok)``; return the first failing input."""
    for case, ok in cases:
        if not ok:
            return case
    return None


def _run(report, name, params, fn: Callable[[], Optional[Any]]):
    start = time.perf_counter()
    try:
        counterexample = fn()
    except Exception as exc:  # a crash is a failed check, not an aborted report
        counterexample = f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    report.checks.append(
        CheckResult(name, params, counterexample is None, _jsonable(counterexample), round(elapsed, 6))
    )


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


def _ks(n):
    return range(n)


# ---------------------------------------------------------------------------
# individual checks; each returns None or a minimal counterexample

def check_golden_outcomes():
    def cases():
        for (pref, k), sigma in OUTCOMES.items():
            yield (pref, k), phi_k(pref, k) == sigma
        yield ((3, 2, 2), 0), not is_naples_pf((3, 2, 2), 0)
        yield ((3, 2, 2), 1, "area_k"), area_k((3, 2, 2), 1) == 1
    return _first_failure(cases())


def check_golden_fibers():
    def cases():
        for (sigma, k), members in FIBERS.items():
            got = list(fiber_members(sigma, k))
            yield (sigma, k), got == members and fiber_size(sigma, k) == len(members)
    return _first_failure(cases())


def check_fibers_vs_oracle(n_max):
    """Constructive boxes equal the simulated fibers, exactly."""
    def cases():
        for n in range(1, n_max + 1):
            perms = all_permutations(n)
            for k in _ks(n):
                boxes = [admissible_sets(sigma, k) for sigma in perms]
                lo = [s.start for box in boxes for s in box.sets]
                hi = [s.stop - 1 for box in boxes for s in box.sets]
                counts, outside, first = _backend.kernels().oracle_tally(n, k, lo, hi)
                if outside:
                    yield (n, k, "outside box", tuple_at(n, first)), False
                    return
                bad = next((perms[r] for r, box in enumerate(boxes) if counts[r] != box.size), None)
                yield (n, k, "fiber size", bad), bad is None
    return _first_failure(cases())


def check_counts(n_max):
    def cases():
        for n in range(1, n_max + 1):
            for k in _ks(n):
                rec = count_npf_recursive(n, k)
                ok = count_npf_permsum(n, k, max_n=n_max) == rec
                if k == 0:
                    ok = ok and rec == count_pf_closed(n)
                if k == n - 1:
                    ok = ok and rec == n ** n
                yield (n, k), ok
    return _first_failure(cases())


def check_generating_functions(n_max):
    def cases():
        for n, series in FIBER_SIZE_SERIES.items():
            if n <= n_max:
                yield ("golden", n), fiber_gf_direct(n, max_n=n_max) == series
        for n in range(1, n_max + 1):
            direct = fiber_gf_direct(n, max_n=n_max)
            ok = (
                direct == fiber_gf_recursive(n)
                and direct == log_gf(n)
                and direct.total() == prod(range(1, n + 1))
                and direct.weighted_total() == count_pf_closed(n)
            )
            yield ("recursions", n), ok
        yield ("c_coeff", 5, 12), c_coeff(5, 12) == 15
    return _first_failure(cases())


def check_q_histograms(n_max):
    def cases():
        for n in range(1, min(n_max, FIBER_HISTOGRAM_MAX_N) + 1):
            for k in _ks(n):
                for sigma in all_permutations(n):
                    hist = {}
                    for p in fiber_members(sigma, k):
                        a = area_k(p, k)
                        hist[a] = hist.get(a, 0) + 1
                    top = max(hist)
                    got = QPolynomial([hist.get(e, 0) for e in range(top + 1)])
                    yield (n, k, sigma), got == fiber_area_poly(sigma, k)
    return _first_failure(cases())


def check_area_distributions(n_max):
    def cases():
        for n in range(1, n_max + 1):
            for k in _ks(n):
                dist = area_distribution(n, k, max_n=n_max)
                ok = (
                    dist(1) == count_npf_recursive(n, k)
                    and dist.degree == n * (n - 1) // 2
                    and dist[0] == prod(range(1, n + 1))
                )
                yield (n, k), ok
    return _first_failure(cases())


def check_table(n_max):
    def cases():
        for (n, k), row in AREA_DISTRIBUTIONS.items():
            if n <= min(n_max, TABLE_MAX_N):
                latex = area_distribution(n, k).to_latex()
                yield (n, k, latex), latex == normalize_latex(row)
    return _first_failure(cases())


def check_decreasing(n_max):
    """Inequality test vs simulation on every weakly decreasing tuple."""
    def cases():
        for n in range(1, n_max + 1):
            tuples = [tuple(sorted(c, reverse=True))
                      for c in combinations_with_replacement(range(1, n + 1), n)]
            tuples.sort()
            for k in _ks(n):
                for p in tuples:
                    ok = decreasing_npf_check(p, k) == is_naples_pf(p, k)
                    if ok and decreasing_npf_check(p, k):
                        path = decreasing_to_klattice(p, k)
                        ok = path.stays_below(k) and path.steps[0] == "S"
                    yield (p, k), ok
                paths = sum(
                    1 for w in _words(n)
                    if w[0] == "S" and LatticePath(w).stays_below(k)
                )
                yield (n, k, "path count"), count_decreasing_npf(n, k) == paths
        ex = KLATTICE_EXAMPLE
        corners = decreasing_to_klattice(ex["pref"], ex["k"]).corners()
        yield ("figure", ex["pref"]), corners == list(ex["corners"])
    return _first_failure(cases())


def check_dyck(n_max):
    def cases():
        ex = DYCK_EXAMPLE
        path = pf_to_labeled_dyck(ex["pref"])
        ok = (
            tuple(path.column_runs()[: len(ex["runs"])]) == ex["runs"]
            and tuple(tuple(c) for c in path.label_columns() if c) == ex["labels"]
            and path.corners() == list(ex["vertices"])
        )
        yield ("figure", ex["pref"]), ok
        for n in range(1, min(n_max, DYCK_MAX_N) + 1):
            for p in product(range(1, n + 1), repeat=n):
                if not is_naples_pf(p, 0):
                    continue
                path = pf_to_labeled_dyck(p)
                ok = labeled_dyck_to_pf(path) == p and path.is_dyck() and path.area() == area(p)
                yield p, ok
        for n in range(1, min(n_max, DYCK_REVERSE_MAX_N) + 1):
            for path in all_labeled_dyck_paths(n):
                yield (path.steps, path.labels), pf_to_labeled_dyck(labeled_dyck_to_pf(path)) == path
    return _first_failure(cases())


def check_simulator(n_max):
    """Permutations park directly, nesting in k, saturation at k = n - 1."""
    def cases():
        for n in range(1, min(n_max, 6) + 1):
            for sigma in all_permutations(n):
                # a permutation preference parks every car at its first choice
                yield (sigma, "identity"), all(simulate(sigma, k).pi == sigma for k in range(n + 1))
            for p in product(range(1, n + 1), repeat=n):
                flags = [is_naples_pf(p, k) for k in range(n)]
                nested = all(b or not a for a, b in zip(flags, flags[1:]))
                saturated = simulate(p, n - 1) == simulate(p, n + 2)
                yield (p, "nesting"), nested and saturated and flags[-1]
    return _first_failure(cases())


def check_ell(n_max):
    """Run statistics agree with their reversal formulation."""
    def cases():
        for n in range(1, min(n_max, 6) + 1):
            for sigma in all_permutations(n):
                for k in _ks(n):
                    prof = ell_profile(sigma, k)
                    for i in range(1, n + 1):
                        right = _weak_right_run(sigma, i)
                        ok = (
                            prof.y[i - 1] == min(k + 1, right)
                            and prof.x[i - 1] == ell(i, sigma) - 1
                            and (k > 0 or prof.ell_k[i - 1] == ell(i, sigma))
                        )
                        yield (sigma, k, i), ok
    return _first_failure(cases())


def _weak_right_run(sigma, i):
    v = sigma[i - 1]
    r = i
    while r < len(sigma) and sigma[r] <= v:
        r += 1
    return r - i + 1


def _words(n):
    for south in combinations(range(2 * n), n):
        s = set(south)
        yield "".join("S" if j in s else "E" for j in range(2 * n))


def verify(n_max: int) -> VerificationReport:
    if not 1 <= n_max <= ORACLE_MAX_N:
        raise ValueError(f"n_max must be in [1, {ORACLE_MAX_N}]")
    report = VerificationReport(n_max)
    small = min(n_max, 6)
    _run(report, "golden outcomes and area_1", "worked examples", check_golden_outcomes)
    _run(report, "golden fibers", "worked examples", check_golden_fibers)
    _run(report, "simulator identity/nesting/saturation", f"n<={small}", lambda: check_simulator(n_max))
    _run(report, "run statistics vs reversal form", f"n<={small}", lambda: check_ell(n_max))
    _run(report, "constructive fibers vs oracle", f"n<={n_max}, 0<=k<n", lambda: check_fibers_vs_oracle(n_max))
    _run(report, "permutation sum vs recursion", f"n<={n_max}, 0<=k<n", lambda: check_counts(n_max))
    _run(report, "fiber-size generating functions", f"n<={n_max}", lambda: check_generating_functions(n_max))
    _run(
        report, "fiber q-identity (area_k histograms)",
        f"n<={min(n_max, FIBER_HISTOGRAM_MAX_N)}, 0<=k<n", lambda: check_q_histograms(n_max),
    )
    _run(report, "area_k distribution consistency", f"n<={n_max}, 0<=k<n", lambda: check_area_distributions(n_max))
    _run(report, "area_k distribution table", f"n<={min(n_max, TABLE_MAX_N)}", lambda: check_table(n_max))
    _run(report, "decreasing criterion vs simulation", f"n<={n_max}, 0<=k<n", lambda: check_decreasing(n_max))
    _run(
        report, "labeled Dyck bijection",
        f"n<={min(n_max, DYCK_MAX_N)} (reverse n<={min(n_max, DYCK_REVERSE_MAX_N)})",
        lambda: check_dyck(n_max),
    )
    return report
