"""q-analogs: exact polynomials in q, the area statistics and their distributions."""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Sequence

from .core import as_preference, check_k, is_naples_pf, phi_k
from .enumeration import map_permutation_chunks, guard
from .errors import NotAKNaplesParkingFunction, NotAParkingFunction
from .fibers import ell_profile


class QPolynomial:
    """Dense polynomial in ``q`` with exact integer coefficients.

    ``coeffs[e]`` is the coefficient of ``q^e``; trailing zeros are stripped
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def __getitem__(self, e):
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == QPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.to_latex()

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def to_latex(self) -> str:
        """Descending powers, e.g. ``2q^3+7q^2+9q+6``; exponents >= 10 braced."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            head = "" if c == 1 else str(c)
            if e == 1:
                parts.append(f"{head}q")
            elif e < 10:
                parts.append(f"{head}q^{e}")
            else:
                parts.append(f"{head}q^{{{e}}}")
        return "+".join(parts)


def q_int(m: int) -> QPolynomial:
    """``[m]_q = 1 + q + ... + q^(m-1)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return QPolynomial([1] * m)


def area(pref) -> int:
    pref = as_preference(pref)
    if not is_naples_pf(pref, 0):
        raise NotAParkingFunction(pref)
    n = pref.n
    return n * (n + 1) // 2 - sum(pref)


def area_k(pref, k: int = 0) -> int:
    """k-Naples area: sum over i of ``n - i + y_k(i; phi_k(pref)) - a_i``."""
    pref = as_preference(pref)
    k = check_k(k)
    if not is_naples_pf(pref, k):
        raise NotAKNaplesParkingFunction(pref, k)
    n = pref.n
    y = ell_profile(phi_k(pref, k), k).y
    return sum(n - i + y[i - 1] - a for i, a in enumerate(pref, 1))


def fiber_area_poly(sigma, k: int = 0) -> QPolynomial:
    """Product of ``[ell_k(i; sigma)]_q`` over the spots."""
    out = QPolynomial([1])
    for m in ell_profile(sigma, k).ell_k:
        if m > 1:
            out = out * q_int(m)
    return out


def area_distribution(n: int, k: int = 0, *, threads: int = 1, max_n: int | None = None) -> QPolynomial:
    """Distribution of ``area_k`` over ``PF_{n,k}``, summed fiber by fiber."""
    if n < 1:
        raise ValueError("n must be positive")
    k = check_k(k)
    guard("area_distribution", n, max_n)
    total = QPolynomial()
    for coeffs in map_permutation_chunks("chunk_area_poly", n, k, threads):
        total = total + QPolynomial(coeffs)
    return total


class QTPolynomial:
    """Bivariate polynomial as ``{(q_exp, t_exp): coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {key: c for key, c in sorted((terms or {}).items()) if c}

    def __eq__(self, other):
        if isinstance(other, QTPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"QTPolynomial({self.terms})"

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QTPolynomial(out)

    def at_t1(self) -> QPolynomial:
        """Set ``t = 1``."""
        coeffs = {}
        for (qe, _), c in self.terms.items():
            coeffs[qe] = coeffs.get(qe, 0) + c
        top = max(coeffs, default=-1)
        return QPolynomial([coeffs.get(e, 0) for e in range(top + 1)])

    def at_q1(self) -> dict:
        """Set ``q = 1``: ``{t_exp: coeff}``."""
        out = {}
        for (_, te), c in self.terms.items():
            out[te] = out.get(te, 0) + c
        return dict(sorted(out.items()))


def qt_distribution(n: int, stat: Callable[[tuple], int], k: int = 0, *, max_n: int | None = None) -> QTPolynomial:
    """``sum over sigma of t^stat(sigma) * fiber_area_poly(sigma, k)``."""
    if n < 1:
        raise ValueError("n must be positive")
    guard("qt_distribution", n, max_n)
    out = {}
    for sigma in permutations(range(1, n + 1)):
        te = int(stat(sigma))
        if te < 0:
            raise ValueError(f"stat must be non-negative, got {te} at {sigma}")
        for qe, c in enumerate(fiber_area_poly(sigma, k).coeffs):
            if c:
                out[(qe, te)] = out.get((qe, te), 0) + c
    return QTPolynomial(out)


def inversions(sigma) -> int:
    return sum(1 for i in range(len(sigma)) for j in range(i + 1, len(sigma)) if sigma[i] > sigma[j])
