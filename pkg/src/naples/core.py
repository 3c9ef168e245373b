"""Domain types and the k-Naples parking simulator.

Spots and cars are numbered from 1.  A car whose preferred spot is taken
first backs up through at most ``k`` spots (nearest first, never past spot
1), then drives forward; it fails if it reaches the end of the street.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .errors import CarFailedToPark, InvalidPermutation, InvalidPreference

Permutation = tuple  # one-line notation, 1-based values


class ParkingPreference(tuple):
    """A tuple ``(a_1, ..., a_n)`` with every ``a_i`` in ``[1, n]``."""

    __slots__ = ()

    def __new__(cls, prefs: Iterable[int] = ()):
        values = tuple(int(a) for a in prefs)
        n = len(values)
        if n == 0:
            raise InvalidPreference("a parking preference needs at least one car")
        for i, a in enumerate(values, 1):
            if not 1 <= a <= n:
                raise InvalidPreference(f"a_{i}={a} is outside [1, {n}]")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self):
        return f"ParkingPreference({tuple(self)})"


def as_preference(prefs) -> ParkingPreference:
    if isinstance(prefs, ParkingPreference):
        return prefs
    return ParkingPreference(prefs)


def as_permutation(sigma: Iterable[int]) -> Permutation:
    values = tuple(int(s) for s in sigma)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InvalidPermutation(f"{values} is not a permutation of 1..{len(values)}")
    return values


def inverse(sigma: Sequence[int]) -> Permutation:
    out = [0] * len(sigma)
    for spot, car in enumerate(sigma, 1):
        out[car - 1] = spot
    return tuple(out)


def check_k(k: int) -> int:
    k = int(k)
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return k


def parse_sequence(text: str) -> tuple:
    """Parse ``"23514"`` (single digits) or ``"2,3,5,1,4"``."""
    text = text.strip()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise InvalidPreference(f"cannot parse {text!r} as a sequence of integers") from None


def format_sequence(values: Sequence[int]) -> str:
    """Compact one-line string when every entry is a single digit."""
    if len(values) <= 9 and all(0 <= v <= 9 for v in values):
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


@dataclass(frozen=True)
class Outcome:
    """Where everyone parked.

    ``sigma[s-1]`` is the car in spot ``s``; ``pi[c-1]`` is the spot of car ``c``.
    """

    sigma: Permutation
    pi: Permutation

    @classmethod
    def from_sigma(cls, sigma: Sequence[int]) -> "Outcome":
        sigma = tuple(sigma)
        return cls(sigma, inverse(sigma))

    @property
    def n(self) -> int:
        return len(self.sigma)


def simulate(pref, k: int = 0) -> Outcome:
    """Park the cars of ``pref`` under the ``k``-Naples rule.

    Raises :class:`CarFailedToPark` naming the first car that drives off.
    """
    pref = as_preference(pref)
    k = min(check_k(k), pref.n)
    sigma, failed = _backend.kernels().park(pref, k)
    if failed:
        raise CarFailedToPark(failed, tuple(pref), k)
    return Outcome.from_sigma(sigma)


def phi_k(pref, k: int = 0) -> Permutation:
    """The outcome permutation (spot-indexed car numbers)."""
    return simulate(pref, k).sigma


def is_naples_pf(pref, k: int = 0) -> bool:
    pref = as_preference(pref)
    k = min(check_k(k), pref.n)
    _, failed = _backend.kernels().park(pref, k)
    return not failed


def is_parking_function(pref) -> bool:
    return is_naples_pf(pref, 0)
