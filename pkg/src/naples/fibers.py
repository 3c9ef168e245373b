"""Run-length statistics of permutations and the fibers of the outcome map.

For a permutation ``sigma`` (spot ``i`` holds car ``sigma[i-1]``) and a
backup distance ``k``, the preferences that produce ``sigma`` form a box:
each car independently ranges over an interval of spots.  The interval
lengths are the values ``ell_k(i; sigma)`` indexed by spot.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterator, Sequence

from .core import ParkingPreference, Permutation, as_permutation, check_k, inverse


def ell(i: int, sigma: Sequence[int]) -> int:
    """Length of the longest run ``s_j ... s_i`` with every entry ``<= s_i``."""
    sigma = as_permutation(sigma)
    if not 1 <= i <= len(sigma):
        raise IndexError(f"spot {i} out of range for n={len(sigma)}")
    v = sigma[i - 1]
    j = i - 1
    while j > 0 and sigma[j - 1] <= v:
        j -= 1
    return i - j


@dataclass(frozen=True)
class EllProfile:
    """Per-spot statistics of ``sigma`` for backup distance ``k``.

    ``x[i-1]``: length of the run immediately left of spot ``i`` whose cars are
    all smaller than ``s_i``.  ``y[i-1]``: length of the run starting at spot
    ``i``, at most ``k + 1`` long, whose cars are all ``<= s_i``.
    ``ell_k[i-1]`` combines the two.
    """

    sigma: Permutation
    k: int
    x: tuple
    y: tuple
    ell_k: tuple

    @property
    def n(self):
        return len(self.sigma)


def _combine(i, x, y, k):
    # the run reaching spot 1 can always be backed out of
    if x == i - 1:
        return x + y
    return max(x - k, 0) + y


def ell_profile(sigma: Sequence[int], k: int = 0) -> EllProfile:
    sigma = as_permutation(sigma)
    k = check_k(k)
    n = len(sigma)
    xs, ys, ells = [], [], []
    for i in range(1, n + 1):
        v = sigma[i - 1]
        j = i - 1
        while j >= 1 and sigma[j - 1] < v:
            j -= 1
        x = i - 1 - j
        r = i
        last = min(n, i + k)
        while r < last and sigma[r] <= v:
            r += 1
        y = r - i + 1
        xs.append(x)
        ys.append(y)
        ells.append(_combine(i, x, y, k))
    return EllProfile(sigma, k, tuple(xs), tuple(ys), tuple(ells))


def fiber_size(sigma: Sequence[int], k: int = 0) -> int:
    """Number of preferences whose ``k``-Naples outcome is ``sigma``."""
    return prod(ell_profile(sigma, k).ell_k)


@dataclass(frozen=True)
class AdmissibleSets:
    """The fiber of ``sigma`` as a box of per-car preference intervals.

    ``sets[c-1]`` is the range of preferences letting car ``c`` land on its
    spot ``pi[c-1]``: the spot itself, up to ``y - 1`` occupied spots to its
    right (the car backs into place), and occupied spots to its left it can
    drive forward from without first backing into an earlier hole.
    """

    sigma: Permutation
    k: int
    pi: Permutation
    sets: tuple  # of range objects, car-indexed

    @property
    def size(self) -> int:
        return prod(len(s) for s in self.sets)

    def __contains__(self, pref) -> bool:
        return len(pref) == len(self.sets) and all(a in s for a, s in zip(pref, self.sets))

    def __iter__(self) -> Iterator[ParkingPreference]:
        for prefs in product(*self.sets):
            yield ParkingPreference(prefs)

    def to_offsets(self, pref) -> tuple:
        """Distance of each entry below the top of its interval."""
        if pref not in self:
            raise ValueError(f"{tuple(pref)} is not in the fiber of {self.sigma}")
        return tuple(s[-1] - a for a, s in zip(pref, self.sets))

    def from_offsets(self, offsets) -> ParkingPreference:
        prefs = []
        for u, s in zip(offsets, self.sets):
            if not 0 <= u < len(s):
                raise ValueError(f"offset {u} outside [0, {len(s)})")
            prefs.append(s[-1] - u)
        return ParkingPreference(prefs)


def admissible_sets(sigma: Sequence[int], k: int = 0) -> AdmissibleSets:
    profile = ell_profile(sigma, k)
    pi = inverse(profile.sigma)
    sets = []
    for spot in pi:
        x = profile.x[spot - 1]
        y = profile.y[spot - 1]
        if x == spot - 1:
            lo = 1
        else:
            # a preference closer than k to the hole left of the run would back into it
            lo = spot - max(x - k, 0)
        sets.append(range(lo, spot + y))
    return AdmissibleSets(profile.sigma, profile.k, pi, tuple(sets))


def fiber_members(sigma: Sequence[int], k: int = 0) -> Iterator[ParkingPreference]:
    """All preferences with outcome ``sigma``, in lexicographic order."""
    return iter(admissible_sets(sigma, k))
