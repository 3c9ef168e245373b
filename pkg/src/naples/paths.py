"""Lattice paths: labeled Dyck paths for parking functions and k-lattice
paths for weakly decreasing k-Naples parking functions.

Paths run from ``(0, n)`` to ``(n, 0)`` by unit South and East steps and are
stored as a step string such as ``"SESSESSESEEE"``.  Dyck paths stay on the
origin side of the anti-diagonal: every vertex has ``x + y <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .core import ParkingPreference, as_preference, check_k, is_naples_pf
from .errors import InvalidPath, NotAKNaplesParkingFunction, NotAParkingFunction, NotDecreasing

SOUTH, EAST = "S", "E"


@dataclass(frozen=True)
class LatticePath:
    steps: str
    labels: Optional[tuple] = None  # one label per South step, in path order

    def __post_init__(self):
        if set(self.steps) - {SOUTH, EAST}:
            raise InvalidPath(f"steps must be S/E, got {self.steps!r}")
        if self.steps.count(SOUTH) != self.steps.count(EAST):
            raise InvalidPath("a path needs as many South as East steps")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.steps.count(SOUTH):
                raise InvalidPath("need exactly one label per South step")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def vertices(self) -> list:
        x, y = 0, self.n
        out = [(x, y)]
        for step in self.steps:
            if step == SOUTH:
                y -= 1
            else:
                x += 1
            out.append((x, y))
        return out

    def corners(self) -> list:
        """Vertices where the direction changes, plus both endpoints."""
        pts = self.vertices()
        out = [pts[0]]
        for prev, cur, nxt in zip(pts, pts[1:], pts[2:]):
            if (cur[0] - prev[0], cur[1] - prev[1]) != (nxt[0] - cur[0], nxt[1] - cur[1]):
                out.append(cur)
        out.append(pts[-1])
        return out

    def column_runs(self) -> list:
        """South steps taken on each vertical line ``x = 0 .. n``."""
        runs = [0] * (self.n + 1)
        x = 0
        for step in self.steps:
            if step == SOUTH:
                runs[x] += 1
            else:
                x += 1
        return runs

    def east_heights(self) -> list:
        """Height of each East step, left to right."""
        return [y for (x, y), step in zip(self.vertices(), self.steps) if step == EAST]

    def max_excess(self) -> int:
        """Largest ``x + y - n`` over the vertices (0 for a Dyck path)."""
        return max(x + y for x, y in self.vertices()) - self.n

    def stays_below(self, k: int = 0) -> bool:
        """True when no vertex lies above the line ``y = n - x + k``."""
        return self.max_excess() <= k

    def is_dyck(self) -> bool:
        return self.stays_below(0)

    def label_columns(self) -> list:
        """Labels grouped by vertical line (requires labels)."""
        if self.labels is None:
            raise InvalidPath("path is unlabeled")
        out = [[] for _ in range(self.n + 1)]
        labels = iter(self.labels)
        x = 0
        for step in self.steps:
            if step == SOUTH:
                out[x].append(next(labels))
            else:
                x += 1
        return out

    def area(self) -> int:
        """Complete unit squares between the path and the anti-diagonal."""
        total = 0
        for col, h in enumerate(self.east_heights(), 1):
            # column [col-1, col]: diagonal leaves it at height n - col
            total += max(self.n - col - h, 0)
        return total


def pf_to_labeled_dyck(pref) -> LatticePath:
    """Column ``i`` carries one South step per car preferring spot ``i``,
    labeled by those cars in increasing order."""
    pref = as_preference(pref)
    if not is_naples_pf(pref, 0):
        raise NotAParkingFunction(pref)
    n = pref.n
    steps, labels = [], []
    for spot in range(1, n + 1):
        cars = [car for car, a in enumerate(pref, 1) if a == spot]
        steps.append(SOUTH * len(cars))
        labels.extend(cars)
        steps.append(EAST)
    return LatticePath("".join(steps), tuple(labels))


def labeled_dyck_to_pf(path: LatticePath) -> ParkingPreference:
    if path.labels is None:
        raise InvalidPath("a labeled Dyck path needs labels")
    n = path.n
    if not path.is_dyck():
        raise InvalidPath(f"{path.steps} rises above the diagonal")
    if sorted(path.labels) != list(range(1, n + 1)):
        raise InvalidPath(f"labels {path.labels} are not a bijection onto 1..{n}")
    prefs = [0] * n
    for spot, cars in enumerate(path.label_columns(), 1):
        if any(a >= b for a, b in zip(cars, cars[1:])):
            raise InvalidPath(f"labels {cars} in column {spot} are not increasing")
        for car in cars:
            prefs[car - 1] = spot
    return ParkingPreference(prefs)


def _require_decreasing(pref):
    if any(a < b for a, b in zip(pref, pref[1:])):
        raise NotDecreasing(f"{tuple(pref)} is not weakly decreasing")


def decreasing_npf_check(pref, k: int = 0) -> bool:
    """Membership in ``PF_{n,k}`` for a weakly decreasing preference:
    ``a_i <= min(n, n - i + 1 + k)`` for every ``i``."""
    pref = as_preference(pref)
    k = check_k(k)
    _require_decreasing(pref)
    n = pref.n
    return all(a <= min(n, n - i + 1 + k) for i, a in enumerate(pref, 1))


def decreasing_to_klattice(pref, k: int = 0) -> LatticePath:
    """Path whose ``i``-th East step runs at height ``a_i - 1``."""
    pref = as_preference(pref)
    if not decreasing_npf_check(pref, k):
        raise NotAKNaplesParkingFunction(pref, k)
    steps = []
    y = pref.n
    for a in pref:
        steps.append(SOUTH * (y - (a - 1)))
        steps.append(EAST)
        y = a - 1
    steps.append(SOUTH * y)
    return LatticePath("".join(steps))


def klattice_to_decreasing(path: LatticePath) -> ParkingPreference:
    """Inverse of :func:`decreasing_to_klattice`."""
    if not path.steps.startswith(SOUTH):
        raise InvalidPath("the first step must be South")
    return ParkingPreference(h + 1 for h in path.east_heights())


def count_decreasing_npf(n: int, k: int = 0) -> int:
    """Weakly decreasing preferences with ``a_i <= min(n, n - i + 1 + k)``."""
    if n < 1:
        raise ValueError("n must be positive")
    k = check_k(k)
    # ways[v]: sequences so far whose last entry is v
    ways = [0] + [1 if v <= min(n, n + k) else 0 for v in range(1, n + 1)]
    for i in range(2, n + 1):
        bound = min(n, n - i + 1 + k)
        nxt = [0] * (n + 1)
        running = 0
        for v in range(n, 0, -1):
            running += ways[v]
            if v <= bound:
                nxt[v] = running
        ways = nxt
    return sum(ways)


def all_labeled_dyck_paths(n: int):
    """Every labeled Dyck path of size ``n`` (exhaustive, for small ``n``)."""
    for steps in _dyck_words(n):
        path = LatticePath(steps)
        runs = [r for r in path.column_runs() if r]
        for labels in permutations(range(1, n + 1)):
            pos = 0
            ok = True
            for r in runs:
                block = labels[pos:pos + r]
                if any(a >= b for a, b in zip(block, block[1:])):
                    ok = False
                    break
                pos += r
            if ok:
                yield LatticePath(steps, labels)


def _dyck_words(n: int):
    def grow(prefix, south, east):
        if south == n and east == n:
            yield prefix
            return
        if south < n:
            yield from grow(prefix + SOUTH, south + 1, east)
        # East keeps x + y <= n only while more South than East steps are taken
        if east < south:
            yield from grow(prefix + EAST, south, east + 1)

    yield from grow("", 0, 0)
