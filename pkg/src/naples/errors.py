"""Exception hierarchy.

Everything raised for bad input is a :class:`NaplesError` and also a
:class:`ValueError`, so callers can catch either.
"""


class NaplesError(ValueError):
    """Base class for all package errors."""


class InvalidPreference(NaplesError):
    """A preference tuple with an entry outside ``[1, n]``."""


class InvalidPermutation(NaplesError):
    pass


class CarFailedToPark(NaplesError):
    """Car ``car`` found no spot; the preference is not in ``PF_{n,k}``."""

    def __init__(self, car, prefs=None, k=None):
        self.car = car
        self.prefs = prefs
        self.k = k
        super().__init__(f"car {car} failed to park (prefs={prefs}, k={k})")


class NotAKNaplesParkingFunction(NaplesError):
    def __init__(self, prefs, k):
        self.prefs = tuple(prefs)
        self.k = k
        super().__init__(f"{self.prefs} is not a {k}-Naples parking function")


class NotAParkingFunction(NotAKNaplesParkingFunction):
    def __init__(self, prefs):
        super().__init__(prefs, 0)


class NotDecreasing(NaplesError):
    pass


class InvalidPath(NaplesError):
    pass


class ResourceLimit(NaplesError):
    """Refused to enumerate beyond a configured ceiling."""

    def __init__(self, what, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(
            f"{what}: n={n} exceeds the ceiling {limit} "
            "(raise it with max_n=..., --max-n or NAPLES_MAX_N)"
        )
