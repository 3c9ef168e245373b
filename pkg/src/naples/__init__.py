"""Enumeration and cross-validation of k-Naples parking functions."""

from ._backend import name as backend_name
from .core import (
    Outcome,
    ParkingPreference,
    is_naples_pf,
    is_parking_function,
    phi_k,
    simulate,
)
from .enumeration import (
    IndexedSeries,
    c_coeff,
    count_npf_permsum,
    count_npf_recursive,
    count_pf_closed,
    fiber_gf_direct,
    fiber_gf_recursive,
    log_gf,
)
from .errors import (
    CarFailedToPark,
    InvalidPath,
    NaplesError,
    NotAKNaplesParkingFunction,
    NotAParkingFunction,
    NotDecreasing,
    ResourceLimit,
)
from .fibers import EllProfile, admissible_sets, ell, ell_profile, fiber_members, fiber_size
from .paths import (
    LatticePath,
    count_decreasing_npf,
    decreasing_npf_check,
    decreasing_to_klattice,
    labeled_dyck_to_pf,
    pf_to_labeled_dyck,
)
from .qstats import (
    QPolynomial,
    QTPolynomial,
    area,
    area_distribution,
    area_k,
    fiber_area_poly,
    q_int,
    qt_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "CarFailedToPark",
    "EllProfile",
    "IndexedSeries",
    "InvalidPath",
    "LatticePath",
    "NaplesError",
    "NotAKNaplesParkingFunction",
    "NotAParkingFunction",
    "NotDecreasing",
    "Outcome",
    "ParkingPreference",
    "QPolynomial",
    "QTPolynomial",
    "ResourceLimit",
    "admissible_sets",
    "area",
    "area_distribution",
    "area_k",
    "backend_name",
    "c_coeff",
    "count_decreasing_npf",
    "count_npf_permsum",
    "count_npf_recursive",
    "count_pf_closed",
    "decreasing_npf_check",
    "decreasing_to_klattice",
    "ell",
    "ell_profile",
    "fiber_area_poly",
    "fiber_gf_direct",
    "fiber_gf_recursive",
    "fiber_members",
    "fiber_size",
    "is_naples_pf",
    "is_parking_function",
    "labeled_dyck_to_pf",
    "log_gf",
    "pf_to_labeled_dyck",
    "phi_k",
    "q_int",
    "qt_distribution",
    "simulate",
    "__version__",
]
