import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from naples import (
    InvalidPath,
    LatticePath,
    NotDecreasing,
    area,
    count_decreasing_npf,
    count_pf_closed,
    decreasing_npf_check,
    decreasing_to_klattice,
    is_naples_pf,
    is_parking_function,
    labeled_dyck_to_pf,
    pf_to_labeled_dyck,
)
from naples.paths import all_labeled_dyck_paths, klattice_to_decreasing
from naples.reference import DYCK_EXAMPLE, KLATTICE_EXAMPLE
from naples.render import to_svg, to_tikz


def parking_functions(n):
    return [p for p in itertools.product(range(1, n + 1), repeat=n) if is_parking_function(p)]


def decreasing_tuples(n):
    return [tuple(sorted(c, reverse=True))
            for c in itertools.combinations_with_replacement(range(1, n + 1), n)]


def test_figure_path():
    path = pf_to_labeled_dyck(DYCK_EXAMPLE["pref"])
    assert tuple(path.column_runs()[: len(DYCK_EXAMPLE["runs"])]) == DYCK_EXAMPLE["runs"]
    assert tuple(tuple(c) for c in path.label_columns() if c) == DYCK_EXAMPLE["labels"]
    assert tuple(path.corners()) == DYCK_EXAMPLE["vertices"]
    assert path.is_dyck()


def test_klattice_figure():
    path = decreasing_to_klattice(KLATTICE_EXAMPLE["pref"], KLATTICE_EXAMPLE["k"])
    assert tuple(path.corners()) == KLATTICE_EXAMPLE["corners"]
    assert path.stays_below(2)
    assert decreasing_npf_check(KLATTICE_EXAMPLE["pref"], 1) and path.stays_below(1)
    assert not decreasing_npf_check(KLATTICE_EXAMPLE["pref"], 0) and not path.stays_below(0)
    assert klattice_to_decreasing(path) == KLATTICE_EXAMPLE["pref"]


@pytest.mark.parametrize("n", range(1, 7))
def test_dyck_roundtrip(n):
    for p in parking_functions(n):
        path = pf_to_labeled_dyck(p)
        assert path.is_dyck()
        assert labeled_dyck_to_pf(path) == p
        assert path.area() == area(p)


@pytest.mark.parametrize("n", range(1, 6))
def test_dyck_bijection_is_onto(n):
    paths = list(all_labeled_dyck_paths(n))
    assert len(paths) == count_pf_closed(n)
    assert sorted(labeled_dyck_to_pf(path) for path in paths) == parking_functions(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_decreasing_criterion(n):
    for p in decreasing_tuples(n):
        for k in range(n):
            assert decreasing_npf_check(p, k) == is_naples_pf(p, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_decreasing_counts(n):
    assert count_decreasing_npf(n, 0) == comb(2 * n, n) // (n + 1)
    for k in range(n):
        expected = sum(decreasing_npf_check(p, k) for p in decreasing_tuples(n))
        assert count_decreasing_npf(n, k) == expected
        paths = {decreasing_to_klattice(p, k).steps for p in decreasing_tuples(n)
                 if decreasing_npf_check(p, k)}
        assert len(paths) == expected


@given(st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), min_size=n, max_size=n))))
def test_klattice_shape(case):
    n, values = case
    p = tuple(sorted(values, reverse=True))
    for k in range(n):
        if decreasing_npf_check(p, k):
            path = decreasing_to_klattice(p, k)
            assert path.steps[0] == "S"
            assert path.stays_below(k)
            assert klattice_to_decreasing(path) == p


def test_errors():
    with pytest.raises(NotDecreasing):
        decreasing_npf_check((1, 2), 0)
    with pytest.raises(InvalidPath):
        LatticePath("SSE")
    with pytest.raises(InvalidPath):
        LatticePath("SE", (1, 2))
    with pytest.raises(InvalidPath):
        labeled_dyck_to_pf(LatticePath("ESSE", (1, 2)))
    with pytest.raises(InvalidPath):
        labeled_dyck_to_pf(LatticePath("SSEE", (2, 1)))


def test_renderers():
    path = pf_to_labeled_dyck(DYCK_EXAMPLE["pref"])
    tikz = to_tikz(path)
    assert "grid +(6,6)" in tikz
    assert "\\draw[dashed] (0,6) -- (6,0);" in tikz
    assert tikz.count("node {") == 6
    svg = to_svg(path, cell=20)
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<text") == 6
    assert "stroke-dasharray" in svg
