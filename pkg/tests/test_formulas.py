from math import comb

import pytest

from starcurves.formulas import (closed_form_dimension, min_upper_bound,
                                 pn_upper_bound, upper_bounds)


def test_luroth_pair():
    tv = closed_form_dimension(4, 5)
    assert tv.value == 13
    assert tv.branch == "luroth"


def test_six_lines_d5():
    assert closed_form_dimension(5, 6).value == 17


def test_empty_below_threshold():
    tv = closed_form_dimension(3, 5)
    assert tv.is_empty
    assert tv.branch == "empty"


def test_small_l_ambient():
    for l in (2, 3, 4):
        for d in range(l - 1, 10):
            assert closed_form_dimension(d, l).value == comb(d + 2, 2) - 1


def test_l5_above_quartic():
    for d in range(5, 10):
        assert closed_form_dimension(d, 5).value == comb(d + 2, 2) - 1


def test_large_l_formula():
    assert closed_form_dimension(7, 7).value == 36 - 21 + 13


def test_invalid_arguments():
    with pytest.raises(ValueError):
        closed_form_dimension(-1, 4)
    with pytest.raises(ValueError):
        closed_form_dimension(3, 1)


def test_upper_bounds_luroth_case():
    assert upper_bounds(4, 5) == [("ambient", 14), ("incidence", 14),
                                  ("luroth", 13)]


def test_upper_bounds_six_lines():
    assert upper_bounds(5, 6) == [("ambient", 20), ("incidence", 17)]


def test_upper_bounds_small_l_dominated_by_ambient():
    bounds = dict(upper_bounds(9, 4))
    assert bounds == {"ambient": 54, "incidence": 56}
    assert min_upper_bound(9, 4) == 54


def test_theorem_value_below_every_upper_bound():
    for l in range(2, 13):
        for d in range(l - 1, 16):
            tv = closed_form_dimension(d, l)
            assert tv.value <= min_upper_bound(d, l)


def test_large_l_attains_incidence_bound():
    for l in range(6, 13):
        for d in range(l - 1, 16):
            assert closed_form_dimension(d, l).value == \
                dict(upper_bounds(d, l))["incidence"]


def test_small_l_attains_ambient_bound():
    for l in (2, 3, 4):
        for d in range(l - 1, 16):
            assert closed_form_dimension(d, l).value == comb(d + 2, 2) - 1
    for d in range(5, 16):
        assert closed_form_dimension(d, 5).value == comb(d + 2, 2) - 1


def test_pn_upper_bound_specializes_to_plane():
    for l in range(6, 10):
        for d in range(l - 1, 12):
            assert pn_upper_bound(2, d, l) == min_upper_bound(d, l)


def test_pn_upper_bound_examples():
    assert pn_upper_bound(3, 4, 4) == 34
    assert pn_upper_bound(3, 7, 8) == 87


def test_pn_upper_bound_preconditions():
    with pytest.raises(ValueError):
        pn_upper_bound(1, 4, 4)
    with pytest.raises(ValueError):
        pn_upper_bound(3, 2, 4)
