"""Quasi-polynomial fits, intersection numbers, lattice twin."""

from fractions import Fraction

import pytest

from surfcount.exact import FitInvalid, MultiPoly
from surfcount.fitlab import (
    compare_top_degree,
    extract_psi,
    fit_G_poly,
    fit_Nhat,
    fit_Nhat_refined,
)


def test_nhat_0_3_is_one():
    rep = fit_Nhat(0, 3)
    one = MultiPoly.constant(3, 1)
    for sig in ("eee", "ooe", "oeo", "eoo"):
        assert rep.branch(sig) == one
    for sig in ("oee", "ooo"):
        assert rep.branch(sig) == MultiPoly.zero(3)


def test_nhat_1_1_branch():
    rep = fit_Nhat(1, 1)
    assert rep.branch("e") == MultiPoly(
        1, {(2,): Fraction(1, 48), (0,): Fraction(5, 12)}
    )
    assert rep.degree == 2


def test_nhat_0_4_three_parity_classes():
    rep = fit_Nhat(0, 4)
    even = rep.branch("eeee")
    assert even.coefficient((0, 0, 0, 0)) == 2
    assert even.coefficient((2, 0, 0, 0)) == Fraction(1, 4)
    mixed = rep.branch("ooee")
    assert mixed.coefficient((0, 0, 0, 0)) == Fraction(1, 2)
    assert mixed.coefficient((0, 0, 2, 0)) == Fraction(1, 4)
    allodd = rep.branch("oooo")
    assert allodd.coefficient((0, 0, 0, 0)) == 2


def test_nhat_rejects_bad_surface():
    with pytest.raises(ValueError):
        fit_Nhat(0, 2)
    with pytest.raises(ValueError):
        fit_Nhat_refined(0, 4, 0, 9)


def test_refined_fit_cells():
    rep = fit_Nhat_refined(1, 1, 1, 0)
    assert rep.branch("e") == MultiPoly(1, {(0,): Fraction(1, 2)})
    rep2 = fit_Nhat_refined(0, 4, 3, 3)
    assert rep2.branch("ezzz") == MultiPoly(
        1, {(2,): Fraction(1, 4), (0,): Fraction(2)}
    )
    # infeasible t comes back as confirmed zero
    rep3 = fit_Nhat_refined(0, 4, 0, 1)
    assert rep3.branch("eeez") == MultiPoly.zero(3)


def test_g_poly_needs_hyperbolic_type():
    # the stripped annulus count is rational, not polynomial; (0,2) is out
    with pytest.raises(ValueError):
        fit_G_poly(0, 2)


def test_g_poly_pants_branch():
    rep = fit_G_poly(0, 3)
    want = {exps: Fraction(1) for exps in
            [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]}
    assert rep.branch("eee") == MultiPoly(3, want)
    assert rep.branch("eee").evaluate((1, 2, 3)) == 2 * 3 * 4


def test_g_poly_refined_degree_drop():
    rep = fit_G_poly(0, 3, t=2)
    # at t = 2 the stripped count is m1 + m2 + m3 + 1 on the all-even branch
    assert rep.branch("eee") == MultiPoly(
        3,
        {
            (1, 0, 0): Fraction(1),
            (0, 1, 0): Fraction(1),
            (0, 0, 1): Fraction(1),
            (0, 0, 0): Fraction(1),
        },
    )


def test_psi_small_values():
    assert extract_psi(1, 1) == {(1,): Fraction(1, 24)}
    got = extract_psi(0, 4)
    assert set(got.values()) == {Fraction(1)}
    assert len(got) == 4
    assert extract_psi(0, 3) == {(0, 0, 0): Fraction(1)}


def test_lattice_top_degree_agreement():
    assert compare_top_degree(0, 3)
    assert compare_top_degree(1, 1)
