"""Exact arithmetic and interpolation layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surfcount.exact import (
    DegenerateGridError,
    MultiPoly,
    QuasiPoly,
    binomial,
    frac_str,
    interpolate_tensor,
    parity_signature,
    parse_frac,
    signature_matches,
)


def test_binomial_small():
    assert binomial(0, 0) == 1
    assert binomial(4, 2) == 6
    assert binomial(10, 3) == 120
    assert binomial(3, 5) == 0
    assert binomial(5, -1) == 0


@given(st.integers(0, 40), st.integers(0, 40))
def test_binomial_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


def test_frac_str_roundtrip():
    for x in (Fraction(0), Fraction(3), Fraction(-7, 12), Fraction(22, 7)):
        assert parse_frac(frac_str(x)) == x
    assert frac_str(Fraction(4, 2)) == "2"
    assert parse_frac("5") == 5


def test_multipoly_basic_algebra():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.evaluate((3, 2)) == 5
    assert p.total_degree() == 2
    assert p.coefficient((2, 0)) == 1
    assert p.coefficient((1, 1)) == 0
    assert (p - p).is_zero()


def test_multipoly_structure_maps():
    p = MultiPoly(3, {(2, 0, 1): Fraction(1), (0, 1, 0): Fraction(-2)})
    assert p.permute_vars((1, 0, 2)) == MultiPoly(
        3, {(0, 2, 1): Fraction(1), (1, 0, 0): Fraction(-2)}
    )
    assert p.homogeneous_part(3) == MultiPoly(3, {(2, 0, 1): Fraction(1)})
    assert p.substitute_zero([2]) == MultiPoly(2, {(0, 1): Fraction(-2)})
    assert p.degree_in(0) == 2 and p.degree_in(2) == 1


def test_multipoly_json_roundtrip():
    p = MultiPoly(2, {(0, 0): Fraction(1, 3), (4, 2): Fraction(-5)})
    assert MultiPoly.from_json_dict(p.to_json_dict()) == p


def test_pretty_renders_constants_and_powers():
    assert MultiPoly.zero(1).pretty() == "0"
    one = MultiPoly.constant(3, 1)
    assert one.pretty() == "1"
    p = MultiPoly(1, {(2,): Fraction(1, 48), (0,): Fraction(5, 12)})
    s = p.pretty()
    assert "b1^2" in s and "5/12" in s


def test_parity_signature():
    assert parity_signature((2, 3, 0)) == "eoe"
    assert signature_matches("eoe", (4, 1, 2))
    assert not signature_matches("eo", (1, 2))


def test_quasipoly_branch_dispatch():
    qp = QuasiPoly(1)
    qp.set_branch("e", MultiPoly(1, {(1,): Fraction(1)}))
    qp.set_branch("o", MultiPoly(1, {(0,): Fraction(7)}))
    assert qp.eval((4,)) == 4
    assert qp.eval((3,)) == 7
    with pytest.raises(ValueError):
        qp.set_branch("ee", MultiPoly.zero(2))


@st.composite
def _polys(draw):
    nvars = draw(st.integers(1, 3))
    nterms = draw(st.integers(0, 5))
    terms = {}
    for _ in range(nterms):
        exps = tuple(draw(st.integers(0, 3)) for _ in range(nvars))
        terms[exps] = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 7)))
    return MultiPoly(nvars, terms)


@given(_polys())
@settings(max_examples=40, deadline=None)
def test_interpolation_recovers_polynomial(p):
    """Tensor-grid interpolation is exact on any polynomial within bounds."""
    d = max(0, p.total_degree(), *(p.degree_in(i) for i in range(p.nvars)))
    nodes = range(1, d + 2)
    grid = {}
    for point in _cartesian(nodes, p.nvars):
        grid[point] = p.evaluate(point)
    q = interpolate_tensor(grid, d)
    assert q == p


def _cartesian(nodes, n):
    if n == 1:
        return [(x,) for x in nodes]
    rest = _cartesian(nodes, n - 1)
    return [(x,) + r for x in nodes for r in rest]


def test_interpolation_rejects_ragged_grid():
    grid = {(1, 1): Fraction(1), (1, 2): Fraction(2), (2, 1): Fraction(3)}
    with pytest.raises(DegenerateGridError):
        interpolate_tensor(grid, 1)
