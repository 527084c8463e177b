"""Recursion engine: traces, symmetries, refinements, convolution, cache."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from surfcount.closed import closed_G, closed_N
from surfcount.engine import (
    clear_memo,
    convolve_G_from_N,
    count_G,
    count_G_r,
    count_G_t,
    count_G_t_via_r,
    count_lattice,
    count_N,
    count_N_t,
    dilaton_reduce,
    load_cache,
    memo_size,
    save_cache,
)

# Values worked out by hand from the recursion's first steps.
TRACES_G = {
    (1, 1, (2,)): 3,
    (1, 1, (4,)): 13,
    (0, 2, (2, 0)): 2,
    (0, 2, (2, 2)): 6,
    (0, 2, (1, 1)): 1,
}

TRACES_N = {
    (1, 1, (2,)): 1,
    (1, 1, (4,)): 3,
    (0, 4, (2, 2, 2, 2)): 96,
}


def test_trace_values():
    for (g, n, b), v in TRACES_G.items():
        assert count_G(g, n, b) == v
    for (g, n, b), v in TRACES_N.items():
        assert count_N(g, n, b) == v


def test_empty_diagram_normalization():
    for g, n in ((0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (0, 4)):
        assert count_G(g, n, (0,) * n) == 1
        assert count_N(g, n, (0,) * n) == 1


def test_zero_entry_sums_over_region_grades():
    # filling in an unmarked boundary, summed over the region grades
    want = sum(r * count_G_r(1, 1, (2,), r) for r in range(1, 4))
    assert count_G(1, 2, (2, 0)) == want


@given(st.integers(0, 1), st.integers(1, 3), st.data())
@settings(max_examples=80, deadline=None)
def test_symmetry_and_parity(g, n, data):
    b = tuple(data.draw(st.integers(0, 8)) for _ in range(n))
    perm = data.draw(st.permutations(range(n)))
    pb = tuple(b[i] for i in perm)
    assert count_G(g, n, b) == count_G(g, n, pb)
    assert count_N(g, n, b) == count_N(g, n, pb)
    if sum(b) % 2:
        assert count_G(g, n, b) == 0
        assert count_N(g, n, b) == 0


def test_refined_traces():
    assert count_N_t(1, 1, (4,), 0) == 1
    assert count_N_t(1, 1, (4,), 1) == 2
    assert count_G_r(0, 2, (2, 2), 2) == 2
    assert count_G_r(0, 2, (2, 2), 3) == 4
    assert count_G_r(0, 2, (2, 2), 1) == 0


def test_refinement_sums_small():
    for g, n in ((0, 3), (1, 1)):
        tmax = 2 * g + n - 1
        for total in range(0, 9, 2):
            b = (total,) + (0,) * (n - 1)
            assert sum(count_N_t(g, n, b, t) for t in range(tmax + 1)) == count_N(g, n, b)
            assert sum(count_G_t(g, n, b, t) for t in range(tmax + 1)) == count_G(g, n, b)


def test_refined_dual_routes_agree():
    for b in ((2, 2), (4, 2), (6, 0)):
        for t in range(4):
            assert count_G_t(1, 2, b, t) == count_G_t_via_r(1, 2, b, t)


def test_convolution_reproduces_G():
    for g, n, b in (
        (0, 2, (4, 2)),
        (0, 3, (2, 2, 2)),
        (1, 1, (6,)),
        (1, 2, (2, 2)),
    ):
        assert convolve_G_from_N(g, n, b) == count_G(g, n, b)


def test_closed_agree_spot():
    assert count_G(0, 3, (3, 1, 2)) == closed_G(0, 3, (3, 1, 2))
    assert count_N(0, 2, (5, 5)) == closed_N(0, 2, (5, 5))


def test_dilaton_spot():
    for r in range(1, 6):
        assert count_G_r(0, 3, (0, 2, 2), r) == dilaton_reduce(0, 3, (0, 2, 2), r)


def test_lattice_values():
    assert count_lattice(1, 1, (2,)) == 0
    assert count_lattice(1, 1, (4,)) == Fraction(1, 4)
    assert count_lattice(0, 3, (2, 4, 2)) == 1


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "memo.cache"
    count_G(1, 2, (4, 2))
    written = save_cache(str(path))
    assert written == memo_size()
    text = path.read_text()
    assert text.startswith("surfcount-cache v1\n")
    clear_memo()
    assert memo_size() == 0
    loaded = load_cache(str(path))
    assert loaded == written
    assert count_G(1, 2, (4, 2)) == count_G(1, 2, (4, 2))


def test_cache_rejects_unknown_header(tmp_path, capsys):
    path = tmp_path / "bad.cache"
    path.write_text("surfcount-cache v99\nG 0 1 - 2 1\n")
    assert load_cache(str(path)) == 0
