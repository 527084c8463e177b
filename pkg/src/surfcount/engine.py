"""Memoized exact evaluation of the recursive arc-diagram counts.

Six count families share one memo table, keyed by a canonical sorted
boundary vector (all counts are symmetric in the boundary labels):

* ``count_G``      — all arc diagrams;
* ``count_N``      — diagrams with no boundary-parallel arcs;
* ``count_G_r``    — all diagrams refined by the number of complementary
                     regions r;
* ``count_N_t``    — parallel-free diagrams refined by the stable region
                     parameter t = r - (2 - 2g - n) - half the boundary
                     points;
* ``count_G_t``    — all diagrams refined by t, computed by convolving the
                     collar counts against ``count_N_t`` (with an
                     independent route through ``count_G_r`` for
                     cross-checking);
* ``count_lattice``— the rational lattice-point twin of the normalized
                     parallel-free count, sharing its recursion shape with
                     the bar factors dropped.

Each recursion removes the arc at a chosen positive boundary entry and
sorts the results into: a cut that lowers the genus, a join of two
boundaries, and a separating split over genus and boundary-subset choices.
The parallel-free recursions exclude disc and annulus factors from the
split and carry a sign convention ("read the sum as is") on the
boundary-join difference term; since we always recurse on a maximal entry,
that difference is never negative here.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from itertools import product

from .closed import (
    bar,
    catalan,
    closed_N,
    closed_refined,
)
from .exact import binomial, frac_str, parse_frac

_MEMO: dict = {}

_DISC_OR_ANNULUS = {(0, 1), (0, 2)}


def clear_memo() -> None:
    _MEMO.clear()


def memo_size() -> int:
    return len(_MEMO)


def _canon(b) -> tuple[int, ...]:
    return tuple(sorted(b, reverse=True))


def _check(g: int, n: int, b) -> tuple[int, ...]:
    b = tuple(int(x) for x in b)
    if g < 0:
        raise ValueError("genus must be >= 0")
    if n < 1 or len(b) != n:
        raise ValueError("need n >= 1 boundary components and len(b) == n")
    if any(x < 0 for x in b):
        raise ValueError("boundary point counts must be >= 0")
    return b


def _splits(rest: tuple[int, ...]):
    """Ordered (left, right) subset pairs of the trailing boundary entries."""
    k = len(rest)
    for mask in range(1 << k):
        left = tuple(rest[i] for i in range(k) if mask >> i & 1)
        right = tuple(rest[i] for i in range(k) if not mask >> i & 1)
        yield left, right


# -- all arc diagrams --------------------------------------------------------

def count_G(g: int, n: int, b) -> int:
    """Number of arc diagrams, every arc type allowed."""
    b = _check(g, n, b)
    return _G(g, n, _canon(b))


def _G(g: int, n: int, b: tuple[int, ...]) -> int:
    if g < 0 or sum(b) % 2:
        return 0
    if b[0] == 0:  # canonical order: all entries are zero — empty diagram
        return 1
    key = ("G", g, n, b, None)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    b1, rest = b[0], b[1:]
    total = 0
    for i in range(b1 - 1):  # cut along the new arc: genus drops
        total += _G(g - 1, n + 1, _canon((i, b1 - 2 - i) + rest))
    for idx, bk in enumerate(rest):  # the arc runs to another boundary
        if bk:
            merged = (b1 + bk - 2,) + rest[:idx] + rest[idx + 1 :]
            total += bk * _G(g, n - 1, _canon(merged))
    parent = (2 * g + n - 2, sum(b))
    for left, right in _splits(rest):  # the arc separates
        for g1 in range(g + 1):
            g2 = g - g1
            c1 = 2 * g1 + len(left) - 1
            c2 = 2 * g2 + len(right) - 1
            # lexicographic termination measure: a factor may keep the
            # parent's complexity only when its partner is a disc, and even
            # then its boundary total has strictly dropped
            assert (c1, sum(left) + b1 - 2) < parent or (g2, len(right) + 1) == (0, 1)
            assert (c2, sum(right) + b1 - 2) < parent or (g1, len(left) + 1) == (0, 1)
            for i in range(b1 - 1):
                j = b1 - 2 - i
                lhs = _G(g1, 1 + len(left), _canon((i,) + left))
                if lhs:
                    total += lhs * _G(g2, 1 + len(right), _canon((j,) + right))
    _MEMO[key] = total
    return total


# -- no boundary-parallel arcs ----------------------------------------------

def count_N(g: int, n: int, b) -> int:
    """Number of arc diagrams with no boundary-parallel arcs."""
    b = _check(g, n, b)
    return _N(g, n, _canon(b))


def _N(g: int, n: int, b: tuple[int, ...]) -> int:
    if g < 0 or sum(b) % 2:
        return 0
    if (g, n) in {(0, 1), (0, 2), (0, 3)}:
        return closed_N(g, n, b)
    if b[0] == 0:
        return 1
    key = ("N", g, n, b, None)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    b1, rest = b[0], b[1:]
    total = 0
    # the arc together with a run of m boundary points is cut away; the
    # weight m/2 counts the cut positions
    for m in range(2, b1 + 1, 2):
        w = m // 2
        for i in range(b1 - m + 1):
            total += w * _N(g - 1, n + 1, _canon((i, b1 - m - i) + rest))
    for idx, bj in enumerate(rest):
        others = rest[:idx] + rest[idx + 1 :]
        bj_bar = bar(bj)
        s = b1 + bj
        for m in range(2, s + 1, 2):
            total += (m // 2) * bj_bar * _N(g, n - 1, _canon((s - m,) + others))
        d = b1 - bj  # >= 0: we recurse on a maximal entry
        for m in range(2, d + 1, 2):
            total += (m // 2) * bj_bar * _N(g, n - 1, _canon((d - m,) + others))
    parent = (2 * g + n - 2, sum(b))
    for left, right in _splits(rest):
        for g1 in range(g + 1):
            g2 = g - g1
            if (g1, len(left) + 1) in _DISC_OR_ANNULUS:
                continue
            if (g2, len(right) + 1) in _DISC_OR_ANNULUS:
                continue
            assert (2 * g1 + len(left) - 1, sum(left) + b1 - 2) < parent
            assert (2 * g2 + len(right) - 1, sum(right) + b1 - 2) < parent
            for m in range(2, b1 + 1, 2):
                w = m // 2
                for i in range(b1 - m + 1):
                    lhs = _N(g1, 1 + len(left), _canon((i,) + left))
                    if lhs:
                        total += (
                            w * lhs * _N(g2, 1 + len(right), _canon((b1 - m - i,) + right))
                        )
    _MEMO[key] = total
    return total


# -- refinement by number of regions ----------------------------------------

def count_G_r(g: int, n: int, b, r: int) -> int:
    """Arc diagrams whose complement has exactly r regions."""
    b = _check(g, n, b)
    return _Gr(g, n, _canon(b), r)


def _Gr(g: int, n: int, b: tuple[int, ...], r: int) -> int:
    if g < 0 or r < 1 or sum(b) % 2:
        return 0
    if 2 * (r - 1) > sum(b):  # every diagram satisfies r <= 1 + sum(b)/2
        return 0
    if b[0] == 0:
        return 1 if r == 1 else 0
    key = ("Gr", g, n, b, r)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    b1, rest = b[0], b[1:]
    total = 0
    for i in range(b1 - 1):
        total += _Gr(g - 1, n + 1, _canon((i, b1 - 2 - i) + rest), r)
    for idx, bk in enumerate(rest):
        if bk:
            merged = (b1 + bk - 2,) + rest[:idx] + rest[idx + 1 :]
            total += bk * _Gr(g, n - 1, _canon(merged), r)
    for left, right in _splits(rest):
        for g1 in range(g + 1):
            g2 = g - g1
            for i in range(b1 - 1):
                j = b1 - 2 - i
                for r1 in range(1, r):  # the separating arc joins two pieces
                    lhs = _Gr(g1, 1 + len(left), _canon((i,) + left), r1)
                    if lhs:
                        total += lhs * _Gr(g2, 1 + len(right), _canon((j,) + right), r - r1)
    _MEMO[key] = total
    return total


def count_N_t(g: int, n: int, b, t: int) -> int:
    """Parallel-free arc diagrams with stable region parameter t."""
    b = _check(g, n, b)
    return _Nt(g, n, _canon(b), t)


def _Nt(g: int, n: int, b: tuple[int, ...], t: int) -> int:
    if g < 0 or sum(b) % 2:
        return 0
    if t < 0 or t > 2 * g + n - 1:
        return 0
    if (g, n) in {(0, 1), (0, 2), (0, 3)}:
        return closed_refined("N", g, n, b, t)
    if b[0] == 0:
        return 1 if t == 2 * g + n - 1 else 0
    key = ("Nt", g, n, b, t)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    b1, rest = b[0], b[1:]
    total = 0
    for m in range(2, b1 + 1, 2):
        w = m // 2
        for i in range(b1 - m + 1):
            total += w * _Nt(g - 1, n + 1, _canon((i, b1 - m - i) + rest), t)
    for idx, bj in enumerate(rest):
        others = rest[:idx] + rest[idx + 1 :]
        bj_bar = bar(bj)
        # joining onto an empty boundary creates a region: t shifts
        t_sub = t - (1 if bj == 0 else 0)
        s = b1 + bj
        for m in range(2, s + 1, 2):
            total += (m // 2) * bj_bar * _Nt(g, n - 1, _canon((s - m,) + others), t_sub)
        d = b1 - bj
        for m in range(2, d + 1, 2):
            total += (m // 2) * bj_bar * _Nt(g, n - 1, _canon((d - m,) + others), t_sub)
    for left, right in _splits(rest):
        for g1 in range(g + 1):
            g2 = g - g1
            if (g1, len(left) + 1) in _DISC_OR_ANNULUS:
                continue
            if (g2, len(right) + 1) in _DISC_OR_ANNULUS:
                continue
            for m in range(2, b1 + 1, 2):
                w = m // 2
                for i in range(b1 - m + 1):
                    j = b1 - m - i
                    for t1 in range(t + 1):
                        lhs = _Nt(g1, 1 + len(left), _canon((i,) + left), t1)
                        if lhs:
                            total += (
                                w * lhs * _Nt(g2, 1 + len(right), _canon((j,) + right), t - t1)
                            )
    _MEMO[key] = total
    return total


def count_G_t(g: int, n: int, b, t: int) -> int:
    """All-diagram counts refined by t, assembled from the parallel-free
    refined counts by filling boundary collars (collar filling preserves t).
    """
    b = _check(g, n, b)
    if sum(b) % 2:
        return 0
    if (g, n) == (0, 1):  # every disc diagram has t = 0
        return catalan(b[0] // 2) if t == 0 else 0
    if t < 0 or t > 2 * g + n - 1:
        return 0
    key = ("Gt", g, n, _canon(b), t)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    total = 0
    for a in product(*(range(x % 2, x + 1, 2) for x in b)):
        w = 1
        for x, y in zip(b, a):
            w *= binomial(x, (x - y) // 2)
        if w:
            total += w * _Nt(g, n, _canon(a), t)
    _MEMO[key] = total
    return total


def count_G_t_via_r(g: int, n: int, b, t: int) -> int:
    """Independent route to the same refined count through the region-count
    recursion, via r = t + (2 - 2g - n) + half the boundary points."""
    b = _check(g, n, b)
    if sum(b) % 2:
        return 0
    r = t + (2 - 2 * g - n) + sum(b) // 2
    return _Gr(g, n, _canon(b), r)


# -- lattice-count twin ------------------------------------------------------

def count_lattice(g: int, n: int, b) -> Fraction:
    """The rational lattice-count twin of the normalized parallel-free
    count: same recursion with the bar factors dropped, so zero entries are
    annihilated by the weights and are never queried."""
    b = _check(g, n, b)
    if any(x == 0 for x in b):
        raise ValueError("lattice counts require strictly positive entries")
    if sum(b) % 2:
        return Fraction(0)
    return _LAT(g, n, _canon(b))


def _LAT(g: int, n: int, b: tuple[int, ...]) -> Fraction:
    assert g >= 0 and all(x > 0 for x in b), "lattice recursion hit a zero entry"
    if (g, n) == (0, 3):
        return Fraction(1)
    if (g, n) == (1, 1):
        b1 = b[0]
        if b1 % 2:
            return Fraction(0)
        return Fraction(b1 * b1, 48) - Fraction(1, 12)
    assert 2 * g - 2 + n >= 2, f"lattice recursion reached ({g}, {n})"
    key = ("LatticeN", g, n, b, None)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    b1, rest = b[0], b[1:]
    total = Fraction(0)
    if g >= 1:
        for m in range(2, b1 + 1, 2):
            for i in range(1, b1 - m):  # i, j >= 1: zero weights dropped
                j = b1 - m - i
                total += Fraction(i * j * m, 2) * _LAT(g - 1, n + 1, _canon((i, j) + rest))
    for idx, bj in enumerate(rest):
        others = rest[:idx] + rest[idx + 1 :]
        s = b1 + bj
        for m in range(2, s, 2):  # i = s - m >= 1
            total += Fraction((s - m) * m, 2) * _LAT(g, n - 1, _canon((s - m,) + others))
        d = b1 - bj
        for m in range(2, d, 2):
            total += Fraction((d - m) * m, 2) * _LAT(g, n - 1, _canon((d - m,) + others))
    for left, right in _splits(rest):
        for g1 in range(g + 1):
            g2 = g - g1
            if (g1, len(left) + 1) in _DISC_OR_ANNULUS:
                continue
            if (g2, len(right) + 1) in _DISC_OR_ANNULUS:
                continue
            for m in range(2, b1 + 1, 2):
                for i in range(1, b1 - m):
                    j = b1 - m - i
                    lhs = _LAT(g1, 1 + len(left), _canon((i,) + left))
                    if lhs:
                        total += (
                            Fraction(i * j * m, 2)
                            * lhs
                            * _LAT(g2, 1 + len(right), _canon((j,) + right))
                        )
    value = total / b1
    _MEMO[key] = value
    return value


# -- relations ---------------------------------------------------------------

def convolve_G_from_N(g: int, n: int, b) -> int:
    """Assemble the all-diagram count by filling boundary collars around
    every parallel-free core: sum over admissible core boundary vectors a of
    the product of collar binomials times the core count."""
    b = _check(g, n, b)
    if (g, n) == (0, 1):
        raise ValueError("collar convolution does not apply to the disc")
    if sum(b) % 2:
        return 0
    total = 0
    for a in product(*(range(x % 2, x + 1, 2) for x in b)):
        w = 1
        for x, y in zip(b, a):
            w *= binomial(x, (x - y) // 2)
        if w:
            total += w * _N(g, n, _canon(a))
    return total


def dilaton_reduce(g: int, n: int, b, r: int) -> int:
    """Fill in an unmarked boundary: with b1 = 0 and n >= 2, the refined
    count equals r times the count with that boundary forgotten."""
    b = _check(g, n, b)
    if n < 2:
        raise ValueError("need n >= 2")
    if b[0] != 0:
        raise ValueError("first entry must be 0")
    if r < 1:
        return 0
    return r * _Gr(g, n - 1, _canon(b[1:]), r)


# -- optional persistent cache ------------------------------------------------

CACHE_HEADER = "surfcount-cache v1"
_INT_MODES = {"G", "N", "Gr", "Nt", "Gt"}


def save_cache(path: str) -> int:
    """Write the memo table to a line-based cache file; returns the number
    of records written."""
    lines = [CACHE_HEADER]
    for (mode, g, n, b, ref) in sorted(_MEMO, key=lambda k: (k[0], k[1], k[2], k[3], k[4] or 0)):
        value = _MEMO[(mode, g, n, b, ref)]
        ref_txt = "-" if ref is None else str(ref)
        val_txt = str(value) if isinstance(value, int) else frac_str(value)
        lines.append(f"{mode} {g} {n} {ref_txt} {','.join(map(str, b))} {val_txt}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines) - 1


def load_cache(path: str) -> int:
    """Load a cache file into the memo table; entries are trusted only when
    the header version matches, otherwise the file is ignored with a
    warning.  Returns the number of records loaded."""
    try:
        with open(path, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except FileNotFoundError:
        return 0
    if not lines or lines[0] != CACHE_HEADER:
        print(f"warning: ignoring cache {path!r} (unknown version)", file=sys.stderr)
        return 0
    loaded = 0
    for ln in lines[1:]:
        mode, g, n, ref_txt, b_txt, val_txt = ln.split(" ")
        ref = None if ref_txt == "-" else int(ref_txt)
        b = tuple(int(x) for x in b_txt.split(",")) if b_txt else ()
        value = int(val_txt) if mode in _INT_MODES else parse_frac(val_txt)
        _MEMO[(mode, int(g), int(n), b, ref)] = value
        loaded += 1
    return loaded
