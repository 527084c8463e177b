"""Exact arithmetic kernel.

Big integers, reduced rationals, sparse multivariate polynomials,
parity-indexed quasi-polynomials, and tensor-grid Lagrange interpolation.
Everything in this module is pure and exact; no floating point enters the
computation path anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


def binomial(n: Scalar, k: Scalar) -> int:
    """Binomial coefficient as a total function.

    Standard value for integral 0 <= k <= n; otherwise 0.  In particular a
    half-integral k (a Fraction with denominator 2, as arises from indices
    of the form (b - a)/2 with b - a odd) gives 0, as do k < 0 and k > n.
    """
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return 0
        n = n.numerator
    if isinstance(k, Fraction):
        if k.denominator != 1:
            return 0
        k = k.numerator
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def frac_str(x: Scalar) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


class DegenerateGridError(ValueError):
    """Raised when an interpolation grid is not a usable tensor product."""


class FitInvalid(ValueError):
    """Raised when a fitted polynomial fails held-out validation."""


class MultiPoly:
    """Sparse polynomial in a fixed number of variables over Fraction.

    Stored as a map exponent-vector -> nonzero coefficient.  Instances are
    treated as immutable; all operations return new objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, Scalar] | Iterable = ()):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length (want {nvars})")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = clean.get(exps, Fraction(0)) + Fraction(coeff)
            if c:
                clean[exps] = c
            elif exps in clean:
                del clean[exps]
        self.nvars = nvars
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls(nvars, {tuple(exps): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        res = MultiPoly.__new__(MultiPoly)
        res.nvars, res.terms = self.nvars, out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = MultiPoly.__new__(MultiPoly)
        res.nvars = self.nvars
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            k = Fraction(other)
            res = MultiPoly.__new__(MultiPoly)
            res.nvars = self.nvars
            res.terms = {e: c * k for e, c in self.terms.items()} if k else {}
            return res
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        res = MultiPoly.__new__(MultiPoly)
        res.nvars, res.terms = self.nvars, out
        return res

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has wrong length")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def homogeneous_part(self, degree: int) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def permute_vars(self, perm: Sequence[int]) -> "MultiPoly":
        """Relabel variables: new variable i reads old variable perm[i]."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("not a permutation")
        out = {}
        for e, c in self.terms.items():
            out[tuple(e[perm[i]] for i in range(self.nvars))] = c
        return MultiPoly(self.nvars, out)

    def map_exponents(self, factor: int) -> "MultiPoly":
        """Multiply every exponent by a positive integer factor."""
        return MultiPoly(self.nvars, {tuple(x * factor for x in e): c for e, c in self.terms.items()})

    def substitute_zero(self, positions: Sequence[int]) -> "MultiPoly":
        """Set the listed variables to 0 and drop them from the variable list."""
        keep = [i for i in range(self.nvars) if i not in set(positions)]
        out: dict[Exponents, Fraction] = {}
        for e, c in self.terms.items():
            if any(e[i] for i in positions):
                continue
            key = tuple(e[i] for i in keep)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return MultiPoly(len(keep), out)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in graded-lex order (total degree, then exponent vector)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    # -- serialization and display -----------------------------------------

    def to_json_dict(self, varnames: Sequence[str] | None = None) -> dict:
        names = list(varnames) if varnames else [f"b{i+1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("varnames has wrong length")
        return {
            "vars": names,
            "terms": [{"exps": list(e), "coeff": frac_str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "MultiPoly":
        nvars = len(d["vars"])
        return cls(nvars, {tuple(t["exps"]): parse_frac(t["coeff"]) for t in d["terms"]})

    def pretty(self, varnames: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(varnames) if varnames else [f"b{i+1}" for i in range(self.nvars)]
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                pieces.append(frac_str(coeff))
            elif coeff == 1:
                pieces.append(body)
            elif coeff == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{frac_str(coeff)}*{body}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.pretty()})"


# -- parity signatures and quasi-polynomials -------------------------------

EVEN, ODD, ZERO = "e", "o", "z"


def parity_signature(b: Sequence[int]) -> str:
    """The parity word of an integer vector: 'e'/'o' per entry."""
    return "".join(ODD if x & 1 else EVEN for x in b)


def signature_matches(sig: str, b: Sequence[int]) -> bool:
    """Whether a branch signature is compatible with a concrete vector.

    'e' wants an even entry, 'o' an odd entry, and 'z' an entry pinned to 0
    (used by the region-refined fits, where zero acts as a third parity).
    """
    if len(sig) != len(b):
        return False
    for ch, x in zip(sig, b):
        if ch == EVEN and x % 2 != 0:
            return False
        if ch == ODD and x % 2 != 1:
            return False
        if ch == ZERO and x != 0:
            return False
    return True


class QuasiPoly:
    """A family of polynomials indexed by parity signature.

    Branch keys are words over {'e','o'} (plus 'z' for slots pinned to zero
    in refined fits).  Evaluation picks the most specific compatible branch
    ('z' beats 'e' on a zero entry); a missing branch means the zero
    function.  A branch containing k 'z' slots stores a polynomial in the
    remaining n-k variables.
    """

    __slots__ = ("nvars", "branches")

    def __init__(self, nvars: int, branches: Mapping[str, MultiPoly] | None = None):
        self.nvars = nvars
        self.branches: dict[str, MultiPoly] = {}
        for sig, poly in (branches or {}).items():
            self.set_branch(sig, poly)

    def set_branch(self, sig: str, poly: MultiPoly) -> None:
        if len(sig) != self.nvars or any(ch not in (EVEN, ODD, ZERO) for ch in sig):
            raise ValueError(f"bad signature {sig!r}")
        free = sum(1 for ch in sig if ch != ZERO)
        if poly.nvars != free:
            raise ValueError(f"branch {sig!r} wants a {free}-variable polynomial")
        self.branches[sig] = poly

    def eval(self, b: Sequence[int]) -> Fraction:
        if len(b) != self.nvars:
            raise ValueError("length mismatch")
        if any(x < 0 for x in b):
            raise ValueError("negative entry")
        best = None
        for sig in self.branches:
            if signature_matches(sig, b):
                # prefer the signature with more pinned slots
                key = sig.count(ZERO)
                if best is None or key > best[1]:
                    best = (sig, key)
        if best is None:
            return Fraction(0)
        sig = best[0]
        poly = self.branches[sig]
        point = [b[i] for i in range(self.nvars) if sig[i] != ZERO]
        return poly.evaluate(point)

    def __eq__(self, other):
        return (
            isinstance(other, QuasiPoly)
            and self.nvars == other.nvars
            and self.branches == other.branches
        )

    def __repr__(self):
        body = ", ".join(f"{s}: {p.pretty()}" for s, p in sorted(self.branches.items()))
        return f"QuasiPoly({body})"

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "branches": {s: p.to_json_dict() for s, p in sorted(self.branches.items())},
        }


def quasipoly_eval(qp: QuasiPoly, b: Sequence[int]) -> Fraction:
    """Evaluate a quasi-polynomial, selecting the branch by parity."""
    return qp.eval(b)


# -- exact interpolation ---------------------------------------------------

def _lagrange_basis(nodes: Sequence[int]) -> list[list[Fraction]]:
    """Univariate Lagrange basis polynomials for the given distinct nodes.

    Returns, for each node x_i, the coefficient list (ascending powers) of
    the polynomial that is 1 at x_i and 0 at the other nodes.
    """
    out = []
    for i, xi in enumerate(nodes):
        coeffs = [Fraction(1)]
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            denom = Fraction(xi - xj)
            # multiply by (u - xj) / (xi - xj)
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k] += c * (-xj) / denom
                nxt[k + 1] += c / denom
            coeffs = nxt
        out.append(coeffs)
    return out


def interpolate_tensor(grid: Mapping[tuple, Scalar], degree_bound: int) -> MultiPoly:
    """Unique polynomial of per-variable degree <= degree_bound through a
    full tensor-product grid of values; exact rational arithmetic.

    The grid keys are integer coordinate vectors; every combination of the
    per-variable coordinate sets must be present, and each variable must
    offer at least degree_bound + 1 distinct coordinates.
    """
    if not grid:
        raise DegenerateGridError("degenerate grid: empty")
    keys = list(grid)
    nvars = len(keys[0])
    if any(len(k) != nvars for k in keys):
        raise DegenerateGridError("degenerate grid: ragged keys")
    if nvars == 0:
        return MultiPoly.constant(0, grid[()])
    axes = [sorted({k[i] for k in keys}) for i in range(nvars)]
    for ax in axes:
        if len(ax) < degree_bound + 1:
            raise DegenerateGridError("degenerate grid: too few coordinates on an axis")
    expected = 1
    for ax in axes:
        expected *= len(ax)
    if len(grid) != expected or any(pt not in grid for pt in product(*axes)):
        raise DegenerateGridError("degenerate grid: not a full tensor product")

    def fit(axis_idx: int, prefix: tuple) -> MultiPoly:
        # polynomial in variables axis_idx .. nvars-1 through the sub-grid
        rest = nvars - axis_idx
        if rest == 0:
            return MultiPoly.constant(0, grid[prefix])
        nodes = axes[axis_idx]
        basis = _lagrange_basis(nodes)
        acc = MultiPoly.zero(rest)
        for node, coeffs in zip(nodes, basis):
            sub = fit(axis_idx + 1, prefix + (node,))
            # lift sub (rest-1 vars) into rest vars, times the basis poly in var 0
            lifted = {}
            for e, c in sub.terms.items():
                for p, bc in enumerate(coeffs):
                    if bc:
                        key = (p,) + e
                        lifted[key] = lifted.get(key, Fraction(0)) + c * bc
            acc = acc + MultiPoly(rest, lifted)
        return acc

    return fit(0, ())
