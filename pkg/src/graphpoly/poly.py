"""Exact polynomial arithmetic over arbitrary-precision rationals.

This module is the arithmetic layer for the whole package: dense univariate
polynomials over Q, bivariate polynomials over Z, the falling-factorial
basis, and exact linear algebra (a fraction-free solver, integer
determinants, interpolation).  No floating point appears anywhere.

Conventions:

* UniPoly stores coefficients in ascending degree order with no trailing
  zero; the zero polynomial stores nothing and reports degree
  MINUS_INFINITY rather than -1.
* BiPoly stores a rectangular integer grid indexed by (degree in X,
  degree in Y) with trailing all-zero rows and columns removed.
* FallingFactorial stores coefficients over the basis
  X_(j) = X (X-1) ... (X-j+1).

Text formats, shared bit-exactly with the CLI:

* univariate: ascending coefficients separated by single spaces, each a
  bare integer or "num/den", e.g. "2 0 -4 0 1" is X^4 - 4X^2 + 2;
* bivariate: grid rows of fixed X-degree separated by ";", each row the
  integer Y-coefficients of that X-power, e.g. "0 1;1 0;1 0" is
  X^2 + X + Y.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

Rational = Fraction

MINUS_INFINITY = float("-inf")

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


def parse_rational(text: str) -> Fraction:
    """Parse a bare integer or num/den with positive denominator."""
    if not _RATIONAL_RE.match(text):
        raise InputError(f"bad rational {text!r}: expected 'num' or 'num/den'")
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    return str(value)


class UniPoly:
    """Dense univariate polynomial over Q, immutable.

    Coefficients are ascending; construction normalizes by stripping
    trailing zeros, so equal polynomials compare and hash equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        if k < 0:
            raise InputError("monomial degree must be nonnegative")
        return cls((0,) * k + (c,))

    # -- structure -----------------------------------------------------

    @property
    def degree(self):
        """Degree, or MINUS_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise InputError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def integer_coefficients(self) -> list[int]:
        """Coefficients as ints; raises if any denominator exceeds 1."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return out

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial power")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, x) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute(self, q: UniPoly) -> UniPoly:
        """Composition self(q), by Horner in the polynomial ring."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * q + UniPoly((c,))
        return acc

    # -- text and display ------------------------------------------------

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text: str) -> UniPoly:
        stripped = text.strip()
        if not stripped:
            raise InputError("empty polynomial text")
        return cls(tuple(parse_rational(tok) for tok in stripped.split(" ")))

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.text()!r})"


class BiPoly:
    """Bivariate polynomial over Z, a rectangular (X-degree, Y-degree) grid."""

    __slots__ = ("grid",)

    def __init__(self, grid=()):
        rows = [[int(c) for c in row] for row in grid]
        width = max((len(r) for r in rows), default=0)
        for r in rows:
            r.extend([0] * (width - len(r)))
        # trim trailing all-zero columns, then rows
        while width and all(r[width - 1] == 0 for r in rows):
            width -= 1
        rows = [r[:width] for r in rows]
        while rows and not any(rows[-1]):
            rows.pop()
        self.grid: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def zero(cls) -> BiPoly:
        return cls()

    @classmethod
    def one(cls) -> BiPoly:
        return cls(((1,),))

    @classmethod
    def constant(cls, c: int) -> BiPoly:
        return cls(((c,),))

    @classmethod
    def x(cls) -> BiPoly:
        return cls(((0,), (1,)))

    @classmethod
    def y(cls) -> BiPoly:
        return cls(((0, 1),))

    def is_zero(self) -> bool:
        return not self.grid

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < len(self.grid) and 0 <= j < len(self.grid[i]):
            return self.grid[i][j]
        return 0

    def degrees(self):
        """(degree in X, degree in Y), MINUS_INFINITY pair when zero."""
        if not self.grid:
            return (MINUS_INFINITY, MINUS_INFINITY)
        return (len(self.grid) - 1, len(self.grid[0]) - 1)

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        h = max(len(self.grid), len(other.grid))
        w = 0
        if self.grid:
            w = len(self.grid[0])
        if other.grid:
            w = max(w, len(other.grid[0]))
        out = [[self.coefficient(i, j) + other.coefficient(i, j) for j in range(w)]
               for i in range(h)]
        return BiPoly(out)

    def __neg__(self):
        return BiPoly(tuple(tuple(-c for c in row) for row in self.grid))

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return BiPoly()
        h = len(self.grid) + len(other.grid) - 1
        w = len(self.grid[0]) + len(other.grid[0]) - 1
        out = [[0] * w for _ in range(h)]
        for i, row in enumerate(self.grid):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                for k, orow in enumerate(other.grid):
                    for l, d in enumerate(orow):
                        if d:
                            out[i + k][j + l] += c * d
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial power")
        result = BiPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        acc = Fraction(0)
        for row in reversed(self.grid):
            racc = Fraction(0)
            for c in reversed(row):
                racc = racc * y + c
            acc = acc * x + racc
        return acc

    def text(self) -> str:
        if not self.grid:
            return "0"
        return ";".join(" ".join(str(c) for c in row) for row in self.grid)

    @classmethod
    def parse(cls, text: str) -> BiPoly:
        stripped = text.strip()
        if not stripped:
            raise InputError("empty polynomial text")
        rows = []
        for chunk in stripped.split(";"):
            toks = chunk.strip().split(" ")
            row = []
            for tok in toks:
                if not _INTEGER_RE.match(tok):
                    raise InputError(f"bad integer {tok!r} in bivariate text")
                row.append(int(tok))
            rows.append(row)
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.grid == other.grid

    def __hash__(self):
        return hash(("BiPoly", self.grid))

    def __repr__(self):
        return f"BiPoly({self.text()!r})"


@dataclass(frozen=True)
class FallingFactorial:
    """Coefficients over the falling-factorial basis X_(j)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def to_monomial(self) -> UniPoly:
        return falling_to_monomial(self.coeffs)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        factor = Fraction(1)
        for j, c in enumerate(self.coeffs):
            if j > 0:
                factor *= x - (j - 1)
            acc += c * factor
        return acc


def falling_to_monomial(coeffs) -> UniPoly:
    """Expand sum_j c_j X_(j) into the monomial basis, exactly."""
    result = UniPoly()
    basis = UniPoly.one()          # X_(0) = 1
    for j, c in enumerate(coeffs):
        if j > 0:
            basis = basis * UniPoly((-(j - 1), 1))
        if c:
            result = result + basis * c
    return result


def falling_factorial_value(x, j: int) -> Fraction:
    """x_(j) = x (x-1) ... (x-j+1) as an exact rational."""
    x = Fraction(x)
    acc = Fraction(1)
    for t in range(j):
        acc *= x - t
    return acc


# ---------------------------------------------------------------- linear algebra


def _scaled_integer_rows(rows, rhs):
    """Augmented rows scaled to integers, one lcm per row."""
    aug = []
    for row, b in zip(rows, rhs):
        fr = [c if isinstance(c, Fraction) else Fraction(c) for c in row]
        fr.append(b if isinstance(b, Fraction) else Fraction(b))
        scale = 1
        for c in fr:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        aug.append([int(c * scale) for c in fr])
    return aug


def solve_linear_exact(rows, rhs):
    """Solve A x = b exactly; one solution or None.

    Fraction-free (Bareiss) forward elimination over integer-scaled rows,
    then rational back substitution.  Pivots are chosen left to right by
    first nonzero column; free variables are set to 0, so the result is
    deterministic.  Returns a list of Fractions, or None when inconsistent.
    """
    m = len(rows)
    if len(rhs) != m:
        raise InputError("matrix and right-hand side sizes differ")
    n = len(rows[0]) if m else 0
    for r in rows:
        if len(r) != n:
            raise InputError("ragged matrix")
    if m == 0:
        return []

    aug = _scaled_integer_rows(rows, rhs)
    pivots: list[tuple[int, int]] = []   # (row, column)
    prev = 1
    r = 0
    for col in range(n):
        p = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if p is None:
            continue
        if p != r:
            aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][col]
        for i in range(r + 1, m):
            ai = aug[i]
            ar = aug[r]
            f = ai[col]
            for j in range(col, n + 1):
                ai[j] = (piv * ai[j] - f * ar[j]) // prev
        prev = piv
        pivots.append((r, col))
        r += 1
        if r == m:
            break

    for i in range(r, m):
        if aug[i][n] != 0:
            return None

    x = [Fraction(0)] * n
    for ri, ci in reversed(pivots):
        acc = Fraction(aug[ri][n])
        for j in range(ci + 1, n):
            if aug[ri][j]:
                acc -= aug[ri][j] * x[j]
        x[ci] = acc / aug[ri][ci]
    return x


def int_determinant(rows) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [[int(c) for c in row] for row in rows]
    for row in a:
        if len(row) != n:
            raise InputError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for c in range(n - 1):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            sign = -sign
        piv = a[c][c]
        for i in range(c + 1, n):
            ai = a[i]
            ac = a[c]
            f = ai[c]
            for j in range(c + 1, n):
                ai[j] = (piv * ai[j] - f * ac[j]) // prev
            ai[c] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def interpolate(xs, ys) -> UniPoly:
    """Unique polynomial of degree < len(xs) through the given points.

    Newton's divided differences with exact rationals; the nodes must be
    pairwise distinct.
    """
    pts = [Fraction(x) for x in xs]
    vals = [Fraction(y) for y in ys]
    if len(pts) != len(vals):
        raise InputError("interpolation needs as many values as nodes")
    if len(set(pts)) != len(pts):
        raise InputError("interpolation nodes must be distinct")
    k = len(pts)
    if k == 0:
        return UniPoly()
    table = list(vals)
    # table[i] becomes the divided difference f[x_0..x_i]
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (pts[i] - pts[i - level])
    result = UniPoly()
    newton = UniPoly.one()
    for i in range(k):
        if table[i]:
            result = result + newton * table[i]
        if i + 1 < k:
            newton = newton * UniPoly((-pts[i], 1))
    return result
