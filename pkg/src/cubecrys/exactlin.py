"""Exact rational scalars, vectors and matrices.

`Rational` is the standard library `fractions.Fraction`: it already
guarantees lowest terms, a positive denominator and arbitrary-precision
integer arithmetic, which is the entire contract we need from a scalar.
The vector and matrix wrappers below are immutable and hashable so they
can serve as dictionary keys (group elements are matrices).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]


class ShapeError(ValueError):
    """Operand dimensions do not fit the requested operation."""


class SingularMatrixError(ZeroDivisionError):
    """Inversion was attempted on a matrix with vanishing determinant."""


def rat(x) -> Fraction:
    """Coerce an int, string like '3/4', or Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError("expected an exact rational, got %r" % (x,))


def format_rational(x: Fraction) -> str:
    """Serialize as 'p/q', or plain 'p' when the denominator is 1."""
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rational(s) -> Fraction:
    """Inverse of format_rational; also tolerates plain ints."""
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError("not a serialized rational: %r" % (s,))


class RatVector:
    """An immutable vector of Fractions."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Scalar]):
        object.__setattr__(self, "entries", tuple(rat(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("RatVector is immutable")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, RatVector) and self.entries == other.entries

    def __hash__(self):
        return hash(("RatVector", self.entries))

    def __repr__(self):
        return "RatVector([%s])" % ", ".join(format_rational(e) for e in self.entries)

    def __add__(self, other: "RatVector") -> "RatVector":
        if len(self) != len(other):
            raise ShapeError("vector lengths differ: %d vs %d" % (len(self), len(other)))
        return RatVector(a + b for a, b in zip(self, other))

    def __sub__(self, other: "RatVector") -> "RatVector":
        if len(self) != len(other):
            raise ShapeError("vector lengths differ: %d vs %d" % (len(self), len(other)))
        return RatVector(a - b for a, b in zip(self, other))

    def __rmul__(self, c: Scalar) -> "RatVector":
        c = rat(c)
        return RatVector(c * e for e in self.entries)

    def __neg__(self):
        return RatVector(-e for e in self.entries)

    def dot(self, other: "RatVector") -> Fraction:
        if len(self) != len(other):
            raise ShapeError("vector lengths differ: %d vs %d" % (len(self), len(other)))
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def norm_sq(self) -> Fraction:
        """Squared Euclidean norm (always rational)."""
        return self.dot(self)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)


class RatMatrix:
    """An immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows_of_entries: Sequence[Sequence[Scalar]]):
        grid = tuple(tuple(rat(e) for e in row) for row in rows_of_entries)
        if not grid:
            raise ShapeError("matrix needs at least one row")
        width = len(grid[0])
        if width == 0:
            raise ShapeError("matrix needs at least one column")
        if any(len(row) != width for row in grid):
            raise ShapeError("ragged rows in matrix literal")
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def diagonal(diag: Iterable[Scalar]) -> "RatMatrix":
        d = [rat(x) for x in diag]
        n = len(d)
        return RatMatrix([[d[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def from_columns(cols: Sequence[RatVector]) -> "RatMatrix":
        if not cols:
            raise ShapeError("need at least one column")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ShapeError("columns of unequal length")
        return RatMatrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def block_diagonal(blocks: Sequence["RatMatrix"]) -> "RatMatrix":
        size = sum(b.rows for b in blocks)
        if any(b.rows != b.cols for b in blocks):
            raise ShapeError("block_diagonal wants square blocks")
        grid = [[Fraction(0)] * size for _ in range(size)]
        at = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    grid[at + i][at + j] = b.entries[i][j]
            at += b.rows
        return RatMatrix(grid)

    # -- basic queries ------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> RatVector:
        return RatVector(self.entries[i])

    def column(self, j: int) -> RatVector:
        return RatVector(self.entries[i][j] for i in range(self.rows))

    def columns(self) -> list[RatVector]:
        return [self.column(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(e.denominator == 1 for row in self.entries for e in row)

    def is_identity(self) -> bool:
        return self.is_square() and all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def transpose(self) -> "RatMatrix":
        return RatMatrix([[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __eq__(self, other):
        return (
            isinstance(other, RatMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(("RatMatrix", self.entries))

    def __repr__(self):
        body = "; ".join(
            ", ".join(format_rational(e) for e in row) for row in self.entries
        )
        return "RatMatrix[%s]" % body

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix shapes differ in addition")
        return RatMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix shapes differ in subtraction")
        return RatMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __rmul__(self, c: Scalar) -> "RatMatrix":
        c = rat(c)
        return RatMatrix([[c * e for e in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ShapeError(
                    "cannot multiply %dx%d by %dx%d"
                    % (self.rows, self.cols, other.rows, other.cols)
                )
            ot = other.transpose().entries
            return RatMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ot]
                 for row in self.entries]
            )
        if isinstance(other, RatVector):
            if self.cols != len(other):
                raise ShapeError("matrix-vector size mismatch")
            return RatVector(
                sum((a * b for a, b in zip(row, other)), Fraction(0))
                for row in self.entries
            )
        return NotImplemented

    def __pow__(self, k: int) -> "RatMatrix":
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = RatMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def det(m: RatMatrix) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination.

    Denominators are cleared row by row first, so the elimination runs
    over plain integers and every intermediate division is exact.
    """
    if not m.is_square():
        raise ShapeError("determinant of a non-square matrix")
    n = m.rows
    scale = Fraction(1)
    a = []
    for row in m.entries:
        lcm = 1
        for e in row:
            lcm = lcm * e.denominator // _gcd(lcm, e.denominator)
        scale *= lcm
        a.append([int(e * lcm) for e in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1]) / scale


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    if not m.is_square():
        raise ShapeError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(m.entries[i]) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            d = det(m)
            raise SingularMatrixError(
                "matrix is singular: determinant = %s" % format_rational(d)
            )
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [e / pv for e in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * p for e, p in zip(aug[r], aug[col])]
    return RatMatrix([row[n:] for row in aug])


def vector_to_json(v: RatVector) -> list:
    return [format_rational(e) for e in v]


def vector_from_json(data) -> RatVector:
    return RatVector(parse_rational(e) for e in data)


def matrix_to_json(m: RatMatrix) -> list:
    """Row-major nested arrays with 'p/q' rational entries."""
    return [[format_rational(e) for e in row] for row in m.entries]


def matrix_from_json(data) -> RatMatrix:
    return RatMatrix([[parse_rational(e) for e in row] for row in data])


INFINITE_WITHIN_CAP = "infinite-within-cap"


def element_order(m: RatMatrix, cap: int = 48):
    """Least k >= 1 with m**k = identity, or "infinite-within-cap".

    The default cap of 48 covers every group this package enumerates in
    dimension three; callers searching larger groups pass their own cap.
    """
    if not m.is_square():
        raise ShapeError("order of a non-square matrix")
    if det(m) == 0:
        raise SingularMatrixError("order of a singular matrix is undefined")
    ident = RatMatrix.identity(m.rows)
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = power * m
    return INFINITE_WITHIN_CAP


def average_intertwiner(
    theta_images: Sequence[RatMatrix],
    iota_images: Sequence[RatMatrix],
    seed_b: RatMatrix,
) -> RatMatrix:
    """Group-average a seed into an intertwiner of two representations.

    Given two matrix lists enumerating the same finite group in matching
    element order, returns A = sum over p of theta(p) * seed * iota(p)^-1.
    The sum always satisfies A * iota(q) = theta(q) * A for every group
    element q, whether or not A happens to be invertible; an unlucky seed
    can produce a singular A and the caller simply retries with another.
    """
    if len(theta_images) != len(iota_images):
        raise ShapeError(
            "group enumerations differ in length: %d vs %d"
            % (len(theta_images), len(iota_images))
        )
    if not theta_images:
        raise ShapeError("a group enumeration cannot be empty")
    n = theta_images[0].rows
    for t, i in zip(theta_images, iota_images):
        if not (t.is_square() and i.is_square() and t.rows == n and i.rows == n):
            raise ShapeError("all group images must be square of one size")
    if not (seed_b.is_square() and seed_b.rows == n):
        raise ShapeError("seed does not match the representation dimension")
    total = RatMatrix.zeros(n, n)
    for t, i in zip(theta_images, iota_images):
        total = total + t * seed_b * inverse(i)
    return total
