"""Exact scalar and dense matrix arithmetic over GF(p) and the rationals.

Scalars are plain python ints reduced into [0, p) for a prime field, and
`fractions.Fraction` values (always normalized, positive denominator) for the
rationals.  Equality of scalars and matrices is therefore a plain ``==`` on
canonical representatives.

Matrices are immutable, dense, row-major.  Everything in this library works on
small per-grid-point matrices, so there is no sparse format; the only size
concession is a numpy-backed modular elimination used for the larger linear
systems assembled by the hom solver (still exact: int64 arithmetic mod p).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Below this many cells plain python elimination beats the numpy round trip.
_NUMPY_MIN_CELLS = 2048


class ShapeError(ValueError):
    """Matrix dimensions do not line up."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p in (2, 3):
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is a prime, the rational numbers when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, x):
        """Bring an int / Fraction / "num/den" string into canonical form."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, str):
                return Fraction(x)
            return Fraction(x)
        if isinstance(x, str):
            x = int(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                x = x.numerator
            else:
                return self.mul(self.coerce(x.numerator), self.inv(self.coerce(x.denominator)))
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is None:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def rand(self, rng: random.Random):
        if self.p is None:
            return Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        return rng.randrange(self.p)

    def rand_nonzero(self, rng: random.Random):
        while True:
            x = self.rand(rng)
            if x != self.zero:
                return x

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


GF2 = Field(2)
GF5 = Field(5)
QQ = Field()


class Matrix:
    """Immutable dense matrix over a :class:`Field`.

    ``data`` is a tuple of row tuples of canonical scalars.  Zero-row or
    zero-column matrices are legal and show up routinely as maps in or out of
    zero-dimensional graded pieces.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data):
        if rows < 0 or cols < 0:
            raise ShapeError("negative matrix dimensions")
        data = tuple(tuple(field.coerce(x) for x in row) for row in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ShapeError(f"data does not fill a {rows}x{cols} matrix")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_rows(field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return Matrix(field, len(rows), ncols, rows)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return Matrix(field, rows, cols, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return Matrix(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def column(field: Field, entries) -> "Matrix":
        return Matrix(field, len(list(entries)), 1, [[x] for x in entries])

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols}, {list(map(list, self.data))})"

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(x == z for row in self.data for x in row)

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        z, o = self.field.zero, self.field.one
        return all(
            self.data[i][j] == (o if i == j else z)
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.cols, self.rows, list(zip(*self.data)) if self.data else [[] for _ in range(self.cols)])

    def col_entries(self, j: int):
        return tuple(row[j] for row in self.data)

    # -- arithmetic --------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ShapeError("matrix product across different fields")
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.rows == 0 or self.cols == 0 or other.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        p = self.field.p
        bt = list(zip(*other.data))
        out = []
        for arow in self.data:
            if p is not None:
                out.append([sum(a * b for a, b in zip(arow, bcol)) % p for bcol in bt])
            else:
                out.append([sum((a * b for a, b in zip(arow, bcol)), Fraction(0)) for bcol in bt])
        return Matrix(self.field, self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field or self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix sum shape mismatch")
        add = self.field.add
        return Matrix(
            self.field, self.rows, self.cols,
            [[add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Matrix(self.field, self.rows, self.cols, [[mul(c, x) for x in row] for row in self.data])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.field != other.field:
            raise ShapeError("hstack shape mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols or self.field != other.field:
            raise ShapeError("vstack shape mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.data + other.data)


# -- elimination kernel ------------------------------------------------------


def _rref(field: Field, rows):
    """Reduced row echelon form of a list of row lists.  Returns (rows, pivots)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    zero = field.zero
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c] != zero:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if inv != field.one:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != zero:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _np_rref_mod_p(arr: np.ndarray, p: int):
    """In-place RREF of an int64 array mod p.  Returns pivot column list."""
    arr %= p
    nrows, ncols = arr.shape
    pivots = []
    r = 0
    for c in range(ncols):
        col = arr[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            arr[[r, pr]] = arr[[pr, r]]
        inv = pow(int(arr[r, c]), p - 2, p)
        if inv != 1:
            arr[r] = (arr[r] * inv) % p
        col = arr[:, c].copy()
        col[r] = 0
        rows_nz = np.nonzero(col)[0]
        if rows_nz.size:
            arr[rows_nz] = (arr[rows_nz] - np.outer(col[rows_nz], arr[r])) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _use_numpy(m: Matrix) -> bool:
    return m.field.p is not None and m.rows * m.cols >= _NUMPY_MIN_CELLS


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product (same as ``a @ b``)."""
    return a @ b


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    if _use_numpy(a):
        arr = np.array(a.data, dtype=np.int64)
        return len(_np_rref_mod_p(arr, a.field.p))
    _, pivots = _rref(a.field, a.data)
    return len(pivots)


def _nullspace_from_rref(field: Field, rref_rows, pivots, ncols):
    """Basis column vectors of the kernel, given an RREF."""
    zero, one = field.zero, field.one
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            # row r reads: x_pc + sum over later cols of coeff * x_col = 0
            vec[pc] = field.neg(rref_rows[r][fc])
        basis.append(Matrix.column(field, vec))
    return basis


def nullspace_basis(a: Matrix) -> list[Matrix]:
    """Basis of {x : a @ x = 0} as column vectors; length = cols - rank."""
    if a.cols == 0:
        return []
    if a.rows == 0:
        return [Matrix.column(a.field, [a.field.one if i == j else a.field.zero for i in range(a.cols)])
                for j in range(a.cols)]
    if _use_numpy(a):
        arr = np.array(a.data, dtype=np.int64)
        pivots = _np_rref_mod_p(arr, a.field.p)
        rows = [list(map(int, arr[i])) for i in range(min(arr.shape[0], len(pivots)))]
        return _nullspace_from_rref(a.field, rows, pivots, a.cols)
    rows, pivots = _rref(a.field, a.data)
    return _nullspace_from_rref(a.field, rows, pivots, a.cols)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Some x with a @ x = b, or None when the system is inconsistent.

    ``b`` may have several columns; the solution then solves all of them.
    """
    if a.rows != b.rows:
        raise ShapeError("solve: right hand side has wrong length")
    if a.field != b.field:
        raise ShapeError("solve: field mismatch")
    field = a.field
    aug = a.hstack(b)
    rows, pivots = _rref(field, aug.data) if not _use_numpy(aug) else (None, None)
    if rows is None:
        arr = np.array(aug.data, dtype=np.int64)
        piv = _np_rref_mod_p(arr, field.p)
        rows = [list(map(int, r)) for r in arr]
        pivots = piv
    # any pivot column inside the b-block means inconsistency
    for pc in pivots:
        if pc >= a.cols:
            return None
    zero = field.zero
    out = [[zero] * b.cols for _ in range(a.cols)]
    for r, pc in enumerate(pivots):
        for j in range(b.cols):
            out[pc][j] = rows[r][a.cols + j]
    return Matrix(field, a.cols, b.cols, out)


def inverse(a: Matrix) -> Matrix | None:
    if a.rows != a.cols:
        return None
    x = solve(a, Matrix.identity(a.field, a.rows))
    if x is None:
        return None
    if not (a @ x).is_identity():
        return None
    return x


class EchelonAccumulator:
    """Incrementally maintained row space in reduced echelon form.

    Used to deduplicate linear constraints and to test membership of vectors
    in a growing span without re-eliminating from scratch.
    """

    def __init__(self, field: Field, width: int):
        self.field = field
        self.width = width
        self.rows: list[list] = []      # reduced rows
        self.pivots: list[int] = []     # pivot column of each row (sorted)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        """Residual of ``vec`` after reduction against the current rows."""
        field = self.field
        zero = field.zero
        v = list(vec)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            if c != zero:
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        zero = self.field.zero
        return all(x == zero for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert a vector; True when it enlarged the span."""
        field = self.field
        zero = field.zero
        v = self.reduce(vec)
        pc = next((i for i, x in enumerate(v) if x != zero), None)
        if pc is None:
            return False
        inv = field.inv(v[pc])
        if inv != field.one:
            v = [field.mul(inv, x) for x in v]
        # back-eliminate this column from existing rows to stay reduced
        for i, row in enumerate(self.rows):
            c = row[pc]
            if c != zero:
                self.rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(row, v)]
        at = next((i for i, q in enumerate(self.pivots) if q > pc), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pc)
        return True

    def nullspace(self) -> list[list]:
        """Basis of the solution space of (rows) x = 0, as plain lists."""
        field = self.field
        zero, one = field.zero, field.one
        pivset = set(self.pivots)
        basis = []
        for fc in range(self.width):
            if fc in pivset:
                continue
            vec = [zero] * self.width
            vec[fc] = one
            for row, pc in zip(self.rows, self.pivots):
                vec[pc] = field.neg(row[fc])
            basis.append(vec)
        return basis
