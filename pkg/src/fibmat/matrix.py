"""Dense exact-arithmetic matrices and the group-inverse engine.

Entries are Python ints or fractions.Fraction values; no floating point
anywhere.  A Fraction that reduces to a whole number is normalized to int on
construction, so integer-valued results compare and render as integers.

The group inverse of a square A, when it exists, is the unique X with
A X A = A, X A X = X and A X = X A.  It exists iff rank(A) = rank(A^2).  It
is computed here through a full-rank factorization A = C R (C the pivot
columns of A, R the nonzero rows of the reduced row echelon form); R C is
invertible exactly when the group inverse exists, and then
X = C (R C)^-2 R.  The three defining identities are re-checked exactly
before the result is returned.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoGroupInverse, VerificationError


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class Matrix:
    """Immutable dense matrix over exact numbers (int / Fraction)."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows) -> None:
        data = tuple(tuple(_norm(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("rows have inconsistent lengths")
        object.__setattr__(self, "_rows", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def ones(cls, n: int) -> "Matrix":
        return cls([[1] * n for _ in range(n)])

    @classmethod
    def column(cls, entries) -> "Matrix":
        return cls([[x] for x in entries])

    @classmethod
    def basis_column(cls, n: int, i: int) -> "Matrix":
        """Standard basis column e^i (1-based index i)."""
        return cls([[1 if r == i - 1 else 0] for r in range(n)])

    # -- inspection ------------------------------------------------------------

    def row(self, i: int):
        return self._rows[i]

    def entry(self, i: int, j: int):
        return self._rows[i][j]

    def to_lists(self) -> list[list]:
        return [list(row) for row in self._rows]

    def entries_row_major(self):
        for row in self._rows:
            yield from row

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_upper_triangular(self) -> bool:
        return all(
            self._rows[i][j] == 0 for i in range(self.rows) for j in range(min(i, self.cols))
        )

    @property
    def is_zero_one(self) -> bool:
        return all(x == 0 or x == 1 for x in self.entries_row_major())

    @property
    def is_integer(self) -> bool:
        return all(isinstance(x, int) for x in self.entries_row_major())

    @property
    def is_unitriangular(self) -> bool:
        return (
            self.is_square
            and self.is_upper_triangular
            and all(self._rows[i][i] == 1 for i in range(self.rows))
        )

    # -- algebra ----------------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        bcols = list(zip(*other._rows))
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bcols] for row in self._rows]
        )

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._rows)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"Matrix([{body}])"

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self._rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    return a @ b


def sum_entries(m: Matrix):
    """Sum of all entries, exact."""
    return _norm(sum(m.entries_row_major()))


def column_sums(m: Matrix) -> list:
    """Per-column entry sums, exact."""
    return [_norm(sum(col)) for col in zip(*m._rows)]


def unitriangular_inverse(m: Matrix) -> Matrix:
    """Exact inverse of an integer upper-triangular matrix with unit diagonal.

    The inverse of such a matrix is again integer, upper triangular with unit
    diagonal; it is obtained by back substitution, one column at a time.
    """
    if not m.is_square:
        raise ValueError("matrix must be square")
    if not m.is_integer:
        raise ValueError("matrix must have integer entries")
    if not m.is_unitriangular:
        raise ValueError("matrix must be upper triangular with unit diagonal")
    n = m.rows
    rows = m._rows
    inv_cols: list[list[int]] = []
    for j in range(n):
        x = [0] * n
        x[j] = 1
        for i in range(j - 1, -1, -1):
            row = rows[i]
            x[i] = -sum(row[k] * x[k] for k in range(i + 1, j + 1) if row[k] and x[k])
        inv_cols.append(x)
    return Matrix(list(zip(*inv_cols)))


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; returns (rows, pivot column indices)."""
    nrows = len(rows)
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        if pivot != 1:
            rows[r] = [x / pivot for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    """Exact rank via rational elimination."""
    work = [[Fraction(x) for x in row] for row in m._rows]
    _, pivots = _rref(work)
    return len(pivots)


def _invert_square(rows: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Invert a square rational matrix by Gauss-Jordan; None if singular."""
    n = len(rows)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    r = 0
    for c in range(n):
        pivot_row = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if pivot_row is None:
            return None
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pivot = aug[r][c]
        if pivot != 1:
            aug[r] = [x / pivot for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[r])]
        r += 1
    return [row[n:] for row in aug]


def group_inverse(a: Matrix) -> Matrix:
    """Exact group inverse of a square matrix.

    Raises NoGroupInverse when rank(a) != rank(a^2); the zero matrix is its
    own group inverse.  The result is verified against the three defining
    identities before being returned.
    """
    if not a.is_square:
        raise ValueError("matrix must be square")
    n = a.rows
    work = [[Fraction(x) for x in row] for row in a._rows]
    rref_rows, pivots = _rref(work)
    r = len(pivots)
    if r == 0:
        return Matrix.zeros(n)
    c = Matrix([[row[j] for j in pivots] for row in a._rows])  # n x r
    rmat = Matrix(rref_rows[:r])  # r x n
    core = (rmat @ c)._rows
    core_inv = _invert_square([[Fraction(x) for x in row] for row in core])
    if core_inv is None:
        raise NoGroupInverse(f"rank(A) = {r} differs from rank(A^2); no group inverse")
    mi = Matrix(core_inv)
    x = c @ (mi @ mi) @ rmat
    axa = a @ x @ a
    xax = x @ a @ x
    if axa != a or xax != x or (a @ x) != (x @ a):
        raise VerificationError("group inverse failed the defining identities")
    return x


def _block_group_inverse_cols(c: Matrix, tail: Matrix) -> Matrix:
    """Group inverse of [[C, T], [0, 0]] for invertible unitriangular C.

    C has order k, T is k x t; the result is the (k+t) x (k+t) integer matrix
    [[C^-1, C^-2 T], [0, 0]].
    """
    k = c.rows
    t = tail.cols
    if tail.rows != k:
        raise ValueError("tail column length must match the core order")
    c_inv = unitriangular_inverse(c)
    top_right = c_inv @ (c_inv @ tail)
    n = k + t
    out = [[0] * n for _ in range(n)]
    for i in range(k):
        out[i][:k] = list(c_inv.row(i))
        out[i][k:] = list(top_right.row(i))
    return Matrix(out)


def block_group_inverse(c: Matrix, x) -> Matrix:
    """Group inverse of the bordered singular matrix [[C, x], [0, 0]].

    C must be an invertible unitriangular {0,1} integer matrix of order k and
    x a {0,1} column of length k.  Agrees exactly with group_inverse applied
    to the assembled (k+1) x (k+1) block matrix.
    """
    if not c.is_unitriangular or not c.is_zero_one:
        raise ValueError("core must be a {0,1} unitriangular matrix")
    col = x if isinstance(x, Matrix) else Matrix.column(x)
    if col.cols != 1:
        raise ValueError("x must be a single column")
    if not col.is_zero_one:
        raise ValueError("x must be a {0,1} column")
    return _block_group_inverse_cols(c, col)


def bordered_singular(core: Matrix, tail_columns) -> Matrix:
    """Assemble [[C, T], [0, 0]]: core C with extra columns and zero rows."""
    tail = tail_columns if isinstance(tail_columns, Matrix) else Matrix(list(zip(*tail_columns)))
    k = core.rows
    t = tail.cols
    if tail.rows != k:
        raise ValueError("tail column length must match the core order")
    n = k + t
    out = [[0] * n for _ in range(n)]
    for i in range(k):
        out[i][:k] = list(core.row(i))
        out[i][k:] = list(tail.row(i))
    return Matrix(out)
