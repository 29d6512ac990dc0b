"""Dense matrices over Q(i) or complex, sized for gadget calculus.

Transition matrices of gates are small (at most 16x16 here), so everything
uses straightforward Gaussian elimination and Faddeev-LeVerrier; exactness
matters more than asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .scalars import (
    FLOAT_TOLERANCE,
    GaussianRational,
    QI_ONE,
    QI_ZERO,
    Scalar,
    is_zero,
    scalars_equal,
    to_complex,
)


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(ZeroDivisionError):
    """Matrix inversion was requested for a singular matrix."""


def _canonical(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    if isinstance(value, (float, complex)):
        return complex(value)
    raise TypeError(f"unsupported matrix entry {value!r}")


class Matrix:
    """Immutable dense matrix; entries are GaussianRational or complex."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(_canonical(v) for v in row) for row in data)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        if any(isinstance(v, complex) for r in rows for v in r):
            rows = tuple(tuple(to_complex(v) for v in row) for row in rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int, *, exact: bool = True) -> "Matrix":
        one = QI_ONE if exact else 1 + 0j
        zero = QI_ZERO if exact else 0j
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int, *, exact: bool = True) -> "Matrix":
        zero = QI_ZERO if exact else 0j
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def column(cls, values: Sequence[Scalar]) -> "Matrix":
        return cls([[v] for v in values])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "Matrix":
        n = len(values)
        exact = not any(isinstance(v, (float, complex)) for v in values)
        zero = QI_ZERO if exact else 0j
        return cls(
            [[values[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    # -- basic structure -------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return isinstance(self.data[0][0], GaussianRational)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column_vector(self, j: int) -> tuple:
        return tuple(self.data[i][j] for i in range(self.rows))

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.data)))

    def map(self, fn: Callable[[Scalar], Scalar]) -> "Matrix":
        return Matrix([[fn(v) for v in row] for row in self.data])

    def to_float(self) -> "Matrix":
        return Matrix([[to_complex(v) for v in row] for row in self.data])

    def __iter__(self):
        return iter(self.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(
            " ".join(str(v) for v in row) for row in self.data
        )
        return f"Matrix[{self.rows}x{self.cols}: {body}]"

    def equal_within(self, other: "Matrix", tol: float | None = None) -> bool:
        if self.shape != other.shape:
            return False
        return all(
            scalars_equal(a, b, tol)
            for ra, rb in zip(self.data, other.data)
            for a, b in zip(ra, rb)
        )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"add {self.shape} vs {other.shape}")
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"sub {self.shape} vs {other.shape}")
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def scale(self, scalar: Scalar) -> "Matrix":
        return Matrix([[scalar * v for v in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return self.mul(other)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        cols = other.transpose().data
        return Matrix(
            [
                [sum_products(row, col) for col in cols]
                for row in self.data
            ]
        )

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; self supplies the high-order index bits."""
        out = []
        for ra in self.data:
            for rb in other.data:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def pow(self, exponent: int) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("matrix power needs a square matrix")
        if exponent < 0:
            return self.inverse().pow(-exponent)
        result = Matrix.identity(self.rows, exact=self.is_exact)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result.mul(base)
            base = base.mul(base)
            k >>= 1
        return result

    # -- elimination-based operations --------------------------------------

    def _pivot_row(self, rows, col, start, tol):
        if self.is_exact and tol is None:
            for i in range(start, len(rows)):
                if rows[i][col]:
                    return i
            return None
        best, best_abs = None, 0.0
        t = FLOAT_TOLERANCE if tol is None else tol
        for i in range(start, len(rows)):
            a = abs(to_complex(rows[i][col]))
            if a > best_abs:
                best, best_abs = i, a
        return best if best is not None and best_abs > t else None

    def rref(self, tol: float | None = None):
        """Reduced row echelon form; returns (matrix, pivot column list)."""
        rows = [list(r) for r in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == len(rows):
                break
            p = self._pivot_row(rows, c, r, tol)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = rows[r][c]
            rows[r] = [v / inv for v in rows[r]]
            for i in range(len(rows)):
                if i != r and not is_zero(rows[i][c], tol):
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(rows), pivots

    def rank(self, tol: float | None = None) -> int:
        return len(self.rref(tol)[1])

    def kernel_basis(self, tol: float | None = None) -> list[tuple]:
        """Basis of the right null space, one vector per free column."""
        reduced, pivots = self.rref(tol)
        zero = QI_ZERO if self.is_exact else 0j
        one = QI_ONE if self.is_exact else 1 + 0j
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [zero] * self.cols
            vec[fc] = one
            for r, pc in enumerate(pivots):
                vec[pc] = -reduced.data[r][fc]
            basis.append(tuple(vec))
        return basis

    def det(self, tol: float | None = None) -> Scalar:
        if self.rows != self.cols:
            raise DimensionMismatch("determinant needs a square matrix")
        rows = [list(r) for r in self.data]
        det = QI_ONE if self.is_exact else 1 + 0j
        for c in range(self.cols):
            p = self._pivot_row(rows, c, c, tol)
            if p is None:
                return QI_ZERO if self.is_exact else 0j
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = rows[c][c]
            for i in range(c + 1, len(rows)):
                if not is_zero(rows[i][c], tol):
                    factor = rows[i][c] / inv
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
        return det

    def inverse(self, tol: float | None = None) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatch("inverse needs a square matrix")
        n = self.rows
        aug = [
            list(self.data[i])
            + [
                (QI_ONE if self.is_exact else 1 + 0j)
                if i == j
                else (QI_ZERO if self.is_exact else 0j)
                for j in range(n)
            ]
            for i in range(n)
        ]
        work = Matrix(aug)
        reduced, pivots = work.rref(tol)
        if pivots != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return Matrix([row[n:] for row in reduced.data])

    def char_poly(self) -> tuple:
        """Coefficients (a_{n-1}, ..., a_1, a_0) of det(xI - M).

        The polynomial is monic of degree n; the leading 1 is implicit.
        Computed with the Faddeev-LeVerrier recurrence, exact over Q(i).
        """
        if self.rows != self.cols:
            raise DimensionMismatch("char_poly needs a square matrix")
        n = self.rows
        exact = self.is_exact
        one = QI_ONE if exact else 1 + 0j
        ident = Matrix.identity(n, exact=exact)
        coeffs = []
        m_k = Matrix.zero(n, n, exact=exact)
        c = one
        for k in range(1, n + 1):
            m_k = self.mul(m_k + ident.scale(c))
            trace = m_k.data[0][0]
            for i in range(1, n):
                trace = trace + m_k.data[i][i]
            if exact:
                c = trace / GaussianRational(-k)
            else:
                c = trace / complex(-k)
            coeffs.append(c)
        return tuple(coeffs)

    # -- projective-scale helpers ------------------------------------------

    def first_nonzero(self, tol: float | None = None):
        """(row, col, value) of the first nonzero entry in row-major order."""
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if not is_zero(v, tol):
                    return i, j, v
        return None

    def scalar_normal_form(self, tol: float | None = None) -> "Matrix":
        """Divide by the first nonzero entry; canonical up to global scale."""
        hit = self.first_nonzero(tol)
        if hit is None:
            return self
        _, _, v = hit
        return Matrix([[a / v for a in row] for row in self.data])

    def proportional_to(self, other: "Matrix", tol: float | None = None) -> bool:
        if self.shape != other.shape:
            return False
        return self.scalar_normal_form(tol).equal_within(
            other.scalar_normal_form(tol), tol
        )

    def is_diagonal(self, tol: float | None = None) -> bool:
        return all(
            is_zero(v, tol)
            for i, row in enumerate(self.data)
            for j, v in enumerate(row)
            if i != j
        )

    def is_upper_triangular(self, tol: float | None = None) -> bool:
        return all(
            is_zero(v, tol)
            for i, row in enumerate(self.data)
            for j, v in enumerate(row)
            if i > j
        )

    def is_lower_triangular(self, tol: float | None = None) -> bool:
        return all(
            is_zero(v, tol)
            for i, row in enumerate(self.data)
            for j, v in enumerate(row)
            if i < j
        )


def sum_products(row: Sequence[Scalar], col: Sequence[Scalar]) -> Scalar:
    acc = None
    for a, b in zip(row, col):
        term = a * b
        acc = term if acc is None else acc + term
    return acc


def vector_scalar_normal(vec: Sequence[Scalar], tol: float | None = None):
    """Normalize a vector by its first nonzero entry; None for the zero vector."""
    lead = None
    for v in vec:
        if not is_zero(v, tol):
            lead = v
            break
    if lead is None:
        return None
    return tuple(v / lead for v in vec)


def vectors_independent(vecs: Sequence[Sequence[Scalar]], tol: float | None = None) -> bool:
    m = Matrix(list(vecs))
    return m.rank(tol) == len(vecs)


def span_dim(vecs: Sequence[Sequence[Scalar]], tol: float | None = None) -> int:
    return Matrix(list(vecs)).rank(tol)
