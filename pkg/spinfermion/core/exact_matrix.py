"""Dense exact linear algebra over ``ExactComplex``."""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from spinfermion.core.errors import DimensionMismatch, ParseError, SingularMatrix
from spinfermion.core.exact_scalar import (
    CONE,
    CZERO,
    ExactComplex,
    as_exact_complex,
    format_exact_real,
    parse_exact_real,
)


class Matrix:
    """Immutable row-major matrix of exact complex entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Any]):
        values = tuple(as_exact_complex(e) for e in entries)
        if rows < 1 or cols < 1:
            raise DimensionMismatch(f"Matrix dimensions must be positive, got {rows}x{cols}")
        if len(values) != rows * cols:
            raise DimensionMismatch(
                f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(values)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = values

    @classmethod
    def _trusted(cls, rows: int, cols: int, entries: Sequence[ExactComplex]) -> "Matrix":
        obj = cls.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj.entries = tuple(entries)
        return obj

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        entries = [CZERO] * (n * n)
        for i in range(n):
            entries[i * n + i] = CONE
        return cls._trusted(n, n, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._trusted(rows, cols, [CZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Any]) -> "Matrix":
        n = len(values)
        entries = [CZERO] * (n * n)
        for i, value in enumerate(values):
            entries[i * n + i] = as_exact_complex(value)
        return cls._trusted(n, n, entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "Matrix":
        if not rows:
            raise DimensionMismatch("A matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionMismatch("Rows have differing lengths")
        return cls(len(rows), width, [e for row in rows for e in row])

    @classmethod
    def column(cls, values: Sequence[Any]) -> "Matrix":
        return cls(len(values), 1, values)

    # -- access ---------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> ExactComplex:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"Index ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[ExactComplex, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[ExactComplex]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def diagonal_entries(self) -> List[ExactComplex]:
        return [self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols))]

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def nonzero_entries(self) -> List[Tuple[int, int, ExactComplex]]:
        """``(i, j, value)`` triples, 0-based."""
        return [
            (k // self.cols, k % self.cols, e)
            for k, e in enumerate(self.entries)
            if not e.is_zero()
        ]

    # -- operators ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        return add(self, other)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return sub(self, other)

    def __neg__(self) -> "Matrix":
        return scale(-CONE, self)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def __mul__(self, scalar) -> "Matrix":
        return scale(scalar, self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class PolyCoeffs:
    """Polynomial coefficients, lowest degree first; ``()`` is the zero polynomial."""

    coefficients: Tuple[ExactComplex, ...]

    def __post_init__(self):
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1].is_zero():
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, power: int) -> ExactComplex:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return CZERO


def _require_same_shape(a: Matrix, b: Matrix, what: str):
    if a.shape != b.shape:
        raise DimensionMismatch(f"{what}: shapes {a.shape} and {b.shape} differ")


def _require_square(a: Matrix, what: str):
    if not a.is_square():
        raise DimensionMismatch(f"{what} needs a square matrix, got {a.shape}")


def add(a: Matrix, b: Matrix) -> Matrix:
    _require_same_shape(a, b, "add")
    return Matrix._trusted(a.rows, a.cols, [x + y for x, y in zip(a.entries, b.entries)])


def sub(a: Matrix, b: Matrix) -> Matrix:
    _require_same_shape(a, b, "sub")
    return Matrix._trusted(a.rows, a.cols, [x - y for x, y in zip(a.entries, b.entries)])


def scale(scalar, a: Matrix) -> Matrix:
    factor = as_exact_complex(scalar)
    if factor.is_zero():
        return Matrix.zeros(a.rows, a.cols)
    return Matrix._trusted(a.rows, a.cols, [factor * e if not e.is_zero() else e for e in a.entries])


def _sparse_rows(a: Matrix) -> List[List[Tuple[int, ExactComplex]]]:
    rows: List[List[Tuple[int, ExactComplex]]] = [[] for _ in range(a.rows)]
    for i, j, value in a.nonzero_entries():
        rows[i].append((j, value))
    return rows


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; zero entries are skipped."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"matmul: {a.shape} @ {b.shape}")
    left = _sparse_rows(a)
    right = _sparse_rows(b)
    entries = [CZERO] * (a.rows * b.cols)
    for i, row in enumerate(left):
        accumulator: Dict[int, ExactComplex] = {}
        for k, a_ik in row:
            for j, b_kj in right[k]:
                product = a_ik * b_kj
                accumulator[j] = accumulator[j] + product if j in accumulator else product
        base = i * b.cols
        for j, value in accumulator.items():
            entries[base + j] = value
    return Matrix._trusted(a.rows, b.cols, entries)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block ``(i, j)`` equals ``a[i, j] * b``."""
    rows, cols = a.rows * b.rows, a.cols * b.cols
    entries = [CZERO] * (rows * cols)
    right = b.nonzero_entries()
    for i, j, a_ij in a.nonzero_entries():
        for k, l, b_kl in right:
            entries[(i * b.rows + k) * cols + j * b.cols + l] = a_ij * b_kl
    return Matrix._trusted(rows, cols, entries)


def kron_all(factors: Sequence[Matrix]) -> Matrix:
    """Left-to-right Kronecker product; the empty product is the 1x1 identity."""
    result = Matrix.identity(1)
    for factor in factors:
        result = kron(result, factor)
    return result


def transpose(a: Matrix) -> Matrix:
    return Matrix._trusted(
        a.cols, a.rows, [a.entries[i * a.cols + j] for j in range(a.cols) for i in range(a.rows)]
    )


def dagger(a: Matrix) -> Matrix:
    """Conjugate transpose."""
    return Matrix._trusted(
        a.cols,
        a.rows,
        [a.entries[i * a.cols + j].conjugate() for j in range(a.cols) for i in range(a.rows)],
    )


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    _require_square(a, "anticommutator")
    _require_same_shape(a, b, "anticommutator")
    return add(matmul(a, b), matmul(b, a))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    _require_square(a, "commutator")
    _require_same_shape(a, b, "commutator")
    return sub(matmul(a, b), matmul(b, a))


def mat_pow(a: Matrix, k: int) -> Matrix:
    """``a`` to the non-negative integer power ``k`` by repeated squaring."""
    _require_square(a, "mat_pow")
    if k < 0:
        raise ValueError(f"mat_pow needs a non-negative exponent, got {k}")
    result, base = Matrix.identity(a.rows), a
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def trace(a: Matrix) -> ExactComplex:
    _require_square(a, "trace")
    total = CZERO
    for value in a.diagonal_entries():
        total = total + value
    return total


def _row_echelon(rows: List[List[ExactComplex]], augment: int = 0) -> List[int]:
    """In-place elimination; returns pivot columns. The last ``augment`` columns are never pivots."""
    n_rows = len(rows)
    n_cols = len(rows[0]) - augment if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = rows[r][c].inverse()
        rows[r] = [inverse * e if not e.is_zero() else e for e in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                factor = rows[i][c]
                rows[i] = [
                    x - factor * y if not y.is_zero() else x for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(a: Matrix) -> int:
    """Rank by exact Gauss-Jordan elimination."""
    return len(_row_echelon(a.to_rows()))


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Exact ``x`` with ``a @ x == b``."""
    _require_square(a, "solve")
    if b.rows != a.rows:
        raise DimensionMismatch(f"solve: right-hand side has {b.rows} rows, expected {a.rows}")
    augmented = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    pivots = _row_echelon(augmented, augment=b.cols)
    if len(pivots) != a.rows:
        raise SingularMatrix(f"Matrix of size {a.rows} has rank {len(pivots)}")
    return Matrix._trusted(a.rows, b.cols, [e for row in augmented for e in row[a.cols:]])


def inverse(a: Matrix) -> Matrix:
    return solve(a, Matrix.identity(a.rows))


def char_poly(a: Matrix) -> PolyCoeffs:
    """Coefficients of ``det(xI - a)`` by the Faddeev-LeVerrier recurrence."""
    _require_square(a, "char_poly")
    n = a.rows
    coefficients: List[ExactComplex] = [CZERO] * (n + 1)
    coefficients[n] = CONE
    identity = Matrix.identity(n)
    m = Matrix.zeros(n)
    for k in range(1, n + 1):
        m = add(matmul(a, m), scale(coefficients[n - k + 1], identity))
        coefficients[n - k] = trace(matmul(a, m)) * ExactComplex(-1) / ExactComplex(k)
    return PolyCoeffs(tuple(coefficients))


# -- JSON ------------------------------------------------------------------

def matrix_to_json(m: Matrix) -> Dict[str, Any]:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_exact_real(e.re), format_exact_real(e.im)] for e in m.entries],
    }


def matrix_from_json(data: Dict[str, Any]) -> Matrix:
    try:
        rows, cols = int(data["rows"]), int(data["cols"])
        entries = [
            ExactComplex(parse_exact_real(re), parse_exact_real(im)) for re, im in data["entries"]
        ]
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"Malformed matrix document: {str(e)}") from e
    return Matrix(rows, cols, entries)
