"""Dense matrices over a :class:`Field` and the elimination routines behind them.

Vectors are plain tuples of scalars.  Exact elimination works on sparse row
dictionaries, which keeps the large but very sparse derivation systems cheap.
Approximate elimination is dense Gauss-Jordan with partial pivoting.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Optional

from ..errors import DegenerateFormError, DimensionError
from .scalars import EXACT, Field, Scalar, format_scalar, same_field

Vector = tuple
SparseRow = dict  # column index -> nonzero scalar


class Matrix:
    """Immutable ``nrows x ncols`` matrix with homogeneous scalar entries."""

    __slots__ = ("_rows", "nrows", "ncols", "field", "_hash")

    def __init__(
        self,
        rows: Iterable[Iterable[object]],
        field: Field = EXACT,
        *,
        ncols: Optional[int] = None,
    ) -> None:
        coerce = field.coerce
        data = tuple(tuple(coerce(v) for v in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged matrix rows")
            if ncols is not None and ncols != width:
                raise DimensionError(f"expected {ncols} columns, got {width}")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width
        self.field = field
        self._hash: Optional[int] = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def _trusted(cls, rows: tuple, field: Field, ncols: int) -> "Matrix":
        m = cls.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        m.field = field
        m._hash = None
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, field: Field = EXACT) -> "Matrix":
        z = field.zero
        return cls._trusted(tuple((z,) * ncols for _ in range(nrows)), field, ncols)

    @classmethod
    def identity(cls, n: int, field: Field = EXACT) -> "Matrix":
        z, o = field.zero, field.one
        return cls._trusted(
            tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, n
        )

    @classmethod
    def diag(cls, entries: Sequence[object], field: Field = EXACT) -> "Matrix":
        vals = [field.coerce(v) for v in entries]
        n = len(vals)
        z = field.zero
        return cls._trusted(
            tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), field, n
        )

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[object]], field: Field = EXACT, *, nrows: Optional[int] = None
    ) -> "Matrix":
        if not columns:
            return cls([], field, ncols=0) if not nrows else cls.zeros(nrows, 0, field)
        return cls(zip(*columns), field, ncols=len(columns))

    # -- basic protocol -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def tolist(self) -> list[list[Scalar]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field.kind == other.field.kind
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.kind, self.shape, self._rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(_short(v) for v in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    # -- arithmetic ---------------------------------------------------------

    def _same(self, other: "Matrix") -> Field:
        field = same_field(self.field, other.field)
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")
        return field

    def __add__(self, other: "Matrix") -> "Matrix":
        field = self._same(other)
        return Matrix._trusted(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            field,
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        field = self._same(other)
        return Matrix._trusted(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            field,
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self._rows), self.field, self.ncols)

    def scale(self, c: object) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self._rows), self.field, self.ncols)

    def __mul__(self, c: object) -> "Matrix":
        if isinstance(c, Matrix):
            return self @ c
        return self.scale(c)

    __rmul__ = scale

    def __matmul__(self, other: "Matrix") -> "Matrix":
        field = same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        z = field.zero
        out = []
        for r in self._rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(sum((a * c[k] for k, a in nz), z) for c in cols))
        return Matrix._trusted(tuple(out), field, other.ncols)

    def apply(self, vec: Sequence[Scalar]) -> Vector:
        """Matrix-vector product."""
        if len(vec) != self.ncols:
            raise DimensionError(f"vector of length {len(vec)} for {self.shape} matrix")
        vec = tuple(self.field.coerce(v) for v in vec)
        z = self.field.zero
        return tuple(sum((a * b for a, b in zip(r, vec) if a), z) for r in self._rows)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    @property
    def T(self) -> "Matrix":
        return Matrix._trusted(tuple(zip(*self._rows)) if self._rows else (), self.field, self.nrows)

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionError("trace of a non-square matrix")
        return sum((self._rows[i][i] for i in range(self.nrows)), self.field.zero)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        result = Matrix.identity(self.nrows, self.field)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def vec(self) -> Vector:
        """Row-major flattening."""
        return tuple(a for r in self._rows for a in r)

    def max_abs(self) -> float:
        return max((abs(a) for r in self._rows for a in r), default=0.0)

    def is_zero(self) -> bool:
        if self.field.is_exact:
            return all(a == 0 for r in self._rows for a in r)
        return self.max_abs() <= self.field.tolerance

    def equals(self, other: "Matrix", scale: Optional[float] = None) -> bool:
        """Exact equality, or entrywise agreement within tolerance for approx."""
        field = self._same(other)
        if field.is_exact:
            return self._rows == other._rows
        s = max(self.max_abs(), other.max_abs(), 1.0) if scale is None else scale
        return (self - other).max_abs() <= field.tolerance * s

    def to_field(self, field: Field) -> "Matrix":
        """Explicit conversion exact -> approximate (the only allowed direction)."""
        if field.kind == self.field.kind:
            return Matrix._trusted(self._rows, field, self.ncols)
        if not self.field.is_exact:
            raise ValueError("approximate matrices cannot be converted to exact ones")
        return Matrix(self._rows, field, ncols=self.ncols)

    # -- elimination-backed helpers ----------------------------------------

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols, self.field))

    def det(self) -> Scalar:
        return det(self)

    def inverse(self) -> "Matrix":
        return inverse(self)


def _short(v: Scalar) -> str:
    return format_scalar(v)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def rref(rows: Iterable[Sequence[Scalar]], ncols: int, field: Field) -> dict[int, SparseRow]:
    """Reduced row echelon form as ``{pivot column: sparse row}``.

    Pivot rows are normalized so the pivot entry is one and every other pivot
    column is cleared.
    """
    sparse = ({j: v for j, v in enumerate(r) if v} for r in rows)
    if field.is_exact:
        return rref_sparse(sparse)
    return _rref_approx([dict(r) for r in sparse], ncols, field)


def rref_sparse(rows: Iterable[SparseRow]) -> dict[int, SparseRow]:
    """Exact reduced echelon form of sparse rows (column -> Fraction)."""
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        r = {c: v for c, v in raw.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                break
            f = r[c]
            for cc, v in p.items():
                nv = r.get(cc, 0) - f * v
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
        if r:
            c = min(r)
            inv = 1 / r[c]
            pivots[c] = {cc: v * inv for cc, v in r.items()}
    order = sorted(pivots)
    for c in reversed(order):
        prow = pivots[c]
        for c2 in order:
            if c2 >= c:
                break
            row = pivots[c2]
            f = row.get(c)
            if f:
                for cc, v in prow.items():
                    nv = row.get(cc, 0) - f * v
                    if nv:
                        row[cc] = nv
                    else:
                        row.pop(cc, None)
    return {c: pivots[c] for c in order}


def _rref_approx(rows: list[SparseRow], ncols: int, field: Field) -> dict[int, SparseRow]:
    # Pivot test: |pivot| <= tol * (largest column magnitude of the input).
    dense = [[r.get(j, 0j) for j in range(ncols)] for r in rows]
    threshold = field.tolerance * max((abs(v) for r in dense for v in r), default=0.0)
    pivot_cols: list[int] = []
    top = 0
    nrows = len(dense)
    for j in range(ncols):
        if top == nrows:
            break
        best = max(range(top, nrows), key=lambda i: abs(dense[i][j]))
        if abs(dense[best][j]) <= threshold or dense[best][j] == 0:
            for i in range(top, nrows):
                dense[i][j] = 0j
            continue
        dense[top], dense[best] = dense[best], dense[top]
        prow = dense[top]
        inv = 1 / prow[j]
        prow[:] = [v * inv for v in prow]
        prow[j] = 1 + 0j
        for i in range(nrows):
            if i != top and dense[i][j] != 0:
                f = dense[i][j]
                dense[i] = [a - f * b for a, b in zip(dense[i], prow)]
                dense[i][j] = 0j
        pivot_cols.append(j)
        top += 1
    return {j: {c: v for c, v in enumerate(dense[i]) if v != 0} for i, j in enumerate(pivot_cols)}


def kernel_from_rref(pivots: dict[int, SparseRow], ncols: int, field: Field) -> list[Vector]:
    free = [j for j in range(ncols) if j not in pivots]
    z, o = field.zero, field.one
    basis = []
    for f in free:
        v = [z] * ncols
        v[f] = o
        for pc, row in pivots.items():
            a = row.get(f)
            if a:
                v[pc] = -a
        basis.append(tuple(v))
    return basis


def kernel_basis(A: Matrix) -> list[Vector]:
    """Basis of ``{x : A x = 0}``, one vector per free column, in column order."""
    return kernel_from_rref(rref(A.rows, A.ncols, A.field), A.ncols, A.field)


def rank(A: Matrix) -> int:
    return A.rank()


def solve_linear(A: Matrix, b: Sequence[object]) -> Optional[Vector]:
    """One solution of ``A x = b``, or ``None`` when the system is inconsistent.

    Free variables are set to zero.  Over the approximate field the returned
    solution satisfies ``|A x - b| <= tol * (1 + |b|)``.
    """
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")
    field = A.field
    bb = [field.coerce(v) for v in b]
    n = A.ncols
    pivots = rref((tuple(r) + (v,) for r, v in zip(A.rows, bb)), n + 1, field)
    if n in pivots:
        return None
    x = [field.zero] * n
    for pc, row in pivots.items():
        x[pc] = row.get(n, field.zero)
    x = tuple(x)
    if not field.is_exact:
        res = [r - v for r, v in zip(A.apply(x), bb)]
        norm_b = sum(abs(v) ** 2 for v in bb) ** 0.5
        scale = max(A.max_abs(), 1.0) * max(max((abs(v) for v in x), default=0.0), 1.0)
        if sum(abs(v) ** 2 for v in res) ** 0.5 > field.tolerance * (1 + norm_b) * scale:
            return None
    return x


def solve_matrix(A: Matrix, B: Matrix) -> Optional[Matrix]:
    """Solve ``A X = B`` column by column; ``None`` if any column is inconsistent."""
    cols = []
    for j in range(B.ncols):
        x = solve_linear(A, B.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(cols, A.field, nrows=A.ncols)


def det(A: Matrix) -> Scalar:
    """Determinant by Gaussian elimination with row swaps."""
    if not A.is_square:
        raise DimensionError("determinant of a non-square matrix")
    field = A.field
    m = [list(r) for r in A.rows]
    n = A.nrows
    d = field.one
    for j in range(n):
        if field.is_exact:
            piv = next((i for i in range(j, n) if m[i][j] != 0), None)
        else:
            piv = max(range(j, n), key=lambda i: abs(m[i][j]))
            if m[piv][j] == 0:
                piv = None
        if piv is None:
            return field.zero
        if piv != j:
            m[j], m[piv] = m[piv], m[j]
            d = -d
        p = m[j][j]
        d *= p
        for i in range(j + 1, n):
            f = m[i][j]
            if f:
                f = f / p
                m[i] = [a - f * b for a, b in zip(m[i], m[j])]
    return d


def inverse(A: Matrix) -> Matrix:
    if not A.is_square:
        raise DimensionError("inverse of a non-square matrix")
    n = A.nrows
    field = A.field
    I = Matrix.identity(n, field)
    pivots = rref((tuple(r) + tuple(e) for r, e in zip(A.rows, I.rows)), 2 * n, field)
    if any(j not in pivots for j in range(n)):
        raise DegenerateFormError("matrix is singular")
    z = field.zero
    return Matrix._trusted(
        tuple(tuple(pivots[i].get(n + j, z) for j in range(n)) for i in range(n)), field, n
    )


def span_basis(vectors: Sequence[Sequence[Scalar]], dim: int, field: Field) -> list[Vector]:
    """Reduced basis of the span of ``vectors`` (rows of the RREF)."""
    pivots = rref(vectors, dim, field)
    z = field.zero
    return [tuple(row.get(j, z) for j in range(dim)) for row in pivots.values()]


def independent_subset(vectors: Sequence[Sequence[Scalar]], dim: int, field: Field) -> list[int]:
    """Indices of a maximal independent subset, greedily in input order."""
    if not vectors:
        return []
    cols = rref(zip(*vectors), len(vectors), field) if dim else {}
    return sorted(cols)


def in_span(vectors: Sequence[Sequence[Scalar]], v: Sequence[Scalar], field: Field) -> bool:
    dim = len(v)
    if not vectors:
        return all(field.is_zero(a) for a in v)
    A = Matrix.from_columns(vectors, field, nrows=dim)
    return solve_linear(A, tuple(v)) is not None
