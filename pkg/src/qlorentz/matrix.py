"""Sparse exact matrices over :class:`Scalar`.

Rows are dicts ``{col: Scalar}`` with zeros never stored.  This keeps the
64x64 Yang-Baxter products cheap because the braid matrices are mostly zero.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .scalars import ONE, ZERO, Scalar


class Matrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, dict[int, Scalar]] | None = None):
        self.nrows, self.ncols = nrows, ncols
        self.rows: dict[int, dict[int, Scalar]] = {}
        if rows:
            for i, row in rows.items():
                clean = {j: v for j, v in row.items() if v}
                if clean:
                    self.rows[i] = clean

    @classmethod
    def from_function(cls, nrows: int, ncols: int, fn: Callable[[int, int], Scalar]) -> "Matrix":
        rows = {}
        for i in range(nrows):
            row = {}
            for j in range(ncols):
                v = fn(i, j)
                if v:
                    row[j] = v if isinstance(v, Scalar) else Scalar(v)
            if row:
                rows[i] = row
        return cls._clean(nrows, ncols, rows)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "Matrix":
        n = len(data)
        m = len(data[0]) if n else 0
        return cls.from_function(n, m, lambda i, j: data[i][j])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._clean(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._clean(nrows, ncols, {})

    @classmethod
    def _clean(cls, nrows, ncols, rows) -> "Matrix":
        obj = cls.__new__(cls)
        obj.nrows, obj.ncols, obj.rows = nrows, ncols, rows
        return obj

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.rows.get(i, {}).get(j, ZERO)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def entries(self) -> Iterable[tuple[int, int, Scalar]]:
        for i in sorted(self.rows):
            for j in sorted(self.rows[i]):
                yield i, j, self.rows[i][j]

    def to_lists(self) -> list[list[Scalar]]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    # -- algebra ------------------------------------------------------------

    def _check_same(self, other: "Matrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        rows = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            tgt = rows.setdefault(i, {})
            for j, v in r.items():
                x = tgt.get(j, ZERO) + v
                if x:
                    tgt[j] = x
                else:
                    tgt.pop(j, None)
        return Matrix._clean(self.nrows, self.ncols, {i: r for i, r in rows.items() if r})

    def __neg__(self) -> "Matrix":
        return Matrix._clean(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Scalar) -> "Matrix":
        if not c:
            return Matrix.zeros(self.nrows, self.ncols)
        return Matrix._clean(self.nrows, self.ncols, {i: {j: c * v for j, v in r.items()} for i, r in self.rows.items()})

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = {}
        for i, r in self.rows.items():
            acc: dict[int, Scalar] = {}
            for k, a in r.items():
                ok = other.rows.get(k)
                if not ok:
                    continue
                for j, b in ok.items():
                    acc[j] = acc.get(j, ZERO) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                rows[i] = acc
        return Matrix._clean(self.nrows, other.ncols, rows)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        return self.scale(other if isinstance(other, Scalar) else Scalar(other))

    __rmul__ = scale

    def plus_identity(self, c: Scalar) -> "Matrix":
        """``self + c*1`` for square matrices."""
        return self + Matrix.identity(self.nrows).scale(c)

    def transpose(self) -> "Matrix":
        rows: dict[int, dict[int, Scalar]] = {}
        for i, r in self.rows.items():
            for j, v in r.items():
                rows.setdefault(j, {})[i] = v
        return Matrix._clean(self.ncols, self.nrows, rows)

    T = property(transpose)

    def map(self, fn: Callable[[Scalar], Scalar]) -> "Matrix":
        return Matrix(self.nrows, self.ncols, {i: {j: fn(v) for j, v in r.items()} for i, r in self.rows.items()})

    def kron(self, other: "Matrix") -> "Matrix":
        rows: dict[int, dict[int, Scalar]] = {}
        for i, r in self.rows.items():
            for k, ro in other.rows.items():
                row = {}
                for j, a in r.items():
                    for l, b in ro.items():
                        row[j * other.ncols + l] = a * b
                rows[i * other.nrows + k] = row
        return Matrix._clean(self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, frozenset((i, j, v) for i, j, v in self.entries())))

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        out = []
        for i in range(self.nrows):
            acc = ZERO
            for j, v in self.rows.get(i, {}).items():
                acc = acc + v * vec[j]
            out.append(acc)
        return out

    # -- elimination --------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and pivot columns (exact)."""
        work = [dict(self.rows.get(i, {})) for i in range(self.nrows)]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            p = next((i for i in range(r, self.nrows) if work[i].get(c)), None)
            if p is None:
                continue
            work[r], work[p] = work[p], work[r]
            inv = work[r][c].inverse()
            work[r] = {j: v * inv for j, v in work[r].items()}
            for i in range(self.nrows):
                if i != r and work[i].get(c):
                    f = work[i][c]
                    row = dict(work[i])
                    for j, v in work[r].items():
                        x = row.get(j, ZERO) - f * v
                        if x:
                            row[j] = x
                        else:
                            row.pop(j, None)
                    work[i] = row
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        rows = {i: row for i, row in enumerate(work) if row}
        return Matrix._clean(self.nrows, self.ncols, rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices are invertible")
        n = self.nrows
        aug = Matrix._clean(n, 2 * n, {})
        for i in range(n):
            row = dict(self.rows.get(i, {}))
            row[n + i] = ONE
            aug.rows[i] = row
        red, piv = aug.rref()
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix.from_function(n, n, lambda i, j: red[i, n + j])

    def __str__(self) -> str:
        return "\n".join(" ".join(str(self[i, j]) for j in range(self.ncols)) for i in range(self.nrows))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"
