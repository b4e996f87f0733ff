"""Sparse exact linear algebra over Q and cyclotomic fields.

Vectors are dicts ``{index: scalar}`` holding only nonzero entries.
Scalars may be ints, Fractions or CycScalars mixed freely.  Elimination
always pivots on the lowest column index, so echelon forms are canonical
and two equal subspaces have identical stored bases.
"""
from __future__ import annotations

import heapq
from fractions import Fraction

__all__ = [
    "DimensionMismatch",
    "Echelon",
    "ExactMatrix",
    "Subspace",
    "rref",
    "rank",
    "kernel",
    "inverse",
    "vec_add",
    "vec_scale",
    "dense_to_sparse",
]


class DimensionMismatch(ValueError):
    pass


def vec_add(a: dict, b: dict, scale=1) -> dict:
    """a + scale*b (new dict)."""
    out = dict(a)
    for k, x in b.items():
        v = out.get(k, 0) + scale * x
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def vec_iadd(a: dict, b: dict, scale=1) -> None:
    for k, x in b.items():
        v = a.get(k, 0) + scale * x
        if v:
            a[k] = v
        else:
            a.pop(k, None)


def vec_scale(a: dict, s) -> dict:
    if not s:
        return {}
    return {k: s * x for k, x in a.items()}


def _exact(x):
    return Fraction(x) if isinstance(x, int) else x


def dense_to_sparse(row) -> dict:
    return {j: _exact(x) for j, x in enumerate(row) if x}


class Echelon:
    """Incremental semi-echelon basis: every row has leading coefficient 1
    at its minimum column, and no two rows share a leading column.

    ``reduce`` returns the unique normal form of a vector modulo the span
    (its pivot coordinates eliminated), independent of insertion order.
    """

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, v: dict) -> dict:
        rows = self.rows
        v = dict(v)
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = v.get(c)
            if not a:
                continue
            for k, x in rows[c].items():
                if k in v:
                    nv = v[k] - a * x
                    if nv:
                        v[k] = nv
                    else:
                        del v[k]
                else:
                    v[k] = -a * x
                    if k in rows:
                        heapq.heappush(heap, k)
        return v

    def add(self, v: dict) -> int | None:
        """Insert ``v``; return its new pivot column, or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = min(r)
        lead = r[p]
        if lead != 1:
            inv = Fraction(1, lead) if isinstance(lead, int) else 1 / lead
            r = {k: x * inv for k, x in r.items()}
        self.rows[p] = r
        return p

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def rref_rows(self) -> list[dict]:
        """Canonical reduced row echelon form, rows ordered by pivot."""
        final: dict[int, dict] = {}
        for p in sorted(self.rows, reverse=True):
            row = dict(self.rows[p])
            for k in [k for k in row if k != p and k in final]:
                a = row.get(k)
                if a:
                    vec_iadd(row, final[k], -a)
            final[p] = row
        return [final[p] for p in sorted(final)]


class ExactMatrix:
    """Sparse-by-row exact matrix."""

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict(r) for r in rows] if rows is not None else [{} for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise DimensionMismatch("row count mismatch")

    @classmethod
    def from_dense(cls, data) -> "ExactMatrix":
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, [dense_to_sparse(r) for r in data])

    @classmethod
    def from_columns(cls, nrows: int, columns) -> "ExactMatrix":
        """``columns`` is a list (or dict by index) of sparse column vectors."""
        items = columns.items() if isinstance(columns, dict) else enumerate(columns)
        ncols = max((j for j, _ in (columns.items() if isinstance(columns, dict) else enumerate(columns))), default=-1) + 1
        rows = [{} for _ in range(nrows)]
        for j, col in items:
            for i, x in col.items():
                if x:
                    rows[i][j] = x
        return cls(nrows, ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                out[i][j] = x
        return out

    def columns(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ncols, self.nrows, self.columns())

    def apply(self, v: dict) -> dict:
        out = {}
        for i, r in enumerate(self.rows):
            s = 0
            for j, x in r.items():
                y = v.get(j)
                if y:
                    s = s + x * y
            if s:
                out[i] = s
        return out

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        rows = []
        for r in self.rows:
            acc: dict = {}
            for k, x in r.items():
                vec_iadd(acc, other.rows[k], x)
            rows.append(acc)
        return ExactMatrix(self.nrows, other.ncols, rows)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and all(
            _vec_eq(a, b) for a, b in zip(self.rows, other.rows)
        )

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"


def _vec_eq(a: dict, b: dict) -> bool:
    if a.keys() != b.keys():
        return False
    return all(a[k] == b[k] for k in a)


def rref(M: ExactMatrix) -> tuple[ExactMatrix, int]:
    ech = Echelon()
    for r in M.rows:
        ech.add(r)
    rows = ech.rref_rows()
    return ExactMatrix(len(rows), M.ncols, rows), len(rows)


def rank(M: ExactMatrix) -> int:
    # eliminate along the shorter side
    ech = Echelon()
    for r in (M.rows if M.nrows <= M.ncols else M.columns()):
        ech.add(r)
    return len(ech)


class Subspace:
    """A subspace of k^n stored as its canonical RREF basis."""

    def __init__(self, ambient_dim: int, vectors=(), _echelon: Echelon | None = None):
        self.ambient_dim = ambient_dim
        if _echelon is None:
            _echelon = Echelon()
            for v in vectors:
                if v and max(v) >= ambient_dim:
                    raise DimensionMismatch("vector index outside ambient space")
                _echelon.add(v)
        self._ech = _echelon
        self.basis = _echelon.rref_rows()
        self._ech.rows = {min(r): r for r in self.basis}

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [min(r) for r in self.basis]

    def complement_coordinates(self) -> list[int]:
        """Non-pivot coordinates, increasing."""
        piv = set(self.pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def reduce(self, v: dict) -> dict:
        return self._ech.reduce(v)

    def contains(self, v) -> bool:
        if isinstance(v, Subspace):
            self._check(v)
            return all(self._ech.contains(b) for b in v.basis)
        return self._ech.contains(v)

    __contains__ = contains

    def _check(self, other: "Subspace"):
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize rows (a|a) and (b|0); rows (0|x) span A∩B."""
        self._check(other)
        n = self.ambient_dim
        ech = Echelon()
        for a in self.basis:
            v = dict(a)
            v.update({k + n: x for k, x in a.items()})
            ech.add(v)
        for b in other.basis:
            ech.add(b)
        inter = [
            {k - n: x for k, x in row.items()}
            for p, row in ech.rows.items()
            if p >= n
        ]
        return Subspace(n, inter)

    __and__ = intersect

    def quotient_dim(self, other: "Subspace") -> int:
        """dim(self / (self ∩ other))."""
        return self.sum(other).dim - other.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and all(_vec_eq(a, b) for a, b in zip(self.basis, other.basis))
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel(M: ExactMatrix) -> Subspace:
    """Right null space {x : M x = 0}."""
    ech = Echelon()
    for r in M.rows:
        ech.add(r)
    rows = ech.rref_rows()
    pivots = [min(r) for r in rows]
    piv_set = set(pivots)
    # column f -> [(pivot, entry)] for free columns f
    by_col: dict[int, list] = {}
    for p, r in zip(pivots, rows):
        for j, x in r.items():
            if j != p:
                by_col.setdefault(j, []).append((p, x))
    vecs = []
    for f in range(M.ncols):
        if f in piv_set:
            continue
        v = {f: Fraction(1)}
        for p, x in by_col.get(f, ()):
            v[p] = -x
        vecs.append(v)
    return Subspace(M.ncols, vecs)


def inverse(M: ExactMatrix) -> ExactMatrix:
    """Exact inverse by Gauss-Jordan on (M | I)."""
    n = M.nrows
    if M.ncols != n:
        raise DimensionMismatch("inverse needs a square matrix")
    ech = Echelon()
    for i, r in enumerate(M.rows):
        v = dict(r)
        v[n + i] = Fraction(1)
        ech.add(v)
    rows = ech.rref_rows()
    if len(rows) != n or any(min(r) != i for i, r in enumerate(rows)):
        raise ZeroDivisionError("matrix is singular")
    return ExactMatrix(n, n, [{k - n: x for k, x in r.items() if k >= n} for r in rows])
