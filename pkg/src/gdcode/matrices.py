"""Binary and finite-field matrices.

Binary matrices store each row as an int bitmask (bit j = entry in column j),
which keeps the combinatorial operations here — support profiles, minimum
union sizes over column subsets, Hall matchings — cheap at desk scale.
Field matrices hold explicit element grids and provide exact rank and
linear solving over a :class:`~gdcode.galois.BinaryField`.

All indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ParameterError, SingularSystemError, SizeGuardError
from .galois import BinaryField

XI_MAX_COLS = 20  # xi_profile enumerates all 2^cols column subsets


class BinaryMatrix:
    """A 0/1 matrix with int-bitmask rows."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int]):
        if nrows <= 0 or ncols <= 0:
            raise ParameterError("matrix dimensions must be positive")
        if len(rows) != nrows:
            raise ParameterError(f"expected {nrows} row masks, got {len(rows)}")
        limit = 1 << ncols
        for r in rows:
            if not (0 <= r < limit):
                raise ParameterError(f"row mask {r:#x} out of range for {ncols} columns")
        self.nrows = nrows
        self.ncols = ncols
        self.rows = list(rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]]) -> "BinaryMatrix":
        masks = []
        ncols = None
        for row in rows:
            bits = list(row)
            if ncols is None:
                ncols = len(bits)
            elif len(bits) != ncols:
                raise ParameterError("ragged rows")
            mask = 0
            for j, b in enumerate(bits):
                if b not in (0, 1):
                    raise ParameterError(f"entry {b!r} is not 0/1")
                mask |= b << j
            masks.append(mask)
        if not masks or ncols is None or ncols == 0:
            raise ParameterError("matrix dimensions must be positive")
        return cls(len(masks), ncols, masks)

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BinaryMatrix":
        """Rows as bitstrings, leftmost character = column 0."""
        return cls.from_rows([[int(c) for c in s] for s in rows])

    @classmethod
    def identity(cls, n: int) -> "BinaryMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def row_support(self, i: int) -> tuple[int, ...]:
        return _mask_bits(self.rows[i])

    def col_mask(self, j: int) -> int:
        """Support of column j as a bitmask over row indices."""
        m = 0
        for i, r in enumerate(self.rows):
            m |= ((r >> j) & 1) << i
        return m

    def col_support(self, j: int) -> tuple[int, ...]:
        return _mask_bits(self.col_mask(j))

    def col_masks(self) -> list[int]:
        return [self.col_mask(j) for j in range(self.ncols)]

    def col_weights(self) -> list[int]:
        return [self.col_mask(j).bit_count() for j in range(self.ncols)]

    def to_bitstrings(self) -> list[str]:
        return [
            "".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows
        ]

    @classmethod
    def from_bitstrings(cls, rows: Sequence[str]) -> "BinaryMatrix":
        return cls.from_strings(rows)

    def to_array(self) -> np.ndarray:
        return np.array(
            [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows],
            dtype=np.uint8,
        )

    @classmethod
    def from_array(cls, arr) -> "BinaryMatrix":
        return cls.from_rows(np.asarray(arr, dtype=int).tolist())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryMatrix)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ncols, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self.nrows}x{self.ncols}, {self.to_bitstrings()})"


def _mask_bits(mask: int) -> tuple[int, ...]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


@dataclass(frozen=True)
class MatrixProfile:
    """Row/column supports and the weight statistics built on them.

    ``repetitions[i]`` counts rows equal to row i; ``gamma`` is the largest
    repetition count among rows of minimum weight (``minimal_rows``).
    """

    row_supports: tuple[tuple[int, ...], ...]
    col_supports: tuple[tuple[int, ...], ...]
    w_min: int
    repetitions: tuple[int, ...]
    gamma: int
    minimal_rows: tuple[int, ...]


def matrix_profile(a: BinaryMatrix) -> MatrixProfile:
    rows = a.rows
    weights = [r.bit_count() for r in rows]
    w_min = min(weights)
    counts: dict[int, int] = {}
    for r in rows:
        counts[r] = counts.get(r, 0) + 1
    reps = tuple(counts[r] for r in rows)
    minimal = tuple(i for i, w in enumerate(weights) if w == w_min)
    gamma = max(reps[i] for i in minimal)
    return MatrixProfile(
        row_supports=tuple(a.row_support(i) for i in range(a.nrows)),
        col_supports=tuple(a.col_support(j) for j in range(a.ncols)),
        w_min=w_min,
        repetitions=reps,
        gamma=gamma,
        minimal_rows=minimal,
    )


def xi_profile(a: BinaryMatrix) -> list[int]:
    """Minimum number of rows covered by any i columns, for i = 1..ncols.

    Returned as a list xs with xs[i-1] = that minimum for subsets of size i.
    Exhaustive over all column subsets, so refuses more than XI_MAX_COLS
    columns.
    """
    t = a.ncols
    if t > XI_MAX_COLS:
        raise SizeGuardError(f"xi_profile enumerates 2^{t} subsets; cap is {XI_MAX_COLS} columns")
    cmasks = a.col_masks()
    union = [0] * (1 << t)
    best = [a.nrows + 1] * (t + 1)
    for s in range(1, 1 << t):
        low = s & -s
        union[s] = union[s ^ low] | cmasks[low.bit_length() - 1]
        size = s.bit_count()
        cover = union[s].bit_count()
        if cover < best[size]:
            best[size] = cover
    return best[1:]


def xi_argmin(a: BinaryMatrix, size: int) -> tuple[int, tuple[int, ...]]:
    """A size-subset of columns achieving the minimum union, with its value."""
    t = a.ncols
    if t > XI_MAX_COLS:
        raise SizeGuardError(f"cap is {XI_MAX_COLS} columns")
    if not (1 <= size <= t):
        raise ParameterError(f"subset size {size} out of range")
    cmasks = a.col_masks()
    union = [0] * (1 << t)
    best = a.nrows + 1
    arg = 0
    for s in range(1, 1 << t):
        low = s & -s
        union[s] = union[s ^ low] | cmasks[low.bit_length() - 1]
        if s.bit_count() == size:
            cover = union[s].bit_count()
            if cover < best:
                best = cover
                arg = s
    return best, _mask_bits(arg)


@dataclass(frozen=True)
class MatchingResult:
    """Either a matching covering every left vertex, or a Hall violator.

    ``matching[u]`` is the right vertex assigned to left vertex u.
    ``violator`` is a left subset S with fewer neighbors than members.
    """

    matching: tuple[int, ...] | None
    violator: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.matching is not None


def hall_matching(neighbors: Sequence[Iterable[int]]) -> MatchingResult:
    """Match every left vertex to a distinct right neighbor if possible.

    Augmenting-path search, scanning vertices in ascending index order for
    determinism.  When some left vertex cannot be matched, the set of left
    vertices reachable by alternating paths from it is a Hall violator and
    is returned as the witness.
    """
    adj = [sorted(set(ns)) for ns in neighbors]
    owner: dict[int, int] = {}  # right vertex -> matched left vertex

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in owner or try_augment(owner[v], seen):
                owner[v] = u
                return True
        return False

    for u in range(len(adj)):
        seen: set[int] = set()
        if not try_augment(u, seen):
            # u plus the owners of every right vertex explored: their joint
            # neighborhood is exactly `seen`, which is strictly smaller.
            violator = {u} | {owner[v] for v in seen}
            return MatchingResult(None, tuple(sorted(violator)))
    match = [-1] * len(adj)
    for v, u in owner.items():
        match[u] = v
    return MatchingResult(tuple(match), None)


class FieldMatrix:
    """Dense matrix over a BinaryField; entries are field ints."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: BinaryField, rows: Sequence[Sequence[int]]):
        if not rows or not rows[0]:
            raise ParameterError("matrix dimensions must be positive")
        ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ParameterError("ragged rows")
            for a in row:
                field.check(a)
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = [list(r) for r in rows]

    @classmethod
    def zeros(cls, field: BinaryField, nrows: int, ncols: int) -> "FieldMatrix":
        return cls(field, [[0] * ncols for _ in range(nrows)])

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.rows]

    def columns(self, js: Iterable[int]) -> list[list[int]]:
        return [self.column(j) for j in js]

    def vector_times(self, x: Sequence[int]) -> list[int]:
        """Row vector times matrix: y_j = sum_i x_i * a_{i,j}."""
        if len(x) != self.nrows:
            raise ParameterError(f"vector length {len(x)} != {self.nrows} rows")
        mul = self.field.mul
        out = [0] * self.ncols
        for xi, row in zip(x, self.rows):
            if xi == 0:
                continue
            for j, a in enumerate(row):
                if a:
                    out[j] ^= mul(xi, a)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"FieldMatrix({self.nrows}x{self.ncols} over {self.field!r})"


def reduce_vector(field: BinaryField, basis: list[list[int] | None], vec: list[int]) -> list[int]:
    """Reduce vec against an echelon basis indexed by pivot position.

    basis[p] is None or a vector whose first nonzero entry is a 1 at p.
    Returns the (newly allocated) reduced vector.
    """
    mul = field.mul
    v = list(vec)
    n = len(v)
    for p in range(n):
        c = v[p]
        if c and basis[p] is not None:
            bv = basis[p]
            for i in range(p, n):
                b = bv[i]
                if b:
                    v[i] ^= mul(c, b)
    return v


def basis_insert(field: BinaryField, basis: list[list[int] | None], vec: list[int]) -> int:
    """Reduce vec and insert it into the basis; return its pivot or -1 if dependent."""
    v = reduce_vector(field, basis, vec)
    for p, a in enumerate(v):
        if a:
            inv = field.inv(a)
            basis[p] = [field.mul(inv, b) for b in v]
            return p
    return -1


def rank_of_columns(g: FieldMatrix, cols: Iterable[int]) -> int:
    """Rank of the submatrix formed by the given columns, by exact elimination."""
    js = list(cols)
    for j in js:
        if not (0 <= j < g.ncols):
            raise IndexError(f"column {j} out of range for {g.ncols} columns")
    basis: list[list[int] | None] = [None] * g.nrows
    rank = 0
    for j in js:
        if basis_insert(g.field, basis, g.column(j)) >= 0:
            rank += 1
            if rank == g.nrows:
                break
    return rank


def solve_square(field: BinaryField, a: Sequence[Sequence[int]], b: Sequence[int]) -> list[int]:
    """Solve A x = b for square A by Gaussian elimination.

    Pivots on the first row with a nonzero entry in the current column,
    scanning ascending.  Raises SingularSystemError when A is singular.
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise ParameterError("solve_square needs a square system")
    mul, inv = field.mul, field.inv
    m = [list(row) + [bi] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise SingularSystemError(f"system singular at column {col}")
        m[col], m[piv] = m[piv], m[col]
        f = inv(m[col][col])
        m[col] = [mul(f, e) for e in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                c = m[i][col]
                m[i] = [e ^ mul(c, p) for e, p in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
