"""Generator-matrix synthesis for a completed design.

Feasibility is a property of the 0/1 indicator matrix alone: the covering
condition (every l + delta columns must touch at least l rows) decides
whether ANY field assignment can reach distance n - k + 1 - delta.  Once it
holds, sampling the support entries uniformly from the nonzero field
elements succeeds with high probability when the field is larger than
C(n-1, k-1); every returned generator is verified outright, never trusted.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from itertools import combinations
from math import ceil, comb
from typing import Sequence

from .design import CodeDesign, delta0_closed_form, indicator_matrix
from .errors import (
    ParameterError,
    SizeGuardError,
    StructuralInfeasibilityError,
    SynthesisError,
)
from .galois import BinaryField
from .matrices import (
    BinaryMatrix,
    FieldMatrix,
    basis_insert,
    xi_argmin,
    xi_profile,
)

COND_EXHAUSTIVE_MAX_COLS = 14
COND_EXHAUSTIVE_MAX_ROWS = 14
DISTANCE_SUBSET_GUARD = 10**6


@dataclass(frozen=True)
class SynthesisConfig:
    seed: int = 0
    retry_budget: int = 64
    verify_level: str = "full"  # "structural" skips the rank verifiers

    def __post_init__(self):
        if self.retry_budget < 1:
            raise ParameterError("retry_budget must be >= 1")
        if self.verify_level not in ("structural", "full"):
            raise ParameterError(f"unknown verify_level {self.verify_level!r}")


@dataclass(frozen=True)
class GeneratorMatrix:
    """A field matrix pinned to a 0/1 support, with its claimed distance deficit."""

    matrix: FieldMatrix
    support: BinaryMatrix
    claimed_delta: int

    def __post_init__(self):
        g, m = self.matrix, self.support
        if (g.nrows, g.ncols) != (m.nrows, m.ncols):
            raise ParameterError("support and matrix dimensions differ")
        for i in range(g.nrows):
            smask = m.rows[i]
            for j, a in enumerate(g.rows[i]):
                if a and not (smask >> j) & 1:
                    raise ParameterError(
                        f"entry ({i},{j}) is nonzero outside the support"
                    )

    def to_hex_rows(self) -> list[list[str]]:
        return [[format(a, "x") for a in row] for row in self.matrix.rows]

    @classmethod
    def from_hex_rows(
        cls,
        field: BinaryField,
        rows: Sequence[Sequence[str]],
        support: BinaryMatrix,
        claimed_delta: int,
    ) -> "GeneratorMatrix":
        grid = [[field.check(int(h, 16)) for h in row] for row in rows]
        return cls(FieldMatrix(field, grid), support, claimed_delta)


@dataclass(frozen=True)
class Cond2Witness:
    """l columns-cover violation: the columns `cols` touch fewer than `ell` rows."""

    ell: int
    cols: tuple[int, ...]


@dataclass(frozen=True)
class Cond3Witness:
    """Row subset whose joint support is too small for the target deficit."""

    rows: tuple[int, ...]


def check_condition2(
    m: BinaryMatrix,
    delta: int,
    m0: BinaryMatrix | None = None,
    beta: int | None = None,
) -> Cond2Witness | None:
    """Covering condition: any l + delta columns must touch >= l rows.

    Exhaustive over column subsets up to COND_EXHAUSTIVE_MAX_COLS columns.
    Beyond that, pass the design's M0 and beta: for an indicator matrix the
    minimum cover of any l columns equals the minimum cover of ceil(l/beta)
    columns of M0, which shrinks the search to t columns.
    """
    if delta < 0:
        raise ParameterError("delta must be >= 0")
    n, k = m.ncols, m.nrows
    if m0 is not None and beta is not None:
        if indicator_matrix(m0, beta) != m:
            raise ParameterError("matrix is not the indicator expansion of the given M0")
        xi0 = xi_profile(m0)
        for ell in range(1, k + 1):
            size = ell + delta
            if size > n:
                break
            i = ceil(size / beta)
            if xi0[i - 1] < ell:
                _, arg = xi_argmin(m0, i)
                cols: list[int] = []
                for b in arg[:-1]:
                    cols.extend(range(b * beta, (b + 1) * beta))
                cols.extend(range(arg[-1] * beta, arg[-1] * beta + size - (i - 1) * beta))
                return Cond2Witness(ell, tuple(sorted(cols)))
        return None
    if n > COND_EXHAUSTIVE_MAX_COLS:
        raise SizeGuardError(
            f"{n} columns exceeds the exhaustive cap; pass m0/beta for indicator matrices"
        )
    xi = xi_profile(m)
    for ell in range(1, k + 1):
        size = ell + delta
        if size > n:
            break
        if xi[size - 1] < ell:
            _, arg = xi_argmin(m, size)
            return Cond2Witness(ell, arg)
    return None


def check_condition3(m: BinaryMatrix, delta: int) -> Cond3Witness | None:
    """Row-support condition: every nonempty row set I must jointly cover
    at least n - k + |I| - delta columns."""
    if delta < 0:
        raise ParameterError("delta must be >= 0")
    n, k = m.ncols, m.nrows
    if k > COND_EXHAUSTIVE_MAX_ROWS:
        raise SizeGuardError(f"{k} rows exceeds the exhaustive cap of {COND_EXHAUSTIVE_MAX_ROWS}")
    rows = m.rows
    union = [0] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        union[s] = union[s ^ low] | rows[low.bit_length() - 1]
        if union[s].bit_count() < n - k + s.bit_count() - delta:
            return Cond3Witness(tuple(i for i in range(k) if (s >> i) & 1))
    return None


def full_rank_witness(
    field: BinaryField, cols: Sequence[Sequence[int]], size: int, k: int
) -> tuple[int, ...] | None:
    """First size-subset of columns (in lexicographic order) with rank < k.

    Returns None when every size-subset has full rank k.  Depth-first over
    subsets sharing elimination state; a branch whose rank already reached
    k is accepted wholesale (supersets cannot lose rank), and a branch that
    cannot reach rank k even if every remaining pick is independent fails
    immediately.
    """
    n = len(cols)
    if not (1 <= size <= n) or k < 1:
        raise ParameterError(f"bad subset size {size} for {n} columns, rank target {k}")
    basis: list[list[int] | None] = [None] * k
    chosen: list[int] = []

    def dfs(start: int, rank: int, need: int) -> tuple[int, ...] | None:
        if rank >= k:
            return None
        if rank + need < k:
            return tuple(chosen) + tuple(range(start, start + need))
        if need == 0:
            return tuple(chosen)
        for j in range(start, n - need + 1):
            piv = basis_insert(field, basis, list(cols[j]))
            chosen.append(j)
            res = dfs(j + 1, rank + (piv >= 0), need - 1)
            if res is not None:
                return res
            chosen.pop()
            if piv >= 0:
                basis[piv] = None
        return None

    return dfs(0, 0, size)


def verify_group_decodable(
    g: FieldMatrix,
    s_sets: Sequence[Sequence[int]],
    buckets: Sequence[Sequence[int]],
) -> tuple[int, tuple[int, ...]] | None:
    """General-form group-decodability check; None on pass.

    Bucket i (any size n_i > |S_i|) must read only the rows S_i — entries
    at other rows of its columns are zero — and every |S_i| of its columns
    must have rank |S_i|, so those rows decode from any |S_i| symbols.
    Bucket sizes and S_i sizes may vary.  A failure returns (bucket,
    columns); malformed inputs raise instead.
    """
    k, n = g.nrows, g.ncols
    if len(s_sets) != len(buckets):
        raise ParameterError("need one input set per bucket")
    seen: set[int] = set()
    covered: set[int] = set()
    for si, bucket in zip(s_sets, buckets):
        if not (0 < len(si) < len(bucket)):
            raise ParameterError("each bucket needs |S_i| >= 1 and n_i > |S_i|")
        if any(not 0 <= r < k for r in si):
            raise ParameterError("input set indexes a missing row")
        if seen & set(bucket):
            raise ParameterError("buckets must be disjoint")
        seen |= set(bucket)
        covered |= set(si)
    if seen != set(range(n)):
        raise ParameterError("buckets must cover every column exactly once")
    if covered != set(range(k)):
        raise ParameterError("input sets must cover every information symbol")
    for i, (si, bucket) in enumerate(zip(s_sets, buckets)):
        rows_in = set(si)
        for j in bucket:
            for row in range(k):
                if row not in rows_in and g.entry(row, j):
                    return (i, (j,))
        ki = len(si)
        cols = {j: g.column(j) for j in bucket}
        for js in combinations(sorted(bucket), ki):
            basis: list[list[int] | None] = [None] * k
            rank = sum(1 for j in js if basis_insert(g.field, basis, list(cols[j])) >= 0)
            if rank != ki:
                return (i, js)
    return None


def verify_gdc(gen: GeneratorMatrix, design: CodeDesign) -> tuple[int, tuple[int, ...]] | None:
    """Check the group-decodability conditions for a uniform design; None on pass.

    Condition (1): the generator is supported by the design's indicator
    matrix.  Condition (2): within each bucket, every alpha columns have
    rank alpha.  A failure returns (bucket, columns).
    """
    if design.m is None:
        raise ParameterError("design has no indicator matrix")
    return verify_group_decodable(gen.matrix, design.S, design.buckets)


def verify_distance_exact(gen: GeneratorMatrix, d: int) -> bool:
    """True iff the code generated by gen has minimum distance exactly d.

    Checks that every (n - d + 1)-subset of columns has rank k and that
    some (n - d)-subset does not.
    """
    g = gen.matrix
    n, k = g.ncols, g.nrows
    if not (1 <= d <= n - k + 1):
        return False
    size = n - d + 1
    if comb(n, size) > DISTANCE_SUBSET_GUARD:
        raise SizeGuardError(
            f"C({n},{size}) = {comb(n, size)} subsets exceeds the {DISTANCE_SUBSET_GUARD} guard"
        )
    cols = [g.column(j) for j in range(n)]
    if full_rank_witness(g.field, cols, size, k) is not None:
        return False
    if size - 1 < k:
        return True  # any k-1 columns have rank < k, so distance is exactly n-k+1
    return full_rank_witness(g.field, cols, size - 1, k) is not None


def synthesize_generator(
    design: CodeDesign,
    field: BinaryField,
    cfg: SynthesisConfig | None = None,
    target_distance: int | None = None,
) -> GeneratorMatrix:
    """Sample support entries until the generator verifies, deterministically per seed.

    The target distance defaults to n - k + 1 - delta0 for the design's own
    incidence matrix.  If the covering condition already fails for the
    target, no field assignment can work and synthesis refuses up front.
    """
    if design.m0 is None or design.m is None:
        raise ParameterError("design must be completed (construct_m0) before synthesis")
    cfg = cfg or SynthesisConfig()
    n, k = design.n, design.k

    if target_distance is None:
        delta = delta0_closed_form(design.m0, design.beta)
    else:
        delta = n - k + 1 - target_distance
    if delta < 0:
        raise StructuralInfeasibilityError(
            f"distance {target_distance} exceeds the Singleton bound {n - k + 1}"
        )

    w2 = check_condition2(design.m, delta, m0=design.m0, beta=design.beta)
    if w2 is not None:
        raise StructuralInfeasibilityError(
            f"support cannot reach distance {n - k + 1 - delta}: columns {w2.cols} "
            f"cover fewer than {w2.ell} rows"
        )
    if k <= COND_EXHAUSTIVE_MAX_ROWS:
        w3 = check_condition3(design.m, delta)
        if w3 is not None:
            raise StructuralInfeasibilityError(
                f"row set {w3.rows} has too small a joint support for delta={delta}"
            )

    if field.q <= comb(n - 1, k - 1):
        warnings.warn(
            f"field size {field.q} <= C({n - 1},{k - 1}) = {comb(n - 1, k - 1)}: "
            "existence of a valid assignment is no longer guaranteed",
            stacklevel=2,
        )

    rng = random.Random(cfg.seed)
    support_rows = design.m.rows
    last_failure = "no attempt made"
    for _ in range(cfg.retry_budget):
        grid = [
            [rng.randrange(1, field.q) if (support_rows[i] >> j) & 1 else 0 for j in range(n)]
            for i in range(k)
        ]
        gen = GeneratorMatrix(FieldMatrix(field, grid), design.m, delta)
        if cfg.verify_level == "structural":
            return gen
        w = verify_gdc(gen, design)
        if w is not None:
            last_failure = f"bucket {w[0]} columns {w[1]} not MDS"
            continue
        if not verify_distance_exact(gen, n - k + 1 - delta):
            last_failure = f"distance != {n - k + 1 - delta}"
            continue
        return gen
    raise SynthesisError(
        f"no valid generator in {cfg.retry_budget} attempts (last failure: {last_failure})"
    )
