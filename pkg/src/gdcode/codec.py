"""Encode, group-decode, repair and globally decode with a verified code.

A GdcCode bundles a completed design, a field and a verified generator
matrix.  Encoding is plain vector-matrix multiplication; because the
generator is supported by the design's indicator matrix, the beta symbols
of bucket i depend only on the alpha information symbols S_i, and any
alpha of them recover those inputs (that is what verify_gdc certified).
All operations are pure; a code object is immutable and freely shareable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .design import CodeDesign, build_design, delta0_closed_form
from .errors import (
    ConstructionError,
    InsufficientSymbolsError,
    ParameterError,
    RankDeficientError,
    SizeGuardError,
)
from .galois import BinaryField, field_for_params
from .matrices import basis_insert, solve_square
from .synthesis import (
    DISTANCE_SUBSET_GUARD,
    GeneratorMatrix,
    SynthesisConfig,
    full_rank_witness,
    synthesize_generator,
)

CODEWORD_ENUM_GUARD = 1 << 24  # enumerate_codewords walks all q^k messages


@dataclass(frozen=True)
class GdcCode:
    design: CodeDesign
    field: BinaryField
    generator: GeneratorMatrix
    d: int

    @property
    def g(self):
        return self.generator.matrix


@dataclass(frozen=True)
class Codeword:
    symbols: tuple[int, ...]
    design: CodeDesign

    def bucket(self, i: int) -> tuple[int, ...]:
        return tuple(self.symbols[j] for j in self.design.buckets[i])

    def buckets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.bucket(i) for i in range(self.design.t))


def build_code(
    alpha: int,
    beta: int,
    k: int,
    t: int,
    seed: int = 0,
    field: BinaryField | None = None,
    retry_budget: int = 64,
    verify_level: str = "full",
) -> GdcCode:
    """Full pipeline: design, field sizing, synthesis, verification."""
    design = build_design(alpha, beta, k, t)
    if field is None:
        field = field_for_params(design.n, design.k)
    cfg = SynthesisConfig(seed=seed, retry_budget=retry_budget, verify_level=verify_level)
    gen = synthesize_generator(design, field, cfg)
    d = design.n - design.k + 1 - delta0_closed_form(design.m0, design.beta)
    return GdcCode(design=design, field=field, generator=gen, d=d)


def project(s: Sequence[int], x: Sequence[int]) -> tuple[int, ...]:
    """Coordinate selection (x[i] for i in s); s must be sorted ascending."""
    if list(s) != sorted(set(s)):
        raise ParameterError("index set must be sorted and duplicate-free")
    for i in s:
        if not (0 <= i < len(x)):
            raise ParameterError(f"index {i} out of range for length {len(x)}")
    return tuple(x[i] for i in s)


def encode(code: GdcCode, x: Sequence[int]) -> Codeword:
    if len(x) != code.design.k:
        raise ParameterError(f"message length {len(x)} != k = {code.design.k}")
    for a in x:
        code.field.check(a)
    return Codeword(tuple(code.g.vector_times(list(x))), code.design)


def group_decode(code: GdcCode, i: int, have: Mapping[int, int]) -> tuple[int, ...]:
    """Recover the bucket's information symbols from any alpha of its positions.

    Returns the values of x at S_i, in ascending index order.  When more
    than alpha symbols are supplied, the alpha lowest positions are used;
    the MDS property makes every choice agree.
    """
    design = code.design
    if not (0 <= i < design.t):
        raise ParameterError(f"bucket index {i} out of range [0, {design.t})")
    bucket = set(design.buckets[i])
    for p in have:
        if p not in bucket:
            raise ParameterError(f"position {p} is not in bucket {i}")
    alpha = design.alpha
    if len(have) < alpha:
        raise InsufficientSymbolsError(
            f"bucket {i} needs {alpha} symbols, got {len(have)}"
        )
    positions = sorted(have)[:alpha]
    si = design.S[i]
    a = [[code.g.entry(row, p) for row in si] for p in positions]
    b = [code.field.check(have[p]) for p in positions]
    return tuple(solve_square(code.field, a, b))


def repair_symbol(code: GdcCode, p: int, helpers: Mapping[int, int]) -> int:
    """Rebuild the symbol at position p from alpha survivors of its bucket."""
    design = code.design
    i = design.bucket_of(p)
    if p in helpers:
        raise ParameterError(f"position {p} cannot help repair itself")
    for h in helpers:
        if design.bucket_of(h) != i:
            raise ParameterError(f"helper {h} is not in bucket {i} of position {p}")
    if len(helpers) < design.alpha:
        raise InsufficientSymbolsError(
            f"repair needs {design.alpha} helpers, got {len(helpers)}"
        )
    xs = group_decode(code, i, helpers)
    mul = code.field.mul
    out = 0
    for row, xv in zip(design.S[i], xs):
        a = code.g.entry(row, p)
        if a and xv:
            out ^= mul(xv, a)
    return out


def decode_global(code: GdcCode, have: Mapping[int, int]) -> tuple[int, ...]:
    """Recover the full message from any rank-k set of available positions.

    Greedily picks the lowest-position columns forming a rank-k set and
    solves the k x k system.  Raises RankDeficientError with the achievable
    rank when the available columns do not span.
    """
    design, g = code.design, code.g
    k = design.k
    for p in have:
        if not (0 <= p < design.n):
            raise ParameterError(f"position {p} out of range [0, {design.n})")
    basis: list[list[int] | None] = [None] * k
    picked: list[int] = []
    for p in sorted(have):
        if basis_insert(code.field, basis, g.column(p)) >= 0:
            picked.append(p)
            if len(picked) == k:
                break
    if len(picked) < k:
        raise RankDeficientError(len(picked), k)
    a = [[g.entry(row, p) for row in range(k)] for p in picked]
    b = [code.field.check(have[p]) for p in picked]
    return tuple(solve_square(code.field, a, b))


def min_distance(code: GdcCode, method: str = "rank_subsets") -> int:
    """Exact minimum distance by one of two independent oracles.

    "rank_subsets" finds the smallest L such that every L columns of the
    generator have rank k (then d = n - L + 1); "enumerate_codewords" takes
    the minimum Hamming weight over all q^k - 1 nonzero messages.
    """
    if method == "rank_subsets":
        return _distance_by_ranks(code)
    if method == "enumerate_codewords":
        return _distance_by_enumeration(code)
    raise ParameterError(f"unknown method {method!r}")


def _distance_by_ranks(code: GdcCode) -> int:
    g = code.g
    n, k = g.ncols, g.nrows
    cols = [g.column(j) for j in range(n)]
    for size in range(k, n + 1):
        if comb(n, size) > DISTANCE_SUBSET_GUARD:
            raise SizeGuardError(
                f"C({n},{size}) exceeds the {DISTANCE_SUBSET_GUARD} subset guard"
            )
        if full_rank_witness(code.field, cols, size, k) is None:
            return n - size + 1
    raise ConstructionError("generator matrix has rank < k")


def _distance_by_enumeration(code: GdcCode) -> int:
    g = code.g
    n, k, q = g.ncols, g.nrows, code.field.q
    if q**k > CODEWORD_ENUM_GUARD:
        raise SizeGuardError(f"q^k = {q**k} exceeds the {CODEWORD_ENUM_GUARD} guard")
    mul = code.field.mul
    # row_multiples[i][a] = a * (row i), so codewords accumulate by XOR
    row_multiples = [
        [[mul(a, e) for e in g.rows[i]] for a in range(q)] for i in range(k)
    ]
    best = n + 1

    def rec(i: int, acc: list[int]):
        nonlocal best
        if i == k:
            w = sum(1 for e in acc if e)
            if 0 < w < best:
                best = w
            return
        rec(i + 1, acc)  # digit 0 leaves the partial sum unchanged
        for a in range(1, q):
            mrow = row_multiples[i][a]
            rec(i + 1, [x ^ y for x, y in zip(acc, mrow)])

    rec(0, [0] * n)
    if best > n:
        raise ConstructionError("no nonzero codeword found; generator is zero")
    return best
