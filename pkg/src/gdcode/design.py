"""Combinatorial skeleton of a code: parameters, bounds, incidence matrix.

A design fixes (alpha, beta, k, t) with alpha < min(k, beta) and
t*alpha >= k, writes t*alpha = s*k + r with 0 <= r < k, and carries a k x t
incidence matrix M0 whose column j lists which of the k information symbols
feed bucket j.  Replicating every column of M0 beta times gives the k x n
indicator matrix M (n = t*beta) that any generator matrix must be supported
by.

The constructor targets the three properties that make the distance bound
tight: every column of M0 has weight exactly alpha, the minimum row weight
equals s, and the repetition number of minimal rows equals
ceil((k - r) / C(t, s)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from math import ceil, comb
from typing import Iterable, Sequence

from .errors import ConstructionError, ParameterError, SizeGuardError, StallError
from .matrices import BinaryMatrix, matrix_profile, xi_profile

BALANCE_RETRIES = 32
DELTA0_MAX_COLS = 14  # exhaustive delta0 walks all 2^n column subsets


@dataclass(frozen=True)
class CodeDesign:
    """Validated parameter bundle plus (once constructed) the incidence data.

    S[i] is the sorted tuple of information-symbol indices feeding bucket i
    (0-based); bucket i owns codeword positions i*beta .. (i+1)*beta - 1.
    A "shell" design from validate_params has S, m0 and m set to None.
    """

    alpha: int
    beta: int
    k: int
    t: int
    s: int
    r: int
    n: int
    S: tuple[tuple[int, ...], ...] | None = None
    m0: BinaryMatrix | None = None
    m: BinaryMatrix | None = None

    @property
    def buckets(self) -> tuple[tuple[int, ...], ...]:
        b = self.beta
        return tuple(tuple(range(i * b, (i + 1) * b)) for i in range(self.t))

    def bucket_of(self, pos: int) -> int:
        if not (0 <= pos < self.n):
            raise ParameterError(f"position {pos} out of range [0, {self.n})")
        return pos // self.beta

    def to_json(self) -> dict:
        if self.m0 is None or self.S is None:
            raise ParameterError("cannot serialize a shell design")
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "k": self.k,
            "t": self.t,
            "s": self.s,
            "r": self.r,
            "n": self.n,
            "S": [[i + 1 for i in si] for si in self.S],  # wire format is 1-based
            "M0": self.m0.to_bitstrings(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CodeDesign":
        shell = validate_params(obj["alpha"], obj["beta"], obj["k"], obj["t"])
        m0 = BinaryMatrix.from_bitstrings(obj["M0"])
        design = complete_design(shell, m0)
        stored = tuple(tuple(sorted(i - 1 for i in si)) for si in obj["S"])
        if stored != design.S:
            raise ParameterError("S sets do not match the M0 column supports")
        if obj["s"] != design.s or obj["r"] != design.r or obj["n"] != design.n:
            raise ParameterError("derived parameters s/r/n are inconsistent")
        return design


def validate_params(alpha: int, beta: int, k: int, t: int) -> CodeDesign:
    """Check the design inequalities and derive s, r, n.

    Returns a shell CodeDesign (no S/M0 yet).
    """
    for name, v in (("alpha", alpha), ("beta", beta), ("k", k), ("t", t)):
        if not isinstance(v, int) or v < 1:
            raise ParameterError(f"{name} must be a positive integer, got {v!r}")
    if alpha >= min(k, beta):
        raise ParameterError("alpha must be < min(k, beta)")
    if t * alpha < k:
        raise ParameterError(
            f"t*alpha = {t * alpha} must be >= k = {k} so every symbol feeds a bucket"
        )
    s, r = divmod(t * alpha, k)
    return CodeDesign(alpha=alpha, beta=beta, k=k, t=t, s=s, r=r, n=t * beta)


def gdc_bound(alpha: int, beta: int, k: int, t: int) -> int:
    """Distance upper bound s*beta - ceil((k-r)/C(t,s)) + 1."""
    d = validate_params(alpha, beta, k, t)
    return d.s * beta - ceil((k - d.r) / comb(t, d.s)) + 1


def lrc_bound(n: int, k: int, alpha: int, delta: int) -> int:
    """Distance upper bound for locally repairable codes with locality (alpha, delta)."""
    if not (1 <= alpha <= k):
        raise ParameterError(f"need 1 <= alpha <= k, got alpha={alpha}, k={k}")
    if delta < 2:
        raise ParameterError(f"delta must be >= 2, got {delta}")
    if n < k:
        raise ParameterError(f"need n >= k, got n={n}, k={k}")
    return n - k + 1 - (ceil(k / alpha) - 1) * (delta - 1)


def singleton_bound(n: int, k: int) -> int:
    return n - k + 1


@dataclass(frozen=True)
class BoundReport:
    """All the distance numbers for one parameter set, side by side."""

    gdc_bound: int
    lrc_bound: int
    singleton: int
    delta0: int
    achieved_d: int


def bound_report(design: CodeDesign) -> BoundReport:
    if design.m0 is None:
        design = complete_design(design, construct_m0(design.alpha, design.k, design.t))
    prof = matrix_profile(design.m0)
    delta0 = delta0_closed_form(design.m0, design.beta)
    return BoundReport(
        gdc_bound=gdc_bound(design.alpha, design.beta, design.k, design.t),
        lrc_bound=lrc_bound(design.n, design.k, design.alpha, design.beta - design.alpha + 1),
        singleton=singleton_bound(design.n, design.k),
        delta0=delta0,
        achieved_d=prof.w_min * design.beta - prof.gamma + 1,
    )


# -- incidence-matrix construction ------------------------------------------


def _weight_masks(t: int, w: int) -> list[int]:
    """All t-bit masks of weight w, ascending (= colexicographic on supports)."""
    if w == 0:
        return [0]
    masks = []
    mask = (1 << w) - 1
    top = 1 << t
    while mask < top:
        masks.append(mask)
        # Gosper's hack: next mask with the same popcount
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)
    return masks


def _round_robin_rows(count: int, width: int, t: int, offset: int = 0) -> list[int]:
    """count rows of `width` consecutive ones each, wrapped around t columns."""
    rows = []
    pos = offset
    for _ in range(count):
        mask = 0
        for _ in range(width):
            mask |= 1 << (pos % t)
            pos += 1
        rows.append(mask)
    return rows


def balance_columns(m0: BinaryMatrix, alpha: int) -> BinaryMatrix:
    """Move ones within rows until every column has weight exactly alpha.

    Expects the row profile of the staircase construction: all rows have
    weight s or s+1 where s is the minimum, and the weight-s rows are
    pairwise distinct.  Each move takes a one out of the lowest-index
    surplus column into the lowest-index deficit column, preferring a
    weight-(s+1) row; failing that it shifts a weight-s row, skipping any
    shift that would duplicate another weight-s row.  Both row weights and
    weight-s distinctness are preserved, so the minimum row weight and its
    repetition count survive balancing.

    Raises StallError if no legal move exists (the construction retries
    with a reshuffled starting matrix).
    """
    rows = list(m0.rows)
    t = m0.ncols
    if sum(r.bit_count() for r in rows) != t * alpha:
        raise ParameterError("total weight must equal ncols * alpha")
    s = min(r.bit_count() for r in rows)
    heavy = [i for i, r in enumerate(rows) if r.bit_count() == s + 1]
    light = [i for i, r in enumerate(rows) if r.bit_count() == s]
    if len(heavy) + len(light) != len(rows):
        raise ParameterError("row weights must be s or s+1")
    if len(set(rows[i] for i in light)) != len(light):
        raise ParameterError("weight-s rows must be pairwise distinct")

    def col_weight(j: int) -> int:
        return sum((r >> j) & 1 for r in rows)

    while True:
        weights = [col_weight(j) for j in range(t)]
        deficits = [j for j, w in enumerate(weights) if w < alpha]
        if not deficits:
            break
        j1 = deficits[0]
        j2 = next(j for j, w in enumerate(weights) if w > alpha)
        moved = False
        for i in heavy:
            if rows[i] >> j2 & 1 and not rows[i] >> j1 & 1:
                rows[i] ^= (1 << j1) | (1 << j2)
                moved = True
                break
        if not moved:
            light_masks = {rows[i] for i in light}
            for i in light:
                if rows[i] >> j2 & 1 and not rows[i] >> j1 & 1:
                    candidate = rows[i] ^ (1 << j1) ^ (1 << j2)
                    if candidate not in light_masks:
                        light_masks.discard(rows[i])
                        light_masks.add(candidate)
                        rows[i] = candidate
                        moved = True
                        break
        if not moved:
            raise StallError(
                f"no move fixes column {j1} from column {j2} without duplicating a minimal row"
            )
    return BinaryMatrix(m0.nrows, t, rows)


def _staircase_matrix(
    t: int, s: int, n_light: int, n_heavy: int, target: int, rng: random.Random | None
) -> BinaryMatrix:
    """n_light distinct weight-s rows plus n_heavy weight-(s+1) rows, balanced.

    The deterministic start takes the colexicographically first weight-s
    masks and round-robin weight-(s+1) rows; a retry RNG reshuffles both.
    """
    pool = _weight_masks(t, s)
    if n_light > len(pool):
        raise ConstructionError(
            f"need {n_light} distinct weight-{s} rows but only {len(pool)} exist"
        )
    if rng is None:
        light = pool[:n_light]
        heavy = _round_robin_rows(n_heavy, s + 1, t)
    else:
        light = rng.sample(pool, n_light)
        heavy = _round_robin_rows(n_heavy, s + 1, t, offset=rng.randrange(t))
        rng.shuffle(heavy)
    return balance_columns(
        BinaryMatrix(n_light + n_heavy, t, light + heavy), target
    )


def _staircase_with_retries(t, s, n_light, n_heavy, target) -> BinaryMatrix:
    try:
        return _staircase_matrix(t, s, n_light, n_heavy, target, None)
    except StallError:
        pass
    for attempt in range(BALANCE_RETRIES):
        try:
            return _staircase_matrix(
                t, s, n_light, n_heavy, target, random.Random(attempt)
            )
        except StallError:
            continue
    raise ConstructionError(
        f"balancing stalled {BALANCE_RETRIES + 1} times for "
        f"(t={t}, s={s}, light={n_light}, heavy={n_heavy}, target={target})"
    )


def construct_m0(alpha: int, k: int, t: int) -> BinaryMatrix:
    """Build a k x t incidence matrix achieving the distance bound.

    Output properties (always re-verified before returning):
    column weights all alpha, minimum row weight s, and repetition number
    of minimal rows exactly ceil((k - r) / C(t, s)).

    When k - r fits within the C(t, s) distinct weight-s patterns, a single
    staircase (distinct weight-s rows over weight-(s+1) rows, balanced)
    suffices and the repetition number is 1.  Otherwise, with
    k - r = u*C(t,s) + v, every weight-s pattern is stacked u times and the
    remaining r + v rows are filled either round-robin (v = 0) or by a
    second staircase with the residual column weight (v > 0).
    """
    if alpha < 1 or k < 1 or t < 1:
        raise ParameterError("alpha, k, t must be positive")
    if alpha >= k:
        raise ParameterError("alpha must be < k")
    if t * alpha < k:
        raise ParameterError(f"t*alpha = {t * alpha} must be >= k = {k}")
    s, r = divmod(t * alpha, k)
    c = comb(t, s)
    gamma_target = ceil((k - r) / c)

    if k - r <= c:
        m0 = _staircase_with_retries(t, s, k - r, r, alpha)
    else:
        u, v = divmod(k - r, c)
        m1_rows = [mask for mask in _weight_masks(t, s) for _ in range(u)]
        residual = alpha - u * comb(t - 1, s - 1)
        if v == 0:
            m2_rows = _round_robin_rows(r, s + 1, t)
        else:
            m2_rows = _staircase_with_retries(t, s, v, r, residual).rows
        m0 = BinaryMatrix(k, t, m1_rows + m2_rows)

    bad = _verify_m0(m0, alpha, s, gamma_target)
    if bad:
        raise ConstructionError(f"construct_m0({alpha},{k},{t}): {bad}")
    return m0


def _verify_m0(m0: BinaryMatrix, alpha: int, s: int, gamma: int) -> str | None:
    weights = m0.col_weights()
    if any(w != alpha for w in weights):
        return f"column weights {weights} != {alpha}"
    prof = matrix_profile(m0)
    if prof.w_min != s:
        return f"w_min {prof.w_min} != {s}"
    if prof.gamma != gamma:
        return f"repetition number {prof.gamma} != {gamma}"
    return None


def indicator_matrix(m0: BinaryMatrix, beta: int) -> BinaryMatrix:
    """Replicate every column of M0 beta times (column j of M = column j//beta of M0)."""
    if beta < 1:
        raise ParameterError("beta must be positive")
    block = (1 << beta) - 1
    rows = []
    for r in m0.rows:
        mask = 0
        j = 0
        while r:
            if r & 1:
                mask |= block << (j * beta)
            r >>= 1
            j += 1
        rows.append(mask)
    return BinaryMatrix(m0.nrows, m0.ncols * beta, rows)


def complete_design(shell: CodeDesign, m0: BinaryMatrix) -> CodeDesign:
    """Attach an incidence matrix to a validated shell, checking consistency."""
    if m0.nrows != shell.k or m0.ncols != shell.t:
        raise ParameterError(
            f"incidence matrix is {m0.nrows}x{m0.ncols}, expected {shell.k}x{shell.t}"
        )
    if any(w != shell.alpha for w in m0.col_weights()):
        raise ParameterError("every column of M0 must have weight alpha")
    if any(r == 0 for r in m0.rows):
        raise ParameterError("every information symbol must feed some bucket")
    S = tuple(m0.col_support(j) for j in range(shell.t))
    return replace(shell, S=S, m0=m0, m=indicator_matrix(m0, shell.beta))


def build_design(alpha: int, beta: int, k: int, t: int) -> CodeDesign:
    shell = validate_params(alpha, beta, k, t)
    return complete_design(shell, construct_m0(alpha, k, t))


def greedy_cover_partition(
    sets: Sequence[Iterable[int]], k: int
) -> list[tuple[int, tuple[int, ...]]]:
    """Partition [0, k) by scanning the given sets and keeping fresh elements.

    Returns (set index, newly covered elements) pairs in scan order; sets
    that add nothing are skipped.  Used to exhibit a k-subset of codeword
    positions (one block per chosen bucket) that decodes everything.
    """
    covered: set[int] = set()
    parts: list[tuple[int, tuple[int, ...]]] = []
    for i, s in enumerate(sets):
        fresh = set(s) - covered
        if fresh:
            parts.append((i, tuple(sorted(fresh))))
            covered |= fresh
            if len(covered) == k:
                return parts
    raise ParameterError(f"sets cover only {len(covered)} of {k} symbols")


# -- the distance deficit delta0 ---------------------------------------------


def delta0_closed_form(m0: BinaryMatrix, beta: int) -> int:
    """Distance deficit n - w_min(M0)*beta - k + Gamma(M0) of the indicator matrix.

    Equals i0*beta - xi_{M0}(i0) with i0 = t - w_min(M0); the resulting
    minimum distance is n - k + 1 - delta0 = w_min(M0)*beta - Gamma(M0) + 1.
    """
    prof = matrix_profile(m0)
    n = m0.ncols * beta
    return n - prof.w_min * beta - m0.nrows + prof.gamma


def delta0_exhaustive(m: BinaryMatrix) -> int:
    """Distance deficit straight from its definition, on the indicator matrix.

    Smallest delta in [0, n-k] such that every (l + delta)-subset of columns
    covers at least l rows, for every l in [1, k].  Enumerates all column
    subsets, so it is capped at n <= DELTA0_MAX_COLS.
    """
    n, k = m.ncols, m.nrows
    if n > DELTA0_MAX_COLS:
        raise SizeGuardError(
            f"delta0_exhaustive enumerates 2^{n} subsets; cap is {DELTA0_MAX_COLS} columns"
        )
    xi = xi_profile(m)  # xi[i-1] = min cover of any i columns
    for delta in range(0, n - k + 1):
        if all(xi[ell + delta - 1] >= ell for ell in range(1, k + 1)):
            return delta
    raise ConstructionError("no delta in [0, n-k] satisfies the covering condition")
