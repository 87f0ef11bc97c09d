import random
from itertools import combinations
from math import ceil, comb

import pytest

from gdcode.design import (
    BoundReport,
    CodeDesign,
    balance_columns,
    bound_report,
    build_design,
    construct_m0,
    delta0_closed_form,
    delta0_exhaustive,
    gdc_bound,
    greedy_cover_partition,
    indicator_matrix,
    lrc_bound,
    validate_params,
)
from gdcode.errors import ParameterError, SizeGuardError
from gdcode.matrices import BinaryMatrix, matrix_profile, xi_profile

from test_matrices import example_matrix


def small_grid(max_t=5, max_k=7, max_beta=5):
    """Valid (alpha, beta, k, t) tuples for property tests."""
    out = []
    for t in range(2, max_t + 1):
        for k in range(2, max_k + 1):
            for beta in range(2, max_beta + 1):
                for alpha in range(1, min(k, beta)):
                    if t * alpha >= k:
                        out.append((alpha, beta, k, t))
    return out


# -- parameter validation ------------------------------------------------------


def test_validate_examples():
    d = validate_params(4, 6, 6, 3)
    assert (d.s, d.r, d.n) == (2, 0, 18)
    d = validate_params(2, 3, 3, 2)
    assert (d.s, d.r, d.n) == (1, 1, 6)
    assert d.buckets == ((0, 1, 2), (3, 4, 5))


def test_validate_rejections():
    with pytest.raises(ParameterError, match=r"alpha must be < min\(k, beta\)"):
        validate_params(3, 3, 5, 2)
    with pytest.raises(ParameterError, match="alpha"):
        validate_params(5, 4, 6, 3)
    with pytest.raises(ParameterError, match="t\\*alpha"):
        validate_params(1, 3, 5, 2)  # t*alpha = 2 < k
    with pytest.raises(ParameterError):
        validate_params(0, 3, 3, 2)


def test_bucket_of():
    d = validate_params(2, 3, 3, 2)
    assert d.bucket_of(0) == 0 and d.bucket_of(5) == 1
    with pytest.raises(ParameterError):
        d.bucket_of(6)


# -- bound formulas --------------------------------------------------------------


def test_gdc_bound_examples():
    assert gdc_bound(4, 6, 6, 3) == 11  # s=2, r=0, ceil(6/3)=2 -> 12-2+1
    assert gdc_bound(2, 3, 3, 2) == 3  # s=1, r=1, ceil(2/2)=1 -> 3-1+1
    assert gdc_bound(1, 2, 2, 2) == 2  # s=1, r=0, ceil(2/2)=1 -> 2-1+1


def test_lrc_bound_examples():
    assert lrc_bound(18, 6, 4, 3) == 11  # 13 - (2-1)*2
    assert lrc_bound(10, 4, 4, 3) == 7  # alpha = k: Singleton
    assert lrc_bound(9, 4, 2, 2) == 5  # 6 - (2-1)*1


def test_lrc_bound_validation():
    with pytest.raises(ParameterError):
        lrc_bound(10, 4, 5, 3)
    with pytest.raises(ParameterError):
        lrc_bound(10, 4, 2, 1)


def test_bound_ordering_on_grid():
    for alpha, beta, k, t in small_grid():
        rep = bound_report(validate_params(alpha, beta, k, t))
        assert isinstance(rep, BoundReport)
        assert rep.achieved_d <= rep.gdc_bound <= rep.lrc_bound <= rep.singleton
        assert rep.achieved_d == rep.gdc_bound  # constructions are tight


# -- incidence matrix construction ------------------------------------------------


def test_construct_trivial_cases():
    m = construct_m0(1, 2, 2)
    assert sorted(m.rows) == [0b01, 0b10]

    m = construct_m0(2, 3, 3)
    assert sorted(m.rows) == [0b011, 0b101, 0b110]
    assert m.col_weights() == [2, 2, 2]


def test_construct_stacked_case():
    # k - r = 6 > C(3,2) = 3 forces u = 2 copies of every weight-2 pattern
    m = construct_m0(4, 6, 3)
    assert m.rows == [0b011, 0b011, 0b101, 0b101, 0b110, 0b110]
    assert m.col_weights() == [4, 4, 4]
    p = matrix_profile(m)
    assert p.w_min == 2 and p.gamma == 2
    # induced bucket inputs
    assert [m.col_support(j) for j in range(3)] == [
        (0, 1, 2, 3),
        (0, 1, 4, 5),
        (2, 3, 4, 5),
    ]


def test_construct_properties_on_grid():
    seen = set()
    for alpha, _, k, t in small_grid(max_t=6, max_k=9, max_beta=6):
        if (alpha, k, t) in seen:
            continue
        seen.add((alpha, k, t))
        m = construct_m0(alpha, k, t)
        s, r = divmod(t * alpha, k)
        p = matrix_profile(m)
        assert all(w == alpha for w in m.col_weights()), (alpha, k, t)
        assert p.w_min == s, (alpha, k, t)
        assert p.gamma == ceil((k - r) / comb(t, s)), (alpha, k, t)
    assert len(seen) > 50


def test_construct_rejects_bad_params():
    with pytest.raises(ParameterError):
        construct_m0(3, 3, 4)  # alpha >= k
    with pytest.raises(ParameterError):
        construct_m0(1, 5, 2)  # t*alpha < k


# -- column balancing --------------------------------------------------------------


def test_balance_leaves_balanced_input_alone():
    m = BinaryMatrix.from_strings(["110", "101", "011"])
    assert balance_columns(m, 2).rows == m.rows


def test_balance_single_move_trace():
    # column sums (3,2,2,1); the documented move rewrites row 0 to 0101
    m = BinaryMatrix.from_strings(["1100", "1010", "1001", "0110"])
    out = balance_columns(m, 2)
    assert out.to_bitstrings() == ["0101", "1010", "1001", "0110"]
    assert out.col_weights() == [2, 2, 2, 2]


def test_balance_prefers_heavy_rows():
    # rows 0,1 are the distinct weight-1 rows; rows 2,3 have weight 2.
    # Both heavy rows must move (column 2 is empty) while light rows stay.
    m = BinaryMatrix(4, 3, [0b001, 0b010, 0b011, 0b011])
    out = balance_columns(m, 2)
    assert out.rows[0] == 0b001 and out.rows[1] == 0b010
    assert out.col_weights() == [2, 2, 2]
    assert [r.bit_count() for r in out.rows] == [1, 1, 2, 2]


def test_balance_keeps_weight_s_rows_distinct():
    rng = random.Random(8)
    for _ in range(100):
        t = rng.randrange(3, 7)
        s = rng.randrange(1, t - 1)
        pool = [m for m in range(1 << t) if bin(m).count("1") == s]
        n_light = rng.randrange(1, min(len(pool), 5) + 1)
        n_heavy = rng.randrange(0, 4)
        light = rng.sample(pool, n_light)
        heavy = [sum(1 << ((i + j) % t) for j in range(s + 1)) for i in range(n_heavy)]
        total = sum(r.bit_count() for r in light + heavy)
        if total % t:
            continue
        alpha = total // t
        if alpha == 0 or alpha > n_light + n_heavy:
            continue
        from gdcode.errors import StallError

        try:
            out = balance_columns(BinaryMatrix(n_light + n_heavy, t, light + heavy), alpha)
        except StallError:
            continue  # the construction layer retries with a reshuffle
        assert all(w == alpha for w in out.col_weights())
        lights_out = [r for r in out.rows if r.bit_count() == s]
        assert len(set(lights_out)) == len(lights_out)
        assert sorted(r.bit_count() for r in out.rows) == sorted(
            r.bit_count() for r in light + heavy
        )


def test_balance_validates_preconditions():
    with pytest.raises(ParameterError):
        balance_columns(BinaryMatrix.from_strings(["110", "110", "001"]), 2)  # dup minimal
    with pytest.raises(ParameterError):
        balance_columns(BinaryMatrix.from_strings(["111", "100", "000"]), 2)  # weight gap 3 vs 0
    with pytest.raises(ParameterError):
        balance_columns(BinaryMatrix.from_strings(["110", "011"]), 2)  # total != t*alpha


# -- indicator matrix ---------------------------------------------------------------


def test_indicator_examples():
    m = indicator_matrix(BinaryMatrix.identity(2), 2)
    assert m.to_bitstrings() == ["1100", "0011"]
    m0 = example_matrix()
    m = indicator_matrix(m0, 5)
    assert m.ncols == 40
    for j in range(40):
        assert m.col_support(j) == m0.col_support(j // 5)


def test_indicator_on_grid():
    for alpha, beta, k, t in small_grid(max_t=4, max_k=5, max_beta=4):
        d = build_design(alpha, beta, k, t)
        assert d.m.ncols == t * beta
        assert d.S == tuple(d.m0.col_support(j) for j in range(t))


# -- delta0 ---------------------------------------------------------------------------


def delta0_by_definition(m: BinaryMatrix) -> int:
    """Straight from the covering definition with explicit subsets."""
    n, k = m.ncols, m.nrows
    supports = [set(m.col_support(j)) for j in range(n)]
    for delta in range(0, n - k + 1):
        ok = True
        for ell in range(1, k + 1):
            for js in combinations(range(n), ell + delta):
                if len(set().union(*(supports[j] for j in js))) < ell:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return delta
    raise AssertionError("no feasible delta")


def test_delta0_closed_form_examples():
    assert delta0_closed_form(example_matrix(), 5) == 20  # 40 - 15 - 7 + 2
    assert delta0_closed_form(BinaryMatrix.from_strings(["10", "01", "11"]), 3) == 1
    assert delta0_closed_form(BinaryMatrix.identity(2), 2) == 1


def test_delta0_exhaustive_examples():
    assert delta0_exhaustive(indicator_matrix(BinaryMatrix.identity(2), 2)) == 1
    assert delta0_exhaustive(indicator_matrix(BinaryMatrix.from_strings(["10", "01", "11"]), 3)) == 1
    # an indicator whose every k-subset of columns covers all rows
    allones = BinaryMatrix.from_strings(["11", "11"])
    assert delta0_exhaustive(indicator_matrix(allones, 2)) == 0


def test_delta0_exhaustive_guard():
    with pytest.raises(SizeGuardError):
        delta0_exhaustive(BinaryMatrix(2, 15, [0, 0]))


def test_delta0_exhaustive_matches_definition_oracle():
    rng = random.Random(9)
    checked = 0
    while checked < 25:
        t = rng.randrange(2, 4)
        k = rng.randrange(2, 4)
        beta = rng.randrange(2, 4)
        rows = [rng.randrange(1, 1 << t) for _ in range(k)]
        m = indicator_matrix(BinaryMatrix(k, t, rows), beta)
        if m.ncols > 8 or m.ncols - k < 0:
            continue
        assert delta0_exhaustive(m) == delta0_by_definition(m)
        checked += 1


def test_delta0_agreement_on_designs():
    for alpha, beta, k, t in small_grid():
        if t * beta > 14:
            continue
        d = build_design(alpha, beta, k, t)
        assert delta0_exhaustive(d.m) == delta0_closed_form(d.m0, beta)


# -- greedy cover partition -----------------------------------------------------------


def test_greedy_cover_partition_example():
    s_sets = [example_matrix().col_support(j) for j in range(8)]
    parts = greedy_cover_partition(s_sets, 7)
    assert parts == [(0, (0, 3, 5)), (1, (1, 4, 6)), (2, (2,))]


def test_greedy_cover_partition_is_partition():
    rng = random.Random(10)
    for _ in range(50):
        k = rng.randrange(2, 8)
        sets = [set(rng.sample(range(k), rng.randrange(1, k + 1))) for _ in range(5)]
        sets.append(set(range(k)))  # guarantee coverage
        parts = greedy_cover_partition(sets, k)
        blocks = [set(b) for _, b in parts]
        assert set().union(*blocks) == set(range(k))
        assert sum(len(b) for b in blocks) == k
        for i, fresh in parts:
            assert fresh and set(fresh) <= set(sets[i])


def test_greedy_cover_partition_incomplete_raises():
    with pytest.raises(ParameterError):
        greedy_cover_partition([{0, 1}], 3)


# -- serialization -----------------------------------------------------------------


def test_design_json_round_trip():
    d = build_design(2, 3, 3, 2)
    obj = d.to_json()
    assert obj["S"] == [[1, 3], [2, 3]]  # wire format is 1-based
    assert obj["M0"] == ["10", "01", "11"]
    d2 = CodeDesign.from_json(obj)
    assert d2 == d


def test_design_json_rejects_tampering():
    obj = build_design(2, 3, 3, 2).to_json()
    obj["S"] = [[1, 2], [2, 3]]
    with pytest.raises(ParameterError):
        CodeDesign.from_json(obj)
