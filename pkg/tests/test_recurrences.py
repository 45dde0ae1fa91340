import threading

import pytest

from ddyck import recurrences as rec
from ddyck.enumeration import PathFilter, count_filtered, count_Q, gen_dyck, total_area
from ddyck.genfuncs import series_b, series_V, solve_Le_system
from ddyck.paths import is_d_dyck, last_valley_level, valley_vector


def test_catalan_narayana():
    assert rec.catalan(5) == 42
    assert rec.narayana(4, 2) == 6
    assert rec.narayana(0, 0) == 1
    with pytest.raises(rec.IndexOutOfRange):
        rec.narayana(3, 4)
    with pytest.raises(rec.IndexOutOfRange):
        rec.catalan(-1)


def test_r_nonneg_initial_rule():
    assert rec.r_nonneg(2, 2) == 2


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
def test_r_nonneg_against_oracle(d):
    for n in range(1, 12):
        assert rec.r_nonneg(d, n) == count_filtered(n, PathFilter(d=d))
        if d >= 1:
            assert rec.r_nonneg_closed(d, n) == rec.r_nonneg(d, n)


def test_p_nonneg_examples():
    assert rec.p_nonneg(0, 3, 2) == 3
    for d in range(0, 4):
        for n in range(1, 6):
            assert rec.p_nonneg(d, n, 1) == 1
    assert sum(rec.p_nonneg(0, 4, k) for k in range(1, 5)) == rec.r_nonneg(0, 4) == 13


@pytest.mark.parametrize("d", [0, 1, 2])
def test_p_nonneg_marginals(d):
    for n in range(1, 11):
        assert sum(rec.p_nonneg(d, n, k) for k in range(1, n + 1)) == rec.r_nonneg(d, n)


def test_q_seq():
    assert rec.q_seq(1) == 0 and rec.q_seq(3) == 3 and rec.q_seq(4) == 8


def test_r_minus1_examples():
    assert rec.r_minus1(6, "p_recurrence") == 123
    assert rec.r_minus1(4, "double_sum") == 14
    assert rec.r_minus1(9, "convolution") == 3603
    with pytest.raises(ValueError):
        rec.r_minus1(4, "guess")


def test_b_closed_examples():
    assert rec.b_closed(5) == 22
    assert rec.b_closed(0) == 1
    assert rec.b_closed(7, "narayana_sum") == 154
    assert [rec.b_closed(n, "inclusion_exclusion") for n in range(9)] == [1, 1, 2, 4, 9, 22, 57, 154, 429]


def test_area_sequences_examples():
    assert rec.A_seq(2) == 2
    assert rec.a_seq(5) == 547
    assert rec.A_seq(5) == total_area(5, PathFilter.q_paths())


def test_three_way_r():
    for n in range(1, 13):
        values = {rec.r_minus1(n, m) for m in rec.R_METHODS}
        assert values == {count_filtered(n, PathFilter(d=-1))}


def test_cross_checks_to_12():
    b = series_b(12)
    V = series_V(12)
    for n in range(1, 13):
        assert rec.q_seq(n) == count_Q(n)
        assert rec.b_closed(n, "inclusion_exclusion") == rec.b_closed(n, "narayana_sum") == b[n]
        assert rec.a_seq(n) == V[n]
    for n in range(1, 11):
        assert rec.A_seq(n) == total_area(n, PathFilter.q_paths())
        assert rec.a_seq(n) == total_area(n, PathFilter(d=-1))


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_catalan_prefix_via_series(e):
    r = solve_Le_system(e, e + 3).L.at_marker(1)
    assert r[1:] == [rec.catalan(n) for n in range(1, e + 4)]


def test_p_recurrence_far_out():
    # the three methods still agree well beyond the enumeration range
    assert rec.r_minus1(40, "p_recurrence") == rec.r_minus1(40, "convolution") == rec.r_minus1(40, "double_sum")


def test_minus1_valley_refinement_of_b():
    # ground-last-valley paths with j valleys, k of them one below their predecessor
    for n in range(1, 10):
        counts: dict = {}
        for p in gen_dyck(n):
            nu = valley_vector(p)
            if not is_d_dyck(p, -1) or (nu and last_valley_level(p) != 0):
                continue
            j = len(nu)
            k = sum(1 for i in range(1, j) if nu[i] - nu[i - 1] == -1)
            counts[j, k] = counts.get((j, k), 0) + 1
        for (j, k), c in counts.items():
            expected = 1 if j == 0 else rec.binom(n - k - 1, j) * rec.narayana(j, k + 1)
            assert c == expected


def test_tables_deterministic_under_concurrent_extension():
    table = rec.SequenceTable("sq", lambda v, n: n * n)
    results = []

    def worker(k):
        results.append(table.prefix(200 + k))

    threads = [threading.Thread(target=worker, args=(k,)) for k in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert table.prefix(207) == [n * n for n in range(208)]
    for r in results:
        assert r == [n * n for n in range(len(r))]


def test_sequence_export():
    assert rec.sequence("b", 4) == [(0, 1), (1, 1), (2, 2), (3, 4), (4, 9)]
    assert rec.sequence("r", 3) == [(1, 1), (2, 2), (3, 5)]


def test_index_errors():
    for fn in (rec.q_seq, rec.A_seq, rec.a_seq):
        with pytest.raises(rec.IndexOutOfRange):
            fn(0)
    with pytest.raises(rec.IndexOutOfRange):
        rec.b_closed(-1)
    with pytest.raises(rec.IndexOutOfRange):
        rec.r_nonneg_closed(0, 3)
