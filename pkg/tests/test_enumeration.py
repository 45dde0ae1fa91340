from math import comb

import pytest

from ddyck.enumeration import (
    ExhaustiveBoundExceeded,
    PathFilter,
    count_B,
    count_filtered,
    count_Q,
    gen_dyck,
    iter_filtered,
    max_exhaustive,
    statistic_distribution,
    total_area,
)
from ddyck.paths import UNRESTRICTED, parse_path
from ddyck.recurrences import catalan


def test_gen_dyck_small():
    assert [p.steps for p in gen_dyck(0)] == [""]
    assert [p.steps for p in gen_dyck(3)] == ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]


def test_gen_dyck_n10_count():
    assert sum(1 for _ in gen_dyck(10)) == 16796


@pytest.mark.parametrize("n", range(0, 11))
def test_gen_dyck_distinct_and_catalan(n):
    paths = [p.steps for p in gen_dyck(n)]
    assert len(paths) == len(set(paths)) == catalan(n)
    assert paths == sorted(paths, key=lambda s: s.replace("U", "0").replace("D", "1"))


def test_count_filtered_examples():
    assert count_filtered(5, PathFilter(d=-1)) == 41
    assert count_filtered(7, PathFilter(d=-2)) == 419
    assert count_filtered(4, PathFilter(d=-1, peak_count=3)) == 6


def test_count_Q_and_B():
    assert [count_Q(n) for n in range(1, 7)] == [0, 1, 3, 8, 21, 56]
    assert [count_B(n) for n in range(0, 9)] == [1, 1, 2, 4, 9, 22, 57, 154, 429]


def test_b_paths_are_uudu_avoiders():
    for n in range(0, 9):
        assert count_B(n) == count_filtered(n, PathFilter(avoid="UUDU"))


def test_filter_rejects_malformed_avoid():
    with pytest.raises(ValueError):
        PathFilter(avoid="UX")


def test_total_area_examples():
    assert total_area(3, PathFilter(d=-1)) == 29
    assert total_area(2) == 6
    assert total_area(4, PathFilter.q_paths()) == 58


@pytest.mark.parametrize("n", range(1, 11))
def test_total_area_unrestricted_identity(n):
    assert total_area(n) == 4**n - comb(2 * n + 1, n)


def test_statistic_distribution_examples():
    assert statistic_distribution(4, PathFilter(d=-1), "peaks") == {1: 1, 2: 6, 3: 6, 4: 1}
    assert statistic_distribution(1, None, "area") == {1: 1}
    assert statistic_distribution(5, PathFilter(d=-1), "peaks") == {1: 1, 2: 10, 3: 19, 4: 10, 5: 1}


def test_statistic_distribution_bad_stat():
    with pytest.raises(ValueError):
        statistic_distribution(3, None, "height")


@pytest.mark.parametrize("d", [-1, -2, -3, -4, UNRESTRICTED])
def test_peak_marginal_is_count(d):
    f = PathFilter(d=d)
    for n in range(1, 11):
        assert sum(statistic_distribution(n, f, "peaks").values()) == count_filtered(n, f)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_catalan_prefix(e):
    for n in range(1, e + 4):
        assert count_filtered(n, PathFilter(d=-e)) == catalan(n)
    assert count_filtered(e + 4, PathFilter(d=-e)) < catalan(e + 4)


def test_antitone_in_e():
    for n in range(1, 11):
        counts = [count_filtered(n, PathFilter(d=-e)) for e in range(1, 10)]
        assert counts == sorted(counts)
        assert counts[-1] == catalan(n)


def test_low_last_valley_filter():
    f = PathFilter.low_last_valley(2)
    from ddyck.paths import is_d_dyck, last_valley_level

    expected = [p for p in gen_dyck(6) if is_d_dyck(p, -2) and last_valley_level(p) in (None, 0, 1)]
    assert list(iter_filtered(6, f)) == expected
    assert f(parse_path("UUDD")) and f(parse_path("UUUDDUUDDD")) and not f(parse_path("UUUDUDDD"))


def test_bound_enforced(monkeypatch):
    with pytest.raises(ExhaustiveBoundExceeded):
        count_filtered(5, bound=4)
    monkeypatch.setenv("DDYCK_MAX_EXHAUSTIVE", "3")
    assert max_exhaustive() == 3
    with pytest.raises(ExhaustiveBoundExceeded):
        count_filtered(4)
    monkeypatch.setenv("DDYCK_MAX_EXHAUSTIVE", "nonsense")
    with pytest.raises(ValueError):
        max_exhaustive()
