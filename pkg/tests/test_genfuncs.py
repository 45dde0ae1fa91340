from fractions import Fraction

import pytest

from ddyck import genfuncs as gf
from ddyck.enumeration import PathFilter, count_filtered, statistic_distribution, total_area
from ddyck.recurrences import narayana
from ddyck.series import MarkerPoly

R1 = [1, 2, 5, 14, 41, 123, 375, 1157, 3603]
R3 = [1, 2, 5, 14, 42, 132, 428, 1419, 4785]


def test_nonneg_examples():
    s = gf.series_L_nonneg(0, 8)
    assert s.at_marker(1)[1:6] == [1, 2, 5, 13, 34]
    for d in range(0, 5):
        assert gf.series_L_nonneg(d, 3).coefficient(1) == MarkerPoly([0, 1])


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_nonneg_against_oracle(d):
    s = gf.series_L_nonneg(d, 9)
    for n in range(1, 10):
        assert s.coefficient(n).as_dict() == statistic_distribution(n, PathFilter(d=d), "peaks")


def test_Le_system_examples():
    assert gf.solve_Le_system(1, 9).L.at_marker(1)[1:] == R1
    assert gf.solve_Le_system(3, 9).L.at_marker(1)[1:] == R3
    assert gf.solve_Le_system(1, 6).L.coefficient(6) == MarkerPoly([0, 1, 15, 45, 46, 15, 1])


def test_Le_system_rejects_bad_input():
    with pytest.raises(ValueError):
        gf.solve_Le_system(0, 5)
    with pytest.raises(ValueError):
        gf.solve_Le_system(1, 0)


def test_closed_minus1_examples():
    s = gf.series_L_closed_minus1(6)
    assert s.coefficient(4) == MarkerPoly([0, 1, 6, 6, 1])
    assert s.coefficient(1) == MarkerPoly([0, 1])


def test_Q_closed():
    q = gf.series_Q_closed(8).at_marker(1)
    assert q[1] == 0 and q[3] == 3 and q[6] == 56


def test_series_b():
    assert gf.series_b(8) == [1, 1, 2, 4, 9, 22, 57, 154, 429]


def test_lagrange_examples():
    assert gf.lagrange_Le(2, 6)[1:] == [1, 2, 5, 14, 42, 131]
    assert gf.lagrange_Le(1, 5)[5] == 41
    for e in range(1, 6):
        assert gf.lagrange_Le(e, 1)[1] == 1


def test_series_V():
    a = gf.series_V(9)
    assert a[1:9] == [1, 6, 29, 130, 547, 2198, 8551, 32508]
    assert a[9] == total_area(9, PathFilter(d=-1))


def test_area_system_small():
    s = gf.solve_area_system(4)
    assert s.A.coefficient(1) == MarkerPoly([0, 1])
    assert s.A.coefficient(2).as_dict() == {2: 1, 4: 1}


@pytest.mark.parametrize("e", [1, 2, 3])
def test_consistency_triangle(e):
    N = 10
    system = gf.solve_Le_system(e, N).L
    lag = gf.lagrange_Le(e, N)
    assert system.at_marker(1) == lag
    for n in range(1, N + 1):
        assert system.coefficient(n).as_dict() == statistic_distribution(n, PathFilter(d=-e), "peaks")
    if e == 1:
        assert gf.series_L_closed_minus1(N) == system
        assert gf.series_L_minus1_univariate(N) == lag


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_all_residuals_vanish(e):
    res = gf.le_residuals(gf.solve_Le_system(e, 12))
    assert {k for k, v in res.items() if not v.is_zero()} == set()


@pytest.mark.parametrize("e", [1, 2, 3])
def test_S_and_Q_count_the_right_paths(e):
    sysm = gf.solve_Le_system(e, 8)
    S = sysm.S.at_marker(1)
    for n in range(1, 9):
        assert S[n] == count_filtered(n, PathFilter.low_last_valley(e))
        for i, Qi in enumerate(sysm.Q):
            assert Qi.at_marker(1)[n] == count_filtered(n, PathFilter(d=-e, last_valley=frozenset({i})))


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_narayana_prefix(e):
    L = gf.solve_Le_system(e, e + 3).L
    for n in range(1, e + 4):
        assert L.coefficient(n).as_dict() == {k: narayana(n, k) for k in range(1, n + 1)}


def test_unrestricted_is_narayana():
    L = gf.series_L_unrestricted(9)
    for n in range(1, 10):
        assert L.coefficient(n).as_dict() == {k: narayana(n, k) for k in range(1, n + 1)}


def test_area_marginal_and_derivatives():
    s = gf.solve_area_system(8)
    assert s.A.at_marker(1) == gf.solve_Le_system(1, 8).L.at_marker(1)
    assert s.A.marker_derivative_at(1) == gf.series_V(8)
    M = s.B.marker_derivative_at(1)
    assert M[1:5] == [0, 2, 13, 58]
    assert s.B.at_marker(1) == [Fraction(v) for v in gf.series_Q_closed(8).at_marker(1)]


def test_pyramid_series():
    E = gf.solve_area_system(5).E
    for j in range(1, 6):
        assert E.coefficient(j).as_dict() == {j * j: 1}
