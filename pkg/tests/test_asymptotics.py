import mpmath
import pytest

from ddyck.recurrences import r_minus1
from ddyck.asymptotics import asymptotic_table, compute_rho, quartic, r_asymptotic, relative_error

LADDER = [25, 50, 100, 200, 400]


def test_rho_six_digits():
    data = compute_rho(6)
    assert mpmath.nstr(data.rho, 6) == "0.295598"


@pytest.mark.parametrize("precision", [6, 30, 80])
def test_residual_vanishes(precision):
    data = compute_rho(precision)
    with mpmath.workdps(precision + 10):
        assert abs(quartic(data.rho)) < mpmath.mpf(10) ** -precision
        assert abs(data.rho_closed - data.rho_bisect) < mpmath.mpf(10) ** -precision


def test_precision_floor():
    with pytest.raises(ValueError):
        compute_rho(3)


def test_relative_error_decreases_on_ladder():
    errs = [row["relative_error"] for row in asymptotic_table(LADDER)]
    assert all(a > b for a, b in zip(errs, errs[1:]))


def test_ratio_tends_to_one_from_above():
    data = compute_rho(40)
    ns = (50, 100, 200, 400)
    ratios = [r_asymptotic(n, data) / r_minus1(n) for n in ns]
    errs = [relative_error(n, data) for n in ns]
    assert all(r > 1 for r in ratios)
    assert ratios == sorted(ratios, reverse=True)
    for e, r in zip(errs, ratios):
        assert abs(e - (r - 1)) < mpmath.mpf(10) ** -12
    assert errs[-1] < 0.4


def test_r_asymptotic_domain():
    with pytest.raises(ValueError):
        r_asymptotic(0)
