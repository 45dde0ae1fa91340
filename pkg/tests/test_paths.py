import pytest
from hypothesis import given, strategies as st

from ddyck.paths import (
    UNRESTRICTED,
    BadToken,
    BelowAxis,
    Path,
    Unbalanced,
    area,
    is_d_dyck,
    last_valley_level,
    parse_path,
    peaks,
    pyramid,
    valley_vector,
    valleys,
)

from conftest import SAMPLE_28, dyck_paths


def test_parse_small():
    assert parse_path("UD").semi_length == 1
    assert parse_path("UUDD").semi_length == 2
    assert parse_path("").semi_length == 0


def test_parse_aliases_and_whitespace():
    assert parse_path(" xyxy\n") == parse_path("UDUD")
    with pytest.raises(BadToken):
        parse_path("UD UD")
    assert parse_path("uudd") == Path("UUDD")


@pytest.mark.parametrize(
    "text, exc",
    [("UDDU", BelowAxis), ("UUD", Unbalanced), ("UZD", BadToken), ("D", BelowAxis)],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_path(text)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        parse_path("DU")


def test_valley_vector():
    assert valley_vector(parse_path(SAMPLE_28)) == (0, 1, 0, 3, 4, 3, 2)
    assert valley_vector(pyramid(6)) == ()
    assert valley_vector(parse_path("UUUDUDDDUD")) == (2, 0)


def test_is_d_dyck():
    assert is_d_dyck(parse_path(SAMPLE_28), -1)
    assert not is_d_dyck(parse_path(SAMPLE_28), 0)
    assert not is_d_dyck(parse_path("UUUDUDDDUD"), -1)
    assert is_d_dyck(parse_path("UUUDUDDDUD"), -2)
    for d in (5, 0, -1, -7, UNRESTRICTED):
        assert is_d_dyck(pyramid(4), d)


def test_only_semilength5_path_outside_minus1():
    from ddyck.enumeration import gen_dyck

    bad = [p.steps for p in gen_dyck(5) if not is_d_dyck(p, -1)]
    assert bad == ["UUUDUDDDUD"]


def test_peaks():
    assert peaks(parse_path("UD")) == 1
    assert peaks(parse_path("UDUDUD")) == 3
    assert peaks(parse_path("UUDUDD")) == 2
    assert peaks(Path()) == 0


def test_area():
    assert area(parse_path(SAMPLE_28)) == 70
    assert area(parse_path("UD")) == 1
    assert area(parse_path("UUUDUDDDUD")) == 15
    for a in range(1, 9):
        assert area(pyramid(a)) == a * a


def test_last_valley_level():
    assert last_valley_level(parse_path("UUDD")) is None
    assert last_valley_level(parse_path("UDUD")) == 0
    assert last_valley_level(parse_path(SAMPLE_28)) == 2


def test_pyramid_rejects_negative():
    with pytest.raises(ValueError):
        pyramid(-1)


@given(dyck_paths())
def test_peaks_exceed_valleys_by_one(p):
    if p.semi_length:
        assert peaks(p) == valleys(p) + 1


@given(dyck_paths(max_n=8), dyck_paths(max_n=8))
def test_area_is_additive_over_concatenation(p, q):
    assert area(p + q) == area(p) + area(q)


@given(dyck_paths())
def test_area_additive_over_ground_returns(p):
    h = p.heights
    cuts = [i for i in range(1, len(h) - 1) if h[i] == 0]
    pieces, start = [], 0
    for c in cuts + [len(p.steps)]:
        pieces.append(Path(p.steps[start:c]))
        start = c
    assert sum(area(x) for x in pieces) == area(p)


@given(dyck_paths(), st.integers(-6, 6), st.integers(0, 6))
def test_d_dyck_monotone_in_d(p, d, drop):
    if is_d_dyck(p, d):
        assert is_d_dyck(p, d - drop)
        assert is_d_dyck(p, UNRESTRICTED)


@given(dyck_paths())
def test_render_round_trip(p):
    assert parse_path(p.render()) == p
    assert parse_path(str(p)) == p


@given(dyck_paths())
def test_heights_stay_nonnegative(p):
    assert min(p.heights) >= 0 and p.heights[0] == p.heights[-1] == 0
    assert sum(p.heights) == area(p)
