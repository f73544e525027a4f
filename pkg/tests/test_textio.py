import pytest
from hypothesis import given, strategies as st

from knotinv import KnotRecord, LaurentPoly, parse_poly, read_csv, read_pd_file
from knotinv.textio import PolyParseError


def test_parse_table_row():
    p = parse_poly("-2t^{-8}+ 4t^{-7}-7t^{-6}+ 9t^{-5}-9t^{-4}+ 10t^{-3}-7t^{-2}+ 5t^{-1}-2")
    assert len(p.coeffs) == 9
    assert p.coefficient(p.min_exponent()) == -2 and p.min_exponent() == -16
    assert p.coefficient(p.max_exponent()) == -2 and p.max_exponent() == 0


def test_parse_simple():
    assert parse_poly("1") == LaurentPoly("t_half", {0: 1})
    assert parse_poly("t + t^3 - t^4") == LaurentPoly("t_half", {2: 1, 6: 1, 8: -1})
    assert parse_poly("-t") == LaurentPoly("t_half", {2: -1})
    assert parse_poly("3t^{1/2}") == LaurentPoly("t_half", {1: 3})
    assert parse_poly("t^{-5/2} + 2") == LaurentPoly("t_half", {-5: 1, 0: 2})


def test_parse_sums_duplicates():
    assert parse_poly("t + t") == LaurentPoly("t_half", {2: 2})
    assert parse_poly("t - t") == LaurentPoly("t_half", {})


def test_parse_serializer_output():
    assert parse_poly("1*t^-1 + 1*t^-3 + -1*t^-4") == LaurentPoly(
        "t_half", {-2: 1, -6: 1, -8: -1}
    )
    assert parse_poly("-1*t^-1/2 + -1*t^-5/2") == LaurentPoly("t_half", {-1: -1, -5: -1})


def test_parse_errors():
    for bad in ("", "  ", "t^", "^3", "t^{1/3}", "t ~ 3", "+", "2t 3"):
        with pytest.raises(PolyParseError):
            parse_poly(bad)


coeffs = st.dictionaries(st.integers(-20, 20), st.integers(-99, 99).filter(bool), max_size=8)


@given(coeffs)
def test_round_trip(c):
    p = LaurentPoly("t_half", c)
    if p.is_zero:
        return
    assert parse_poly(p.to_text()) == p
    # idempotent on normalized text
    assert parse_poly(parse_poly(p.to_text()).to_text()) == p


def test_read_pd_file(tmp_path):
    f = tmp_path / "knots.pd"
    f.write_text(
        "# comment\n"
        "\n"
        "trefoil: X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n"
        "X[1,3,2,4] X[3,1,4,2]\n"
    )
    recs = read_pd_file(str(f))
    assert [r.name for r in recs] == ["trefoil", "line4"]
    assert recs[0].pd_text.startswith("X[1,4")


def test_read_csv(tmp_path):
    f = tmp_path / "t.csv"
    f.write_text('name,jones,pd\nk1,"t + t^3 - t^4",\nk2,"1","X[1,3,2,4] X[3,1,4,2]"\n')
    recs = read_csv(str(f))
    assert recs[0] == KnotRecord(name="k1", jones_text="t + t^3 - t^4")
    assert recs[1].pd_text.startswith("X[")


def test_read_csv_schema_error(tmp_path):
    f = tmp_path / "bad.csv"
    f.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError):
        read_csv(str(f))


def test_record_needs_content():
    with pytest.raises(ValueError):
        KnotRecord(name="empty")
