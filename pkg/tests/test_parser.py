import pytest

from qhcurve.parser import ParseError, parse_polynomial, read_polynomial_file
from qhcurve.poly import X0, X1, X2


def test_aliases_and_grammar():
    assert parse_polynomial("x*y - z") == X0 * X1 - X2
    assert parse_polynomial(" ( x0 + 1/2 )^2 ") == X0 ** 2 + X0 + parse_polynomial("1/4")
    assert parse_polynomial("-x1^0") == parse_polynomial("-1")


@pytest.mark.parametrize("bad", ["", "x0 x1", "x3", "x0^", "x0 +", "2/0", "(x0", "x0^-1", "x0**2"])
def test_rejects_bad_input(bad):
    with pytest.raises(ParseError):
        parse_polynomial(bad)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x0 + * x1")
    assert "position" in str(info.value)


def test_read_file_with_comments(tmp_path):
    path = tmp_path / "curve.txt"
    path.write_text("# a cusp\nx0*x2^2   # first term\n - x1^3\n", encoding="utf-8")
    assert read_polynomial_file(path) == X0 * X2 ** 2 - X1 ** 3
