from fractions import Fraction

import pytest
from hypothesis import given

from permideal.algebra import Polynomial, Ring
from permideal.cli import ParseError, main, parse_poly, parse_poly_list

from conftest import polys

R33 = Ring.of(3, 3)
R33_F5 = Ring.of(3, 3, 5)


@given(f=polys(R33, max_terms=5, max_exp=3, with_t=True))
def test_round_trip_rationals(f):
    assert parse_poly(f.to_text(), R33) == f


@given(f=polys(R33_F5, max_terms=5, max_exp=3, with_t=True))
def test_round_trip_prime_field(f):
    assert parse_poly(f.to_text(), R33_F5) == f


def test_parse_examples():
    x = R33.x
    assert parse_poly("x[1,1]*x[2,2] + x[1,2]*x[2,1]", R33) == x(1, 1) * x(2, 2) + x(1, 2) * x(2, 1)
    f = parse_poly("3/2*x[1,1]^2", R33)
    assert f == Polynomial(R33, {R33.unit_exps(0, 2): Fraction(3, 2)})
    assert parse_poly(" x[ 1 , 1 ]*t^2-  7 ", R33) == x(1, 1) * R33.t() ** 2 - 7
    assert parse_poly("0", R33).is_zero()
    assert parse_poly("4*x[1,1]", R33_F5) == -R33_F5.x(1, 1)


@pytest.mark.parametrize("text,col", [
    ("x[5,1]", 1),
    ("x[1,1] + x[3,0]", 10),
    ("x[1,1]/x[2,2]", 7),
    ("1/0", 3),
    ("x[1,1] *", 9),
    ("x[1,1] x[2,2]", 8),
    ("x[1,1] % 2", 8),
    ("", 1),
])
def test_parse_errors_carry_position(text, col):
    with pytest.raises(ParseError) as info:
        parse_poly(text, R33)
    assert (info.value.line, info.value.col) == (1, col)


def test_poly_list_reports_line():
    with pytest.raises(ParseError) as info:
        parse_poly_list("x[1,1]\n# comment\n\nx[1,1]*x[9,9]\n", R33)
    assert info.value.line == 4
    assert len(parse_poly_list("x[1,1]  # first\n\nx[2,2]\n", R33)) == 2


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--m", "4", "--n", "4") == (0, "gb=180\ncomponents=44\ngap-length=17\n", "")


def test_member_false(capsys):
    code, out, _ = run(capsys, "member", "--m", "3", "--n", "3", "--poly", "x[1,1]*x[2,2]*x[3,3]", "--ideal", "perm2")
    assert (code, out) == (0, "false\n")


def test_radical_member_and_nf(capsys):
    assert run(capsys, "radical-member", "--poly", "x[1,1]*x[2,2]*x[3,3]", "--ideal", "perm2")[:2] == (0, "true\n")
    assert run(capsys, "nf", "--poly", "x[1,1]*x[2,3]*x[1,2]", "--ideal", "perm2")[:2] == (0, "0\n")


def test_gb_family_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "gb", "--m", "2", "--n", "3", "--family", "perm2")
    assert code == 0 and len(out.splitlines()) == 5
    src = tmp_path / "gens.txt"
    src.write_text("\n".join(out.splitlines()[::-1]) + "\n")
    dest = tmp_path / "gb.txt"
    assert run(capsys, "gb", "--m", "2", "--n", "3", "--file", str(src), "--out", str(dest))[0] == 0
    assert dest.read_text() == out


def test_gb_order_transpose(capsys):
    a = run(capsys, "gb", "--m", "3", "--n", "4", "--family", "perm2")[1]
    b = run(capsys, "gb", "--m", "3", "--n", "4", "--family", "perm2", "--order", "diag-lex-T")[1]
    assert len(a.splitlines()) == len(b.splitlines()) == 66 and a != b


def test_intersect(capsys):
    code, out, _ = run(capsys, "intersect", "--m", "2", "--n", "3", "--a", "I1", "--b", "I3")
    perm = run(capsys, "gb", "--m", "2", "--n", "3", "--family", "perm2")[1]
    assert code == 0 and out == perm


def test_primes_and_decompose(capsys):
    code, out, _ = run(capsys, "primes")
    assert code == 0 and len(out.splitlines()) == 15
    assert all(line.endswith("height=6") for line in out.splitlines())
    code, out, _ = run(capsys, "decompose", "--m", "2", "--n", "3")
    assert code == 0 and "[I2] undefined" in out and "[components] 5 minimal primes" in out


@pytest.mark.parametrize("argv", [
    ["member", "--poly", "x[5,1]", "--ideal", "perm2"],
    ["count", "--field", "fp:4"],
    ["count", "--m", "1"],
    ["bogus"],
    ["member", "--poly", "x[1,1]"],
    ["verify", "--checks", "gb.equality,nope"],
    ["gb", "--file", "/nonexistent/gens.txt"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "gb", "--m", "4", "--n", "4", "--family", "radical", "--budget-ms", "1")
    assert code == 3 and "budget" in err


def test_verify_filter_and_text(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "gb.equality,gap.module", "--format", "text")
    assert code == 0 and len(out.splitlines()) == 3
    assert run(capsys, "verify", "--list")[1].splitlines()[0] == "gb.equality"


def test_verify_exit_one_on_failure(capsys, monkeypatch):
    from permideal import verify

    def broken(cfg):
        return verify.CheckResult("gb.equality", "", expected="a", actual="b")

    monkeypatch.setitem(verify.CHECKS, "gb.equality", broken)
    code, out, _ = run(capsys, "verify", "--checks", "gb.equality")
    assert code == 1 and '"status": "fail"' in out
