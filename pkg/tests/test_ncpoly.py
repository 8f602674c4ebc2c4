import pytest
from hypothesis import given

from qlorentz.matrix import Matrix
from qlorentz.ncpoly import NCPoly, Rule, RewriteSystem
from qlorentz.scalars import ONE, ZERO, Q, q_pow

from strategies import coordinate_polys

X, Y = NCPoly.gen("x"), NCPoly.gen("y")


def test_zero_coefficients_are_dropped():
    p = X * Y - X * Y
    assert p.is_zero() and not p.terms


def test_concatenation_product():
    assert (X + Y) * X == NCPoly.word("x", "x") + NCPoly.word("y", "x")


def test_commutative_rewrite_sorts_words():
    system = RewriteSystem([Rule(("y", "x"), X * Y)])
    assert system(Y * X * Y * X) == NCPoly.word("x", "x", "y", "y")


def test_q_commutation_collects_powers():
    system = RewriteSystem([Rule(("y", "x"), q_pow(2) * (X * Y))])
    assert system(Y * Y * X) == q_pow(4) * NCPoly.word("x", "y", "y")


def test_confluence_detects_inconsistent_rules():
    assert RewriteSystem([Rule(("y", "x"), X * Y)]).confluence(3).ok
    # y(xx) -> yx -> xy + 1 but (yx)x -> xy + 2x
    bad = RewriteSystem([Rule(("y", "x"), X * Y + NCPoly.const(ONE)), Rule(("x", "x"), X)])
    rep = bad.confluence(3)
    assert not rep.ok
    assert any(p.overlap == ("y", "x", "x") for p in rep.unresolved)


def test_substitute_and_degree():
    p = X * Y + NCPoly.const(Q)
    assert p.degree() == 2
    assert p.substitute({"y": NCPoly.const(ONE)}) == X + NCPoly.const(Q)


def test_display_groups_powers_and_signs():
    p = NCPoly.word("Z", "Z") - (q_pow(1) - q_pow(-1)) * NCPoly.word("X0", "X3")
    assert str(p) == "Z^2 - (q - q^-1)*X0*X3"
    assert str(NCPoly()) == "0"


@given(coordinate_polys(), coordinate_polys())
def test_addition_is_commutative(a, b):
    assert a + b == b + a


@given(coordinate_polys(), coordinate_polys(), coordinate_polys())
def test_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_matrix_inverse_and_rank():
    m = Matrix.from_rows([[ONE, Q], [ZERO, q_pow(2)]])
    assert m @ m.inverse() == Matrix.identity(2)
    assert Matrix.from_rows([[ONE, Q], [ONE, Q]]).rank() == 1
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows([[ONE, Q], [ONE, Q]]).inverse()


def test_matrix_kron_shape():
    k = Matrix.identity(2).kron(Matrix.identity(3))
    assert k.shape == (6, 6) and k == Matrix.identity(6)


def test_leading_negative_term_prints_with_minus_sign():
    from qlorentz.parsing import parse_expression

    for text in ("-Z + 1", "-q^2*Z", "-(q - q^-1)*X0*Z + X3"):
        assert str(parse_expression(text)) == text
