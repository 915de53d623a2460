"""Polynomial arithmetic, grading, and the parser."""

from fractions import Fraction

import pytest

from golodkit import GradingSpec, ParseError, Polynomial, parse_polynomial


def test_grading_spec_validation():
    with pytest.raises(ValueError):
        GradingSpec((), ())
    with pytest.raises(ValueError):
        GradingSpec(("x", "x"), (1, 1))
    with pytest.raises(ValueError):
        GradingSpec(("x", "y"), (1, 0))
    with pytest.raises(ValueError):
        GradingSpec(("x",), (1, 2))


def test_parse_round_trip(r3):
    texts = ["x^2*y - 3*z^3", "x*y*z", "1/2*x^2 + y^2", "-x + y", "0"]
    for t in texts:
        p = parse_polynomial(r3, t)
        again = parse_polynomial(r3, str(p))
        assert p == again


def test_parse_rejects_garbage(r2):
    for bad in ["x +", "q", "x^", "2**x", "x^-1", "(x"]:
        with pytest.raises(ParseError):
            parse_polynomial(r2, bad)


def test_arithmetic_identities(r2):
    x = parse_polynomial(r2, "x")
    y = parse_polynomial(r2, "y")
    assert (x + y) * (x - y) == parse_polynomial(r2, "x^2 - y^2")
    assert (x + y) ** 2 == parse_polynomial(r2, "x^2 + 2*x*y + y^2")
    assert x - x == Polynomial(r2, {})
    assert (x * y).is_monomial()
    assert not (x + y).is_monomial()


def test_terms_sorted_grevlex_descending(r2):
    p = parse_polynomial(r2, "y^2 + x*y + x^2 + x + 1")
    degs = [r2.weighted_degree(e) for e, _ in p.terms]
    assert degs == sorted(degs, reverse=True)
    # within degree 2, grevlex puts x^2 before x*y before y^2
    assert [e for e, _ in p.terms[:3]] == [(2, 0), (1, 1), (0, 2)]


def test_weighted_homogeneity(rw):
    # y has weight 2, so x^4 - y^2 is homogeneous of degree 4
    p = parse_polynomial(rw, "x^4 - y^2")
    rep = p.homogeneity()
    assert rep.is_homogeneous and rep.degree == 4
    q = parse_polynomial(rw, "x + y")
    assert not q.homogeneity().is_homogeneous


def test_partial_derivatives(r2):
    p = parse_polynomial(r2, "x^3*y^2 + 2*x*y")
    assert p.partial(0) == parse_polynomial(r2, "3*x^2*y^2 + 2*y")
    assert p.partial(1) == parse_polynomial(r2, "2*x^3*y + 2*x")
    assert parse_polynomial(r2, "y^2").partial(0).is_zero()


def test_coefficients_stay_exact(r2):
    p = parse_polynomial(r2, "1/3*x + 1/6*y")
    q = p + p
    coeffs = dict(q.terms)
    assert coeffs[(1, 0)] == Fraction(2, 3)
    assert coeffs[(0, 1)] == Fraction(1, 3)


def test_string_form_is_canonical(r3):
    a = parse_polynomial(r3, "z*y + x^2")
    b = parse_polynomial(r3, "x^2 + y*z")
    assert str(a) == str(b)
