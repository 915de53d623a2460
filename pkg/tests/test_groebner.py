"""Groebner engine: reduced bases, membership, intersection, colon, syzygies."""

from fractions import Fraction
from random import Random

import pytest

from golodkit import (
    GradingSpec,
    Ideal,
    Polynomial,
    colon,
    contains,
    intersect,
    module_syzygies,
    parse_polynomial,
    saturate,
    syzygies,
)
from golodkit.ring import grevlex_key, mono_div, mono_divides, mono_lcm

from conftest import oracle_member, random_homogeneous


def _lead(p: Polynomial):
    return p.terms[0]


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    (ef, cf), (eg, cg) = _lead(f), _lead(g)
    l = mono_lcm(ef, eg)
    mf = Polynomial.monomial(f.ring, mono_div(l, ef), Fraction(1) / cf)
    mg = Polynomial.monomial(g.ring, mono_div(l, eg), Fraction(1) / cg)
    return mf * f - mg * g


def _top_reduce(p: Polynomial, basis) -> Polynomial:
    """Independent long division: repeatedly cancel the lead term."""
    changed = True
    while not p.is_zero() and changed:
        changed = False
        e, c = _lead(p)
        for g in basis:
            eg, cg = _lead(g)
            if mono_divides(eg, e):
                p = p - g * Polynomial.monomial(p.ring, mono_div(e, eg), c / cg)
                changed = True
                break
    return p


def test_reduced_basis_shape(r2):
    I = Ideal.from_strings(r2, ["x^2 + y^2", "x*y"])
    gb = I.groebner_basis()
    leads = [_lead(g)[0] for g in gb]
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i != j:
                assert not mono_divides(a, b)
    for g in gb:
        assert _lead(g)[1] == 1
    # terms of each element are sorted strictly descending in grevlex
    for g in gb:
        keys = [grevlex_key(r2.weights, e) for e, _ in g.terms]
        assert keys == sorted(keys, reverse=True)


def test_every_spolynomial_reduces_to_zero(r3):
    rng = Random(17)
    for trial in range(8):
        gens = [random_homogeneous(r3, rng.randint(2, 3), rng) for _ in range(3)]
        gb = Ideal(r3, gens).groebner_basis()
        for i in range(len(gb)):
            for j in range(i + 1, len(gb)):
                assert _top_reduce(_spoly(gb[i], gb[j]), gb).is_zero()


def test_membership_against_degreewise_oracle(r3):
    rng = Random(23)
    for trial in range(6):
        gens = [random_homogeneous(r3, rng.randint(2, 3), rng) for _ in range(2)]
        I = Ideal(r3, gens)
        for d in (2, 3, 4):
            for _ in range(4):
                f = random_homogeneous(r3, d, rng)
                assert I.contains_poly(f) == oracle_member(I, f)
        # explicit members built from the generators
        f = gens[0] * random_homogeneous(r3, 1, rng)
        assert I.contains_poly(f)
        assert oracle_member(I, f)


def test_normal_form_is_linear_and_idempotent(r2):
    I = Ideal.from_strings(r2, ["x^2 - y^2"])
    f = parse_polynomial(r2, "x^3")
    nf = I.normal_form(f).remainder
    assert I.normal_form(nf).remainder == nf
    g = parse_polynomial(r2, "x*y^2")
    lhs = I.normal_form(f + g).remainder
    rhs = nf + I.normal_form(g).remainder
    assert lhs == rhs


def test_intersection_of_principal_ideals(r2):
    I = Ideal.from_strings(r2, ["x"])
    J = Ideal.from_strings(r2, ["y"])
    assert intersect(I, J) == Ideal.from_strings(r2, ["x*y"])


def test_intersection_matches_double_membership(r3):
    rng = Random(31)
    I = Ideal.from_strings(r3, ["x^2", "y*z"])
    J = Ideal.from_strings(r3, ["x*y", "z^2"])
    M = intersect(I, J)
    for d in (2, 3, 4):
        for _ in range(6):
            f = random_homogeneous(r3, d, rng)
            assert M.contains_poly(f) == (I.contains_poly(f) and J.contains_poly(f))


def test_colon_definition_on_samples(r3):
    rng = Random(41)
    I = Ideal.from_strings(r3, ["x^2*y", "y^2*z"])
    J = Ideal.from_strings(r3, ["x*y", "y*z"])
    Q = colon(I, J)
    for d in (1, 2, 3):
        for _ in range(6):
            f = random_homogeneous(r3, d, rng)
            belongs = all(I.contains_poly(f * g) for g in J.generators)
            assert Q.contains_poly(f) == belongs


def test_saturation_by_variable(r2):
    I = Ideal.from_strings(r2, ["x^2*y", "x^3*y^3"])
    res = saturate(I, Ideal.from_strings(r2, ["x"]))
    assert res.ideal == Ideal.from_strings(r2, ["y"])
    assert res.exponent == 2
    # saturating again is a fixed point
    again = saturate(res.ideal, Ideal.from_strings(r2, ["x"]))
    assert again.ideal == res.ideal and again.exponent == 0


def test_contains_whole_ideal(r2):
    big = Ideal.from_strings(r2, ["x", "y"])
    small = Ideal.from_strings(r2, ["x^2 + y^2", "x*y"])
    assert contains(big, small)
    assert not contains(small, big)


def test_syzygies_annihilate_generators(r3):
    gens = [parse_polynomial(r3, t) for t in ("x*y", "y*z", "x*z")]
    for s in syzygies(Ideal(r3, gens)):
        acc = Polynomial(r3, {})
        for coef, g in zip(s, gens):
            acc = acc + coef * g
        assert acc.is_zero()


def test_module_syzygies_on_koszul_pair(r2):
    x = parse_polynomial(r2, "x")
    y = parse_polynomial(r2, "y")
    columns = [[x], [y]]
    syz = module_syzygies(columns, r2)
    assert syz
    for s in syz:
        acc = Polynomial(r2, {})
        for coef, g in zip(s, [x, y]):
            acc = acc + coef * g
        assert acc.is_zero()
    # the Koszul relation (y, -x) spans; every syzygy is a multiple of it
    for s in syz:
        assert s[0] * (-x) == s[1] * y


def test_unit_ideal_detection(r2):
    I = Ideal.from_strings(r2, ["x^2 + y^2", "x^2 - y^2", "x*y"])
    # contains all of (x,y)^2, hence proper
    assert I.is_proper()
    J = Ideal.from_strings(r2, ["x", "y", "x + y - x"])
    assert J.is_proper()
    U = Ideal.from_strings(r2, ["x - x + 1"])
    assert not U.is_proper()


def test_groebner_cache_consistency(r2):
    I = Ideal.from_strings(r2, ["x^2", "x*y"])
    gb1 = I.groebner_basis()
    gb2 = I.groebner_basis()
    assert gb1 is gb2
    f = parse_polynomial(r2, "x^2*y^5")
    assert I.contains_poly(f)
