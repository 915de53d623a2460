"""Shared fixtures and independent oracles.

The oracles below deliberately avoid the package's Groebner and linear
algebra machinery: ideal membership is decided degreewise with a local
Gaussian elimination over Fraction, and monomial membership by raw
divisibility.  Tests cross-check the fast implementations against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from random import Random

import pytest

from golodkit import GradingSpec, Ideal, Polynomial


def monomials_of_degree(ring: GradingSpec, d: int) -> list[tuple[int, ...]]:
    """All exponent tuples of weighted degree exactly d, brute force."""
    out = []

    def rec(i, left, acc):
        if i == ring.n:
            if left == 0:
                out.append(tuple(acc))
            return
        w = ring.weights[i]
        for e in range(left // w + 1):
            rec(i + 1, left - w * e, acc + [e])

    rec(0, d, [])
    return out


def _row_reduce(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    rows = [r[:] for r in rows]
    pivots = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        col += 1
    return [row for row in rows if any(x != 0 for x in row)]


def oracle_member(I: Ideal, f: Polynomial) -> bool:
    """Degreewise membership for homogeneous data, no Groebner bases.

    Spans { m*g : g generator, m monomial of complementary degree } in the
    single graded piece containing f and checks membership by elimination.
    """
    if f.is_zero():
        return True
    ring = I.ring
    d = f.homogeneity().degree
    basis = monomials_of_degree(ring, d)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in I.generators:
        dg = g.homogeneity().degree
        if dg > d:
            continue
        for m in monomials_of_degree(ring, d - dg):
            prod = g * Polynomial.monomial(ring, m)
            row = [Fraction(0)] * len(basis)
            for e, c in prod.terms:
                row[index[e]] = c
            rows.append(row)
    reduced = _row_reduce(rows)
    frow = [Fraction(0)] * len(basis)
    for e, c in f.terms:
        frow[index[e]] = c
    for row in reduced:
        lead = next(i for i, x in enumerate(row) if x != 0)
        if frow[lead] != 0:
            f0 = frow[lead]
            frow = [a - f0 * b for a, b in zip(frow, row)]
    return all(x == 0 for x in frow)


def oracle_monomial_member(gens: list[tuple[int, ...]], u: tuple[int, ...]) -> bool:
    return any(all(a <= b for a, b in zip(g, u)) for g in gens)


def random_homogeneous(ring: GradingSpec, degree: int, rng: Random) -> Polynomial:
    monos = monomials_of_degree(ring, degree)
    pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3)]
    coeffs = {}
    for m in monos:
        if rng.random() < 0.6:
            coeffs[m] = rng.choice(pool)
    if not coeffs:
        coeffs[monos[0]] = Fraction(1)
    return Polynomial(ring, coeffs)


def oracle_ideal_powers(gens, k):
    """Exponent vectors spanning the k-th power of a monomial ideal."""
    out = []
    for combo in combinations_with_replacement(gens, k):
        out.append(tuple(sum(col) for col in zip(*combo)))
    return out


@pytest.fixture
def r2():
    return GradingSpec(("x", "y"), (1, 1))


@pytest.fixture
def r3():
    return GradingSpec(("x", "y", "z"), (1, 1, 1))


@pytest.fixture
def r4():
    return GradingSpec(("x", "y", "z", "w"), (1, 1, 1, 1))


@pytest.fixture
def rw():
    return GradingSpec(("x", "y"), (1, 2))
