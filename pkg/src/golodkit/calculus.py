"""The strongly Golod predicate and the ideal calculus around it.

An ideal I is strongly Golod when the square of its derivative ideal lies
back inside I; over a field of characteristic zero this forces the quotient
ring to be Golod.  This module decides the predicate with an explicit
witness on failure and implements the constructions that preserve it:
powers, symbolic and saturated powers, colon ideals under the stabilization
condition I : J = I : J^2, and sums with powers of a containing prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from random import Random

from .errors import ContainmentError, HomogeneityError, ImproperIdealError
from .groebner import Ideal, colon, contains, saturate
from .ring import GradingSpec, Polynomial, mono_divides


@dataclass(frozen=True)
class DerivativePairWitness:
    """Two derivative-ideal generators whose product escapes the ideal."""

    left: Polynomial
    right: Polynomial
    remainder: Polynomial


@dataclass(frozen=True)
class MonomialQuotientWitness:
    """Generators u, v and variable positions i, j with u*v/(x_i*x_j) outside the ideal."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    i: int
    j: int
    quotient: tuple[int, ...]


@dataclass(frozen=True)
class StronglyGolodReport:
    verdict: bool
    witness: DerivativePairWitness | MonomialQuotientWitness | None = None


def maximal_ideal(ring: GradingSpec) -> Ideal:
    return Ideal(ring, list(ring.variables()))


def derivative_ideal(I: Ideal) -> Ideal:
    """Ideal generated by all partial derivatives of the stored generators."""
    if not I.is_proper():
        raise ImproperIdealError("derivative ideal is only defined for proper ideals")
    gens: list[Polynomial] = []
    seen = set()
    for g in I.generators:
        for i in range(I.ring.n):
            p = g.partial(i)
            if p.is_zero() or p.terms in seen:
                continue
            seen.add(p.terms)
            gens.append(p)
    return Ideal(I.ring, gens)


def strongly_golod(I: Ideal) -> StronglyGolodReport:
    """Decide whether the square of the derivative ideal lies in I.

    Products of the derivative ideal's generators suffice, since they
    generate the square.  The zero ideal passes vacuously; the unit ideal is
    rejected.  On failure the first offending pair is reported together with
    the nonzero normal form of its product.
    """
    if not I.is_homogeneous:
        raise HomogeneityError("the strongly Golod predicate needs a homogeneous ideal")
    if not I.is_proper():
        raise ImproperIdealError("the unit ideal is outside the predicate's domain")
    dgens = derivative_ideal(I).generators
    for a in range(len(dgens)):
        for b in range(a, len(dgens)):
            nf = I.normal_form(dgens[a] * dgens[b])
            if not nf.is_member:
                witness = DerivativePairWitness(dgens[a], dgens[b], nf.remainder)
                return StronglyGolodReport(False, witness)
    return StronglyGolodReport(True)


def power(I: Ideal, k: int) -> Ideal:
    """Ordinary power I^k, generated by k-fold products of the generators."""
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    if I.is_zero():
        return Ideal(I.ring, [])
    gens = []
    seen = set()
    for combo in combinations_with_replacement(I.generators, k):
        p = Polynomial.constant(I.ring, 1)
        for f in combo:
            p = p * f
        if p.terms not in seen:
            seen.add(p.terms)
            gens.append(p)
    return Ideal(I.ring, gens)


def _is_monomial_ideal(I: Ideal) -> bool:
    return all(g.is_monomial() for g in I.generators)


@dataclass(frozen=True)
class SymbolicPowerSpec:
    """Which notion of k-th symbolic power to compute.

    mode 'saturated'  : I^k : m^infinity (saturation at the irrelevant ideal)
    mode 'user'       : I^k : L^infinity for a caller-supplied ideal L
    mode 'squarefree' : intersection of P^k over the minimal primes, for
                        squarefree monomial ideals only
    """

    k: int
    mode: str = "saturated"
    L: Ideal | None = None

    def __post_init__(self):
        if self.mode not in ("saturated", "user", "squarefree"):
            raise ValueError(f"unknown symbolic power mode {self.mode!r}")
        if self.k < 1:
            raise ValueError("symbolic power exponent must be at least 1")
        if self.mode == "user" and self.L is None:
            raise ValueError("mode 'user' needs the ideal L")


@dataclass(frozen=True)
class SymbolicPowerResult:
    ideal: Ideal
    exponent: int | None  # stabilization exponent when a saturation ran


def saturated_power(I: Ideal, k: int) -> SymbolicPowerResult:
    """I^k : m^infinity.  Monomial inputs take the combinatorial route."""
    if _is_monomial_ideal(I) and not I.is_zero():
        from . import monomial

        mi = monomial.MonomialIdeal.from_ideal(I)
        sat, exponent = monomial.saturate_at_irrelevant(mi.power(k))
        return SymbolicPowerResult(sat.to_ideal(), exponent)
    res = saturate(power(I, k), maximal_ideal(I.ring))
    return SymbolicPowerResult(res.ideal, res.exponent)


def symbolic_power(I: Ideal, spec: SymbolicPowerSpec) -> SymbolicPowerResult:
    if spec.mode == "saturated":
        return saturated_power(I, spec.k)
    if spec.mode == "user":
        res = saturate(power(I, spec.k), spec.L)
        return SymbolicPowerResult(res.ideal, res.exponent)
    # squarefree monomial route
    from . import monomial

    if not _is_monomial_ideal(I):
        raise ValueError("mode 'squarefree' needs a monomial ideal")
    mi = monomial.MonomialIdeal.from_ideal(I)
    if not mi.is_squarefree():
        raise ValueError("mode 'squarefree' needs a squarefree monomial ideal")
    return SymbolicPowerResult(monomial.squarefree_symbolic_power(mi, spec.k).to_ideal(), None)


def check_colon_condition(I: Ideal, J: Ideal) -> bool:
    """The stabilization I : J = I : J^2 that makes I : J inherit strong Golodness."""
    return colon(I, J) == colon(I, power(J, 2))


def add_prime_power(I: Ideal, P: Ideal, k: int) -> Ideal:
    """I + P^k for a prime P containing I (primality is the caller's assertion).

    When I is strongly Golod its derivative ideal must already sit inside P;
    that containment is checked here and a failure usually means P was not
    prime after all.
    """
    if k < 2:
        raise ValueError("prime power exponent must be at least 2")
    if not contains(P, I):
        raise ContainmentError("I is not contained in P")
    if strongly_golod(I).verdict and not contains(P, derivative_ideal(I)):
        raise ContainmentError(
            "derivative ideal of a strongly Golod I escapes P; P is likely not prime"
        )
    return Ideal(I.ring, list(I.generators) + list(power(P, k).generators))


def zariski_nagata_membership(f: Polynomial, P: Ideal, k: int) -> bool:
    """Differential membership test for the k-th symbolic power of a prime.

    f lies in P^(k) exactly when every iterated partial derivative of f of
    order below k lies in P.  P's primality is the caller's assertion.
    """
    if k < 1:
        raise ValueError("symbolic power exponent must be at least 1")
    frontier = {(): f}
    for order in range(k):
        for g in frontier.values():
            if not P.contains_poly(g):
                return False
        if order == k - 1:
            break
        nxt: dict[tuple[int, ...], Polynomial] = {}
        for idx, g in frontier.items():
            start = idx[-1] if idx else 0
            for i in range(start, f.ring.n):
                key = idx + (i,)
                if key not in nxt:
                    nxt[key] = g.partial(i)
        frontier = nxt
    return True


@dataclass(frozen=True)
class SandwichReport:
    """Result of testing strong Golodness for an ideal between I^k and I^(k)."""

    verdict: bool
    hypothesis_holds: bool


def sandwich_check(I: Ideal, J: Ideal, k: int, sym_k: Ideal, sym_km1: Ideal) -> SandwichReport:
    """Check J for strong Golodness given I^k <= J <= I^(k).

    The caller supplies the k-th and (k-1)-st symbolic powers.  When the
    hypothesis (I^(k-1))^2 <= I^k holds and J really is sandwiched, the
    verdict is forced to be true; that implication is asserted.
    """
    Ik = power(I, k)
    hypothesis = contains(Ik, power(sym_km1, 2))
    sandwiched = contains(J, Ik) and contains(sym_k, J)
    verdict = sandwiched and strongly_golod(J).verdict
    if hypothesis and sandwiched:
        assert verdict, "sandwiched ideal failed the predicate despite the hypothesis"
    return SandwichReport(verdict, hypothesis)


# -- fixed corpus ---------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ideal: Ideal
    description: str
    monomial: bool
    closure_sweep: bool  # eligible for the power / saturated-power sweeps


_R2 = GradingSpec(("x", "y"), (1, 1))
_R3 = GradingSpec(("x", "y", "z"), (1, 1, 1))
_R4 = GradingSpec(("x", "y", "z", "w"), (1, 1, 1, 1))
_RW = GradingSpec(("x", "y"), (1, 2))


def _entry(name, ring, texts, description, monomial, sweep=True) -> CorpusEntry:
    return CorpusEntry(name, Ideal.from_strings(ring, texts), description, monomial, sweep)


def _minimalize_exps(vecs: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out = []
    for v in sorted(set(vecs), key=lambda t: (sum(t), t)):
        if not any(mono_divides(u, v) for u in out):
            out.append(v)
    return out


def _random_monomial_entry(rng: Random, idx: int, ring: GradingSpec) -> CorpusEntry:
    n = ring.n
    vecs: list[tuple[int, ...]] = []
    # pure powers in all but the last variable keep the quotient small while
    # leaving the last variable free, so saturated powers stay proper
    for i in range(n - 1):
        e = [0] * n
        e[i] = rng.randint(2, 4)
        vecs.append(tuple(e))
    for _ in range(rng.randint(1, 2)):
        while True:
            e = [0] * n
            for _ in range(rng.randint(2, 4)):
                e[rng.randrange(n)] += 1
            if sum(e) >= 2 and e[: n - 1] != [0] * (n - 1):
                vecs.append(tuple(e))
                break
    gens = [Polynomial.monomial(ring, e) for e in _minimalize_exps(vecs)]
    return CorpusEntry(
        f"seeded-monomial-{idx}",
        Ideal(ring, gens),
        f"seeded random monomial ideal in {n} variables",
        True,
        True,
    )


def _random_poly_entry(rng: Random, idx: int, ring: GradingSpec, degrees: list[int]) -> CorpusEntry:
    n = ring.n
    coeff_pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-1, 2)]

    def random_form(d: int) -> Polynomial:
        # homogeneous of degree d with no pure power of the last variable,
        # which pins the ideal under the prime of the other variables
        while True:
            acc: dict[tuple[int, ...], Fraction] = {}
            for _ in range(rng.randint(2, 3)):
                e = [0] * n
                for _ in range(d):
                    e[rng.randrange(n)] += 1
                if e[: n - 1] == [0] * (n - 1):
                    continue
                acc[tuple(e)] = rng.choice(coeff_pool)
            if acc:
                return Polynomial(ring, acc)

    gens = [random_form(d) for d in degrees]
    return CorpusEntry(
        f"seeded-poly-{idx}",
        Ideal(ring, gens),
        f"seeded random homogeneous ideal in {n} variables",
        False,
        True,
    )


def builtin_corpus() -> tuple[CorpusEntry, ...]:
    """Deterministic study corpus: named landmark ideals plus seeded random ones."""
    entries = [
        _entry(
            "product-counterexample",
            _R3,
            ["x*z", "y*z"],
            "product of (x,y) and (z); fails the predicate with witness z^2",
            monomial=True,
        ),
        _entry(
            "square-of-maximal",
            _R2,
            ["x^2", "x*y", "y^2"],
            "square of the irrelevant maximal ideal in 2 variables",
            monomial=True,
            sweep=False,  # saturated powers collapse to the unit ideal
        ),
        _entry(
            "ci-control",
            _R2,
            ["x^2", "y^2"],
            "complete intersection control: Golod bound is strict",
            monomial=True,
            sweep=False,
        ),
        _entry(
            "principal-quartic",
            _R2,
            ["x^2*y^2"],
            "principal monomial ideal; strongly Golod on its own",
            monomial=True,
        ),
        _entry(
            "triangle-cover",
            _R3,
            ["x*y", "x*z", "y*z"],
            "vertex cover ideal of the 3-cycle",
            monomial=True,
        ),
        _entry(
            "squarefree-4-3",
            _R4,
            ["x*y*z", "x*y*w", "x*z*w", "y*z*w"],
            "all squarefree cubics in 4 variables",
            monomial=True,
        ),
        _entry(
            "weighted-principal",
            _RW,
            ["x^4 - y^2"],
            "principal quasihomogeneous curve under weights 1,2",
            monomial=False,
        ),
    ]
    rng = Random(271828)
    rings = [_R2, _R3, _R4]
    for idx in range(8):
        entries.append(_random_monomial_entry(rng, idx, rings[idx % 3]))
    for idx in range(8):
        ring = rings[idx % 3]
        degrees = [2, 2] if ring.n >= 3 else [rng.randint(2, 3), rng.randint(2, 4)]
        entries.append(_random_poly_entry(rng, idx, ring, degrees))
    return tuple(entries)
