"""Exact polynomial arithmetic over Q in a positively weighted graded ring.

Monomials are bare exponent tuples; polynomials keep their terms sorted in
descending weighted-degree-grevlex order, so equal polynomials compare equal
structurally and printing is canonical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import HomogeneityError, ParseError, RingMismatchError

Exps = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


@dataclass(frozen=True)
class GradingSpec:
    """Ambient ring data: variable names and strictly positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) == 0:
            raise ValueError("a ring needs at least one variable")
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights must have the same length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for w in self.weights:
            if w <= 0:
                raise ValueError(f"weights must be positive, got {w}")

    @property
    def n(self) -> int:
        return len(self.names)

    def weighted_degree(self, exps: Exps) -> int:
        return sum(w * e for w, e in zip(self.weights, exps))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def variable(self, i: int) -> "Polynomial":
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for {self.n} variables")
        exps = tuple(1 if j == i else 0 for j in range(self.n))
        return Polynomial(self, {exps: Fraction(1)})

    def variables(self) -> tuple["Polynomial", ...]:
        return tuple(self.variable(i) for i in range(self.n))

    def __str__(self) -> str:
        return ",".join(self.names) + " weights " + ",".join(str(w) for w in self.weights)


def grevlex_key(weights: tuple[int, ...], exps: Exps):
    """Sort key for weighted-degree grevlex: bigger key means bigger monomial."""
    deg = sum(w * e for w, e in zip(weights, exps))
    return (deg, tuple(-e for e in reversed(exps)))


# -- exponent-tuple helpers -------------------------------------------------

def mono_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exps, b: Exps) -> bool:
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Exps, b: Exps) -> Exps:
    """Exponent vector of x^a / x^b; requires divisibility."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ValueError(f"{b} does not divide {a}")
    return out


def mono_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Exps, b: Exps) -> Exps:
    return tuple(min(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class HomogeneityReport:
    """Whether a polynomial is homogeneous for the ring's weights.

    The zero polynomial counts as homogeneous with no specific degree.
    """

    is_homogeneous: bool
    degree: int | None


class Polynomial:
    """Immutable polynomial with Fraction coefficients.

    ``terms`` is a tuple of (exponent tuple, coefficient) pairs sorted in
    descending weighted grevlex order with no zero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GradingSpec, coeffs: Mapping[Exps, Fraction] | Iterable[tuple[Exps, Fraction]]):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        merged: dict[Exps, Fraction] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != ring.n:
                raise ValueError(f"exponent tuple {exps} has wrong length for {ring.n} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = Fraction(c)
            if c:
                acc = merged.get(exps, Fraction(0)) + c
                if acc:
                    merged[exps] = acc
                elif exps in merged:
                    del merged[exps]
        weights = ring.weights
        object.__setattr__(self, "ring", ring)
        object.__setattr__(
            self,
            "terms",
            tuple(sorted(merged.items(), key=lambda t: grevlex_key(weights, t[0]), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, ring: GradingSpec) -> "Polynomial":
        return cls(ring, {})

    @classmethod
    def constant(cls, ring: GradingSpec, c) -> "Polynomial":
        return cls(ring, {tuple(0 for _ in range(ring.n)): Fraction(c)})

    @classmethod
    def monomial(cls, ring: GradingSpec, exps: Exps, c=1) -> "Polynomial":
        return cls(ring, {tuple(exps): Fraction(c)})

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e, _ in self.terms)

    def is_monomial(self) -> bool:
        """Single term (any coefficient)."""
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[0][1]

    def homogeneity(self) -> HomogeneityReport:
        if not self.terms:
            return HomogeneityReport(True, None)
        degs = {self.ring.weighted_degree(e) for e, _ in self.terms}
        if len(degs) == 1:
            return HomogeneityReport(True, degs.pop())
        return HomogeneityReport(False, None)

    def degree(self) -> int | None:
        """Weighted degree of the leading term; None for zero."""
        if not self.terms:
            return None
        return self.ring.weighted_degree(self.terms[0][0])

    # -- arithmetic ----------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"operands live in different rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return Polynomial(self.ring, acc)

    def __radd__(self, other):
        if other == 0:  # so sum() works
            return self
        return self.__add__(other)

    def __neg__(self):
        return Polynomial(self.ring, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.__add__(-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Polynomial(self.ring, [(e, c * k) for e, k in self.terms])
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        acc: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.ring, acc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = Polynomial.constant(self.ring, 1)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, i: int) -> "Polynomial":
        """Partial derivative with respect to the i-th variable."""
        if not 0 <= i < self.ring.n:
            raise IndexError(f"variable index {i} out of range")
        acc = []
        for e, c in self.terms:
            if e[i] > 0:
                de = tuple(x - 1 if j == i else x for j, x in enumerate(e))
                acc.append((de, c * e[i]))
        return Polynomial(self.ring, acc)

    # -- structural ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def _term_str(self, exps: Exps, coeff: Fraction, lead: bool) -> str:
        parts = []
        for name, e in zip(self.ring.names, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        mono = "*".join(parts)
        mag = abs(coeff)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if lead:
            return body if coeff > 0 else "-" + body
        return (" + " if coeff > 0 else " - ") + body

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "".join(self._term_str(e, c, i == 0) for i, (e, c) in enumerate(self.terms))

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def euler_identity_holds(p: Polynomial) -> bool:
    """Check sum_i w_i * x_i * dp/dx_i == deg(p) * p for homogeneous p."""
    report = p.homogeneity()
    if not report.is_homogeneous:
        raise HomogeneityError(f"euler check needs a homogeneous polynomial, got {p}")
    if p.is_zero():
        return True
    ring = p.ring
    total = Polynomial.zero(ring)
    for i in range(ring.n):
        total = total + ring.variable(i) * p.partial(i) * ring.weights[i]
    return total == p * report.degree


# -- text grammar -----------------------------------------------------------
#
# poly   := [sign] term ((+|-) term)*
# term   := factor (* factor)*
# factor := INT [/ INT] | NAME [^ INT]
#
# Products need an explicit '*'; juxtaposition like "2x" is a parse error.

class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_int(self) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise ParseError(f"expected an integer at position {self.pos} in {self.text!r}", column=self.pos)
        self.pos += m.end()
        return int(m.group())

    def take_name(self) -> str:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            raise ParseError(f"expected a variable name at position {self.pos} in {self.text!r}", column=self.pos)
        self.pos = m.end()
        return m.group()


def parse_polynomial(ring: GradingSpec, text: str) -> Polynomial:
    """Parse the package's polynomial grammar, e.g. ``3/2*x^2*y - z^3``."""
    sc = _Scanner(text)
    acc: dict[Exps, Fraction] = {}
    sign = Fraction(1)
    ch = sc.peek()
    if ch in "+-":
        sc.pos += 1
        sign = Fraction(-1) if ch == "-" else Fraction(1)
    while True:
        exps, coeff = _parse_term(ring, sc)
        coeff *= sign
        acc[exps] = acc.get(exps, Fraction(0)) + coeff
        ch = sc.peek()
        if ch == "":
            break
        if ch not in "+-":
            raise ParseError(f"unexpected {ch!r} at position {sc.pos} in {text!r}", column=sc.pos)
        sign = Fraction(-1) if ch == "-" else Fraction(1)
        sc.pos += 1
    return Polynomial(ring, acc)


def _parse_term(ring: GradingSpec, sc: _Scanner) -> tuple[Exps, Fraction]:
    exps = [0] * ring.n
    coeff = Fraction(1)
    while True:
        ch = sc.peek()
        if ch.isdigit():
            num = sc.take_int()
            if sc.peek() == "/":
                sc.pos += 1
                den = sc.take_int()
                if den == 0:
                    raise ParseError("zero denominator in coefficient", column=sc.pos)
                coeff *= Fraction(num, den)
            else:
                coeff *= num
        elif _NAME_RE.match(ch or ""):
            name = sc.take_name()
            try:
                i = ring.index(name)
            except KeyError:
                raise ParseError(f"unknown variable {name!r}", column=sc.pos) from None
            e = 1
            if sc.peek() == "^":
                sc.pos += 1
                e = sc.take_int()
            exps[i] += e
        else:
            raise ParseError(f"expected a factor at position {sc.pos}", column=sc.pos)
        if sc.peek() == "*":
            sc.pos += 1
            continue
        break
    return tuple(exps), coeff
