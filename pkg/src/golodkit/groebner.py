"""Groebner bases over Q and the ideal operations built on them.

One engine handles both ideals and submodules of free modules: an internal
"vector" is a list of ((component, exponents), coefficient) pairs sorted in
descending term order.  Scalar polynomials are the one-component case.
Syzygies come from Schreyer's theorem: S-pair division syzygies of a reduced
basis, translated back to the caller's generators through the tracked
representation matrix.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    HomogeneityError,
    RingMismatchError,
    SaturationLimitError,
    ZeroColonError,
)
from .ring import (
    Exps,
    GradingSpec,
    Polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class MonomialOrder:
    """Weighted-degree grevlex, or a block order eliminating the first k variables."""

    __slots__ = ("kind", "grading", "block")

    def __init__(self, kind: str, grading: GradingSpec, block: int = 0):
        if kind not in ("grevlex", "elimination"):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.grading = grading
        self.block = block

    @classmethod
    def grevlex(cls, grading: GradingSpec) -> "MonomialOrder":
        return cls("grevlex", grading)

    @classmethod
    def elimination(cls, grading: GradingSpec, k: int) -> "MonomialOrder":
        if not 0 < k < grading.n:
            raise ValueError("elimination block must be a proper nonempty prefix")
        return cls("elimination", grading, k)

    def key(self, exps: Exps):
        w = self.grading.weights
        if self.kind == "grevlex":
            return (
                sum(wi * e for wi, e in zip(w, exps)),
                tuple(-e for e in reversed(exps)),
            )
        k = self.block
        head, tail = exps[:k], exps[k:]
        return (
            sum(wi * e for wi, e in zip(w[:k], head)),
            tuple(-e for e in reversed(head)),
            sum(wi * e for wi, e in zip(w[k:], tail)),
            tuple(-e for e in reversed(tail)),
        )


# -- internal vector representation ------------------------------------------
#
# ModTerm = (component, exps); ModVec = list[(ModTerm, Fraction)] sorted
# descending by (order.key(exps), -component).

ModTerm = tuple[int, Exps]
ModVec = list[tuple[ModTerm, Fraction]]


def _term_key(order: MonomialOrder, t: ModTerm):
    return (order.key(t[1]), -t[0])


def _to_internal(vec: Sequence[Polynomial], order: MonomialOrder) -> ModVec:
    items = []
    for comp, p in enumerate(vec):
        for e, c in p.terms:
            items.append(((comp, e), c))
    items.sort(key=lambda it: _term_key(order, it[0]), reverse=True)
    return items


def _from_internal(mv: ModVec, ring: GradingSpec, ncomp: int) -> tuple[Polynomial, ...]:
    per: list[dict[Exps, Fraction]] = [dict() for _ in range(ncomp)]
    for (comp, e), c in mv:
        per[comp][e] = c
    return tuple(Polynomial(ring, d) for d in per)


def _scale(mv: ModVec, factor: Fraction) -> ModVec:
    return [(t, factor * c) for t, c in mv]


def _sub_scaled(a: ModVec, b: ModVec, shift: Exps, coeff: Fraction, order: MonomialOrder) -> ModVec:
    """a - coeff * x^shift * b, all kept sorted."""
    out: ModVec = []
    i = j = 0
    while i < len(a) and j < len(b):
        tb = (b[j][0][0], mono_mul(b[j][0][1], shift))
        ka = _term_key(order, a[i][0])
        kb = _term_key(order, tb)
        if ka > kb:
            out.append(a[i])
            i += 1
        elif kb > ka:
            out.append((tb, -coeff * b[j][1]))
            j += 1
        else:
            v = a[i][1] - coeff * b[j][1]
            if v:
                out.append((a[i][0], v))
            i += 1
            j += 1
    out.extend(a[i:])
    while j < len(b):
        tb = (b[j][0][0], mono_mul(b[j][0][1], shift))
        out.append((tb, -coeff * b[j][1]))
        j += 1
    return out


# quotient-polynomial dicts (Exps -> Fraction), used for representations

def _dp_axpy(target: dict, factor: Fraction, shift: Exps | None, src: dict) -> None:
    for e, c in src.items():
        key = mono_mul(e, shift) if shift is not None else e
        acc = target.get(key, Fraction(0)) + factor * c
        if acc:
            target[key] = acc
        elif key in target:
            del target[key]


class _Engine:
    """Buchberger machinery for one order / component count."""

    def __init__(self, order: MonomialOrder, ncomp: int, ninputs: int, track: bool):
        self.order = order
        self.ncomp = ncomp
        self.ninputs = ninputs
        self.track = track
        self.leads: list[ModTerm] = []
        self.polys: list[ModVec] = []
        self.reps: list[list[dict]] = []  # rep[i] = coefficients over input vectors

    def nf(self, vec: ModVec, rep: list[dict] | None = None) -> tuple[ModVec, list[dict] | None]:
        """Full normal form against the current basis; mutates rep in place."""
        rem: ModVec = []
        work = vec
        while work:
            (comp, exps), c = work[0]
            hit = -1
            for bi, (lcomp, lexps) in enumerate(self.leads):
                if lcomp == comp and mono_divides(lexps, exps):
                    hit = bi
                    break
            if hit < 0:
                rem.append(work[0])
                work = work[1:]
                continue
            shift = mono_div(exps, self.leads[hit][1])
            work = _sub_scaled(work, self.polys[hit], shift, c, self.order)
            if rep is not None:
                for k in range(self.ninputs):
                    _dp_axpy(rep[k], -c, shift, self.reps[hit][k])
        return rem, rep

    def nf_quotients(self, vec: ModVec) -> tuple[ModVec, list[dict]]:
        """Normal form recording the quotient on each basis element."""
        quots: list[dict] = [dict() for _ in self.polys]
        rem: ModVec = []
        work = vec
        while work:
            (comp, exps), c = work[0]
            hit = -1
            for bi, (lcomp, lexps) in enumerate(self.leads):
                if lcomp == comp and mono_divides(lexps, exps):
                    hit = bi
                    break
            if hit < 0:
                rem.append(work[0])
                work = work[1:]
                continue
            shift = mono_div(exps, self.leads[hit][1])
            work = _sub_scaled(work, self.polys[hit], shift, c, self.order)
            quots[hit][shift] = quots[hit].get(shift, Fraction(0)) + c
        return rem, quots

    def _push_pairs(self, heap, pending, new_idx: int):
        lc, le = self.leads[new_idx]
        for i in range(new_idx):
            ic, ie = self.leads[i]
            if ic != lc:
                continue
            lcm = mono_lcm(ie, le)
            # product criterion, sound for the one-component (ideal) case only
            if self.ncomp == 1 and lcm == mono_mul(ie, le):
                continue
            heapq.heappush(heap, (self.order.key(lcm), lc, i, new_idx, lcm))
            pending.add((i, new_idx))

    def add_input(self, vec: ModVec, rep: list[dict], heap, pending):
        rem, rep = self.nf(vec, rep if self.track else None)
        if not rem:
            return
        lead_c = rem[0][1]
        rem = _scale(rem, Fraction(1) / lead_c)
        if self.track:
            inv = Fraction(1) / lead_c
            rep = [{e: inv * c for e, c in d.items()} for d in rep]
        self.leads.append(rem[0][0])
        self.polys.append(rem)
        self.reps.append(rep if self.track else [])
        self._push_pairs(heap, pending, len(self.polys) - 1)

    def run(self, inputs: list[ModVec]):
        heap: list = []
        pending: set[tuple[int, int]] = set()
        for idx, vec in enumerate(inputs):
            rep = [dict() for _ in range(self.ninputs)]
            if self.track:
                rep[idx][tuple(0 for _ in range(self.order.grading.n))] = Fraction(1)
            self.add_input(vec, rep, heap, pending)
        while heap:
            _, comp, i, j, lcm = heapq.heappop(heap)
            pending.discard((i, j))
            if self._chain_skip(i, j, comp, lcm, pending):
                continue
            svec, srep = self._spair(i, j, lcm)
            rem, srep = self.nf(svec, srep if self.track else None)
            if not rem:
                continue
            lead_c = rem[0][1]
            rem = _scale(rem, Fraction(1) / lead_c)
            if self.track:
                inv = Fraction(1) / lead_c
                srep = [{e: inv * c for e, c in d.items()} for d in srep]
            self.leads.append(rem[0][0])
            self.polys.append(rem)
            self.reps.append(srep if self.track else [])
            self._push_pairs(heap, pending, len(self.polys) - 1)
        self._reduce_basis()

    def _chain_skip(self, i: int, j: int, comp: int, lcm: Exps, pending) -> bool:
        for k, (kc, ke) in enumerate(self.leads):
            if k == i or k == j or kc != comp:
                continue
            if not mono_divides(ke, lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending and b not in pending:
                return True
        return False

    def _spair(self, i: int, j: int, lcm: Exps):
        si = mono_div(lcm, self.leads[i][1])
        sj = mono_div(lcm, self.leads[j][1])
        shifted = [((c, mono_mul(e, si)), v) for (c, e), v in self.polys[i]]
        svec = _sub_scaled(shifted, self.polys[j], sj, Fraction(1), self.order)
        srep = None
        if self.track:
            srep = [dict() for _ in range(self.ninputs)]
            for k in range(self.ninputs):
                _dp_axpy(srep[k], Fraction(1), si, self.reps[i][k])
                _dp_axpy(srep[k], Fraction(-1), sj, self.reps[j][k])
        return svec, srep

    def _reduce_basis(self):
        # drop elements whose lead is divisible by another surviving lead
        order_idx = sorted(range(len(self.polys)), key=lambda i: _term_key(self.order, self.leads[i]))
        keep: list[int] = []
        for i in order_idx:
            ci, ei = self.leads[i]
            if any(self.leads[k][0] == ci and mono_divides(self.leads[k][1], ei) for k in keep):
                continue
            keep.append(i)
        leads = [self.leads[i] for i in keep]
        polys = [self.polys[i] for i in keep]
        reps = [self.reps[i] for i in keep]
        # interreduce tails; leads are already pairwise irreducible
        for i in range(len(polys)):
            self.leads = leads[:i] + leads[i + 1:]
            self.polys = polys[:i] + polys[i + 1:]
            self.reps = reps[:i] + reps[i + 1:]
            rep_i = [dict(d) for d in reps[i]] if self.track else None
            rem, rep_i = self.nf(polys[i], rep_i)
            assert rem, "basis element reduced to zero during interreduction"
            polys[i] = rem
            if self.track:
                reps[i] = rep_i
        self.leads, self.polys, self.reps = leads, polys, reps


def _run_engine(vectors: list[ModVec], order: MonomialOrder, ncomp: int, track: bool) -> _Engine:
    eng = _Engine(order, ncomp, len(vectors), track)
    eng.run(vectors)
    return eng


# -- public ideal layer -------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    remainder: Polynomial
    is_member: bool


@dataclass(frozen=True)
class SaturationResult:
    ideal: "Ideal"
    exponent: int  # least t with I : J^t equal to the saturation


class Ideal:
    """Finitely generated ideal of a weighted polynomial ring over Q."""

    __slots__ = ("ring", "generators", "_gb", "_nf_eng")

    def __init__(self, ring: GradingSpec, generators: Sequence[Polynomial]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError("generator lives in a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: tuple[Polynomial, ...] | None = None
        self._nf_eng: _Engine | None = None

    @classmethod
    def from_strings(cls, ring: GradingSpec, texts: Sequence[str]) -> "Ideal":
        from .ring import parse_polynomial

        return cls(ring, [parse_polynomial(ring, t) for t in texts])

    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(g.homogeneity().is_homogeneous for g in self.generators)

    def groebner_basis(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        """Reduced Groebner basis; cached for the ring's default grevlex order."""
        if order is None:
            if self._gb is None:
                self._gb = self._compute_gb(MonomialOrder.grevlex(self.ring))
            return self._gb
        return self._compute_gb(order)

    def _compute_gb(self, order: MonomialOrder) -> tuple[Polynomial, ...]:
        vecs = [_to_internal([g], order) for g in self.generators]
        eng = _run_engine(vecs, order, 1, track=False)
        polys = [_from_internal(mv, self.ring, 1)[0] for mv in eng.polys]
        return tuple(polys)

    def _set_gb_cache(self, gb: tuple[Polynomial, ...]):
        self._gb = gb

    def _nf_engine(self) -> _Engine:
        if self._nf_eng is None:
            order = MonomialOrder.grevlex(self.ring)
            eng = _Engine(order, 1, 0, track=False)
            for g in self.groebner_basis():
                mv = _to_internal([g], order)
                eng.leads.append(mv[0][0])
                eng.polys.append(mv)
                eng.reps.append([])
            self._nf_eng = eng
        return self._nf_eng

    def normal_form(self, p: Polynomial) -> NormalForm:
        if p.ring != self.ring:
            raise RingMismatchError("polynomial lives in a different ring")
        eng = self._nf_engine()
        rem, _ = eng.nf(_to_internal([p], eng.order))
        r = _from_internal(rem, self.ring, 1)[0]
        return NormalForm(r, r.is_zero())

    def contains_poly(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_member

    def is_proper(self) -> bool:
        gb = self.groebner_basis()
        return not any(g.is_constant() and not g.is_zero() for g in gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner_basis() == other.groebner_basis()

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({gens})"


def normal_form(p: Polynomial, I: Ideal) -> NormalForm:
    return I.normal_form(p)


def contains(big: Ideal, small: Ideal) -> bool:
    """Whether every generator of ``small`` lies in ``big``."""
    if big.ring != small.ring:
        raise RingMismatchError("ideals live in different rings")
    return all(big.contains_poly(g) for g in small.generators)


def _fresh_name(ring: GradingSpec, base: str = "t") -> str:
    if base not in ring.names:
        return base
    i = 0
    while f"{base}{i}" in ring.names:
        i += 1
    return f"{base}{i}"


def _extend_ring(ring: GradingSpec) -> tuple[GradingSpec, MonomialOrder]:
    name = _fresh_name(ring)
    ext = GradingSpec((name,) + ring.names, (1,) + ring.weights)
    return ext, MonomialOrder.elimination(ext, 1)


def _lift(p: Polynomial, ext: GradingSpec) -> Polynomial:
    return Polynomial(ext, {(0,) + e: c for e, c in p.terms})


def _drop(p: Polynomial, ring: GradingSpec) -> Polynomial:
    assert all(e[0] == 0 for e, _ in p.terms)
    return Polynomial(ring, {e[1:]: c for e, c in p.terms})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via a single elimination variable: eliminate t from t*I + (1-t)*J."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    ext, order = _extend_ring(ring)
    t = ext.variable(0)
    one_minus_t = Polynomial.constant(ext, 1) - t
    gens = [t * _lift(f, ext) for f in I.generators]
    gens += [one_minus_t * _lift(g, ext) for g in J.generators]
    vecs = [_to_internal([g], order) for g in gens]
    eng = _run_engine(vecs, order, 1, track=False)
    kept = []
    for mv in eng.polys:
        p = _from_internal(mv, ext, 1)[0]
        if all(e[0] == 0 for e, _ in p.terms):
            kept.append(_drop(p, ring))
    out = Ideal(ring, kept)
    # the t-free part of the reduced elimination basis is itself a reduced
    # grevlex basis of the intersection, so cache it
    out._set_gb_cache(tuple(kept))
    return out


def _exact_div(p: Polynomial, f: Polynomial) -> Polynomial:
    """p / f when the division is exact; raises if a remainder appears."""
    assert not f.is_zero()
    order = MonomialOrder.grevlex(p.ring)
    lc = f.terms[0][1]
    eng = _Engine(order, 1, 0, track=False)
    mv = _to_internal([f * (Fraction(1) / lc)], order)
    eng.leads.append(mv[0][0])
    eng.polys.append(mv)
    eng.reps.append([])
    rem, quots = eng.nf_quotients(_to_internal([p], order))
    assert not rem, f"{f} does not divide {p}"
    q = Polynomial(p.ring, quots[0])
    return q * (Fraction(1) / lc)


def colon(I: Ideal, J: Ideal) -> Ideal:
    """I : J, computed as the intersection of I : f over the generators f of J."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    if J.is_zero():
        raise ZeroColonError("colon by the zero ideal is undefined")
    result: Ideal | None = None
    for f in J.generators:
        meet = intersect(I, Ideal(I.ring, [f]))
        quot = Ideal(I.ring, [_exact_div(g, f) for g in meet.generators])
        result = quot if result is None else intersect(result, quot)
    assert result is not None
    return result


SATURATION_CAP = 64


def saturate(I: Ideal, J: Ideal, cap: int = SATURATION_CAP) -> SaturationResult:
    """I : J^infinity by iterating colons until the chain stabilizes."""
    current = I
    exponent = 0
    for step in range(cap):
        nxt = colon(current, J)
        if nxt == current:
            return SaturationResult(current, exponent)
        current = nxt
        exponent = step + 1
    raise SaturationLimitError(
        f"saturation did not stabilize within {cap} colon iterations"
    )


# -- syzygies -----------------------------------------------------------------

def module_syzygies(columns: Sequence[Sequence[Polynomial]], ring: GradingSpec) -> list[tuple[Polynomial, ...]]:
    """Generating set of the syzygy module of the given column vectors.

    Returns rows s with sum_j s[j] * columns[j] == 0 (componentwise, exactly).
    Schreyer's construction: division syzygies of all S-pairs of a reduced
    basis G, pulled back along G = T * columns, plus the rows of I - Q * T
    where columns = Q * G.
    """
    cols = [tuple(col) for col in columns]
    if not cols:
        return []
    ncomp = len(cols[0])
    for col in cols:
        if len(col) != ncomp:
            raise ValueError("columns must all have the same length")
        for p in col:
            if p.ring != ring:
                raise RingMismatchError("column entry lives in a different ring")
    if all(p.is_zero() for col in cols for p in col):
        # zero columns are killed by the standard basis rows
        out = []
        for i in range(len(cols)):
            row = [Polynomial.zero(ring) for _ in cols]
            row[i] = Polynomial.constant(ring, 1)
            out.append(tuple(row))
        return out
    order = MonomialOrder.grevlex(ring)
    vecs = [_to_internal(col, order) for col in cols]
    eng = _run_engine(vecs, order, ncomp, track=True)
    G = eng.polys
    T = eng.reps  # T[g][i]: coefficient of input i in basis element g
    rows: list[tuple[Polynomial, ...]] = []

    nf_eng = _Engine(order, ncomp, 0, track=False)
    nf_eng.leads = list(eng.leads)
    nf_eng.polys = list(G)
    nf_eng.reps = [[] for _ in G]

    def emit(s_over_G: list[dict]):
        # translate a syzygy of G into one of the input columns
        row = [dict() for _ in cols]
        for g_idx, coeff_poly in enumerate(s_over_G):
            if not coeff_poly:
                continue
            for e, c in coeff_poly.items():
                for i in range(len(cols)):
                    _dp_axpy(row[i], c, e, T[g_idx][i])
        polys = tuple(Polynomial(ring, d) for d in row)
        if any(not p.is_zero() for p in polys):
            rows.append(polys)

    # Schreyer division syzygies over all same-component S-pairs of G
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            ca, ea = eng.leads[a]
            cb, eb = eng.leads[b]
            if ca != cb:
                continue
            lcm = mono_lcm(ea, eb)
            sa = mono_div(lcm, ea)
            sb = mono_div(lcm, eb)
            shifted = [((c, mono_mul(e, sa)), v) for (c, e), v in G[a]]
            svec = _sub_scaled(shifted, G[b], sb, Fraction(1), order)
            rem, quots = nf_eng.nf_quotients(svec)
            assert not rem, "S-pair of a Groebner basis failed to reduce to zero"
            s = [dict() for _ in G]
            s[a][sa] = s[a].get(sa, Fraction(0)) + Fraction(1)
            s[b][sb] = s[b].get(sb, Fraction(0)) - Fraction(1)
            for g_idx, q in enumerate(quots):
                for e, c in q.items():
                    cur = s[g_idx].get(e, Fraction(0)) - c
                    if cur:
                        s[g_idx][e] = cur
                    elif e in s[g_idx]:
                        del s[g_idx][e]
            emit(s)

    # rows of I - Q*T
    for i, vec in enumerate(vecs):
        rem, quots = nf_eng.nf_quotients(vec)
        assert not rem, "input column is not in the module it generates"
        row = [dict() for _ in cols]
        row[i][tuple(0 for _ in range(ring.n))] = Fraction(1)
        for g_idx, q in enumerate(quots):
            for e, c in q.items():
                for k in range(len(cols)):
                    _dp_axpy(row[k], -c, e, T[g_idx][k])
        polys = tuple(Polynomial(ring, d) for d in row)
        if any(not p.is_zero() for p in polys):
            rows.append(polys)
    return rows


def syzygies(I: Ideal) -> list[tuple[Polynomial, ...]]:
    """Syzygy rows of the stored generators of a homogeneous ideal."""
    if not I.is_homogeneous:
        raise HomogeneityError("syzygies require homogeneous generators")
    if not I.generators:
        return []
    return module_syzygies([[g] for g in I.generators], I.ring)
