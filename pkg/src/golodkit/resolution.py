"""Minimal graded free resolutions over the polynomial ring.

The resolution of S/I is built by iterating syzygy computations, then
minimized by clearing unit entries with exact row and column operations.
Betti numbers are read off the shifts of the minimized complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import HomogeneityError, ImproperIdealError
from .groebner import Ideal, MonomialOrder, module_syzygies
from .ring import GradingSpec, Polynomial

Matrix = list[list[Polynomial]]


@dataclass(frozen=True)
class Resolution:
    """Chain of free modules F_0 <- F_1 <- ... with homogeneous matrices.

    steps[i] is the matrix of F_{i+1} -> F_i (rows indexed by F_i);
    shifts[i] lists the generator degrees of F_i, so shifts[0] == (0,).
    """

    ring: GradingSpec
    steps: tuple[tuple[tuple[Polynomial, ...], ...], ...]
    shifts: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def rank(self, i: int) -> int:
        return len(self.shifts[i])


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers b_{i,d} as a sparse map."""

    entries: dict[tuple[int, int], int]

    def max_homological(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def max_shift(self) -> int:
        return max((d for _, d in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(c for (j, _), c in self.entries.items() if j == i)

    def to_json_obj(self):
        return [
            {"i": i, "d": d, "rank": self.entries[(i, d)]}
            for i, d in sorted(self.entries)
        ]

    def __str__(self):
        """Aligned grid: row t, column i holds b_{i, i+t}."""
        imax = self.max_homological()
        rows = sorted({d - i for i, d in self.entries})
        cols = list(range(imax + 1))
        grid = [["total:"] + [str(self.total(i)) for i in cols]]
        for t in rows:
            line = [f"{t}:"]
            for i in cols:
                c = self.entries.get((i, i + t), 0)
                line.append(str(c) if c else ".")
            grid.append(line)
        header = [" "] + [str(i) for i in cols]
        grid.insert(0, header)
        widths = [max(len(r[c]) for r in grid) for c in range(len(cols) + 1)]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in grid
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _is_unit(p: Polynomial) -> bool:
    return p.is_constant() and not p.is_zero()


def _column_degree(ring, col, row_shifts) -> int:
    deg = None
    for r, entry in enumerate(col):
        if entry.is_zero():
            continue
        rep = entry.homogeneity()
        if not rep.is_homogeneous:
            raise HomogeneityError("inhomogeneous matrix entry in a resolution")
        d = rep.degree + row_shifts[r]
        if deg is None:
            deg = d
        elif deg != d:
            raise HomogeneityError("matrix column fails to be homogeneous")
    if deg is None:
        raise HomogeneityError("zero syzygy column")
    return deg


def _trim_generators(I: Ideal) -> list[Polynomial]:
    """Minimal generating subset, scanned in (degree, leading term) order."""
    order = MonomialOrder.grevlex(I.ring)
    gens = sorted(
        I.generators,
        key=lambda g: (g.homogeneity().degree, order.key(g.terms[0][0])),
    )
    kept: list[Polynomial] = []
    for g in gens:
        if kept and Ideal(I.ring, kept).contains_poly(g):
            continue
        kept.append(g)
    return kept


def _compose_is_zero(A: Matrix, B: Matrix, ring) -> bool:
    zero = Polynomial.zero(ring)
    for r in range(len(A)):
        for c in range(len(B[0]) if B else 0):
            acc = zero
            for t in range(len(B)):
                if not A[r][t].is_zero() and not B[t][c].is_zero():
                    acc = acc + A[r][t] * B[t][c]
            if not acc.is_zero():
                return False
    return True


def _minimize(mats: list[Matrix], shifts: list[list[int]], ring):
    """Clear unit entries by graded row/column operations, in place.

    Clearing the pivot row uses column operations, which act on the next
    matrix as row operations; clearing the pivot column then only touches
    single entries and acts on the previous matrix as column operations.
    Exactness forces the freed row and column of the neighbors to vanish.
    """
    changed = True
    while changed:
        changed = False
        for i in range(len(mats)):
            M = mats[i]
            pivot = next(
                ((r, c) for r in range(len(M)) for c in range(len(M[0]) if M else 0)
                 if _is_unit(M[r][c])),
                None,
            )
            if pivot is None:
                continue
            changed = True
            r, c = pivot
            lam = M[r][c].constant_value()
            ncols = len(M[0])
            nrows = len(M)
            nxt = mats[i + 1] if i + 1 < len(mats) else None
            prv = mats[i - 1] if i > 0 else None
            for c2 in range(ncols):
                if c2 == c or M[r][c2].is_zero():
                    continue
                q = M[r][c2] * (Fraction(1) / lam)
                for t in range(nrows):
                    if not M[t][c].is_zero():
                        M[t][c2] = M[t][c2] - q * M[t][c]
                if nxt is not None and nxt:
                    for w in range(len(nxt[0])):
                        if not nxt[c2][w].is_zero():
                            nxt[c][w] = nxt[c][w] + q * nxt[c2][w]
            for r2 in range(nrows):
                if r2 == r or M[r2][c].is_zero():
                    continue
                q = M[r2][c] * (Fraction(1) / lam)
                M[r2][c] = Polynomial.zero(ring)
                if prv is not None and prv:
                    for w in range(len(prv)):
                        if not prv[w][r2].is_zero():
                            prv[w][r] = prv[w][r] + q * prv[w][r2]
            if prv is not None and prv:
                assert all(prv[w][r].is_zero() for w in range(len(prv))), (
                    "exactness should clear the freed column")
            if nxt is not None and nxt:
                assert all(e.is_zero() for e in nxt[c]), (
                    "exactness should clear the freed row")
            # delete basis element r of F_i and c of F_{i+1}
            for row in M:
                del row[c]
            del M[r]
            if prv is not None:
                for row in prv:
                    del row[r]
            if nxt is not None and nxt:
                del nxt[c]
            del shifts[i][r]
            del shifts[i + 1][c]


def minimal_free_resolution(I: Ideal) -> Resolution:
    """Minimal graded free resolution of S/I."""
    if not I.is_homogeneous:
        raise HomogeneityError("resolutions need a homogeneous ideal")
    if not I.is_proper():
        raise ImproperIdealError("S/I vanishes for the unit ideal")
    ring = I.ring
    if I.is_zero():
        return Resolution(ring, (), ((0,),))

    gens = _trim_generators(I)
    columns: list[tuple[Polynomial, ...]] = [(g,) for g in gens]
    shifts: list[list[int]] = [[0], [g.homogeneity().degree for g in gens]]
    mats: list[Matrix] = [[list(gens)]]

    while True:
        syz = module_syzygies(columns, ring)
        if not syz:
            break
        degs = [_column_degree(ring, col, shifts[-1]) for col in syz]
        order = sorted(range(len(syz)), key=lambda t: degs[t])
        syz = [syz[t] for t in order]
        degs = [degs[t] for t in order]
        mats.append([[syz[c][r] for c in range(len(syz))] for r in range(len(shifts[-1]))])
        shifts.append(list(degs))
        columns = syz

    _minimize(mats, shifts, ring)
    while mats and not shifts[len(mats)]:
        mats.pop()

    for i in range(len(mats) - 1):
        assert _compose_is_zero(mats[i], mats[i + 1], ring), "composition must vanish"
    for M in mats:
        assert not any(_is_unit(e) for row in M for e in row), "resolution not minimal"
    assert len(mats) <= ring.n, "length exceeds the number of variables"

    steps = tuple(tuple(tuple(row) for row in M) for M in mats)
    return Resolution(ring, steps, tuple(tuple(s) for s in shifts[: len(mats) + 1]))


def betti_table(res: Resolution) -> BettiTable:
    entries: dict[tuple[int, int], int] = {}
    for i, degs in enumerate(res.shifts):
        for d in degs:
            entries[(i, d)] = entries.get((i, d), 0) + 1
    return BettiTable(entries)
