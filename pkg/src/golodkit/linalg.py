"""Sparse exact linear algebra over Q.

Vectors are dicts mapping column index -> nonzero Fraction.  The workhorse is
TrackedSpan, an incremental row space in echelon form that can report, for a
dependent vector, the exact combination of previously added vectors it equals.
"""

from __future__ import annotations

from fractions import Fraction

Vec = dict[int, Fraction]


def vec_axpy(target: Vec, factor: Fraction, src: Vec) -> None:
    """target += factor * src, dropping entries that cancel to zero."""
    if not factor:
        return
    for k, v in src.items():
        acc = target.get(k, Fraction(0)) + factor * v
        if acc:
            target[k] = acc
        elif k in target:
            del target[k]


def vec_scale(v: Vec, factor: Fraction) -> Vec:
    return {k: factor * c for k, c in v.items()}


class TrackedSpan:
    """Incremental span of sparse rational vectors with combination tracking.

    add() reduces the vector against the current echelon basis.  Independent
    vectors extend the basis; for a dependent one it returns the combination
    (over the indices of all vectors added so far) that reproduces it, which
    is exactly a kernel vector of the column matrix.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[Vec, Vec]] = {}  # pivot col -> (row, expression)
        self.count = 0

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: Vec) -> tuple[Vec, Vec]:
        residual = dict(vec)
        combo: Vec = {}
        while residual:
            col = min(residual)
            hit = self.pivots.get(col)
            if hit is None:
                break
            row, expr = hit
            factor = residual[col]
            vec_axpy(residual, -factor, row)
            vec_axpy(combo, factor, expr)
        return residual, combo

    def add(self, vec: Vec) -> Vec | None:
        """Insert a vector; return its combination over prior adds if dependent."""
        idx = self.count
        self.count += 1
        residual, combo = self._reduce(vec)
        if not residual:
            kernel = {idx: Fraction(1)}
            vec_axpy(kernel, Fraction(-1), combo)
            # kernel describes 0 == vec_idx - combo, i.e. a null combination
            return kernel
        col = min(residual)
        norm = residual[col]
        inv = Fraction(1) / norm
        row = vec_scale(residual, inv)
        expr: Vec = {idx: inv}
        vec_axpy(expr, -inv, combo)
        self.pivots[col] = (row, expr)
        return None

    def contains(self, vec: Vec) -> bool:
        residual, _ = self._reduce(vec)
        return not residual

    def residual(self, vec: Vec) -> Vec:
        return self._reduce(vec)[0]


def kernel_of_columns(columns: list[Vec]) -> list[Vec]:
    """Basis of null combinations of the given columns (coefficients over column index)."""
    span = TrackedSpan()
    out = []
    for col in columns:
        combo = span.add(col)
        if combo is not None:
            out.append(combo)
    return out


def rank_of_columns(columns: list[Vec]) -> int:
    span = TrackedSpan()
    for col in columns:
        span.add(col)
    return span.dim
