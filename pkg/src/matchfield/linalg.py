"""Exact sparse linear algebra over the rationals.

Rank is computed by sparse Gaussian elimination: unit pivots are preferred
(they keep all arithmetic in the integers), and any rows left without a unit
entry fall back to elimination over exact fractions. No floating point
anywhere; rank decisions are tolerance-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

SparseMatrix = dict[int, dict[int, int]]  # row -> {col: value}


def rank(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Exact rank of a sparse matrix given as an iterable of row dicts."""
    work = [dict(r) for r in rows if r]
    rk = 0
    residue: list[dict] = []
    while work:
        work.sort(key=len, reverse=True)
        piv = work.pop()
        unit = next(((c, v) for c, v in piv.items() if v in (1, -1)), None)
        if unit is None:
            residue.append(piv)
            continue
        col, val = unit
        rk += 1
        reduced = []
        for row in work:
            if col in row:
                f = row[col] * val  # val in {1, -1}
                new = {}
                for c, v in row.items():
                    nv = v - f * piv.get(c, 0)
                    if nv:
                        new[c] = nv
                for c, v in piv.items():
                    if c not in row:
                        nv = -f * v
                        if nv:
                            new[c] = nv
                if new:
                    reduced.append(new)
            else:
                reduced.append(row)
        work = reduced
    while residue:
        piv = residue.pop()
        if not piv:
            continue
        rk += 1
        col, val = next(iter(piv.items()))
        reduced = []
        for row in residue:
            if col in row:
                f = Fraction(row[col], 1) / val
                new = {}
                for c, v in row.items():
                    nv = v - f * piv.get(c, 0)
                    if nv:
                        new[c] = nv
                for c, v in piv.items():
                    if c not in row:
                        nv = -f * v
                        if nv:
                            new[c] = nv
                if new:
                    reduced.append(new)
            else:
                reduced.append(row)
        residue = reduced
    return rk


@dataclass(frozen=True)
class ChainComplexQ:
    """A chain complex of rational vector spaces with sparse boundary maps.

    dims[d] is the dimension in homological degree d; boundaries[d] is the
    matrix of the map from degree d to degree d - 1 (row -> {col: value}),
    for 1 <= d < len(dims). boundaries[0] is ignored and may be empty.
    """

    dims: tuple[int, ...]
    boundaries: tuple[SparseMatrix, ...]

    def __post_init__(self):
        if len(self.boundaries) != len(self.dims):
            raise ValueError("need one boundary slot per degree")

    def d_squared_is_zero(self) -> bool:
        """Compose consecutive boundaries symbolically and test for zero."""
        for d in range(2, len(self.dims)):
            upper = self.boundaries[d]
            lower = self.boundaries[d - 1]
            cols_upper: dict[int, dict[int, int]] = {}
            for row, entries in upper.items():
                for col, v in entries.items():
                    cols_upper.setdefault(col, {})[row] = v
            for col, mid in cols_upper.items():
                acc: dict[int, Fraction | int] = {}
                for midrow, v in mid.items():
                    for out, w in lower.get(midrow, {}).items():
                        acc[out] = acc.get(out, 0) + v * w
                if any(acc.values()):
                    return False
        return True

    def homology_dims(self) -> tuple[int, ...]:
        """dim H_d = dims[d] - rank(d_d) - rank(d_{d+1})."""
        ranks = [0] * (len(self.dims) + 1)
        for d in range(1, len(self.dims)):
            ranks[d] = rank(self.boundaries[d].values())
        return tuple(
            self.dims[d] - ranks[d] - ranks[d + 1]
            for d in range(len(self.dims))
        )


def homology_ranks(complex_: ChainComplexQ) -> tuple[int, ...]:
    """Per-degree homology dimensions of a chain complex with d^2 = 0."""
    if not complex_.d_squared_is_zero():
        raise ValueError("boundary maps do not compose to zero")
    return complex_.homology_dims()
