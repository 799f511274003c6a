"""Block diagonal matching fields: the distinguished column for every 3-subset.

A column (i, j, k) encodes the generator x_i * y_j * z_k. For the partition's
blocks, the smallest block meeting a 3-subset decides whether the two smallest
elements swap between the x and y rows.
"""

from __future__ import annotations

import itertools
from typing import Iterable, NamedTuple

from .monomials import Monomial, Partition


class Column(NamedTuple):
    """Ordered triple (i, j, k): the generator x_i * y_j * z_k."""

    i: int
    j: int
    k: int

    @property
    def subset(self) -> frozenset[int]:
        return frozenset((self.i, self.j, self.k))

    def monomial(self, n: int) -> Monomial:
        exps = [0] * (3 * n)
        exps[self.i - 1] += 1
        exps[n + self.j - 1] += 1
        exps[2 * n + self.k - 1] += 1
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"


class ColumnType(NamedTuple):
    """Block indices (I, J, K) of a column's entries; J <= I <= K always."""

    I: int
    J: int
    K: int


def column_for_subset(subset: Iterable[int], a: Partition) -> Column:
    """The matching field's column for a 3-subset of [n].

    With i < j < k the sorted elements and s the smallest block index meeting
    the subset: the column is (j, i, k) when the subset meets B_s in a single
    element, and (i, j, k) otherwise.
    """
    elems = sorted(set(subset))
    if len(elems) != 3:
        raise ValueError(f"need a 3-subset, got {sorted(subset)}")
    i, j, k = elems
    if not (1 <= i and k <= a.n):
        raise ValueError(f"subset {elems} not within [1, {a.n}]")
    s = a.block_of(i)
    hits = sum(1 for e in elems if a.block_of(e) == s)
    return Column(j, i, k) if hits == 1 else Column(i, j, k)


def is_valid_column(c: Column, a: Partition) -> bool:
    """True iff the entries are distinct and the column is the matching
    field's choice for its underlying subset."""
    if len({c.i, c.j, c.k}) != 3:
        return False
    if not all(1 <= e <= a.n for e in (c.i, c.j, c.k)):
        return False
    return column_for_subset(c.subset, a) == Column(*c)


def generators(a: Partition) -> tuple[Column, ...]:
    """All binom(n, 3) columns, keyed by sorted 3-subset."""
    if a.n < 3:
        raise ValueError(f"need n >= 3, got n = {a.n}")
    return tuple(
        column_for_subset(sub, a)
        for sub in itertools.combinations(range(1, a.n + 1), 3)
    )


def type_of(c: Column, a: Partition) -> ColumnType:
    """Block indices of the column's entries."""
    if not is_valid_column(c, a):
        raise ValueError(f"invalid column {c} for partition {a}")
    t = ColumnType(a.block_of(c.i), a.block_of(c.j), a.block_of(c.k))
    assert t.J <= t.I <= t.K
    return t
