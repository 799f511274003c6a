"""Tableaux over a matching field, their enumeration, and the generator order.

A tableau is a sequence of valid columns; its monomial is the product of the
column generators. A monomial of degree 3*ell may be represented by several
tableaux; the total order below compares tableaux row-wise and orders the
power ideal's generators through their minimal ("canonical") representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .matching import Column, is_valid_column
from .monomials import Monomial, Partition

_CANON_CACHE: dict[tuple, "Tableau"] = {}


@dataclass(frozen=True)
class Tableau:
    """A concatenation of columns, all valid for one fixed partition."""

    columns: tuple[Column, ...]

    @property
    def ell(self) -> int:
        return len(self.columns)

    def monomial(self, n: int) -> Monomial:
        m = Monomial.one(n)
        for c in self.columns:
            m = m * c.monomial(n)
        return m

    def i_row(self) -> tuple[int, ...]:
        return tuple(c.i for c in self.columns)

    def j_row(self) -> tuple[int, ...]:
        return tuple(c.j for c in self.columns)

    def k_row(self) -> tuple[int, ...]:
        return tuple(c.k for c in self.columns)

    def type_rows(self, a: Partition) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """Block-index rows (I, J, K)."""
        return (
            tuple(a.block_of(c.i) for c in self.columns),
            tuple(a.block_of(c.j) for c in self.columns),
            tuple(a.block_of(c.k) for c in self.columns),
        )

    def is_valid(self, a: Partition) -> bool:
        return all(is_valid_column(c, a) for c in self.columns)

    def to_json(self) -> list[list[int]]:
        return [list(c) for c in self.columns]

    def __str__(self) -> str:
        return "".join(str(c) for c in self.columns)


def _column_sort_key(c: Column) -> tuple[int, int, int]:
    # canonical display order inside a representation: by z, then x, then y
    return (c.k, c.i, c.j)


def representations(m: Monomial, a: Partition, ell: int) -> tuple[Tableau, ...]:
    """All tableaux representing m, one per column multiset.

    Columns are listed in nondecreasing (k, i, j) order within each tableau.
    Raises if m is not balanced (ell variables from each family, counted with
    multiplicity); returns () iff m has no valid factorization.
    """
    n = a.n
    if m.degree != 3 * ell:
        raise ValueError(f"degree {m.degree} != 3*{ell}")
    rows: list[list[int]] = [[], [], []]
    for pos, e in enumerate(m.exps):
        rows[pos // n].extend([pos % n + 1] * e)
    xs, ys, zs = rows
    if not (len(xs) == len(ys) == len(zs) == ell):
        raise ValueError(f"{m} is not balanced across the three families")

    found: list[Tableau] = []

    def extend(cols: list[Column], rx: list[int], ry: list[int], rz: list[int],
               floor: tuple[int, int, int]) -> None:
        if not rx:
            found.append(Tableau(tuple(cols)))
            return
        for i in sorted(set(rx)):
            for j in sorted(set(ry)):
                for k in sorted(set(rz)):
                    c = Column(i, j, k)
                    if _column_sort_key(c) < floor or not is_valid_column(c, a):
                        continue
                    rx2 = list(rx); rx2.remove(i)
                    ry2 = list(ry); ry2.remove(j)
                    rz2 = list(rz); rz2.remove(k)
                    cols.append(c)
                    extend(cols, rx2, ry2, rz2, _column_sort_key(c))
                    cols.pop()

    extend([], xs, ys, zs, (0, 0, 0))
    found.sort(key=lambda t: tuple(_column_sort_key(c) for c in t.columns))
    return tuple(found)


def compare_tableaux(A: Tableau, B: Tableau, a: Partition) -> int:
    """Total order on same-shape tableaux; returns -1, 0 or 1.

    Comparison rows, in order:
      1. z-entries, right to left: larger value means smaller tableau;
      2. y-entry blocks, left to right: smaller block means smaller;
      3. x-entry blocks, right to left: larger block means smaller;
      4. x-entries, left to right: smaller value means smaller;
      5. y-entries, left to right: larger value means smaller.
    Two tableaux compare equal iff their column sequences are identical.
    """
    if A.ell != B.ell:
        raise ValueError(f"shape mismatch: {A.ell} vs {B.ell} columns")
    ca, cb = A.columns, B.columns
    for t in range(A.ell - 1, -1, -1):
        if ca[t].k != cb[t].k:
            return -1 if ca[t].k > cb[t].k else 1
    for t in range(A.ell):
        ja, jb = a.block_of(ca[t].j), a.block_of(cb[t].j)
        if ja != jb:
            return -1 if ja < jb else 1
    for t in range(A.ell - 1, -1, -1):
        ia, ib = a.block_of(ca[t].i), a.block_of(cb[t].i)
        if ia != ib:
            return -1 if ia > ib else 1
    for t in range(A.ell):
        if ca[t].i != cb[t].i:
            return -1 if ca[t].i < cb[t].i else 1
    for t in range(A.ell):
        if ca[t].j != cb[t].j:
            return -1 if ca[t].j > cb[t].j else 1
    return 0


def _orderings(rep: Tableau) -> Iterator[Tableau]:
    seen = set()
    for perm in itertools.permutations(rep.columns):
        if perm not in seen:
            seen.add(perm)
            yield Tableau(perm)


def canonical_rep(m: Monomial, a: Partition, ell: int) -> Tableau:
    """The minimal representing tableau of m, over all column orderings.

    The minimum has nondecreasing x-block row and nondecreasing z-entry row.
    Raises if m has no representation.
    """
    key = (m.exps, a.parts, ell)
    cached = _CANON_CACHE.get(key)
    if cached is not None:
        return cached
    best: Tableau | None = None
    for rep in representations(m, a, ell):
        for t in _orderings(rep):
            if best is None or compare_tableaux(t, best, a) < 0:
                best = t
    if best is None:
        raise ValueError(f"{m} is not a power generator for {a}, ell={ell}")
    _CANON_CACHE[key] = best
    return best


def compare_generators(m1: Monomial, m2: Monomial, a: Partition, ell: int) -> int:
    """Order on power generators via their canonical representations."""
    c = compare_tableaux(canonical_rep(m1, a, ell), canonical_rep(m2, a, ell), a)
    assert (c == 0) == (m1 == m2), "distinct generators must compare strictly"
    return c


def simplify(T: Tableau, a: Partition) -> Tableau:
    """A representation of T's monomial with sorted x-block and z-entry rows.

    Columns are first sorted by (k, i, j); then, while the x-block row is not
    a sorted prefix of the multiset, the (x, y) heads of two columns are
    exchanged. Each exchange keeps both columns valid and grows the sorted
    prefix, so at most ell rounds run.
    """
    cols = sorted(T.columns, key=_column_sort_key)
    ell = len(cols)
    while True:
        blocks = [a.block_of(c.i) for c in cols]
        ranked = sorted(blocks)
        s = 0
        while (s < ell and blocks[: s + 1] == sorted(blocks[: s + 1])
               and sorted(blocks[: s + 1]) == ranked[: s + 1]):
            s += 1
        if s == ell:
            break
        candidates = [t for t in range(s + 1, ell) if blocks[t] < blocks[s]]
        # the sorted prefix is maximal, so a strictly smaller block follows
        assert candidates, "no exchange candidate; prefix should be maximal"
        tmin = min(candidates, key=lambda t: (blocks[t], t))
        head_t, head_s = cols[tmin], cols[s]
        new_s = Column(head_t.i, head_t.j, head_s.k)
        new_t = Column(head_s.i, head_s.j, head_t.k)
        if not (is_valid_column(new_s, a) and is_valid_column(new_t, a)):
            raise AssertionError(f"head exchange produced an invalid column in {T}")
        cols[s], cols[tmin] = new_s, new_t
    return Tableau(tuple(cols))


def _two_column_exchange(A: Column, B: Column, a: Partition) -> tuple[Column, Column]:
    """Re-pair two columns' heads and tails so x-blocks and z-entries sort."""
    t1, t2 = sorted((A.k, B.k))
    ia, ib = a.block_of(A.i), a.block_of(B.i)
    if ia < ib:
        head_orders = [((A.i, A.j), (B.i, B.j))]
    elif ia > ib:
        head_orders = [((B.i, B.j), (A.i, A.j))]
    else:
        head_orders = [((A.i, A.j), (B.i, B.j)), ((B.i, B.j), (A.i, A.j))]
    for (i1, j1), (i2, j2) in head_orders:
        c1, c2 = Column(i1, j1, t1), Column(i2, j2, t2)
        if is_valid_column(c1, a) and is_valid_column(c2, a):
            return c1, c2
    raise AssertionError(f"no valid two-column exchange for {A}, {B}")


def simplify_pairwise(T: Tableau, a: Partition) -> Tableau:
    """Sort the x-block and z-entry rows by two-column exchanges.

    Applies the exchange along the pair schedule (1,2), (1,3), ..., (1,ell),
    (2,3), ..., (ell-1, ell).
    """
    cols = list(T.columns)
    ell = len(cols)
    for u in range(ell):
        for v in range(u + 1, ell):
            cols[u], cols[v] = _two_column_exchange(cols[u], cols[v], a)
    return Tableau(tuple(cols))
