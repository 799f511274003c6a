"""Minimal generators of matching field ideal powers and the colon certificate.

The power's generators are the distinct products of ell columns, sorted by the
tableau order. Walking that order, each colon ideal (earlier) : m is computed
exactly; the ideal has linear quotients iff every such colon is generated by
variables, and the per-generator variable sets drive the Betti formula
beta_i = sum_j C(|set(m_j)|, i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from math import comb
from typing import Sequence

from .matching import Column, generators, is_valid_column
from .monomials import Monomial, Partition, Variable
from .tableaux import compare_generators

BettiTable = tuple[int, ...]


@dataclass(frozen=True)
class OrderedGenerators:
    """Generators of (M_a)^ell, strictly ascending in the tableau order."""

    partition: Partition
    ell: int
    monomials: tuple[Monomial, ...]

    @cached_property
    def index(self) -> dict[Monomial, int]:
        return {m: j for j, m in enumerate(self.monomials)}

    @cached_property
    def genset(self) -> frozenset[Monomial]:
        return frozenset(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


def power_generators(a: Partition, ell: int) -> OrderedGenerators:
    """Distinct products of ell matching field columns, sorted ascending.

    The products all have degree 3*ell, so none divides another and the set is
    the minimal generating set of the power.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    n = a.n
    cols = [c.monomial(n) for c in generators(a)]
    prods: set[Monomial] = set()
    for combo in itertools.combinations_with_replacement(cols, ell):
        m = combo[0]
        for q in combo[1:]:
            m = m * q
        prods.add(m)
    order = sorted(prods, key=cmp_to_key(
        lambda p, q: compare_generators(p, q, a, ell)))
    for p, q in zip(order, order[1:]):
        assert compare_generators(p, q, a, ell) < 0, "order must be strict"
    return OrderedGenerators(a, ell, tuple(order))


@dataclass(frozen=True)
class NotLinear:
    """Witness that a colon ideal is not generated by variables."""

    witness: Monomial


def colon_set(prefix: Sequence[Monomial], m: Monomial) -> frozenset[Variable] | NotLinear:
    """Minimal generators of <prefix> : m, if they are all variables.

    The colon ideal is generated by the quotients p / gcd(p, m); the set of
    those that are single variables is returned when it dominates every other
    quotient, otherwise a divisibility-minimal non-variable witness.
    """
    n = m.n
    quots = {tuple(max(a - b, 0) for a, b in zip(p.exps, m.exps)) for p in prefix}
    quots.discard((0,) * (3 * n))
    var_positions = {q.index(1) for q in quots if sum(q) == 1}
    others = [q for q in quots if sum(q) > 1
              and not any(q[v] >= 1 for v in var_positions)]
    if others:
        minimal = [q for q in others
                   if not any(o != q and all(a <= b for a, b in zip(o, q))
                              for o in others)]
        return NotLinear(Monomial(min(minimal)))
    return frozenset(Variable.from_position(v, n) for v in var_positions)


@dataclass(frozen=True)
class LQCertificate:
    """Ascending generators together with every set(m_j)."""

    generators: OrderedGenerators
    sets: tuple[frozenset[Variable], ...]

    @property
    def partition(self) -> Partition:
        return self.generators.partition

    @property
    def ell(self) -> int:
        return self.generators.ell

    def set_of(self, m: Monomial) -> frozenset[Variable]:
        return self.sets[self.generators.index[m]]

    def max_set_size(self) -> int:
        return max((len(s) for s in self.sets), default=0)


@dataclass(frozen=True)
class LQFailure:
    """First position where a colon ideal is not generated by variables."""

    generators: OrderedGenerators
    index: int
    generator: Monomial
    witness: Monomial


def verify_linear_quotients(a: Partition, ell: int) -> LQCertificate | LQFailure:
    """Walk the ascending order and certify linear quotients step by step."""
    og = power_generators(a, ell)
    sets: list[frozenset[Variable]] = []
    for j, m in enumerate(og.monomials):
        result = colon_set(og.monomials[:j], m)
        if isinstance(result, NotLinear):
            return LQFailure(og, j, m, result.witness)
        sets.append(result)
    assert not sets or not sets[0], "first generator must have an empty set"
    return LQCertificate(og, tuple(sets))


def betti_from_sets(cert: LQCertificate) -> BettiTable:
    """beta_i = sum over generators of C(|set(m_j)|, i)."""
    top = cert.max_set_size()
    return tuple(
        sum(comb(len(s), i) for s in cert.sets) for i in range(top + 1)
    )


def is_power_generator(w: Monomial, a: Partition, ell: int) -> bool:
    """True iff w is a product of ell valid columns (degree 3*ell, balanced,
    and admitting a factorization)."""
    n = a.n
    if w.n != n or w.degree != 3 * ell:
        return False
    rows: list[list[int]] = [[], [], []]
    for pos, e in enumerate(w.exps):
        rows[pos // n].extend([pos % n + 1] * e)
    xs, ys, zs = rows
    if not (len(xs) == len(ys) == len(zs) == ell):
        return False

    def backtrack(rx: list[int], ry: list[int], rz: list[int]) -> bool:
        if not rx:
            return True
        i = rx[0]
        for j in sorted(set(ry)):
            for k in sorted(set(rz)):
                if not is_valid_column(Column(i, j, k), a):
                    continue
                ry2 = list(ry); ry2.remove(j)
                rz2 = list(rz); rz2.remove(k)
                if backtrack(rx[1:], ry2, rz2):
                    return True
        return False

    return backtrack(xs, ys, zs)


def in_power_ideal(w: Monomial, a: Partition, ell: int) -> bool:
    """True iff some generator of (M_a)^ell divides w."""
    if w.degree < 3 * ell:
        return False
    og = power_generators(a, ell)
    return any(g.divides(w) for g in og.monomials)
