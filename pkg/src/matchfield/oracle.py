"""Independent homological ground truth for monomial ideals.

Betti numbers come from reduced homology of upper Koszul simplicial complexes
over the lcm lattice; Hilbert series from inclusion-exclusion over generator
subsets. Nothing here consults the linear quotient machinery, so agreement
between the two routes is a genuine cross-check. All linear algebra is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import _bitlattice
from .linalg import rank
from .monomials import Monomial

INCLUSION_EXCLUSION_LIMIT = 20


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of nonempty subsets of a generating set."""

    nvars: int
    levels: int
    encoded: frozenset[int]

    @cached_property
    def monomials(self) -> tuple[Monomial, ...]:
        decoded = sorted(
            _bitlattice.decode(x, self.nvars, self.levels) for x in self.encoded
        )
        return tuple(Monomial(e) for e in decoded)

    def __len__(self) -> int:
        return len(self.encoded)

    def __contains__(self, m: Monomial) -> bool:
        return _bitlattice.encode(m.exps, self.levels) in self.encoded


def lcm_lattice(gens: Iterable[Monomial]) -> LcmLattice:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    nvars = len(gens[0].exps)
    levels = max(max(g.exps) for g in gens)
    closure = _bitlattice.lcm_closure(
        _bitlattice.encode(g.exps, levels) for g in gens
    )
    return LcmLattice(nvars, levels, frozenset(closure))


def _upper_koszul_facets(gens_enc: Sequence[int], alpha: int, nvars: int,
                         levels: int) -> list[int] | None:
    """Facet vertex masks of the upper Koszul complex at alpha, or None when
    the complex is a cone (hence reduced-acyclic).

    The complex's faces are exactly the subsets of supp(alpha / g) over
    generators g dividing alpha; a variable lying in every such support cones
    the complex off.
    """
    supports = set()
    for g in gens_enc:
        if g & ~alpha:
            continue
        diff = alpha & ~g
        sup = 0
        for v in range(nvars):
            if (diff >> (v * levels)) & ((1 << levels) - 1):
                sup |= 1 << v
        supports.add(sup)
    if not supports:
        return None
    kept: list[int] = []
    for s in sorted(supports, key=lambda s: -s.bit_count()):
        if not any(s & ~t == 0 for t in kept):
            kept.append(s)
    common = ~0
    for s in kept:
        common &= s
    if common:
        return None
    return kept


def _reduced_homology_of_union(facets: list[int]) -> dict[int, int]:
    """Reduced homology dimensions of a union of full simplices.

    Faces are enumerated as bitmasks (the empty face included); boundary ranks
    are computed exactly. Returns {degree: dim} for the nonzero degrees.
    """
    faces: set[int] = set()
    for f in facets:
        sub = f
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & f
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    index = {
        size: {f: i for i, f in enumerate(sorted(fs))}
        for size, fs in by_size.items()
    }
    top = max(by_size)
    ranks = {0: 0, top + 1: 0}
    for size in range(1, top + 1):
        rows: dict[int, dict[int, int]] = {}
        for f, col in index[size].items():
            remaining, pos = f, 0
            while remaining:
                bit = remaining & (-remaining)
                row = rows.setdefault(index[size - 1][f ^ bit], {})
                row[col] = (-1) ** pos
                remaining ^= bit
                pos += 1
        ranks[size] = rank(rows.values())
    out = {}
    for size in range(0, top + 1):
        h = len(by_size.get(size, ())) - ranks[size] - ranks.get(size + 1, 0)
        if h:
            out[size - 1] = h
    return out


def koszul_betti(gens: Sequence[Monomial], i: int, alpha: Monomial) -> int:
    """beta_{i, alpha}: reduced homology in degree i - 1 of the upper Koszul
    complex at alpha."""
    if not gens:
        return 0
    nvars = len(gens[0].exps)
    levels = max(max(max(g.exps) for g in gens), max(alpha.exps), 1)
    facets = _upper_koszul_facets(
        [_bitlattice.encode(g.exps, levels) for g in gens],
        _bitlattice.encode(alpha.exps, levels), nvars, levels)
    if facets is None:
        return 0
    return _reduced_homology_of_union(facets).get(i - 1, 0)


def graded_betti(gens: Sequence[Monomial]) -> dict[tuple[int, int], int]:
    """All beta_{i, deg(alpha)} summed over the lcm lattice, keyed (i, degree)."""
    lattice = lcm_lattice(gens)
    nvars, levels = lattice.nvars, lattice.levels
    gens_enc = [_bitlattice.encode(g.exps, levels) for g in gens]
    out: dict[tuple[int, int], int] = {}
    for alpha in lattice.encoded:
        facets = _upper_koszul_facets(gens_enc, alpha, nvars, levels)
        if facets is None:
            continue
        degree = alpha.bit_count()
        for hdeg, dim in _reduced_homology_of_union(facets).items():
            key = (hdeg + 1, degree)
            out[key] = out.get(key, 0) + dim
    return out


def total_betti(gens: Sequence[Monomial]) -> tuple[int, ...]:
    """The Betti numbers of the ideal generated by gens."""
    graded = graded_betti(gens)
    if not graded:
        return ()
    top = max(i for i, _ in graded)
    out = [0] * (top + 1)
    for (i, _), dim in graded.items():
        out[i] += dim
    return tuple(out)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^denominator_exponent, in lowest terms."""

    numerator: tuple[int, ...]
    denominator_exponent: int

    def numerator_at_one(self) -> int:
        return sum(self.numerator)


def _poly_divide_by_one_minus_t(coeffs: list[int]) -> list[int] | None:
    """Divide by (1 - t) if exact, else None. p(t) = (1 - t) q(t)."""
    if sum(coeffs) != 0:
        return None
    q = [0] * (len(coeffs) - 1) if len(coeffs) > 1 else [0]
    acc = 0
    for d in range(len(coeffs) - 1):
        acc += coeffs[d]
        q[d] = acc
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def hilbert_series(gens: Sequence[Monomial], n: int) -> HilbertSeries:
    """Hilbert series of R/I by inclusion-exclusion over generator subsets."""
    if len(gens) > INCLUSION_EXCLUSION_LIMIT:
        raise ValueError(
            f"{len(gens)} generators exceed the inclusion-exclusion limit "
            f"{INCLUSION_EXCLUSION_LIMIT}")
    nvars = 3 * n
    numer: dict[int, int] = {0: 1}

    def visit(idx: int, current: Monomial | None, sign: int) -> None:
        for next_idx in range(idx, len(gens)):
            merged = gens[next_idx] if current is None else current.lcm(gens[next_idx])
            numer[merged.degree] = numer.get(merged.degree, 0) - sign
            visit(next_idx + 1, merged, -sign)

    visit(0, None, 1)
    coeffs = [0] * (max(numer) + 1)
    for d, c in numer.items():
        coeffs[d] = c
    exponent = nvars
    while True:
        reduced = _poly_divide_by_one_minus_t(coeffs)
        if reduced is None:
            break
        coeffs = reduced
        exponent -= 1
    return HilbertSeries(tuple(coeffs), exponent)


def closed_form_Q(n: int) -> tuple[int, ...]:
    """Determinantal closed form for the diagonal field's Hilbert numerator.

    The 2x2 matrix has (i, j) entry sum_k C(3-i, k) C(n-j, k) t^k; the
    determinant is divisible by t and the quotient is returned as a
    coefficient tuple.
    """
    from math import comb

    if n < 3:
        raise ValueError("need n >= 3")

    def entry(i: int, j: int) -> list[int]:
        top = min(3 - i, n - j)
        return [comb(3 - i, k) * comb(n - j, k) for k in range(top + 1)]

    def poly_mul(p: list[int], q: list[int]) -> list[int]:
        out = [0] * (len(p) + len(q) - 1)
        for d1, c1 in enumerate(p):
            for d2, c2 in enumerate(q):
                out[d1 + d2] += c1 * c2
        return out

    def poly_sub(p: list[int], q: list[int]) -> list[int]:
        out = [0] * max(len(p), len(q))
        for d, c in enumerate(p):
            out[d] += c
        for d, c in enumerate(q):
            out[d] -= c
        return out

    det = poly_sub(poly_mul(entry(1, 1), entry(2, 2)),
                   poly_mul(entry(1, 2), entry(2, 1)))
    if det[0] != 0:
        raise ValueError(f"determinant {det} is not divisible by t")
    quotient = det[1:]
    while len(quotient) > 1 and quotient[-1] == 0:
        quotient.pop()
    return tuple(quotient)


def multiplicity(series: HilbertSeries) -> int:
    """Numerator of the reduced series evaluated at t = 1."""
    return series.numerator_at_one()


def projdim_from_betti(betti: Sequence[int]) -> int:
    """Projective dimension of R/I: one past the ideal's resolution length."""
    nonzero = [i for i, b in enumerate(betti) if b]
    if not nonzero:
        raise ValueError("empty Betti table")
    return 1 + max(nonzero)
