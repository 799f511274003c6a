"""The mapping-cone cell complex of a linear quotient certificate.

Cells are pairs (m, S) with m a generator and S a subset of set(m); the
boundary of (m, S) removes one variable v at a time, pairing the face
(m, S - v) having coefficient v with the face (b(v m), S - v) having
coefficient v*m / b(v m), the latter omitted when S - v is not contained in
set(b(v m)) or when b(v m) = m. Signs follow the fixed variable order. The
verification operations certify d^2 = 0, exactness of every multidegree
strand, and linearity of all coefficients.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from . import _bitlattice
from .decomposition import DecompositionFunction
from .linalg import rank
from .monomials import Monomial, Partition, Variable
from .quotients import LQCertificate


@dataclass(frozen=True)
class Cell:
    """Basis cell (m, S): generator m, subset S of set(m)."""

    index: int
    gen_index: int
    gen: Monomial
    subset: frozenset[Variable]
    mdeg: Monomial

    @property
    def dim(self) -> int:
        return len(self.subset)


class BoundaryTerm(NamedTuple):
    target: int
    sign: int
    coeff: Variable


@dataclass(frozen=True)
class CellComplex:
    partition: Partition
    ell: int
    decomposition: str
    cells: tuple[Cell, ...]
    boundary: tuple[tuple[BoundaryTerm, ...], ...]

    @cached_property
    def by_dim(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for c in self.cells:
            out.setdefault(c.dim, []).append(c.index)
        return {d: tuple(v) for d, v in out.items()}

    @property
    def dim(self) -> int:
        return max(self.by_dim) if self.cells else -1

    def f_vector(self) -> tuple[int, ...]:
        """(1, f_0, ..., f_p); the leading 1 counts the empty face."""
        return (1,) + tuple(
            len(self.by_dim.get(d, ())) for d in range(self.dim + 1)
        )

    def to_json(self) -> dict:
        return {
            "partition": str(self.partition),
            "power": self.ell,
            "decomposition": self.decomposition,
            "cells": [
                {
                    "id": c.index,
                    "dim": c.dim,
                    "gen": c.gen.text(),
                    "set": [str(v) for v in sorted(c.subset)],
                    "mdeg": c.mdeg.text(),
                }
                for c in self.cells
            ],
            "boundary": [
                {"from": ci, "to": t.target, "sign": t.sign, "coeff": str(t.coeff)}
                for ci, terms in enumerate(self.boundary)
                for t in terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CellComplex":
        a = Partition.from_string(data["partition"])
        n = a.n
        gen_index: dict[Monomial, int] = {}
        cells = []
        for entry in sorted(data["cells"], key=lambda e: e["id"]):
            gen = Monomial.from_text(entry["gen"], n)
            cells.append(Cell(
                index=entry["id"],
                gen_index=gen_index.setdefault(gen, len(gen_index)),
                gen=gen,
                subset=frozenset(_parse_variable(s) for s in entry["set"]),
                mdeg=Monomial.from_text(entry["mdeg"], n),
            ))
        terms: list[list[BoundaryTerm]] = [[] for _ in cells]
        for entry in data["boundary"]:
            terms[entry["from"]].append(
                BoundaryTerm(entry["to"], entry["sign"], _parse_variable(entry["coeff"]))
            )
        return cls(a, int(data["power"]), data["decomposition"],
                   tuple(cells), tuple(tuple(t) for t in terms))

    def to_dot(self) -> str:
        """1-skeleton as graphviz source, 2-cell membership on the edges."""
        graph = skeleton_graph(self)
        lines = ["graph cellcomplex {"]
        lines.append(f'  // f-vector {self.f_vector()}')
        for gi, m in enumerate(graph.vertices):
            lines.append(f'  g{gi} [label="{m.text()}"];')
        for edge, (u, v) in graph.edges.items():
            members = [c for c, edges in graph.two_cell_edges.items() if edge in edges]
            attr = f' [twocells="{",".join(f"c{c}" for c in members)}"]' if members else ""
            lines.append(f"  g{u} -- g{v}{attr};  // edge c{edge}")
        if graph.two_cell_edges:
            lines.append("  // 2-cells and their boundary edges:")
            for c, edges in sorted(graph.two_cell_edges.items()):
                cell = self.cells[c]
                lines.append(
                    f"  // c{c} {cell.mdeg.text()}: "
                    + ", ".join(f"c{e}" for e in sorted(edges))
                )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _parse_variable(text: str) -> Variable:
    return Variable(text[0], int(text[1:]))


def build_complex(b: DecompositionFunction) -> CellComplex:
    """Cells (m, S) for S in set(m), with the mapping-cone boundary."""
    cert = b.certificate
    n = cert.partition.n
    cells: list[Cell] = []
    cell_id: dict[tuple[int, frozenset[Variable]], int] = {}
    for j, m in enumerate(cert.generators.monomials):
        ordered = sorted(cert.sets[j])
        for size in range(len(ordered) + 1):
            for sub in itertools.combinations(ordered, size):
                subset = frozenset(sub)
                mdeg = m
                for v in sub:
                    mdeg = mdeg * v.monomial(n)
                cell_id[(j, subset)] = len(cells)
                cells.append(Cell(len(cells), j, m, subset, mdeg))

    boundary: list[tuple[BoundaryTerm, ...]] = []
    for cell in cells:
        terms: list[BoundaryTerm] = []
        ordered = sorted(cell.subset)
        for pos, v in enumerate(ordered):
            sign = (-1) ** pos
            rest = cell.subset - {v}
            terms.append(BoundaryTerm(cell_id[(cell.gen_index, rest)], sign, v))
            target = b(v, cell.gen)
            if target == cell.gen:
                continue
            if not rest <= cert.set_of(target):
                continue
            coeff = (v.monomial(n) * cell.gen).quotient(target)
            assert coeff.degree == 1, "mapping-cone coefficient must be linear"
            coeff_var = next(iter(coeff.variables()))[0]
            terms.append(BoundaryTerm(
                cell_id[(cert.generators.index[target], rest)], -sign, coeff_var))
        boundary.append(tuple(terms))

    return CellComplex(cert.partition, cert.ell, b.kind,
                       tuple(cells), tuple(boundary))


def verify_d_squared(C: CellComplex) -> bool:
    """Symbolically compose consecutive boundaries; True iff identically zero."""
    for ci, terms in enumerate(C.boundary):
        acc: dict[tuple[int, tuple[Variable, Variable]], int] = {}
        for t1 in terms:
            for t2 in C.boundary[t1.target]:
                key = (t2.target, tuple(sorted((t1.coeff, t2.coeff))))
                acc[key] = acc.get(key, 0) + t1.sign * t2.sign
        if any(acc.values()):
            return False
    return True


def verify_linearity(C: CellComplex) -> bool:
    """Every boundary coefficient is one variable and preserves multidegrees."""
    n = C.partition.n
    for ci, terms in enumerate(C.boundary):
        src = C.cells[ci].mdeg
        for t in terms:
            if t.coeff.monomial(n) * C.cells[t.target].mdeg != src:
                return False
    return True


@dataclass(frozen=True)
class ResolutionReport:
    partition: Partition
    ell: int
    decomposition: str
    is_complex: bool
    linear: bool
    multidegrees_checked: int
    failures: tuple[Monomial, ...]

    @property
    def ok(self) -> bool:
        return self.is_complex and self.linear and not self.failures


def verify_resolution(C: CellComplex) -> ResolutionReport:
    """Degreewise exactness at every multidegree in the cells' lcm closure.

    For each multidegree alpha, the strand spanned by cells whose mdeg divides
    alpha must have one-dimensional degree-0 homology and none above. Strands
    with the same restricted cell set are evaluated once. Requires d^2 = 0;
    when that fails the strand checks are skipped and the report is negative.
    """
    is_complex = verify_d_squared(C)
    linear = verify_linearity(C)
    if not is_complex or not C.cells:
        return ResolutionReport(C.partition, C.ell, C.decomposition,
                                is_complex, linear, 0, ())

    levels = max(max(c.mdeg.exps) for c in C.cells)
    classes = sorted({c.mdeg.exps for c in C.cells})
    class_id = {exps: i for i, exps in enumerate(classes)}
    encoded = [_bitlattice.encode(exps, levels) for exps in classes]
    cell_class = [class_id[c.mdeg.exps] for c in C.cells]
    closure = _bitlattice.lcm_closure(encoded)

    by_mask: dict[int, list[int]] = {}
    for alpha in closure:
        mask = 0
        for idx, enc in enumerate(encoded):
            if enc & ~alpha == 0:
                mask |= 1 << idx
        by_mask.setdefault(mask, []).append(alpha)

    bad_alphas: list[Monomial] = []
    nvars = 3 * C.partition.n
    for mask, alphas in by_mask.items():
        if not _strand_is_acyclic(C, cell_class, mask):
            bad_alphas.extend(
                Monomial(_bitlattice.decode(alpha, nvars, levels))
                for alpha in alphas
            )
    bad_alphas.sort(key=lambda m: m.exps)
    return ResolutionReport(C.partition, C.ell, C.decomposition,
                            is_complex, linear, len(closure), tuple(bad_alphas))


def _strand_is_acyclic(C: CellComplex, cell_class: list[int], mask: int) -> bool:
    keep = [i for i in range(len(C.cells)) if (mask >> cell_class[i]) & 1]
    by_dim: dict[int, list[int]] = {}
    for i in keep:
        by_dim.setdefault(C.cells[i].dim, []).append(i)
    pos = {i: p for lst in by_dim.values() for p, i in enumerate(lst)}
    top = max(by_dim)
    ranks = {0: 0, top + 1: 0}
    for d in range(1, top + 1):
        rows: dict[int, dict[int, int]] = {}
        for i in by_dim.get(d, []):
            for t in C.boundary[i]:
                row = rows.setdefault(pos[t.target], {})
                row[pos[i]] = row.get(pos[i], 0) + t.sign
        ranks[d] = rank(rows.values())
    if len(by_dim.get(0, ())) - ranks[1] != 1:
        return False
    return all(
        len(by_dim.get(d, ())) - ranks[d] - ranks.get(d + 1, 0) == 0
        for d in range(1, top + 1)
    )


@dataclass(frozen=True)
class SkeletonGraph:
    """1-skeleton, plus shared boundary edges for every pair of 2-cells."""

    vertices: tuple[Monomial, ...]
    edges: dict[int, tuple[int, int]]  # edge cell index -> (gen, gen)
    two_cell_edges: dict[int, frozenset[int]]  # 2-cell index -> edge cells

    def shared_edges(self, c1: int, c2: int) -> frozenset[int]:
        return self.two_cell_edges[c1] & self.two_cell_edges[c2]

    def pair_shared_edges(self) -> dict[tuple[int, int], frozenset[int]]:
        pairs = {}
        for c1, c2 in itertools.combinations(sorted(self.two_cell_edges), 2):
            pairs[(c1, c2)] = self.shared_edges(c1, c2)
        return pairs


def skeleton_graph(C: CellComplex) -> SkeletonGraph:
    vertices = tuple(c.gen for c in C.cells if c.dim == 0)
    edges: dict[int, tuple[int, int]] = {}
    for i in C.by_dim.get(1, ()):
        ends = tuple(sorted(C.cells[t.target].gen_index for t in C.boundary[i]))
        assert len(ends) == 2, "a 1-cell must have two boundary vertices"
        edges[i] = ends
    two_cells = {
        i: frozenset(t.target for t in C.boundary[i])
        for i in C.by_dim.get(2, ())
    }
    return SkeletonGraph(vertices, edges, two_cells)


def export_complex_json(C: CellComplex, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(C.to_json(), fh, indent=1, sort_keys=True)
        fh.write("\n")


def export_dot(C: CellComplex, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(C.to_dot())
