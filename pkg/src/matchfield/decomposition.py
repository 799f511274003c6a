"""Decomposition functions on ideal powers and the exchange property check.

A decomposition function sends v * m (v a variable in set(m), m a generator)
to a generator dividing v * m. Two flavors are provided: the generic one,
which picks the earliest divisor in the generator order, and the explicit
family-wise rule that removes one variable of v's family:

  x_i: remove x_j, j the largest index (j != i) keeping membership;
  z_i: remove z_j, j the smallest z-index dividing m;
  y_i: remove y_j, j the smallest index below i in i's block keeping
       membership if one exists, else the largest index above i keeping it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .monomials import Monomial, Variable
from .quotients import LQCertificate


class DecompositionError(AssertionError):
    """The family-wise rule found no admissible index to remove."""


def _swap(m: Monomial, add_pos: int, remove_pos: int) -> Monomial:
    exps = list(m.exps)
    exps[add_pos] += 1
    exps[remove_pos] -= 1
    return Monomial(tuple(exps))


def b_generic(v: Variable, m: Monomial, cert: LQCertificate) -> Monomial:
    """Earliest generator dividing v * m; identity when v is not in set(m)."""
    if v not in cert.set_of(m):
        return m
    vm = v.monomial(m.n) * m
    for g in cert.generators.monomials:
        if g.divides(vm):
            return g
    raise DecompositionError(f"no generator divides {vm}")


def b_ell(v: Variable, m: Monomial, cert: LQCertificate) -> Monomial:
    """The family-wise explicit rule; identity when v is not in set(m)."""
    if v not in cert.set_of(m):
        return m
    n = m.n
    a = cert.partition
    genset = cert.generators.genset
    fam, i = v.family, v.index
    vpos = v.position(n)

    if fam == "x":
        cands = [
            k for k in range(1, n + 1)
            if k != i and m.exps[k - 1] > 0
            and _swap(m, vpos, k - 1) in genset
        ]
        if not cands:
            raise DecompositionError(f"x-rule found no removable index for {v}*{m}")
        return _swap(m, vpos, max(cands) - 1)

    if fam == "z":
        zs = [k for k in range(1, n + 1) if m.exps[2 * n + k - 1] > 0]
        result = _swap(m, vpos, 2 * n + min(zs) - 1)
        if result not in genset:
            raise DecompositionError(f"z-rule left the generator set at {v}*{m}")
        return result

    block = a.block_of(i)
    lower = [
        k for k in range(1, n + 1)
        if k < i and a.block_of(k) == block and m.exps[n + k - 1] > 0
        and _swap(m, vpos, n + k - 1) in genset
    ]
    if lower:
        return _swap(m, vpos, n + min(lower) - 1)
    upper = [
        k for k in range(1, n + 1)
        if k > i and m.exps[n + k - 1] > 0
        and _swap(m, vpos, n + k - 1) in genset
    ]
    if not upper:
        raise DecompositionError(f"y-rule found no removable index for {v}*{m}")
    return _swap(m, vpos, n + max(upper) - 1)


@dataclass(frozen=True)
class DecompositionFunction:
    """A chosen decomposition rule bound to a linear quotient certificate."""

    kind: str  # "generic" or "paper-bl"
    certificate: LQCertificate

    KINDS = ("generic", "paper-bl")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"kind must be one of {self.KINDS}")

    def __call__(self, v: Variable, m: Monomial) -> Monomial:
        if self.kind == "generic":
            return b_generic(v, m, self.certificate)
        return b_ell(v, m, self.certificate)


@dataclass(frozen=True)
class ExchangeViolation:
    m: Monomial
    s: Variable
    t: Variable
    via_t: Monomial  # b(s, b(t, m))
    via_s: Monomial  # b(t, b(s, m))


@dataclass(frozen=True)
class ExchangeReport:
    kind: str
    checked: int
    violations: tuple[ExchangeViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_exchange(b: DecompositionFunction) -> ExchangeReport:
    """Check b(s, b(t, m)) == b(t, b(s, m)) for all m and s, t in set(m).

    When the outer variable is not in the set of the inner value, the outer
    application is the identity.
    """
    cert = b.certificate
    violations = []
    checked = 0
    for j, m in enumerate(cert.generators.monomials):
        for s, t in itertools.combinations(sorted(cert.sets[j]), 2):
            checked += 1
            via_t = b(s, b(t, m))
            via_s = b(t, b(s, m))
            if via_t != via_s:
                violations.append(ExchangeViolation(m, s, t, via_t, via_s))
    return ExchangeReport(b.kind, checked, tuple(violations))


@dataclass(frozen=True)
class ContainmentViolation:
    m: Monomial
    t: Variable
    target: Monomial
    extra: tuple[Variable, ...]  # set(target) \ set(m)


@dataclass(frozen=True)
class ContainmentReport:
    kind: str
    checked: int
    violations: tuple[ContainmentViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_set_containment(b: DecompositionFunction) -> ContainmentReport:
    """Check set(b(t, m)) is contained in set(m) for all m and t in set(m)."""
    cert = b.certificate
    violations = []
    checked = 0
    for j, m in enumerate(cert.generators.monomials):
        for t in sorted(cert.sets[j]):
            checked += 1
            target = b(t, m)
            extra = cert.set_of(target) - cert.sets[j]
            if extra:
                violations.append(
                    ContainmentViolation(m, t, target, tuple(sorted(extra))))
    return ContainmentReport(b.kind, checked, tuple(violations))
