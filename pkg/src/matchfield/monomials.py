"""Exact arithmetic on monomials in the 3n variables x_1..x_n, y_1..y_n, z_1..z_n.

All values here are immutable; exponent vectors are plain tuples of machine
integers (degrees at desk scale never overflow). The fixed variable order
x_1 < ... < x_n < y_1 < ... < y_n < z_1 < ... < z_n is used for boundary-map
signs and for canonical serialization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

FAMILIES = "xyz"

_VAR_RE = re.compile(r"([xyz])(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Partition:
    """Ordered partition (composition) a_1..a_r of [n] into consecutive blocks.

    Block s is the interval B_s = {alpha_{s-1}+1, ..., alpha_s} where
    alpha_s = a_1 + ... + a_s.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        try:
            return cls(tuple(int(p) for p in text.split(",")))
        except ValueError:
            raise ValueError(f"bad partition {text!r}; expected e.g. '2,3'") from None

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @cached_property
    def _block_lookup(self) -> tuple[int, ...]:
        lookup = []
        for s, p in enumerate(self.parts, start=1):
            lookup.extend([s] * p)
        return tuple(lookup)

    def block_of(self, i: int) -> int:
        """Block index s with alpha_{s-1} < i <= alpha_s."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range [1, {self.n}]")
        return self._block_lookup[i - 1]

    def block(self, s: int) -> range:
        """The interval B_s, 1-based and inclusive."""
        if not 1 <= s <= self.r:
            raise ValueError(f"block {s} out of range [1, {self.r}]")
        start = sum(self.parts[: s - 1])
        return range(start + 1, start + self.parts[s - 1] + 1)

    def blocks(self) -> tuple[range, ...]:
        return tuple(self.block(s) for s in range(1, self.r + 1))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


class Variable(NamedTuple):
    """One of x_i, y_i, z_i. Ordered by family then index."""

    family: str
    index: int

    def position(self, n: int) -> int:
        """0-based position in the fixed variable order."""
        return FAMILIES.index(self.family) * n + self.index - 1

    @classmethod
    def from_position(cls, pos: int, n: int) -> "Variable":
        return cls(FAMILIES[pos // n], pos % n + 1)

    def monomial(self, n: int) -> "Monomial":
        exps = [0] * (3 * n)
        exps[self.position(n)] = 1
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


@dataclass(frozen=True)
class Monomial:
    """A monomial, stored as its length-3n exponent vector."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) % 3 != 0:
            raise ValueError("exponent vector length must be 3n")
        if any(e < 0 for e in self.exps):
            raise ValueError("exponents must be nonnegative")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * (3 * n))

    @classmethod
    def from_text(cls, text: str, n: int) -> "Monomial":
        """Parse the `x1*y2^2*z3` format."""
        exps = [0] * (3 * n)
        text = text.strip()
        if text in ("1", ""):
            return cls(tuple(exps))
        for factor in text.split("*"):
            m = _VAR_RE.match(factor.strip())
            if not m:
                raise ValueError(f"bad monomial factor {factor!r}")
            fam, idx, exp = m.group(1), int(m.group(2)), int(m.group(3) or 1)
            if not 1 <= idx <= n:
                raise ValueError(f"variable index {idx} out of range [1, {n}]")
            exps[Variable(fam, idx).position(n)] += exp
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps) // 3

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def exponent(self, v: Variable) -> int:
        return self.exps[v.position(self.n)]

    def variables(self) -> Iterator[tuple[Variable, int]]:
        """Variables with positive exponent, in the fixed order."""
        for pos, e in enumerate(self.exps):
            if e:
                yield Variable.from_position(pos, self.n), e

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / other; raises unless other divides self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def text(self) -> str:
        """Render in the `x1*y2^2*z3` format; the unit monomial prints as 1."""
        factors = []
        for var, e in self.variables():
            factors.append(str(var) + (f"^{e}" if e > 1 else ""))
        return "*".join(factors) or "1"

    def to_json(self) -> list[int]:
        return list(self.exps)

    @classmethod
    def from_json(cls, data: list[int]) -> "Monomial":
        return cls(tuple(int(e) for e in data))

    def __str__(self) -> str:
        return self.text()


def mul(p: Monomial, q: Monomial) -> Monomial:
    return p * q


def divides(p: Monomial, q: Monomial) -> bool:
    return p.divides(q)


def quotient(q: Monomial, p: Monomial) -> Monomial:
    return q.quotient(p)


def gcd(p: Monomial, q: Monomial) -> Monomial:
    return p.gcd(q)


def lcm(p: Monomial, q: Monomial) -> Monomial:
    return p.lcm(q)
