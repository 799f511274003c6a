"""Threshold-bit encoding of bounded exponent vectors.

A monomial with exponents < levels+1 maps to an integer with bit
(position * levels + t) set iff the exponent at position exceeds t. Under
this encoding lcm is bitwise-or and divisibility is bit containment, which
makes lcm-closure computations cheap.
"""

from __future__ import annotations

from typing import Iterable


def encode(exps: Iterable[int], levels: int) -> int:
    x = 0
    for pos, e in enumerate(exps):
        if e > levels:
            raise ValueError(f"exponent {e} exceeds encoding level {levels}")
        for t in range(e):
            x |= 1 << (pos * levels + t)
    return x


def decode(x: int, nvars: int, levels: int) -> tuple[int, ...]:
    exps = []
    for pos in range(nvars):
        chunk = (x >> (pos * levels)) & ((1 << levels) - 1)
        exps.append(chunk.bit_count())
    return tuple(exps)


def lcm_closure(encoded: Iterable[int]) -> set[int]:
    """Closure of the given encoded monomials under pairwise lcm (bitwise or)."""
    gens = list(dict.fromkeys(encoded))
    closure = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for f in frontier:
            for g in gens:
                u = f | g
                if u not in closure:
                    closure.add(u)
                    fresh.add(u)
        frontier = fresh
    return closure
