"""Partitions, Young diagram hooks, and the beta-set bijection.

A partition ``lam = (lam_1 >= ... >= lam_l >= 1)`` is stored as a tuple
subclass.  Its beta set is the set of first-column hook lengths
``lam_i + l - i`` (1-based ``i``), stored strictly decreasing.  The map
between the two is a bijection onto finite sets of positive integers:

    >>> beta_set(Partition((6, 3, 3, 2, 1)))
    BetaSet((10, 6, 5, 3, 1))
    >>> partition_from_beta_set({5, 2})
    Partition((4, 2))

Coordinates ``(i, j)`` are 1-based, rows top to bottom (English notation).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import CoordinateError, ParameterError


class Partition(tuple):
    """Nonincreasing tuple of positive integers; may be empty."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ParameterError(f"parts must be positive integers, got {parts!r}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ParameterError(f"parts must be nonincreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> Partition:
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield i, j

    def hooks(self) -> list[list[int]]:
        """Hook lengths row by row, like the filled-in diagram."""
        cols = self.conjugate()
        return [[p - j + cols[j - 1] - i + 1 for j in range(1, p + 1)]
                for i, p in enumerate(self, start=1)]

    def brace_str(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"

    def to_json(self) -> str:
        return json.dumps(list(self), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


class BetaSet(tuple):
    """Strictly decreasing tuple of positive integers; may be empty.

    Accepts any iterable of distinct positive integers and sorts it.
    """

    def __new__(cls, elements: Iterable[int] = ()):
        elements = tuple(elements)
        for x in elements:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise ParameterError(f"beta elements must be positive integers, got {elements!r}")
        ordered = tuple(sorted(set(elements), reverse=True))
        if len(ordered) != len(elements):
            raise ParameterError(f"beta elements must be distinct, got {elements!r}")
        return super().__new__(cls, ordered)

    def to_json(self) -> str:
        return json.dumps(list(self), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"BetaSet({tuple(self)!r})"


@dataclass(frozen=True)
class CoreSpec:
    """Nonempty set of forbidden hook lengths."""

    forbidden: frozenset[int]

    def __init__(self, forbidden: Iterable[int]):
        values = list(forbidden)
        if not values:
            raise ParameterError("a core spec needs at least one forbidden hook length")
        for s in values:
            if not isinstance(s, int) or isinstance(s, bool) or s < 1:
                raise ParameterError(f"forbidden hook lengths must be positive integers, got {values!r}")
        if len(set(values)) != len(values):
            raise ParameterError(f"forbidden hook lengths must be distinct, got {values!r}")
        object.__setattr__(self, "forbidden", frozenset(values))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(sorted(self.forbidden))

    def __iter__(self):
        return iter(self.values)

    def __contains__(self, s) -> bool:
        return s in self.forbidden

    def __repr__(self) -> str:
        return f"CoreSpec({set(self.values)!r})"


def check_d(d: int, minimum: int = 0) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < minimum:
        raise ParameterError(f"d must be an integer >= {minimum}, got {d!r}")
    return d


def hook_length(lam: Partition, i: int, j: int) -> int:
    """Hook length of box ``(i, j)``: arm + leg + 1."""
    if not (1 <= i <= len(lam)) or not (1 <= j <= lam[i - 1]):
        raise CoordinateError(f"box ({i}, {j}) is not in the diagram of {tuple(lam)}")
    column_height = sum(1 for p in lam if p >= j)
    return lam[i - 1] - j + column_height - i + 1


def hook_length_literal(lam: Partition, i: int, j: int) -> int:
    """Hook length by counting boxes to the right, below, and the box itself."""
    if not (1 <= i <= len(lam)) or not (1 <= j <= lam[i - 1]):
        raise CoordinateError(f"box ({i}, {j}) is not in the diagram of {tuple(lam)}")
    cells = set(Partition(lam).boxes())
    right = sum(1 for jj in range(j + 1, lam[i - 1] + 1) if (i, jj) in cells)
    below = sum(1 for ii in range(i + 1, len(lam) + 1) if (ii, j) in cells)
    return right + below + 1


def beta_set(lam: Partition) -> BetaSet:
    l = len(lam)
    return BetaSet(p + l - i for i, p in enumerate(lam, start=1))


def partition_from_beta_set(X: Iterable[int]) -> Partition:
    xs = BetaSet(X)
    l = len(xs)
    return Partition(x - l + i for i, x in enumerate(xs, start=1))


def size_from_beta_set(X: Iterable[int]) -> int:
    xs = BetaSet(X)
    return sum(xs) - comb(len(xs), 2)


def is_d_distinct(lam: Partition, d: int) -> bool:
    check_d(d)
    return all(a - b >= d for a, b in zip(lam, lam[1:]))


def is_twin_free(X: Iterable[int], d: int) -> bool:
    """True if no two elements of ``X`` differ by ``d`` or less."""
    check_d(d, minimum=1)
    xs = sorted(set(X))
    return all(b - a > d for a, b in zip(xs, xs[1:]))


def is_core(lam: Partition, spec: CoreSpec | Iterable[int]) -> bool:
    """Ground truth: enumerate every box's hook and look for a forbidden one."""
    forbidden = spec.forbidden if isinstance(spec, CoreSpec) else frozenset(spec)
    for row in Partition(lam).hooks():
        for h in row:
            if h in forbidden:
                return False
    return True


def is_core_via_beta(X: Iterable[int], s: int) -> bool:
    """s-core test on the beta set: every ``x >= s`` needs ``x - s`` present.

    ``x == s`` always fails since 0 is never a beta element.
    """
    xs = set(BetaSet(X))
    return all(x - s in xs for x in xs if x >= s)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield Partition(prefix)
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, prefix + (p,))

    yield from rec(n, max_part, ())


def sort_key(lam: Partition) -> tuple:
    """Canonical order: size ascending, then parts lexicographically descending."""
    return (sum(lam), tuple(-p for p in lam))
