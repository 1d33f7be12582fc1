"""Enumeration of core partitions with d-distinct parts.

Two independent engines:

* the *beta* engine searches finite sets of first-column hook lengths
  (beta sets) below a bound ``B`` and maps each hit back to a partition;
* the *brute* engine builds partitions row by row and checks literal hook
  lengths, never looking at beta sets.

Both return an :class:`EnumerationResult` in the same canonical order so
their outputs can be compared directly.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import EngineDisagreement, ParameterError, UnboundedError
from .partition_core import (
    CoreSpec,
    Partition,
    check_d,
    is_core,
    is_d_distinct,
    partition_from_beta_set,
    sort_key,
)

ENGINES = ("beta", "brute", "both")

# Above this bound the bitmask sweep is replaced by backtracking.
BITMASK_LIMIT = 12


@dataclass(frozen=True)
class EnumerationQuery:
    spec: CoreSpec
    d: int = 1
    bound: int | None = None
    engine: str = "both"

    def __post_init__(self):
        check_d(self.d)
        if self.bound is not None and (not isinstance(self.bound, int) or self.bound < 0):
            raise ParameterError(f"bound must be a nonnegative integer, got {self.bound!r}")
        if self.engine not in ENGINES:
            raise ParameterError(f"engine must be one of {ENGINES}, got {self.engine!r}")

    def to_dict(self) -> dict:
        return {"forbidden": list(self.spec.values), "d": self.d, "bound": self.bound}


@dataclass
class EnumerationResult:
    partitions: list[Partition]
    engine: str = "beta"
    bounded: bool = False
    count: int = field(init=False)
    max_size: int = field(init=False)
    argmax: list[Partition] = field(init=False)
    histogram: dict[int, int] = field(init=False)

    def __post_init__(self):
        self.partitions = sorted((Partition(p) for p in self.partitions), key=sort_key)
        self.count = len(self.partitions)
        sizes = Counter(sum(p) for p in self.partitions)
        self.histogram = dict(sorted(sizes.items()))
        self.max_size = max(sizes) if sizes else 0
        self.argmax = [p for p in self.partitions if sum(p) == self.max_size]

    def partition_set(self) -> set[Partition]:
        return set(self.partitions)

    def to_dict(self, query: EnumerationQuery | None = None, include_partitions: bool = True,
                include_engine: bool = True) -> dict:
        out: dict = {}
        if query is not None:
            out["query"] = query.to_dict()
        if include_engine:
            out["engine"] = self.engine
        out["bounded"] = self.bounded
        out["count"] = self.count
        out["max_size"] = self.max_size
        out["argmax"] = [list(p) for p in self.argmax]
        if include_partitions:
            out["partitions"] = [list(p) for p in self.partitions]
        out["histogram"] = {str(k): v for k, v in self.histogram.items()}
        return out

    @classmethod
    def from_dict(cls, data: dict) -> EnumerationResult:
        return cls([Partition(p) for p in data["partitions"]],
                   engine=data.get("engine", "beta"), bounded=data.get("bounded", False))


def _as_spec(spec: CoreSpec | Iterable[int]) -> CoreSpec:
    return spec if isinstance(spec, CoreSpec) else CoreSpec(spec)


def derive_bound(spec: CoreSpec | Iterable[int], d: int) -> int:
    """Largest possible beta element for ``spec``-cores with d-distinct parts.

    Takes the smallest of the bounds that apply:

    * ``1`` forbidden: only the empty partition, bound 0;
    * coprime pair ``a, b``: the Frobenius number ``ab - a - b``;
    * pair ``a < b`` with ``b - a <= d``: ``b - 1``, since any larger
      element would need both ``x - a`` and ``x - b``, which are too close.

    Raises UnboundedError when none applies.
    """
    spec = _as_spec(spec)
    check_d(d)
    values = spec.values
    candidates = []
    if 1 in spec:
        candidates.append(0)
    for a, b in combinations(values, 2):
        if gcd(a, b) == 1:
            candidates.append(max(0, a * b - a - b))
        if d >= 1 and b - a <= d:
            candidates.append(b - 1)
    if not candidates:
        raise UnboundedError(
            f"no finite bound for {set(values)}-cores with {d}-distinct parts; "
            "the family may be infinite (supply an explicit bound)")
    return min(candidates)


def _beta_sets_bitmask(B: int, d: int, forbidden: Sequence[int]) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << B):
        elems = [x for x in range(1, B + 1) if mask >> (x - 1) & 1]
        if d and any(b - a <= d for a, b in zip(elems, elems[1:])):
            continue
        present = set(elems)
        if all(x - s in present for x in elems for s in forbidden if x >= s):
            yield tuple(elems)


def _beta_sets_backtrack(B: int, d: int, forbidden: Sequence[int]) -> Iterator[tuple[int, ...]]:
    # Elements are added in increasing order, so the closure condition for a
    # new element only refers to smaller elements already decided.
    chosen: list[int] = []
    present: set[int] = set()

    def rec(start: int):
        yield tuple(chosen)
        for y in range(start, B + 1):
            if all(y < s or (y - s) in present for s in forbidden):
                chosen.append(y)
                present.add(y)
                yield from rec(y + d + 1 if d else y + 1)
                present.discard(y)
                chosen.pop()

    yield from rec(1)


def core_beta_sets(B: int, d: int, forbidden: Iterable[int], method: str = "auto"
                   ) -> Iterator[tuple[int, ...]]:
    """Subsets of ``{1..B}`` closed under the core condition and twin-free of order d.

    ``d == 0`` drops the twin-free filter.  Sets are yielded increasing.
    """
    forbidden = sorted(set(forbidden))
    if method == "auto":
        method = "bitmask" if B <= BITMASK_LIMIT else "backtrack"
    if method == "bitmask":
        return _beta_sets_bitmask(B, d, forbidden)
    if method == "backtrack":
        return _beta_sets_backtrack(B, d, forbidden)
    raise ParameterError(f"unknown subset search method {method!r}")


def twin_free_subsets(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All d-th order twin-free subsets of ``{1..n}``, yielded increasing."""
    chosen: list[int] = []

    def rec(start: int):
        yield tuple(chosen)
        for y in range(start, n + 1):
            chosen.append(y)
            yield from rec(y + d + 1)
            chosen.pop()

    yield from rec(1)


def enumerate_ss1(s: int, d: int) -> EnumerationResult:
    """(s, s+1)-cores with d-distinct parts: twin-free beta sets inside ``{1..s-1}``."""
    if not isinstance(s, int) or s < 1:
        raise ParameterError(f"s must be a positive integer, got {s!r}")
    check_d(d, minimum=1)
    return EnumerationResult([partition_from_beta_set(X) for X in twin_free_subsets(s - 1, d)])


def enumerate_s_splusr(s: int, r: int, d: int) -> EnumerationResult:
    """(s, s+r)-cores with d-distinct parts for ``1 <= r <= d``.

    Beta sets live in ``{1..s+r-1}`` minus ``s``; an element above ``s``
    needs its ``s``-shift present, and the ``s+r`` condition is vacuous.
    """
    if not isinstance(s, int) or s < 1:
        raise ParameterError(f"s must be a positive integer, got {s!r}")
    check_d(d, minimum=1)
    if not isinstance(r, int) or not 1 <= r <= d:
        raise ParameterError(
            f"r must satisfy 1 <= r <= d (got r={r}, d={d}); use enumerate_general instead")
    sets = core_beta_sets(s + r - 1, d, [s])
    return EnumerationResult([partition_from_beta_set(X) for X in sets])


def enumerate_general(spec: CoreSpec | Iterable[int], d: int, bound: int | None = None,
                      method: str = "auto") -> EnumerationResult:
    spec = _as_spec(spec)
    check_d(d)
    B = derive_bound(spec, d) if bound is None else bound
    sets = core_beta_sets(B, d, spec.values, method=method)
    return EnumerationResult([partition_from_beta_set(X) for X in sets],
                             bounded=bound is not None)


def _brute_partitions(B: int, d: int, forbidden: frozenset[int]) -> Iterator[tuple[int, ...]]:
    # Rows are stacked from the bottom up.  A row's hooks depend only on the
    # rows below it, so a forbidden hook in the new top row can never be
    # repaired by adding rows above and the branch is cut.
    rows: list[int] = []          # bottom row first
    heights = [0] * (B + 2)       # heights[j] = boxes in column j

    def rec():
        yield tuple(reversed(rows))
        length = len(rows) + 1
        lo = (rows[-1] + d) if rows else 1
        hi = B - length + 1       # top beta element p + length - 1 <= B
        for p in range(max(lo, 1), hi + 1):
            if any((p - j + heights[j] + 1) in forbidden for j in range(1, p + 1)):
                continue
            rows.append(p)
            for j in range(1, p + 1):
                heights[j] += 1
            yield from rec()
            for j in range(1, p + 1):
                heights[j] -= 1
            rows.pop()

    yield from rec()


def enumerate_bruteforce(spec: CoreSpec | Iterable[int], d: int, bound: int | None = None
                         ) -> EnumerationResult:
    """Direct partition search, filtered by :func:`is_core` and :func:`is_d_distinct`."""
    spec = _as_spec(spec)
    check_d(d)
    B = derive_bound(spec, d) if bound is None else bound
    found = [Partition(p) for p in _brute_partitions(B, d, spec.forbidden)]
    kept = [p for p in found if is_core(p, spec) and is_d_distinct(p, d)]
    return EnumerationResult(kept, engine="brute", bounded=bound is not None)


def _splusr_shape(spec: CoreSpec, d: int) -> tuple[int, int] | None:
    values = spec.values
    if len(values) == 2 and d >= 1 and 1 <= values[1] - values[0] <= d:
        return values[0], values[1] - values[0]
    return None


def run_beta(query: EnumerationQuery) -> EnumerationResult:
    if query.bound is None:
        shape = _splusr_shape(query.spec, query.d)
        if shape is not None:
            s, r = shape
            return enumerate_ss1(s, query.d) if r == 1 else enumerate_s_splusr(s, r, query.d)
    return enumerate_general(query.spec, query.d, query.bound)


def run_query(query: EnumerationQuery) -> EnumerationResult:
    """Dispatch to the selected engine; ``both`` runs each and compares."""
    if query.engine == "beta":
        return run_beta(query)
    if query.engine == "brute":
        return enumerate_bruteforce(query.spec, query.d, query.bound)
    fast = run_beta(query)
    slow = enumerate_bruteforce(query.spec, query.d, query.bound)
    if fast.partitions != slow.partitions:
        only_beta = sorted(fast.partition_set() - slow.partition_set(), key=sort_key)
        only_brute = sorted(slow.partition_set() - fast.partition_set(), key=sort_key)
        raise EngineDisagreement(
            f"engines disagree on {query.to_dict()}: beta-only {only_beta[:5]}, "
            f"brute-only {only_brute[:5]}")
    fast.engine = "both"
    return fast


def enumerate_query(forbidden: Iterable[int], d: int, bound: int | None = None,
                    engine: str = "both") -> EnumerationResult:
    return run_query(EnumerationQuery(CoreSpec(forbidden), d, bound, engine))
