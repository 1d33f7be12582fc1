"""Closed forms and recurrences for counts and largest sizes.

Counts for ``(s, s+1)``-cores with d-distinct parts satisfy

    N_d(s) = s                            for 1 <= s <= d + 1
    N_d(s) = N_d(s-1) + N_d(s-d-1)        for s >= d + 2

The ``(s, s+r)`` family for ``1 <= r <= d`` is only conjectured to follow
the same recurrence with ``N_{d,r}(d+1) = d + r``; :func:`conjectured_count`
is a prediction, never ground truth.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor, gcd

from .errors import ParameterError, UnboundedError
from .partition_core import Partition, partition_from_beta_set, sort_key

FAMILIES = ("ss1", "conjecture", "straub", "anderson", "catalan", "fibonacci")


def _positive(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    return value


def _lagged_sequence(initial: list[int], lag: int, s: int) -> int:
    """Extend ``a(n) = a(n-1) + a(n-lag)`` from ``initial`` (indexed from 1) to ``a(s)``."""
    values = list(initial)
    while len(values) < s:
        values.append(values[-1] + values[-lag])
    return values[s - 1]


def count_ss1(d: int, s: int) -> int:
    _positive("d", d)
    _positive("s", s)
    return _lagged_sequence(list(range(1, d + 2)), d + 1, s)


def conjectured_count(d: int, r: int, s: int) -> int:
    """CONJECTURAL number of (s, s+r)-cores with d-distinct parts."""
    _positive("d", d)
    _positive("s", s)
    if not isinstance(r, int) or not 1 <= r <= d:
        raise ParameterError(f"r must satisfy 1 <= r <= d, got r={r!r}, d={d}")
    return _lagged_sequence(list(range(1, d + 1)) + [d + r], d + 1, s)


def largest_size_ss1(d: int, s: int) -> int:
    """Largest size of an (s, s+1)-core with d-distinct parts, in exact rationals."""
    _positive("d", d)
    _positive("s", s)
    value = Fraction(comb(s + 1, 2), d + 2) + Fraction(s * (d - 1), 2 * (d + 2))
    if s % (d + 2) not in (0, 1, 2):
        value += 1
    return floor(value)


def num_largest_ss1(d: int, s: int) -> int:
    _positive("d", d)
    _positive("s", s)
    if s == 1:
        return 1
    return 2 if s % (d + 2) == 1 else 1


def maximal_beta_set(d: int, s: int, k: int) -> list[int]:
    """The ``k`` largest-possible beta elements ``s-1, s-1-(d+1), ...``."""
    return [s - 1 - i * (d + 1) for i in range(k)]


def maximal_partitions_ss1(d: int, s: int) -> list[Partition]:
    _positive("d", d)
    if not isinstance(s, int) or s < 2:
        raise ParameterError(f"s must be >= 2, got {s!r}")
    n, rem = divmod(s, d + 2)
    if rem == 0:
        ks = [n]
    elif rem == 1:
        ks = [n, n + 1]
    else:
        ks = [n + 1]
    return sorted((partition_from_beta_set(maximal_beta_set(d, s, k)) for k in ks), key=sort_key)


def size_upper_bound(d: int, s: int, k: int) -> Fraction:
    """Upper bound ``sk + (dk - dk^2)/2 - k^2`` on the size of a k-part member."""
    return s * k + Fraction(d * k - d * k * k, 2) - k * k


def straub_count(d: int, s: int) -> int:
    """Straub's count of (s, ds-1)-cores with distinct parts."""
    _positive("d", d)
    _positive("s", s)
    a, b = 1, d
    if s == 1:
        return a
    for _ in range(s - 2):
        a, b = b, b + d * a
    return b


def anderson_count(a: int, b: int) -> int:
    """Number of (a, b)-cores, ``C(a+b, a) / (a+b)`` for coprime ``a, b``."""
    _positive("a", a)
    _positive("b", b)
    if gcd(a, b) != 1:
        raise UnboundedError(f"({a}, {b})-cores are infinitely many: {a} and {b} are not coprime")
    total, rem = divmod(comb(a + b, a), a + b)
    assert rem == 0
    return total


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def fibonacci(n: int) -> int:
    """F_1 = F_2 = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class CountSequence:
    family: str
    params: dict
    values: list[int]

    def to_dict(self) -> dict:
        return {"family": self.family, "params": dict(self.params), "first_index": 1,
                "values": list(self.values)}


def count_sequence(family: str, s_max: int, d: int | None = None, r: int | None = None
                   ) -> CountSequence:
    """Values at ``s = 1..s_max`` for one of :data:`FAMILIES`.

    ``anderson`` with offset ``r`` gives the number of (s, s+r)-cores.
    """
    _positive("s_max", s_max)
    ss = range(1, s_max + 1)
    if family == "ss1":
        return CountSequence(family, {"d": d}, [count_ss1(d, s) for s in ss])
    if family == "conjecture":
        return CountSequence(family, {"d": d, "r": r}, [conjectured_count(d, r, s) for s in ss])
    if family == "straub":
        return CountSequence(family, {"d": d}, [straub_count(d, s) for s in ss])
    if family == "anderson":
        r = 1 if r is None else r
        return CountSequence(family, {"r": r}, [anderson_count(s, s + r) for s in ss])
    if family == "catalan":
        return CountSequence(family, {}, [catalan(s) for s in ss])
    if family == "fibonacci":
        return CountSequence(family, {}, [fibonacci(s) for s in ss])
    raise ParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")
