"""Invariant checks at reduced ranges, for ``dcores selftest``."""
from __future__ import annotations

from typing import Callable

from .beta_search import enumerate_bruteforce, enumerate_general, enumerate_s_splusr, enumerate_ss1
from .formulas import (
    anderson_count,
    catalan,
    conjectured_count,
    count_ss1,
    fibonacci,
    largest_size_ss1,
    maximal_partitions_ss1,
    num_largest_ss1,
    straub_count,
)
from .gf import gf_equal, gf_from_recurrence, series_coefficients, RationalGF
from .partition_core import (
    beta_set,
    hook_length,
    hook_length_literal,
    is_core,
    is_core_via_beta,
    is_d_distinct,
    is_twin_free,
    partition_from_beta_set,
    partitions_of,
    size_from_beta_set,
)


def _all_partitions(n_max: int):
    for n in range(n_max + 1):
        yield from partitions_of(n)


def check_bijection() -> bool:
    return all(partition_from_beta_set(beta_set(p)) == p
               and size_from_beta_set(beta_set(p)) == p.size
               for p in _all_partitions(14))


def check_hooks() -> bool:
    return all(hook_length(p, i, j) == hook_length_literal(p, i, j)
               for p in _all_partitions(10) for i, j in p.boxes())


def check_twin_free() -> bool:
    return all(is_d_distinct(p, d) == is_twin_free(beta_set(p), d)
               for p in _all_partitions(14) for d in range(1, 4))


def check_core_via_beta() -> bool:
    return all(is_core(p, {s}) == is_core_via_beta(beta_set(p), s)
               for p in _all_partitions(12) for s in range(1, 8))


def check_engines() -> bool:
    for d in range(1, 4):
        for s in range(1, 9):
            if enumerate_ss1(s, d).partitions != enumerate_bruteforce({s, s + 1}, d).partitions:
                return False
            for r in range(2, d + 1):
                if (enumerate_s_splusr(s, r, d).partitions
                        != enumerate_bruteforce({s, s + r}, d).partitions):
                    return False
    return True


def check_ss1_theorems() -> bool:
    for d in range(1, 4):
        for s in range(2, 10):
            res = enumerate_ss1(s, d)
            if (res.count != count_ss1(d, s) or res.max_size != largest_size_ss1(d, s)
                    or len(res.argmax) != num_largest_ss1(d, s)
                    or res.argmax != maximal_partitions_ss1(d, s)):
                return False
    return True


def check_conjecture_small() -> bool:
    return all(enumerate_s_splusr(s, r, d).count == conjectured_count(d, r, s)
               for d in range(1, 5) for r in range(1, d + 1) for s in range(1, 9))


def check_reductions() -> bool:
    fib = all(count_ss1(1, s) == fibonacci(s + 1) for s in range(1, 15))
    cat = all(enumerate_general({s, s + 1}, 0).count == catalan(s) for s in range(1, 6))
    anderson = all(enumerate_general({a, b}, 0).count == anderson_count(a, b)
                   for a, b in [(2, 3), (2, 5), (3, 5), (3, 7), (4, 5)])
    straub = all(enumerate_bruteforce({s, d * s - 1} - {0}, 1).count == straub_count(d, s)
                 for d in range(1, 3) for s in range(1, 5))
    return fib and cat and anderson and straub


def check_paper_gfs() -> bool:
    n2 = gf_from_recurrence([1, 2, 3], [(1, 1), (3, 1)])
    n32 = gf_from_recurrence([1, 2, 3, 5], [(1, 1), (4, 1)])
    return (gf_equal(n2, RationalGF([-1, -1, -1], [-1, 1, 0, 1]))
            and gf_equal(n32, RationalGF([-1, -1, -1, -2], [-1, 1, 0, 0, 1]))
            and series_coefficients(n2, 8) == [1, 2, 3, 4, 6, 9, 13, 19]
            and series_coefficients(n32, 9) == [1, 2, 3, 5, 6, 8, 11, 16, 22])


CHECKS: dict[str, Callable[[], bool]] = {
    "bijection+size roundtrip": check_bijection,
    "hook formula vs literal": check_hooks,
    "d-distinct <-> twin-free": check_twin_free,
    "core vs beta closure": check_core_via_beta,
    "beta vs brute engines": check_engines,
    "count/largest/maximal theorems": check_ss1_theorems,
    "conjecture (small range)": check_conjecture_small,
    "Fibonacci/Catalan/Anderson/Straub": check_reductions,
    "paper generating functions": check_paper_gfs,
}


def run_selftest() -> dict[str, bool]:
    return {name: bool(fn()) for name, fn in CHECKS.items()}
