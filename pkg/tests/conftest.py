import pytest

from dcores.partition_core import Partition

# Filled by test_acceptance; printed after the run.
ACCEPTANCE_LINES: list[str] = []


def all_partitions(n):
    """Partitions of n by peeling off the smallest part (ascending build).

    Deliberately a different construction from dcores.partition_core.partitions_of.
    """
    def rec(rest, smallest):
        if rest == 0:
            yield ()
            return
        for p in range(smallest, rest + 1):
            for tail in rec(rest - p, p):
                yield (p,) + tail

    for asc in rec(n, 1):
        yield Partition(tuple(reversed(asc)))


def partitions_up_to(n_max):
    for n in range(n_max + 1):
        yield from all_partitions(n)


def euler_partition_counts(n_max):
    """p(0..n_max) via the pentagonal number recurrence."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    monkeypatch.setenv("DCORES_CACHE_DIR", str(cache))
    return cache


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
