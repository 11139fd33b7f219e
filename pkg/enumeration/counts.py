"""Exact count tables c_g(n) = |U_{g,n}| and c2_g(n) = |B_{g,n}| by brute force."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from config.constants import CountKind, SplitRange
from enumeration.workers import (
    bicellular_genus_counts,
    bicellular_tasks,
    run_partitions,
    unicellular_genus_counts,
    unicellular_tasks,
)

logger = logging.getLogger(__name__)


@dataclass
class CountTable:
    max_n: int
    max_bicellular_n: int
    split_range: SplitRange = SplitRange.INCLUSIVE
    uni: dict = field(default_factory=dict)
    bi: dict = field(default_factory=dict)

    def c(self, g: int, n: int) -> int:
        """|U_{g,n}|; zero outside the computed range or when n < 2g."""
        if g < 0 or n < 0:
            return 0
        if n > self.max_n:
            raise KeyError(f"c_{g}({n}) is beyond the table bound {self.max_n}")
        return self.uni.get((g, n), 0)

    def c2(self, g: int, n: int) -> int:
        if g < 0 or n < 0:
            return 0
        if n > self.max_bicellular_n:
            raise KeyError(f"c2_{g}({n}) is beyond the table bound {self.max_bicellular_n}")
        return self.bi.get((g, n), 0)

    def rows(self) -> list:
        """(g, n, count, kind) for every cell in range, unicellular first."""
        rows = []
        for n in range(self.max_n + 1):
            for g in range(n // 2 + 1):
                rows.append((g, n, self.c(g, n), CountKind.UNICELLULAR))
        for n in range(1, self.max_bicellular_n + 1):
            for g in range((n - 1) // 2 + 1):
                rows.append((g, n, self.c2(g, n), CountKind.BICELLULAR))
        return rows


def count_table(max_n: int, workers: int = 1,
                split_range: SplitRange = SplitRange.INCLUSIVE,
                max_bicellular_n: Optional[int] = None) -> CountTable:
    if max_bicellular_n is None:
        max_bicellular_n = max_n
    table = CountTable(max_n, max_bicellular_n, split_range)

    for n in range(max_n + 1):
        totals = sum(run_partitions(unicellular_genus_counts, unicellular_tasks(n), workers), Counter())
        for g, count in totals.items():
            table.uni[(g, n)] = count

    for n in range(1, max_bicellular_n + 1):
        totals = sum(run_partitions(bicellular_genus_counts, bicellular_tasks(n, split_range), workers),
                     Counter())
        for g, count in totals.items():
            table.bi[(g, n)] = count

    logger.info("count table built: max_n=%d, bicellular up to %d, split=%s",
                max_n, max_bicellular_n, split_range.value)
    return table


def catalan_numbers(max_n: int) -> list:
    """C_0..C_max_n from C_{n+1} = sum_i C_i C_{n-i}."""
    values = [1]
    for n in range(max_n):
        values.append(sum(values[i] * values[n - i] for i in range(n + 1)))
    return values
