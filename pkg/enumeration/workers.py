"""Deterministic fan-out of enumeration work over processes.

Work is partitioned by the partner of half-edge 1; results are returned in
partition order, so a parallel run merges to exactly the serial result.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from config.constants import SplitRange
from enumeration.generators import enumerate_bicellular, enumerate_unicellular
from enumeration.matchings import first_partners

logger = logging.getLogger(__name__)


def run_partitions(fn: Callable, tasks: Sequence, workers: int = 1) -> list:
    """Apply ``fn`` to every task, preserving task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    logger.debug("fanning %d partitions out to %d workers", len(tasks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def unicellular_genus_counts(task: tuple) -> Counter:
    n, partner = task
    return Counter(u.genus for u in enumerate_unicellular(n, first_partner=partner))


def bicellular_genus_counts(task: tuple) -> Counter:
    n, m, partner, split_range = task
    return Counter(b.genus for b in enumerate_bicellular(
        n, split_range=split_range, m=m, first_partner=partner))


def unicellular_tasks(n: int) -> list:
    return [(n, partner) for partner in first_partners(n)]


def bicellular_tasks(n: int, split_range: SplitRange) -> list:
    return [(n, m, partner, split_range)
            for m in split_range.values(n)
            for partner in first_partners(n)]
