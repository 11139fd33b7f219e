"""Numerical verification of the counting recursion and of the bijection itself."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from bijections.beta import Pair, beta_forward, beta_inverse
from bijections.planting import eta_restricted
from config.constants import MapClass, SplitRange
from enumeration.counts import CountTable, catalan_numbers, count_table
from enumeration.generators import enumerate_decompositions, enumerate_unicellular
from enumeration.matchings import first_partners
from enumeration.workers import run_partitions
from maps.classify import classify_bicellular, classify_unicellular
from maps.labels import is_plain
from maps.permutation import Permutation, cycles
from utils.errors import InvariantViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReportCell:
    """One (g, n) cell: pairs and bicellular terms on the left, c_{g+1}(n+1) on the right."""

    g: int
    n: int
    lhs_pairs: int
    lhs_bicellular: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs_pairs + self.lhs_bicellular == self.rhs


@dataclass
class VerificationReport:
    kind: str
    cells: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    class_tallies: Counter = field(default_factory=Counter)
    catalan_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (all(cell.passed for cell in self.cells)
                and not self.failures
                and self.catalan_ok is not False)


def pair_sum(table: CountTable, g: int, n: int) -> int:
    return sum(table.c(g1, i) * table.c(g + 1 - g1, n - i)
               for g1 in range(g + 2)
               for i in range(n + 1))


def verify_recursion(max_n: int, workers: int = 1,
                     split_range: SplitRange = SplitRange.INCLUSIVE,
                     table: Optional[CountTable] = None) -> VerificationReport:
    if table is None:
        table = count_table(max_n, workers, split_range, max_bicellular_n=max(max_n - 1, 0))

    report = VerificationReport("recursion")
    for n in range(1, max_n):
        for g in range((n + 1) // 2):
            cell = ReportCell(g, n, pair_sum(table, g, n), table.c2(g, n), table.c(g + 1, n + 1))
            if not cell.passed:
                logger.warning("recursion fails at g=%d n=%d: %d + %d != %d",
                               g, n, cell.lhs_pairs, cell.lhs_bicellular, cell.rhs)
            report.cells.append(cell)

    catalan = catalan_numbers(max_n)
    report.catalan_ok = all(table.c(0, n) == catalan[n] for n in range(max_n + 1))
    logger.info("recursion check over %d cells: %s", len(report.cells),
                "pass" if report.passed else "fail")
    return report


def _round_trip_partition(task: tuple) -> tuple:
    n, g, partner = task
    tallies = Counter()
    failures = []
    for u in enumerate_unicellular(n, g, first_partner=partner):
        map_class = classify_unicellular(u)
        tallies[map_class.value] += 1
        x = beta_inverse(u)
        if isinstance(x, Pair) != (map_class is MapClass.III):
            failures.append(f"class {map_class.value} map {u} decomposed to {type(x).__name__}")
        if beta_forward(x) != u:
            failures.append(f"beta_forward(beta_inverse(u)) != u for {u}")
    return tallies, failures


def verify_bijection(n: int, g: int, workers: int = 1) -> VerificationReport:
    report = VerificationReport("bijection")

    tasks = [(n, g, partner) for partner in first_partners(n)]
    for tallies, failures in run_partitions(_round_trip_partition, tasks, workers):
        report.class_tallies.update(tallies)
        report.failures.extend(failures)
    total = sum(report.class_tallies[c.value] for c in (MapClass.I, MapClass.II, MapClass.III))

    pair_count = 0
    bicellular_count = 0
    for x in enumerate_decompositions(n, g):
        if isinstance(x, Pair):
            pair_count += 1
            u = beta_forward(x)
            if classify_unicellular(u) is not MapClass.III:
                report.failures.append(f"beta_forward({x}) is not in class III")
        else:
            bicellular_count += 1
            report.class_tallies[classify_bicellular(x.b).value] += 1
            try:
                u = eta_restricted(x.b)
            except InvariantViolation as e:
                report.failures.append(str(e))
                continue
        if u.genus != g:
            report.failures.append(f"beta_forward({x}) has genus {u.genus}, expected {g}")
        if beta_inverse(u) != x:
            report.failures.append(f"beta_inverse(beta_forward(x)) != x for {x}")

    for image, source in ((MapClass.I, MapClass.BI), (MapClass.II, MapClass.BII)):
        if report.class_tallies[image.value] != report.class_tallies[source.value]:
            report.failures.append(
                f"|U^{image.value}| = {report.class_tallies[image.value]} but "
                f"|{source.value}| = {report.class_tallies[source.value]}")

    # Keyed by the domain (g-1, n-1) so it lines up with the recursion cells.
    report.cells.append(ReportCell(g - 1, n - 1, pair_count, bicellular_count, total))
    for failure in report.failures:
        logger.warning(failure)
    logger.info("bijection check n=%d g=%d over %d maps: %s", n, g, total,
                "pass" if report.passed else "fail")
    return report


def is_connected(beta: Permutation, tau: Permutation) -> bool:
    """Union-find over the non-plant vertices of tau joined by the non-rainbow edges of beta."""
    vertices = [c for c in cycles(tau) if c not in (["R1"], ["R2"])]
    parent = list(range(len(vertices)))
    index = {x: i for i, vertex in enumerate(vertices) for x in vertex}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in index:
        if is_plain(x):
            a, b = find(index[x]), find(index[beta(x)])
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(len(vertices))}) <= 1
