"""Plain-text renderings of count tables and verification reports."""

from config.constants import MapClass
from enumeration.counts import CountTable
from enumeration.verify import VerificationReport


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def format_count_table(table: CountTable) -> str:
    lines = ["g n count kind"]
    lines += [f"{g} {n} {count} {kind.value}" for g, n, count, kind in table.rows()]
    return "\n".join(lines)


def format_cell(cell) -> str:
    return (f"g={cell.g} n={cell.n} pairs={cell.lhs_pairs} bicellular={cell.lhs_bicellular} "
            f"rhs={cell.rhs} {_verdict(cell.passed)}")


def format_recursion_report(report: VerificationReport) -> str:
    lines = [format_cell(cell) for cell in report.cells]
    if report.catalan_ok is not None:
        lines.append(f"catalan {_verdict(report.catalan_ok)}")
    lines.append(f"RECURSION {_verdict(report.passed)} cells={len(report.cells)}")
    return "\n".join(lines)


def format_bijection_report(report: VerificationReport, max_failures: int = 20) -> str:
    tallies = " ".join(f"{c.value}={report.class_tallies[c.value]}" for c in MapClass)
    lines = [f"classes {tallies}"]
    lines += [format_cell(cell) for cell in report.cells]
    lines += [f"FAIL {failure}" for failure in report.failures[:max_failures]]
    maps = sum(report.class_tallies[c.value] for c in (MapClass.I, MapClass.II, MapClass.III))
    lines.append(f"BIJECTION {_verdict(report.passed)} maps={maps} failures={len(report.failures)}")
    return "\n".join(lines)
