"""Spreadsheet export of count tables via openpyxl."""

from pathlib import Path

from config.constants import CountKind
from enumeration.counts import CountTable


def export_count_table_xlsx(table: CountTable, path) -> Path:
    """Write one sheet per map kind: rows are genera, columns are edge counts."""
    from openpyxl import Workbook
    from openpyxl.styles import Font

    path = Path(path)
    wb = Workbook()
    wb.remove(wb.active)

    for kind, title, max_n, lookup in (
        (CountKind.UNICELLULAR, "unicellular", table.max_n, table.c),
        (CountKind.BICELLULAR, "bicellular", table.max_bicellular_n, table.c2),
    ):
        ws = wb.create_sheet(title)
        first_n = 0 if kind is CountKind.UNICELLULAR else 1
        edge_counts = list(range(first_n, max_n + 1))
        ws.append(["g \\ n", *edge_counts])
        for cell in ws[1]:
            cell.font = Font(bold=True)
        for g in range(max_n // 2 + 1):
            ws.append([g, *(lookup(g, n) for n in edge_counts)])
            ws.cell(row=g + 2, column=1).font = Font(bold=True)

    path.parent.mkdir(parents=True, exist_ok=True)
    wb.save(path)
    return path
