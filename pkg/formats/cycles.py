"""Cycle notation such as ``(L,3,2,1,4)(R)``; whitespace is ignored."""

from typing import Iterable, Sequence

from maps.labels import parse_label
from maps.permutation import Permutation, cycles
from utils.errors import RecordParseError


def parse_cycles(text: str, line: int = 1, column: int = 1) -> list:
    """Parse cycle notation into lists of labels.

    ``line`` and ``column`` locate ``text`` inside a larger record for error messages.
    """
    result = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise RecordParseError(f"expected '(' but found {ch!r}", line, column + i)
        close = text.find(")", i)
        if close < 0:
            raise RecordParseError("unclosed cycle", line, column + i)
        body = text[i + 1:close]
        if "(" in body:
            raise RecordParseError("nested '(' inside a cycle", line, column + i + 1 + body.index("("))
        cycle = []
        offset = i + 1
        for token in body.split(","):
            if not token.strip():
                raise RecordParseError("empty label in cycle", line, column + offset)
            try:
                cycle.append(parse_label(token))
            except ValueError as e:
                raise RecordParseError(str(e), line, column + offset + len(token) - len(token.lstrip())) from None
            offset += len(token) + 1
        result.append(cycle)
        i = close + 1
    return result


def format_cycles(cycle_list: Iterable[Sequence]) -> str:
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycle_list)


def format_permutation(p: Permutation) -> str:
    """All cycles, fixed points included, each from its minimum."""
    return format_cycles(cycles(p))
