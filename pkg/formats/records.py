"""Text records for maps, diagrams and rewiring traces.

A file holds one or more records separated by blank lines. Map records start with
``type``, diagram records with ``N``. Lines starting with ``#`` are comments.
"""

import re
from typing import Union

from config.constants import MapKind
from formats.cycles import format_cycles, format_permutation, parse_cycles
from maps.bicellular import BicellularMap, canonical_faces, validate_bicellular
from maps.labels import bicellular_order, unicellular_order
from maps.permutation import Permutation, compose
from maps.unicellular import UnicellularMap, canonical_face, validate_unicellular
from rna.diagram import Diagram
from rna.rewire import RewireTrace
from utils.errors import MapsError, RecordParseError
from utils.validators import validate_arcs, validate_split

_MAP_KEYS = ("type", "edges", "m", "alpha", "sigma")
_DIAGRAM_KEYS = ("N", "backbones", "arcs")
_INTERVAL = re.compile(r"^(\d+)\.\.(\d+)$", re.ASCII)
_ARC = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", re.ASCII)

Record = Union[UnicellularMap, BicellularMap, Diagram]


class _Field:
    __slots__ = ("line", "column", "value")

    def __init__(self, line: int, column: int, value: str):
        self.line = line
        self.column = column
        self.value = value


def _blocks(text: str) -> list:
    blocks, current = [], []
    for number, raw in enumerate(text.splitlines(), start=1):
        if raw.strip().startswith("#"):
            continue
        if not raw.strip():
            if current:
                blocks.append(current)
                current = []
            continue
        current.append((number, raw.rstrip()))
    if current:
        blocks.append(current)
    return blocks


def _fields(block: list, allowed: tuple) -> dict:
    fields = {}
    for number, raw in block:
        indent = len(raw) - len(raw.lstrip())
        keyword, _, value = raw.strip().partition(" ")
        if keyword not in allowed:
            raise RecordParseError(f"unknown keyword {keyword!r}", number, indent + 1)
        if keyword in fields:
            raise RecordParseError(f"duplicate {keyword!r} line", number, indent + 1)
        column = indent + len(keyword) + 2 + (len(value) - len(value.lstrip()))
        fields[keyword] = _Field(number, column, value.strip())
    return fields


def _require(fields: dict, key: str, block: list) -> _Field:
    if key not in fields:
        raise RecordParseError(f"missing {key!r} line", block[-1][0], 1)
    return fields[key]


def _int(field: _Field, minimum: int = 0) -> int:
    if not (field.value.isascii() and field.value.isdigit()) or int(field.value) < minimum:
        raise RecordParseError(f"expected an integer >= {minimum}, got {field.value!r}",
                               field.line, field.column)
    return int(field.value)


def _parse_map(fields: dict, block: list) -> Union[UnicellularMap, BicellularMap]:
    kind_field = fields["type"]
    try:
        kind = MapKind(kind_field.value)
    except ValueError:
        raise RecordParseError(f"unknown map type {kind_field.value!r}",
                               kind_field.line, kind_field.column) from None
    n = _int(_require(fields, "edges", block))

    if kind is MapKind.BICELLULAR:
        m_field = _require(fields, "m", block)
        m = _int(m_field)
        ok, msg = validate_split(n, m)
        if not ok:
            raise RecordParseError(msg, m_field.line, m_field.column)
        order = bicellular_order(n, m)
        rainbows = [("L1", "R1"), ("L2", "R2")]
        face = canonical_faces(n, m)
    else:
        if "m" in fields:
            raise RecordParseError("'m' is only valid for bicellular maps", fields["m"].line, 1)
        m = None
        order = unicellular_order(n)
        rainbows = [("L", "R")]
        face = canonical_face(order)

    alpha_field = _require(fields, "alpha", block)
    alpha_cycles = parse_cycles(alpha_field.value, alpha_field.line, alpha_field.column)
    mentioned = {x for c in alpha_cycles for x in c}
    for left, right in rainbows:
        if left not in mentioned and right not in mentioned:
            alpha_cycles.append([left, right])
        elif (left in mentioned) != (right in mentioned):
            raise RecordParseError(f"rainbow end given without its partner ({left},{right})",
                                   alpha_field.line, alpha_field.column)

    sigma_field = fields.get("sigma")
    try:
        for label in mentioned:
            if label not in order:
                raise RecordParseError(f"label {label} does not belong to this map",
                                       alpha_field.line, alpha_field.column)
        alpha = Permutation.from_cycles(alpha_cycles, order)
        if sigma_field is not None:
            sigma_cycles = parse_cycles(sigma_field.value, sigma_field.line, sigma_field.column)
            sigma = Permutation.from_cycles(sigma_cycles, order)
        else:
            sigma = compose(alpha, face)
        if kind is MapKind.BICELLULAR:
            return validate_bicellular(m, alpha, sigma)
        return validate_unicellular(alpha, sigma)
    except RecordParseError:
        raise
    except MapsError as e:
        where = sigma_field if sigma_field is not None else alpha_field
        raise RecordParseError(str(e), where.line, where.column) from None


def _parse_diagram(fields: dict, block: list) -> Diagram:
    N = _int(fields["N"])
    backbones_field = _require(fields, "backbones", block)
    backbones = []
    for token in backbones_field.value.split():
        match = _INTERVAL.match(token)
        if not match:
            raise RecordParseError(f"expected a backbone a..b, got {token!r}",
                                   backbones_field.line,
                                   backbones_field.column + backbones_field.value.index(token))
        backbones.append((int(match.group(1)), int(match.group(2))))

    arcs_field = fields.get("arcs")
    arcs = []
    if arcs_field is not None:
        value = arcs_field.value
        leftover = _ARC.sub(lambda match: " " * len(match.group(0)), value)
        if leftover.strip():
            bad = len(leftover) - len(leftover.lstrip())
            raise RecordParseError("expected arcs written as (i,j)", arcs_field.line, arcs_field.column + bad)
        arcs = [(int(a), int(b)) for a, b in _ARC.findall(value)]
        ok, msg = validate_arcs(N, arcs)
        if not ok:
            raise RecordParseError(msg, arcs_field.line, arcs_field.column)

    try:
        return Diagram(N, tuple(backbones), tuple(arcs))
    except MapsError as e:
        raise RecordParseError(str(e), backbones_field.line, 1) from None


def parse_records(text: str) -> list:
    records = []
    for block in _blocks(text):
        number, first = block[0]
        keyword = first.strip().partition(" ")[0]
        if keyword == "type":
            records.append(_parse_map(_fields(block, _MAP_KEYS), block))
        elif keyword == "N":
            records.append(_parse_diagram(_fields(block, _DIAGRAM_KEYS), block))
        else:
            raise RecordParseError("a record must start with 'type' (map) or 'N' (diagram)", number, 1)
    return records


def format_map(x: Union[UnicellularMap, BicellularMap]) -> str:
    if isinstance(x, BicellularMap):
        lines = [f"type {MapKind.BICELLULAR.value}", f"edges {x.n}", f"m {x.m}"]
        sigma = x.tau
    else:
        lines = [f"type {MapKind.UNICELLULAR.value}", f"edges {x.n}"]
        sigma = x.sigma
    lines.append(f"alpha {format_cycles(x.pairs())}".rstrip())
    lines.append(f"sigma {format_permutation(sigma)}")
    return "\n".join(lines)


def format_diagram(d: Diagram) -> str:
    arcs = " ".join(f"({i},{j})" for i, j in d.arcs)
    return "\n".join([
        f"N {d.N}",
        "backbones " + " ".join(f"{a}..{b}" for a, b in d.backbones),
        f"arcs {arcs}".rstrip(),
    ])


def format_record(record: Record) -> str:
    if isinstance(record, Diagram):
        return format_diagram(record)
    return format_map(record)


def format_trace(trace: RewireTrace) -> str:
    def cell(value):
        return "-" if value is None else str(value)

    lines = [
        f"# genus {trace.genus_before} -> {trace.genus_after}",
        f"# arcs {trace.arcs_before} -> {trace.arcs_after}",
        "orig_pos half_edge new_pos",
    ]
    for entry in trace.entries:
        lines.append(" ".join(cell(v) for v in (entry.original_position, entry.half_edge, entry.new_position)))
    return "\n".join(lines)
