"""Rewiring an interaction structure over two backbones into a diagram over one.

The pipeline is: bicellular dual, glue the first plant into the second face
(eta), then read the unicellular map back as a one-backbone diagram. The first
rainbow becomes a real arc, so the output has one arc more and genus one higher.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from bijections.planting import eta, eta_face
from maps.canonical import canonical_labels
from rna.diagram import Diagram
from rna.duality import diagram_to_bicellular, map_to_diagram, position_labels

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    original_position: Optional[int]
    half_edge: Optional[Union[int, str]]
    new_position: Optional[int]


@dataclass(frozen=True)
class RewireTrace:
    """Where every input position went.

    Paired positions carry a half-edge and a new position. Unpaired positions have
    neither. The glued rainbow ends (L1, R1) have a new position but no original one.
    """

    entries: tuple
    genus_before: int
    genus_after: int
    arcs_before: int
    arcs_after: int

    def new_position_of(self, original_position: int) -> Optional[int]:
        for entry in self.entries:
            if entry.original_position == original_position:
                return entry.new_position
        raise KeyError(original_position)


def rewire(d: Diagram) -> tuple:
    b = diagram_to_bicellular(d)
    u = eta(b)
    out = map_to_diagram(u)

    relabel = canonical_labels([eta_face(b)])
    labels = position_labels(d)
    entries = []
    for pos in range(1, d.N + 1):
        label = labels.get(pos)
        entries.append(TraceEntry(pos, label, relabel[label] if label is not None else None))
    for tag in ("L1", "R1"):
        entries.append(TraceEntry(None, tag, relabel[tag]))

    trace = RewireTrace(tuple(entries), b.genus, u.genus, len(d.arcs), len(out.arcs))
    logger.debug("rewired %d arcs (genus %d) into %d arcs (genus %d)",
                 trace.arcs_before, trace.genus_before, trace.arcs_after, trace.genus_after)
    return out, trace
