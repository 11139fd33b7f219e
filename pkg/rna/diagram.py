"""RNA diagrams over one or two backbones."""

from dataclasses import dataclass

from utils.errors import DiagramError
from utils.validators import validate_arcs, validate_backbones


@dataclass(frozen=True)
class Diagram:
    """Positions 1..N split into consecutive backbones, with a partial matching of arcs.

    Arcs are stored as (i, j) with i < j, sorted by i.
    """

    N: int
    backbones: tuple
    arcs: tuple

    def __post_init__(self):
        backbones = tuple((int(a), int(b)) for a, b in self.backbones)
        ok, msg = validate_backbones(self.N, backbones)
        if not ok:
            raise DiagramError(msg)
        ok, msg = validate_arcs(self.N, self.arcs)
        if not ok:
            raise DiagramError(msg)
        object.__setattr__(self, "backbones", backbones)
        object.__setattr__(self, "arcs", tuple(sorted((min(i, j), max(i, j)) for i, j in self.arcs)))

    @property
    def backbone_count(self) -> int:
        return len(self.backbones)

    def backbone_of(self, position: int) -> int:
        for index, (start, end) in enumerate(self.backbones):
            if start <= position <= end:
                return index
        raise DiagramError(f"position {position} is outside 1..{self.N}")

    def paired_positions(self) -> list:
        return sorted(x for arc in self.arcs for x in arc)

    def unpaired_positions(self) -> list:
        paired = set(self.paired_positions())
        return [x for x in range(1, self.N + 1) if x not in paired]

    def exterior_arcs(self) -> list:
        """Arcs joining the two backbones."""
        return [(i, j) for i, j in self.arcs if self.backbone_of(i) != self.backbone_of(j)]

    def is_interaction_structure(self) -> bool:
        return self.backbone_count == 2 and bool(self.exterior_arcs())


def make_diagram(N: int, backbones=None, arcs=()) -> Diagram:
    """Diagram with a single backbone 1..N unless ``backbones`` is given."""
    if backbones is None:
        backbones = ((1, N),)
    return Diagram(N, tuple(backbones), tuple(tuple(arc) for arc in arcs))
