"""Poincare duality between RNA diagrams and planted maps.

Collapsing each backbone of a fattened diagram into one vertex, with a rainbow arc
marking its 5' and 3' ends, gives a fatgraph (sigma', alpha'). The swap
(sigma', alpha') -> (alpha' o sigma', alpha') turns its vertices into boundary
components, so the backbone cycles become the canonical faces of a planted map.
"""

from dataclasses import dataclass
from typing import Union

from maps.bicellular import BicellularMap, canonical_faces, genus_bicellular, validate_bicellular
from maps.labels import bicellular_order, unicellular_order
from maps.permutation import Permutation, compose, cycles
from maps.unicellular import UnicellularMap, canonical_face, genus_unicellular, validate_unicellular
from rna.diagram import Diagram
from utils.errors import NotInteractionStructureError, PreconditionError


@dataclass(frozen=True)
class Fatgraph:
    sigma: Permutation
    alpha: Permutation


def position_labels(d: Diagram) -> dict:
    """Half-edge label of each paired position: paired positions numbered 1..2n left to right."""
    return {pos: label for label, pos in enumerate(d.paired_positions(), start=1)}


def _first_backbone_size(d: Diagram, labels: dict) -> int:
    return sum(1 for pos in labels if d.backbone_of(pos) == 0)


def fatgraph_of_diagram(d: Diagram) -> Fatgraph:
    """Collapsed-backbone fatgraph with rainbow arcs."""
    labels = position_labels(d)
    n = len(labels) // 2
    pairs = [(labels[i], labels[j]) for i, j in d.arcs]
    if d.backbone_count == 1:
        order = unicellular_order(n)
        return Fatgraph(canonical_face(order),
                        Permutation.from_cycles([*pairs, ("L", "R")], order))
    m = _first_backbone_size(d, labels)
    order = bicellular_order(n, m)
    return Fatgraph(canonical_faces(n, m),
                    Permutation.from_cycles([*pairs, ("L1", "R1"), ("L2", "R2")], order))


def poincare_dual(fatgraph: Fatgraph) -> tuple:
    """(sigma', alpha') -> (alpha' o sigma', alpha')."""
    return compose(fatgraph.alpha, fatgraph.sigma), fatgraph.alpha


def boundary_components(d: Diagram) -> list:
    """Boundary cycles of the fattened diagram, backbones collapsed, no rainbows."""
    labels = position_labels(d)
    if not labels:
        return []
    pairs = [(labels[i], labels[j]) for i, j in d.arcs]
    m = _first_backbone_size(d, labels) if d.backbone_count == 2 else len(labels)
    backbones = [c for c in (range(1, m + 1), range(m + 1, len(labels) + 1)) if c]
    order = tuple(range(1, len(labels) + 1))
    sigma = Permutation.from_cycles([tuple(c) for c in backbones], order)
    alpha = Permutation.from_cycles(pairs, order)
    return cycles(compose(alpha, sigma))


def diagram_to_unicellular(d: Diagram) -> UnicellularMap:
    if d.backbone_count != 1:
        raise PreconditionError("a unicellular dual needs a diagram over one backbone")
    sigma, alpha = poincare_dual(fatgraph_of_diagram(d))
    return validate_unicellular(alpha, sigma)


def diagram_to_bicellular(d: Diagram) -> BicellularMap:
    if d.backbone_count != 2:
        raise PreconditionError("a bicellular dual needs a diagram over two backbones")
    if not d.exterior_arcs():
        raise NotInteractionStructureError("not an interaction structure: no arc joins the two backbones")
    labels = position_labels(d)
    tau, beta = poincare_dual(fatgraph_of_diagram(d))
    return validate_bicellular(_first_backbone_size(d, labels), beta, tau)


def map_to_diagram(x: Union[UnicellularMap, BicellularMap]) -> Diagram:
    N = 2 * x.n
    if isinstance(x, BicellularMap):
        backbones = ((1, x.m), (x.m + 1, N))
    else:
        backbones = ((1, N),)
    return Diagram(N, backbones, x.pairs())


def genus_of_diagram(d: Diagram) -> int:
    if d.backbone_count == 1:
        return genus_unicellular(diagram_to_unicellular(d))
    return genus_bicellular(diagram_to_bicellular(d))
