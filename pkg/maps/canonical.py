"""Order-preserving relabeling of composite faces onto canonical label sets.

Gluing and cutting build faces out of composite labels (tagged half-edges of the
input maps). Walking each face in order and renaming positionally gives the
canonical map: first and last entries of a face become its rainbow ends.
"""

from typing import Mapping, Sequence, Union

from maps.bicellular import BicellularMap, make_bicellular
from maps.labels import bicellular_order, unicellular_order
from maps.unicellular import UnicellularMap, make_unicellular
from utils.errors import StructuralError


def _as_mapping(pairing) -> dict:
    if isinstance(pairing, Mapping):
        return dict(pairing)
    result = {}
    for a, b in pairing:
        if a in result or b in result:
            raise StructuralError(f"label in pair ({a!r}, {b!r}) is paired twice")
        result[a] = b
        result[b] = a
    return result


def canonical_labels(faces: Sequence[Sequence]) -> dict:
    """Map each composite label to its canonical label, face by face."""
    if len(faces) == 1:
        targets = [unicellular_order((len(faces[0]) - 2) // 2)]
    elif len(faces) == 2:
        m = len(faces[0]) - 2
        n = (len(faces[0]) + len(faces[1]) - 4) // 2
        order = bicellular_order(n, m)
        targets = [order[:m + 2], order[m + 2:]]
    else:
        raise StructuralError(f"expected one or two faces, got {len(faces)}")

    mapping = {}
    for face, target in zip(faces, targets):
        if len(face) != len(target):
            raise StructuralError("face lengths do not add up to an even half-edge count")
        mapping.update(zip(face, target))
    return mapping


def canonical_relabel(faces: Sequence[Sequence], pairing) -> Union[UnicellularMap, BicellularMap]:
    pairing = _as_mapping(pairing)
    labels = [x for face in faces for x in face]
    if len(set(labels)) != len(labels):
        raise StructuralError("faces repeat a label")
    if set(pairing) != set(labels):
        raise StructuralError("pairing and faces cover different labels")
    for x, y in pairing.items():
        if x == y or pairing.get(y) != x:
            raise StructuralError(f"pairing is not a fixed-point-free involution at {x!r}")
    for face in faces:
        if len(face) < 2 or pairing[face[0]] != face[-1]:
            raise StructuralError("each face must start and end with the two ends of its rainbow")

    rename = canonical_labels(faces)
    pairs = [(rename[x], rename[y]) for x, y in pairing.items()
             if isinstance(rename[x], int) and rename[x] < rename[y]]
    n = len(pairs)
    if len(faces) == 1:
        return make_unicellular(n, pairs)
    return make_bicellular(n, len(faces[0]) - 2, pairs)


def equals(a, b) -> bool:
    return type(a) is type(b) and a == b
