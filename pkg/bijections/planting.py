"""Gluing a bicellular map's first plant into its second face (eta), and the inverse cut (varsigma)."""

from config.constants import MapClass
from maps.bicellular import BicellularMap
from maps.canonical import canonical_relabel
from maps.classify import classify_bicellular, classify_unicellular
from maps.unicellular import UnicellularMap
from utils.errors import ClassUndefinedError, InvariantViolation, PreconditionError

_IMAGE_CLASS = {MapClass.BI: MapClass.I, MapClass.BII: MapClass.II}


def eta_face(b: BicellularMap) -> list:
    """The merged face (L2, L1, 1..m, R1, m+1..2n, R2) of eta(b)."""
    order = b.order
    return ["L2", *order[:b.m + 2], *order[b.m + 3:]]


def eta(b: BicellularMap) -> UnicellularMap:
    # R1 lands right after L2 in the vertex containing L2.
    return canonical_relabel([eta_face(b)], {x: b.beta(x) for x in b.order})


def eta_restricted(b: BicellularMap) -> UnicellularMap:
    """eta, checking that BI maps onto class I and BII onto class II."""
    u = eta(b)
    expected = _IMAGE_CLASS[classify_bicellular(b)]
    actual = classify_unicellular(u)
    if actual is not expected:
        raise InvariantViolation(f"eta sent {b} to class {actual.value}, expected {expected.value}")
    return u


def varsigma(u: UnicellularMap) -> BicellularMap:
    """Cut the edge {1, alpha(1)} of a class I/II map into a bicellular map with m = alpha(1) - 2."""
    try:
        map_class = classify_unicellular(u)
    except ClassUndefinedError as e:
        raise PreconditionError(f"varsigma needs a class I or II map: {e}") from e
    if map_class is MapClass.III:
        raise PreconditionError("varsigma needs a class I or II map, got class III")

    a = u.alpha(1)
    first = list(range(1, a + 1))
    second = ["L", *range(a + 1, 2 * u.n + 1), "R"]
    return canonical_relabel([first, second], {x: u.alpha(x) for x in u.order})
