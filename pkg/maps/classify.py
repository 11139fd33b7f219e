"""Class partitions of unicellular maps (I/II/III) and bicellular maps (BI/BII)."""

from config.constants import MapClass
from maps.bicellular import BicellularMap
from maps.permutation import Permutation
from maps.unicellular import UnicellularMap
from utils.errors import ClassUndefinedError, InvariantViolation


def _same_vertex(sigma: Permutation, a, b) -> bool:
    x = sigma(a)
    while x != a:
        if x == b:
            return True
        x = sigma(x)
    return a == b


def classify_unicellular(u: UnicellularMap) -> MapClass:
    """Class of u, decided by half-edge 1, its partner a = alpha(1) and the labels between them.

    I:   1 and a on different vertices, some 1 < k < a with alpha(k) > a
    II:  1 and a on the same vertex,   some 1 < k < a with alpha(k) > a
    III: 1 and a on different vertices, every 1 < k < a has alpha(k) < a
    """
    if u.n == 0:
        raise ClassUndefinedError("the plant-only map has no class")
    a = u.alpha(1)
    same = _same_vertex(u.sigma, 1, a)
    escapes = any(u.alpha(k) > a for k in range(2, a))

    if escapes:
        return MapClass.II if same else MapClass.I
    if not same:
        return MapClass.III
    raise InvariantViolation(f"{u} satisfies none of the class predicates")


def classify_bicellular(b: BicellularMap) -> MapClass:
    """BI when the rainbows attach to different vertices (via L1 and L2), else BII."""
    return MapClass.BII if _same_vertex(b.tau, "L1", "L2") else MapClass.BI
