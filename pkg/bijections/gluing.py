"""Gluing a pair of unicellular maps into a class-III map, and cutting it back.

theta places u1's face right after u2's L end:

    (L_u2, L_u1, 1_u1, ..., 2j_u1, R_u1, 1_u2, ..., R_u2)

which inserts u1's plant half-edge R_u1 into u2's first vertex right after its
minimum. u1's plant edge (L_u1, R_u1) becomes an ordinary edge, so the result has
j + (n - j) + 1 edges and genus g1 + g2.
"""

from config.constants import MapClass
from maps.canonical import canonical_relabel
from maps.classify import classify_unicellular
from maps.unicellular import UnicellularMap
from utils.errors import ClassUndefinedError, InvariantViolation, PreconditionError

_FIRST = "u1"
_SECOND = "u2"


def theta(u1: UnicellularMap, u2: UnicellularMap) -> UnicellularMap:
    face = [(_SECOND, "L")]
    face += [(_FIRST, x) for x in u1.order]
    face += [(_SECOND, x) for x in u2.order[1:]]

    pairing = {(_FIRST, x): (_FIRST, u1.alpha(x)) for x in u1.order}
    pairing.update({(_SECOND, x): (_SECOND, u2.alpha(x)) for x in u2.order})
    return canonical_relabel([face], pairing)


def psi(u: UnicellularMap) -> tuple:
    """Cut the edge {1, alpha(1)} of a class-III map into (u1, u2)."""
    try:
        map_class = classify_unicellular(u)
    except ClassUndefinedError as e:
        raise PreconditionError(f"psi needs a class-III map: {e}") from e
    if map_class is not MapClass.III:
        raise PreconditionError(f"psi needs a class-III map, got class {map_class.value}")

    a = u.alpha(1)
    if a % 2:
        raise InvariantViolation(f"alpha(1)={a} is odd in class-III map {u}")

    # H1 = {1, ..., alpha(1)} is closed under alpha; its ends are u1's rainbow.
    first = list(range(1, a + 1))
    second = ["L", *range(a + 1, 2 * u.n + 1), "R"]
    u1 = canonical_relabel([first], {x: u.alpha(x) for x in first})
    u2 = canonical_relabel([second], {x: u.alpha(x) for x in second})
    return u1, u2
