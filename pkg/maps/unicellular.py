"""Planted unicellular maps.

The face is always the canonical cycle (L, 1, 2, ..., 2n, R), so a map is fixed by
its edge involution alpha and the vertex permutation follows as sigma = alpha o gamma.
"""

from dataclasses import dataclass

from config.constants import ValidationFailure
from maps.labels import Label, is_plain, unicellular_order
from maps.permutation import Permutation, compose, cycles
from utils.errors import InvariantViolation, ValidationError
from utils.validators import validate_pairing


def canonical_face(order) -> Permutation:
    """Single cycle visiting ``order`` left to right."""
    return Permutation.from_cycles([order], order)


@dataclass(frozen=True)
class UnicellularMap:
    n: int
    alpha: Permutation
    sigma: Permutation

    @property
    def order(self) -> tuple:
        return unicellular_order(self.n)

    @property
    def gamma(self) -> Permutation:
        return canonical_face(self.order)

    @property
    def genus(self) -> int:
        return genus_unicellular(self)

    def pairs(self) -> tuple:
        """Non-plant edges as sorted (a, b) pairs with a < b."""
        return tuple((x, self.alpha(x)) for x in range(1, 2 * self.n + 1) if x < self.alpha(x))

    def vertices(self) -> list:
        """Vertex cycles, each starting at its first face arrival, in vertex order."""
        return cycles(self.sigma)

    def vertex_of(self, label: Label) -> tuple:
        for vertex in self.vertices():
            if label in vertex:
                return tuple(vertex)
        raise KeyError(label)

    def plant_vertices(self) -> list:
        return [("R",)]

    def __str__(self) -> str:
        return f"UnicellularMap(n={self.n}, pairs={list(self.pairs())})"


def make_unicellular(n: int, pairing) -> UnicellularMap:
    pairing = [tuple(p) for p in pairing]
    ok, msg = validate_pairing(n, pairing)
    if not ok:
        raise ValidationError(ValidationFailure.NOT_PERFECT_MATCHING, msg)

    order = unicellular_order(n)
    alpha = Permutation.from_cycles([*pairing, ("L", "R")], order)
    sigma = compose(alpha, canonical_face(order))
    return UnicellularMap(n, alpha, sigma)


def _plain_count(labels) -> int:
    plain = sorted(x for x in labels if is_plain(x))
    if plain != list(range(1, len(plain) + 1)) or len(plain) % 2:
        return -1
    return len(plain) // 2


def validate_unicellular(alpha: Permutation, sigma: Permutation) -> UnicellularMap:
    n = _plain_count(alpha.labels)
    if n < 0 or alpha.labels != frozenset(unicellular_order(n)):
        raise ValidationError(ValidationFailure.LABEL_SET,
                              "alpha must act on L, 1..2n, R")
    if sigma.labels != alpha.labels:
        raise ValidationError(ValidationFailure.LABEL_SET,
                              "alpha and sigma act on different label sets")

    for x, y in alpha.items():
        if alpha(y) != x:
            raise ValidationError(ValidationFailure.NOT_INVOLUTION,
                                  f"alpha is not an involution at {x}")
    for x, y in alpha.items():
        if x == y:
            raise ValidationError(ValidationFailure.FIXED_POINT,
                                  f"alpha fixes half-edge {x}")
    if alpha("L") != "R":
        raise ValidationError(ValidationFailure.PLANT_MISSING,
                              "alpha does not contain the plant edge (L,R)")

    order = unicellular_order(n)
    alpha = alpha.with_order(order)
    sigma = sigma.with_order(order)
    if compose(alpha, sigma) != canonical_face(order):
        raise ValidationError(ValidationFailure.FACE_NOT_CANONICAL,
                              "alpha o sigma is not the single face (L,1,...,2n,R)")
    return UnicellularMap(n, alpha, sigma)


def genus_unicellular(u: UnicellularMap) -> int:
    # 2 - 2g = (V - 1) - n + 1, with V counting the plant vertex.
    vertex_count = len(cycles(u.sigma))
    twice = 2 - ((vertex_count - 1) - u.n + 1)
    if twice < 0 or twice % 2:
        raise InvariantViolation(f"Euler formula gives non-integral genus for {u}")
    return twice // 2
