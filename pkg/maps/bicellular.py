"""Planted bicellular maps with faces (L1, 1..m, R1) and (L2, m+1..2n, R2)."""

from dataclasses import dataclass

from config.constants import SplitRange, ValidationFailure
from maps.labels import Label, bicellular_order, is_plain
from maps.permutation import Permutation, compose, cycles
from utils.errors import DisconnectedError, InvariantViolation, SplitRangeError, ValidationError
from utils.validators import validate_pairing, validate_split


def canonical_faces(n: int, m: int) -> Permutation:
    """The product of the two canonical face cycles omega1 * omega2."""
    order = bicellular_order(n, m)
    return Permutation.from_cycles([order[:m + 2], order[m + 2:]], order)


def has_cross_pair(m: int, pairing) -> bool:
    return any((a <= m) != (b <= m) for a, b in pairing)


@dataclass(frozen=True)
class BicellularMap:
    n: int
    m: int
    beta: Permutation
    tau: Permutation

    @property
    def order(self) -> tuple:
        return bicellular_order(self.n, self.m)

    @property
    def omega(self) -> Permutation:
        return canonical_faces(self.n, self.m)

    @property
    def genus(self) -> int:
        return genus_bicellular(self)

    def pairs(self) -> tuple:
        return tuple((x, self.beta(x)) for x in range(1, 2 * self.n + 1) if x < self.beta(x))

    def vertices(self) -> list:
        """Vertex cycles of tau without the two plants, in vertex order."""
        return [c for c in cycles(self.tau) if c not in (["R1"], ["R2"])]

    def vertex_of(self, label: Label) -> tuple:
        for vertex in cycles(self.tau):
            if label in vertex:
                return tuple(vertex)
        raise KeyError(label)

    def plant_vertices(self) -> list:
        return [("R1",), ("R2",)]

    def __str__(self) -> str:
        return f"BicellularMap(n={self.n}, m={self.m}, pairs={list(self.pairs())})"


def make_bicellular(n: int, m: int, pairing,
                    split_range: SplitRange = SplitRange.INCLUSIVE) -> BicellularMap:
    ok, msg = validate_split(n, m, split_range)
    if not ok:
        raise SplitRangeError(msg)
    pairing = [tuple(p) for p in pairing]
    ok, msg = validate_pairing(n, pairing)
    if not ok:
        raise ValidationError(ValidationFailure.NOT_PERFECT_MATCHING, msg)
    if not has_cross_pair(m, pairing):
        raise DisconnectedError(f"no edge joins the two faces (n={n}, m={m}); the map is disconnected")

    order = bicellular_order(n, m)
    beta = Permutation.from_cycles([*pairing, ("L1", "R1"), ("L2", "R2")], order)
    tau = compose(beta, canonical_faces(n, m))
    return BicellularMap(n, m, beta, tau)


def validate_bicellular(m: int, beta: Permutation, tau: Permutation) -> BicellularMap:
    plain = sorted(x for x in beta.labels if is_plain(x))
    n = len(plain) // 2
    if plain != list(range(1, 2 * n + 1)):
        raise ValidationError(ValidationFailure.LABEL_SET, "beta must act on 1..2n and the rainbow ends")
    ok, msg = validate_split(n, m)
    if not ok:
        raise SplitRangeError(msg)
    order = bicellular_order(n, m)
    if beta.labels != frozenset(order) or tau.labels != beta.labels:
        raise ValidationError(ValidationFailure.LABEL_SET,
                              "beta and tau must act on L1, 1..m, R1, L2, m+1..2n, R2")

    for x, y in beta.items():
        if beta(y) != x:
            raise ValidationError(ValidationFailure.NOT_INVOLUTION, f"beta is not an involution at {x}")
    for x, y in beta.items():
        if x == y:
            raise ValidationError(ValidationFailure.FIXED_POINT, f"beta fixes half-edge {x}")
    if beta("L1") != "R1" or beta("L2") != "R2":
        raise ValidationError(ValidationFailure.PLANT_MISSING,
                              "beta must contain the rainbows (L1,R1) and (L2,R2)")

    beta = beta.with_order(order)
    tau = tau.with_order(order)
    if compose(beta, tau) != canonical_faces(n, m):
        raise ValidationError(ValidationFailure.FACE_NOT_CANONICAL,
                              "beta o tau is not the two faces (L1,1..m,R1)(L2,m+1..2n,R2)")
    pairs = [(x, beta(x)) for x in plain if x < beta(x)]
    if not has_cross_pair(m, pairs):
        raise DisconnectedError("no edge joins the two faces; the map is disconnected")
    return BicellularMap(n, m, beta, tau)


def genus_bicellular(b: BicellularMap) -> int:
    # 2 - 2g = V - n + 2, with V excluding the two plants.
    vertex_count = len(b.vertices())
    twice = 2 - (vertex_count - b.n + 2)
    if twice < 0 or twice % 2:
        raise InvariantViolation(f"Euler formula gives non-integral genus for {b}")
    return twice // 2
