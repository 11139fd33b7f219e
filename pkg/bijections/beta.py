"""The composite bijection between decompositions and unicellular maps of positive genus."""

from dataclasses import dataclass
from typing import Union

from config.constants import MapClass
from bijections.gluing import psi, theta
from bijections.planting import eta, varsigma
from maps.bicellular import BicellularMap
from maps.classify import classify_unicellular
from maps.unicellular import UnicellularMap
from utils.errors import DomainError, StructuralError


@dataclass(frozen=True)
class Pair:
    u1: UnicellularMap
    u2: UnicellularMap


@dataclass(frozen=True)
class Bi:
    b: BicellularMap


DecompositionResult = Union[Pair, Bi]


def beta_forward(x: DecompositionResult) -> UnicellularMap:
    if isinstance(x, Pair):
        return theta(x.u1, x.u2)
    if isinstance(x, Bi):
        return eta(x.b)
    raise StructuralError(f"not a decomposition: {x!r}")


def beta_inverse(u: UnicellularMap) -> DecompositionResult:
    if u.n == 0 or u.genus == 0:
        raise DomainError(f"genus-0 map with {u.n} edges has no decomposition")
    if classify_unicellular(u) is MapClass.III:
        return Pair(*psi(u))
    return Bi(varsigma(u))
