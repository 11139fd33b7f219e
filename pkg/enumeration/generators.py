"""Exhaustive generators for planted unicellular and bicellular maps."""

import logging
from typing import Iterator, Optional

from bijections.beta import Bi, Pair
from config.constants import SplitRange
from enumeration.matchings import perfect_matchings
from maps.bicellular import BicellularMap, has_cross_pair, make_bicellular
from maps.unicellular import UnicellularMap, make_unicellular

logger = logging.getLogger(__name__)


def enumerate_unicellular(n: int, genus: Optional[int] = None,
                          first_partner: Optional[int] = None) -> Iterator[UnicellularMap]:
    """Every map with n edges (one per perfect matching of 1..2n), lexicographically."""
    for matching in perfect_matchings(range(1, 2 * n + 1), first_partner):
        u = make_unicellular(n, matching)
        if genus is None or u.genus == genus:
            yield u


def enumerate_bicellular(n: int, genus: Optional[int] = None,
                         split_range: SplitRange = SplitRange.INCLUSIVE,
                         m: Optional[int] = None,
                         first_partner: Optional[int] = None) -> Iterator[BicellularMap]:
    """Every connected bicellular map with n edges: m ascending, then matchings lexicographically."""
    splits = split_range.values(n) if m is None else [m]
    for split in splits:
        emitted = 0
        for matching in perfect_matchings(range(1, 2 * n + 1), first_partner):
            if not has_cross_pair(split, matching):
                continue
            b = make_bicellular(n, split, matching, split_range)
            if genus is None or b.genus == genus:
                emitted += 1
                yield b
        logger.debug("bicellular n=%d m=%d: %d maps", n, split, emitted)


def enumerate_decompositions(n: int, g: int) -> Iterator:
    """Every element of the domain of beta whose image has n edges and genus g.

    Pairs come first (g1, then j ascending, then lexicographic), bicellular maps last.
    """
    for g1 in range(g + 1):
        for j in range(n):
            firsts = list(enumerate_unicellular(j, g1))
            if not firsts:
                continue
            seconds = list(enumerate_unicellular(n - 1 - j, g - g1))
            for u1 in firsts:
                for u2 in seconds:
                    yield Pair(u1, u2)
    if n >= 2 and g >= 1:
        for b in enumerate_bicellular(n - 1, g - 1):
            yield Bi(b)
