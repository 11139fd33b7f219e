"""Perfect matchings in lexicographic order."""

from typing import Iterator, Optional, Sequence


def double_factorial(k: int) -> int:
    result = 1
    while k > 1:
        result *= k
        k -= 2
    return result


def perfect_matchings(points: Sequence[int], first_partner: Optional[int] = None) -> Iterator[tuple]:
    """Yield every perfect matching of ``points`` as a tuple of sorted pairs.

    Matchings come out in lexicographic order of their pair tuples. With
    ``first_partner`` set, only matchings pairing ``points[0]`` with it are produced.
    """
    points = tuple(points)
    if not points:
        yield ()
        return
    if len(points) % 2:
        return
    first, rest = points[0], points[1:]
    partners = rest if first_partner is None else [p for p in rest if p == first_partner]
    for partner in partners:
        remaining = tuple(p for p in rest if p != partner)
        for sub in perfect_matchings(remaining):
            yield ((first, partner),) + sub


def first_partners(n: int) -> list:
    """Partition keys of the matchings on 1..2n: the partner of half-edge 1."""
    if n == 0:
        return [None]
    return list(range(2, 2 * n + 1))
