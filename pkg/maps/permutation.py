"""Permutations of finite half-edge label sets.

Composition is right-to-left throughout the project: ``compose(p, q)(x) == p(q(x))``.
"""

from typing import Iterable, Mapping, Sequence

from maps.labels import Label, default_order
from utils.errors import StructuralError


class Permutation:
    """Immutable bijection of a finite label set, carrying its ambient order."""

    __slots__ = ("_images", "_order")

    def __init__(self, images: Mapping[Label, Label], order: Sequence[Label] = None):
        images = dict(images)
        if order is None:
            order = default_order(images)
        order = tuple(order)
        if set(order) != set(images) or len(order) != len(images):
            raise StructuralError("permutation order does not match its label set")
        if set(images.values()) != set(images):
            raise StructuralError("mapping is not a bijection of its label set")
        self._images = images
        self._order = order

    @classmethod
    def identity(cls, order: Sequence[Label]) -> "Permutation":
        return cls({x: x for x in order}, order)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[Label]],
                    order: Sequence[Label] = None) -> "Permutation":
        """Build from disjoint cycles; labels of ``order`` not mentioned are fixed."""
        images = {}
        for cycle in cycles:
            for i, x in enumerate(cycle):
                if x in images:
                    raise StructuralError(f"label {x!r} appears in two cycles")
                images[x] = cycle[(i + 1) % len(cycle)]
        if order is not None:
            for x in order:
                images.setdefault(x, x)
        return cls(images, order)

    @property
    def order(self) -> tuple:
        return self._order

    @property
    def labels(self) -> frozenset:
        return frozenset(self._images)

    def __call__(self, label: Label) -> Label:
        try:
            return self._images[label]
        except KeyError:
            raise StructuralError(f"label {label!r} is not in the permutation's domain") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(frozenset(self._images.items()))

    def __repr__(self) -> str:
        body = "".join("(" + ",".join(str(x) for x in c) + ")" for c in self.cycles())
        return f"Permutation({body})"

    def items(self):
        return self._images.items()

    def compose(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def cycles(self) -> list:
        return cycles(self)

    def with_order(self, order: Sequence[Label]) -> "Permutation":
        return Permutation(self._images, order)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return r with r(x) = p(q(x))."""
    if p.labels != q.labels:
        raise StructuralError("cannot compose permutations over different label sets")
    return Permutation({x: p._images[q._images[x]] for x in q._order}, p.order)


def inverse(p: Permutation) -> Permutation:
    return Permutation({y: x for x, y in p._images.items()}, p.order)


def cycles(p: Permutation) -> list:
    """Cycles as lists, each starting at its minimum, sorted by minimum."""
    seen = set()
    result = []
    # Walking labels in ambient order means the first unseen label of a cycle is its minimum.
    for start in p.order:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = p._images[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p._images[x]
        result.append(cycle)
    return result


def is_fpf_involution(p: Permutation) -> bool:
    return all(y != x and p._images[y] == x for x, y in p._images.items())
