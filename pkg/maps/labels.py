"""Half-edge labels and the ambient linear orders on them.

A label is either a positive ``int`` (a plain half-edge) or one of the
rainbow-end tags in ``config.constants.RAINBOW_TAGS``.
"""

from typing import Iterable, Union

from config.constants import RAINBOW_TAGS

Label = Union[int, str]

_TAG_RANK = {
    "L": (0, 0), "L1": (0, 1),
    "R1": (2, 0), "L2": (2, 1),
    "R": (3, 0), "R2": (3, 1),
}


def is_plain(label: Label) -> bool:
    return isinstance(label, int) and not isinstance(label, bool)


def unicellular_order(n: int) -> tuple:
    """L < 1 < ... < 2n < R."""
    return ("L", *range(1, 2 * n + 1), "R")


def bicellular_order(n: int, m: int) -> tuple:
    """L1 < 1 < ... < m < R1 < L2 < m+1 < ... < 2n < R2."""
    return ("L1", *range(1, m + 1), "R1", "L2", *range(m + 1, 2 * n + 1), "R2")


def default_order(labels: Iterable[Label]) -> tuple:
    """Best-effort ambient order for a bare label set.

    Correct for unicellular label sets; bicellular sets need ``bicellular_order``
    because the position of R1/L2 depends on the split index.
    """
    def key(label):
        if is_plain(label):
            return (1, label)
        return _TAG_RANK[label]
    return tuple(sorted(labels, key=key))


def parse_label(token: str) -> Label:
    token = token.strip()
    if token in RAINBOW_TAGS:
        return token
    if token.isascii() and token.isdigit() and int(token) > 0:
        return int(token)
    raise ValueError(f"invalid half-edge label {token!r}")
