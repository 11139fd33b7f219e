"""Project-wide enums and constants."""

from enum import Enum


class MapKind(str, Enum):
    UNICELLULAR = "unicellular"
    BICELLULAR = "bicellular"


class MapClass(str, Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"
    BI = "BI"
    BII = "BII"


class SplitRange(str, Enum):
    """Admissible split indices m for a bicellular map with n edges."""

    INCLUSIVE = "inclusive"  # 1 <= m <= 2n-1
    STRICT = "strict"        # 1 < m < 2n-1

    def values(self, n: int) -> range:
        if self is SplitRange.STRICT:
            return range(2, 2 * n - 1)
        return range(1, 2 * n)


class CountKind(str, Enum):
    UNICELLULAR = "uni"
    BICELLULAR = "bi"


class ValidationFailure(str, Enum):
    NOT_INVOLUTION = "not_involution"
    FIXED_POINT = "fixed_point"
    FACE_NOT_CANONICAL = "face_not_canonical"
    PLANT_MISSING = "plant_missing"
    NOT_PERFECT_MATCHING = "not_perfect_matching"
    LABEL_SET = "label_set"


# Rainbow-end tags. One face: L < 1..2n < R.
UNICELLULAR_TAGS = ("L", "R")
# Two faces: L1 < 1..m < R1 < L2 < m+1..2n < R2.
BICELLULAR_TAGS = ("L1", "R1", "L2", "R2")
RAINBOW_TAGS = UNICELLULAR_TAGS + BICELLULAR_TAGS
