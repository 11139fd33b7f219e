"""Input validators for pairings, split indices, diagrams and edge bounds."""

from config.constants import SplitRange
from config.settings import APP_SETTINGS


def validate_pairing(n: int, pairs) -> tuple:
    """Check that ``pairs`` is a perfect matching on 1..2n."""
    if n < 0:
        return False, f"Edge count must be non-negative, got {n}"
    seen = set()
    count = 0
    for pair in pairs:
        if len(pair) != 2:
            return False, f"Pair {pair!r} does not have two ends"
        a, b = pair
        for x in (a, b):
            if isinstance(x, bool) or not isinstance(x, int):
                return False, f"Half-edge {x!r} is not an integer"
            if not 1 <= x <= 2 * n:
                return False, f"Half-edge {x} is outside 1..{2 * n}"
            if x in seen:
                return False, f"Half-edge {x} is matched twice"
            seen.add(x)
        if a == b:
            return False, f"Half-edge {a} is matched to itself"
        count += 1
    if count != n:
        return False, f"Expected {n} pairs covering 1..{2 * n}, got {count}"
    return True, ""


def validate_split(n: int, m: int, split_range: SplitRange = SplitRange.INCLUSIVE) -> tuple:
    if m not in split_range.values(n):
        allowed = "1 <= m <= 2n-1" if split_range is SplitRange.INCLUSIVE else "1 < m < 2n-1"
        return False, f"Split index m={m} is out of range for n={n} ({allowed})"
    return True, ""


def validate_backbones(N: int, backbones) -> tuple:
    """Check that backbones are consecutive intervals covering 1..N in order."""
    if N < 0:
        return False, f"Position count must be non-negative, got {N}"
    if len(backbones) not in (1, 2):
        return False, f"Expected 1 or 2 backbones, got {len(backbones)}"
    expected_start = 1
    for start, end in backbones:
        if start != expected_start:
            return False, f"Backbone {start}..{end} should start at {expected_start}"
        if end < start and not (N == 0 and len(backbones) == 1):
            return False, f"Backbone {start}..{end} is empty"
        expected_start = end + 1
    if expected_start != N + 1:
        return False, f"Backbones end at {expected_start - 1}, expected {N}"
    return True, ""


def validate_arcs(N: int, arcs) -> tuple:
    seen = set()
    for i, j in arcs:
        if i == j:
            return False, f"Arc ({i},{j}) joins a position to itself"
        for x in (i, j):
            if not 1 <= x <= N:
                return False, f"Arc ({i},{j}) references position {x} outside 1..{N}"
            if x in seen:
                return False, f"Position {x} is in more than one arc"
            seen.add(x)
    return True, ""


def validate_edge_bound(n: int) -> tuple:
    limit = APP_SETTINGS["max_edges_limit"]
    if n < 0:
        return False, f"Edge bound must be non-negative, got {n}"
    if n > limit:
        return False, f"Edge bound {n} exceeds the practical limit of {limit}"
    return True, ""
