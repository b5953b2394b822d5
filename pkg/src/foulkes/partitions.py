"""Integer partitions: parsing, orders, hook coordinates, border-strip moves.

A partition is a plain tuple of weakly decreasing positive ints; () is the
empty partition. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]

_TOKEN = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def validate_partition(lam) -> Partition:
    """Return lam as a tuple, insisting on canonical descending positive parts."""
    lam = tuple(lam)
    for i, p in enumerate(lam):
        if not isinstance(p, int) or p < 1 or (i and lam[i - 1] < p):
            raise ValueError(f"not a partition in canonical form: {lam!r}")
    return lam


def as_partition(parts) -> Partition:
    """Canonicalize an unordered bag of positive parts."""
    out = tuple(sorted(parts, reverse=True))
    if out and (not isinstance(out[-1], int) or out[-1] < 1):
        raise ValueError(f"partition parts must be positive integers: {list(parts)!r}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse text like '7,3,1,1' or '3^10' or '4,2^3,1' into a partition.

    Each comma-separated token is INT or INT^COUNT with INT, COUNT >= 1.
    No whitespace is allowed anywhere.
    """
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"bad partition token {token!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if value < 1 or count < 1:
            raise ValueError(f"parts and repeat counts must be >= 1: {token!r}")
        parts.extend([value] * count)
    return as_partition(parts)


def format_partition(lam: Partition) -> str:
    """Canonical text form, fully expanded; the empty partition renders as ''."""
    return ",".join(str(p) for p in lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff every prefix sum of lam weakly exceeds the matching one of mu.

    Only defined for equal weights; anything else raises.
    """
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of equal weight only")
    acc_l = acc_m = 0
    for x, y in zip(lam, mu):
        acc_l += x
        acc_m += y
        if acc_l < acc_m:
            return False
    return True


def is_subpartition(lam: Partition, mu: Partition) -> bool:
    """Row comparison lam_j <= mu_j restricted to rows both partitions have.

    Rows beyond the shorter partition are ignored, so a longer lam can still
    pass. For honest diagram containment use fits_inside.
    """
    return all(x <= y for x, y in zip(lam, mu))


def fits_inside(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of lam is contained cell-by-cell in that of mu."""
    return len(lam) <= len(mu) and all(x <= y for x, y in zip(lam, mu))


def hook_leg(lam: Partition) -> int | None:
    """Leg length k when lam = (m, 1^k); None when lam is not a hook."""
    if not lam:
        raise ValueError("the empty partition has no hook shape")
    if len(lam) == 1:
        return 0
    if all(p == 1 for p in lam[1:]):
        return len(lam) - 1
    return None


@dataclass(frozen=True)
class HookCoordinates:
    """A nonempty partition encoded as (first-column leg, shape inside the hook).

    The encoded partition is (total - leg - |inside|, inside_1 + 1, ...,
    inside_t + 1, 1^(leg - t)). Construction validates that this is a real
    partition: inside fits in leg rows and the first row is long enough.
    """

    total: int
    leg: int
    inside: Partition

    def __post_init__(self):
        object.__setattr__(self, "inside", validate_partition(self.inside))
        if self.leg < 0:
            raise ValueError("leg must be >= 0")
        if len(self.inside) > self.leg:
            raise ValueError(
                f"inside partition {self.inside} has more than leg={self.leg} rows")
        first = self.total - self.leg - sum(self.inside)
        least = (self.inside[0] + 1) if self.inside else 1
        if first < least:
            raise ValueError(
                f"first row would be {first}, needs at least {least} "
                f"(total={self.total}, leg={self.leg}, inside={self.inside})")

    @property
    def inside_weight(self) -> int:
        return sum(self.inside)

    @property
    def tail_weight(self) -> int:
        """Weight of the inside partition below its own first row."""
        return sum(self.inside[1:])


def to_hook_coords(lam: Partition) -> HookCoordinates:
    """Encode a nonempty partition by leg length and inside partition."""
    lam = validate_partition(lam)
    if not lam:
        raise ValueError("cannot encode the empty partition")
    inside = tuple(p - 1 for p in lam[1:] if p >= 2)
    return HookCoordinates(total=sum(lam), leg=len(lam) - 1, inside=inside)


def from_hook_coords(coords: HookCoordinates) -> Partition:
    """Decode back to the partition; inverse of to_hook_coords."""
    first = coords.total - coords.leg - coords.inside_weight
    ones = coords.leg - len(coords.inside)
    return (first,) + tuple(p + 1 for p in coords.inside) + (1,) * ones


def enum_partitions(n: int, max_parts: int | None = None,
                    max_part: int | None = None) -> list[Partition]:
    """All partitions of n in descending lexicographic order, optionally bounded."""
    if n < 0:
        raise ValueError("weight must be >= 0")
    if n == 0:
        return [()]
    cap = n if max_part is None else min(max_part, n)
    slots = n if max_parts is None else max_parts
    out: list[Partition] = []
    acc: list[int] = []

    def rec(rem: int, biggest: int, room: int) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        if room <= 0:
            return
        for part in range(min(rem, biggest), 0, -1):
            if part * room < rem:
                break
            acc.append(part)
            rec(rem - part, part, room - 1)
            acc.pop()

    rec(n, cap, slots)
    return out


def box_partitions(r: int, a: int, b: int) -> list[Partition]:
    """Partitions of r with at most b parts, each part at most a."""
    if r < 0 or a < 0 or b < 0:
        raise ValueError("arguments must be >= 0")
    return enum_partitions(r, max_parts=b, max_part=a)


@lru_cache(maxsize=None)
def count_box_partitions(r: int, a: int, b: int) -> int:
    """len(box_partitions(r, a, b)) without enumerating; 0 for negative r."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    if a <= 0 or b <= 0:
        return 0
    return count_box_partitions(r, a - 1, b) + count_box_partitions(r - a, a, b - 1)


def pieri_add(lam: Partition, k: int) -> set[Partition]:
    """All partitions reached by adding k boxes to lam, no two in one column."""
    lam = validate_partition(lam)
    if k < 0:
        raise ValueError("box count must be >= 0")
    rows = len(lam)
    results: set[Partition] = set()
    acc: list[int] = []

    def rec(i: int, remaining: int) -> None:
        if i == rows:
            if remaining == 0:
                results.add(tuple(acc))
            elif rows == 0 or remaining <= lam[-1]:
                results.add(tuple(acc) + (remaining,))
            return
        cap = remaining if i == 0 else min(remaining, lam[i - 1] - lam[i])
        for add in range(cap + 1):
            acc.append(lam[i] + add)
            rec(i + 1, remaining - add)
            acc.pop()

    rec(0, k)
    return results


def centralizer_order(lam: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type lam."""
    z = 1
    for value, count in Counter(lam).items():
        z *= value ** count * factorial(count)
    return z


@lru_cache(maxsize=None)
def border_strip_removals(lam: Partition, length: int) -> tuple[tuple[Partition, int], ...]:
    """Every way to peel one border strip of the given length off lam.

    Returns (smaller shape, height) pairs; height is one less than the number
    of rows the strip occupies. Computed on first-column beta numbers: a strip
    removal is a beta value dropping by `length` into an unoccupied slot.
    """
    if length < 1:
        raise ValueError("strip length must be >= 1")
    s = len(lam)
    if s == 0 or length > lam[0] + s - 1:
        return ()
    beta = [lam[i] + s - 1 - i for i in range(s)]
    present = set(beta)
    out = []
    for i, bv in enumerate(beta):
        nb = bv - length
        if nb < 0 or nb in present:
            continue
        height = sum(1 for j in range(i + 1, s) if beta[j] > nb)
        newbeta = sorted((present - {bv}) | {nb}, reverse=True)
        parts = (newbeta[idx] - (s - 1 - idx) for idx in range(s))
        out.append((tuple(p for p in parts if p > 0), height))
    return tuple(out)


@lru_cache(maxsize=None)
def border_strip_additions(lam: Partition, length: int,
                           max_rows: int | None = None) -> tuple[tuple[Partition, int], ...]:
    """Every way to grow lam by one border strip of the given length.

    With max_rows set, results needing more rows are suppressed; every result
    with at most max_rows rows is still produced, exactly.
    """
    if length < 1:
        raise ValueError("strip length must be >= 1")
    s = len(lam)
    slots = s + length if max_rows is None else max_rows
    if s > slots:
        return ()
    beta = [lam[i] + slots - 1 - i for i in range(s)]
    beta += [slots - 1 - i for i in range(s, slots)]
    present = set(beta)
    out = []
    for i, bv in enumerate(beta):
        nb = bv + length
        if nb in present:
            continue
        height = sum(1 for j in range(i) if beta[j] < nb)
        newbeta = sorted((present - {bv}) | {nb}, reverse=True)
        parts = (newbeta[idx] - (slots - 1 - idx) for idx in range(slots))
        out.append((tuple(p for p in parts if p > 0), height))
    return tuple(out)
