"""Foulkes-type permutation characters and their irreducible decompositions.

The character of the symmetric group acting on set partitions of {1..ab}
into b blocks of size a corresponds, under the characteristic map, to the
plethysm h_b[h_a]. The generalized variant allows several distinct block
sizes and multiplies the matching plethysms together.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from foulkes import symfunc
from foulkes.characters import dimension, mn_char
from foulkes.partitions import (
    Partition,
    dominates,
    enum_partitions,
    format_partition,
    validate_partition,
)


@dataclass(frozen=True)
class FoulkesShape:
    """b unordered blocks of size a; the action lives on S_(a*b)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise ValueError(f"need block size >= 1 and block count >= 0, got {self}")

    @property
    def degree(self) -> int:
        return self.a * self.b

    @property
    def blocks_partition(self) -> Partition:
        return (self.a,) * self.b

    @property
    def omega_size(self) -> int:
        """Number of set partitions being permuted."""
        return factorial(self.degree) // (factorial(self.a) ** self.b * factorial(self.b))


@dataclass(frozen=True)
class GeneralizedShape:
    """Blocks of several sizes: pairs of (size, count), sizes strictly decreasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((int(s), int(m)) for s, m in self.pairs))
        for i, (size, count) in enumerate(self.pairs):
            if size < 1 or count < 1:
                raise ValueError(f"sizes and counts must be >= 1: {self.pairs}")
            if i and self.pairs[i - 1][0] <= size:
                raise ValueError(f"sizes must strictly decrease: {self.pairs}")

    @classmethod
    def from_blocks(cls, blocks) -> "GeneralizedShape":
        counts = Counter(blocks)
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def degree(self) -> int:
        return sum(size * count for size, count in self.pairs)

    @property
    def blocks_partition(self) -> Partition:
        out = []
        for size, count in self.pairs:
            out.extend([size] * count)
        return tuple(out)

    @property
    def distinct_sizes(self) -> int:
        return len(self.pairs)

    @property
    def omega_size(self) -> int:
        denom = 1
        for size, count in self.pairs:
            denom *= factorial(size) ** count * factorial(count)
        return factorial(self.degree) // denom


@lru_cache(maxsize=None)
def foulkes_series(a: int, b: int) -> symfunc.PSeries:
    """Power-sum expansion of the Foulkes character for b blocks of size a."""
    return symfunc.plethysm_h(b, symfunc.h_series(a))


@lru_cache(maxsize=None)
def gen_foulkes_series(shape: GeneralizedShape) -> symfunc.PSeries:
    series = symfunc.h_series(0)
    for size, count in shape.pairs:
        series = symfunc.multiply(series, symfunc.plethysm_h(count, symfunc.h_series(size)))
    return series


def _series_multiplicity(series: symfunc.PSeries, lam: Partition) -> int:
    """Inner product of the series with the Schur function of lam, sparsely.

    Only the series support is visited: the Schur coefficient on a power sum
    is the character value over the centralizer order, and the weight in the
    inner product cancels that order exactly.
    """
    total = Fraction(0)
    for mu, c in series.coeffs.items():
        total += c * mn_char(lam, mu)
    if total.denominator != 1:
        raise ArithmeticError(f"multiplicity of {lam} came out {total}, not an integer")
    if total < 0:
        raise ArithmeticError(f"multiplicity of {lam} came out negative: {total}")
    return int(total)


def multiplicity(shape: FoulkesShape, lam, use_fastpath: bool = True) -> int:
    """Multiplicity of the irreducible indexed by lam in the Foulkes character.

    The fast path skips the character sum when a structural reason already
    forces zero: more rows than blocks, or failing dominance over the
    all-blocks-equal shape. Pass use_fastpath=False to force the full sum.
    """
    lam = validate_partition(lam)
    if sum(lam) != shape.degree:
        raise ValueError(f"{lam} is not a partition of {shape.degree}")
    if use_fastpath:
        if len(lam) > shape.b:
            return 0
        if not dominates(lam, shape.blocks_partition):
            return 0
    return _series_multiplicity(foulkes_series(shape.a, shape.b), lam)


def gen_multiplicity(shape: GeneralizedShape, lam, use_fastpath: bool = True) -> int:
    """Multiplicity of the irreducible indexed by lam in the generalized character."""
    lam = validate_partition(lam)
    if sum(lam) != shape.degree:
        raise ValueError(f"{lam} is not a partition of {shape.degree}")
    if use_fastpath and not dominates(lam, shape.blocks_partition):
        return 0
    return _series_multiplicity(gen_foulkes_series(shape), lam)


def exterior_pairing(shape: FoulkesShape, k: int) -> int:
    """Inner product of the Foulkes character with e_k * h_(degree - k)."""
    if not 0 <= k <= shape.degree:
        raise ValueError(f"k must lie in 0..{shape.degree}")
    probe = symfunc.multiply(symfunc.e_series(k), symfunc.h_series(shape.degree - k))
    value = symfunc.inner(foulkes_series(shape.a, shape.b), probe)
    if value.denominator != 1:
        raise ArithmeticError(f"pairing came out {value}, not an integer")
    return int(value)


def orbit_size(a: int, b: int, lam) -> int:
    """Orbit size of a block partition refined by lam under the two-level action.

    lam records how many points each of p distinguished blocks donates to a
    marked set of size |lam|; it must fit in the a-by-b box. Closed product
    formula, checked for exact divisibility at each of the two factors.
    """
    lam = validate_partition(lam)
    r = sum(lam)
    p = len(lam)
    if p > b or (lam and lam[0] > a):
        raise ValueError(f"{lam} does not fit in the {a}x{b} box")
    mults = Counter(lam)
    top_den = 1
    for part, count in mults.items():
        top_den *= factorial(part) ** count * factorial(count)
    top, rem = divmod(factorial(r), top_den)
    if rem:
        raise ArithmeticError("marked-set factor is not an integer")
    bottom_den = factorial(a) ** (b - p) * factorial(b - p)
    for part in lam:
        bottom_den *= factorial(a - part)
    bottom, rem = divmod(factorial(a * b - r), bottom_den)
    if rem:
        raise ArithmeticError("block-completion factor is not an integer")
    return top * bottom


@dataclass(frozen=True)
class DecompositionTable:
    """Full multiplicity table of one Foulkes character, rows in descending lex."""

    a: int
    b: int
    entries: tuple[tuple[Partition, int], ...]

    @property
    def nonzero_entries(self) -> tuple[tuple[Partition, int], ...]:
        return tuple((lam, m) for lam, m in self.entries if m)

    @property
    def dimension_sum(self) -> int:
        return sum(m * dimension(lam) for lam, m in self.entries if m)

    def to_json_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "entries": [
                {"lambda": format_partition(lam), "mult": m}
                for lam, m in self.entries
            ],
        }

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(["lambda", "mult", "dimension"])
        for lam, m in self.entries:
            writer.writerow([format_partition(lam), m, dimension(lam)])
        return buf.getvalue()


def decompose(shape: FoulkesShape, keep=None, use_fastpath: bool = True,
              jobs: int = 1, deadline: float | None = None) -> DecompositionTable:
    """Decompose one Foulkes character into irreducibles, every shape listed.

    The whole table comes from one strip-insertion expansion of the series.
    The fast path caps inserted shapes at b rows (exact, shapes with more
    rows cannot appear); use_fastpath=False runs the expansion unpruned so
    the structural zeros are recomputed the hard way. `keep` restricts the
    rows of the table to the given shapes.
    """
    max_rows = shape.b if use_fastpath else None
    expansion = symfunc.schur_expansion(
        foulkes_series(shape.a, shape.b), max_rows=max_rows,
        jobs=jobs, deadline=deadline)
    if keep is None:
        rows = enum_partitions(shape.degree)
    else:
        rows = sorted((validate_partition(lam) for lam in keep), reverse=True)
        for lam in rows:
            if sum(lam) != shape.degree:
                raise ValueError(f"{lam} is not a partition of {shape.degree}")
    entries = []
    for lam in rows:
        c = expansion.get(lam, Fraction(0))
        if c.denominator != 1:
            raise ArithmeticError(f"multiplicity of {lam} came out {c}, not an integer")
        if c < 0:
            raise ArithmeticError(f"multiplicity of {lam} came out negative: {c}")
        entries.append((lam, int(c)))
    return DecompositionTable(a=shape.a, b=shape.b, entries=tuple(entries))
