"""Symmetric functions in the power-sum basis, with exact rational coefficients.

A homogeneous symmetric function of degree n is stored sparsely as a map from
cycle types (partitions of n) to Fractions. This basis makes multiplication a
multiset merge and plethysm by a power sum a simple index rescaling, which is
what the Foulkes computations lean on.
"""

from __future__ import annotations

import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from fractions import Fraction

from foulkes.characters import ClassFunction, mn_char
from foulkes.partitions import (
    Partition,
    border_strip_additions,
    centralizer_order,
    enum_partitions,
    format_partition,
    parse_partition,
    validate_partition,
)


class ComputeBudgetExceeded(RuntimeError):
    """A computation ran past its caller-imposed wall-clock budget."""


@dataclass(frozen=True)
class PSeries:
    """Homogeneous symmetric function, coefficients on power-sum basis elements."""

    degree: int
    coeffs: dict[Partition, Fraction]

    def __post_init__(self):
        clean: dict[Partition, Fraction] = {}
        for mu, c in self.coeffs.items():
            mu = validate_partition(mu)
            if sum(mu) != self.degree:
                raise ValueError(
                    f"index {mu} has weight {sum(mu)}, series degree is {self.degree}")
            c = Fraction(c)
            if c:
                clean[mu] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, mu) -> Fraction:
        return self.coeffs.get(tuple(mu), Fraction(0))

    def to_json_dict(self) -> dict:
        terms = [
            {
                "mu": format_partition(mu),
                "num": str(self.coeffs[mu].numerator),
                "den": str(self.coeffs[mu].denominator),
            }
            for mu in sorted(self.coeffs, reverse=True)
        ]
        return {"degree": self.degree, "terms": terms}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "PSeries":
        coeffs = {}
        for term in payload["terms"]:
            mu = parse_partition(term["mu"]) if term["mu"] else ()
            coeffs[mu] = Fraction(int(term["num"]), int(term["den"]))
        return cls(degree=int(payload["degree"]), coeffs=coeffs)


_h_cache: dict[int, PSeries] = {}
_e_cache: dict[int, PSeries] = {}


def h_series(n: int) -> PSeries:
    """Complete homogeneous symmetric function of degree n."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    got = _h_cache.get(n)
    if got is None:
        got = PSeries(n, {
            mu: Fraction(1, centralizer_order(mu)) for mu in enum_partitions(n)})
        _h_cache[n] = got
    return got


def e_series(n: int) -> PSeries:
    """Elementary symmetric function of degree n."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    got = _e_cache.get(n)
    if got is None:
        got = PSeries(n, {
            mu: Fraction((-1) ** (n - len(mu)), centralizer_order(mu))
            for mu in enum_partitions(n)})
        _e_cache[n] = got
    return got


def schur_series(lam: Partition) -> PSeries:
    """Schur function of shape lam, expanded over all cycle types of its weight."""
    lam = validate_partition(lam)
    n = sum(lam)
    return PSeries(n, {
        mu: Fraction(mn_char(lam, mu), centralizer_order(mu))
        for mu in enum_partitions(n)})


def multiply(f: PSeries, g: PSeries) -> PSeries:
    """Product of symmetric functions; indices merge as multisets."""
    out: dict[Partition, Fraction] = {}
    for mu, c in f.coeffs.items():
        for nu, d in g.coeffs.items():
            key = tuple(sorted(mu + nu, reverse=True))
            prev = out.get(key)
            cd = c * d
            out[key] = cd if prev is None else prev + cd
    return PSeries(f.degree + g.degree, out)


def plethysm_power(k: int, f: PSeries) -> PSeries:
    """Plethysm of the k-th power sum with f: every index scales by k."""
    if k < 1:
        raise ValueError("power-sum index must be >= 1")
    return PSeries(k * f.degree, {
        tuple(k * m for m in mu): c for mu, c in f.coeffs.items()})


_pleth_memo: dict[tuple[int, int, tuple], PSeries] = {}


def plethysm_h(b: int, f: PSeries) -> PSeries:
    """Plethysm of the complete homogeneous function of degree b with f.

    Uses the Newton-style recursion b*g_b = sum_k (p_k composed with f) * g_(b-k),
    which stays in the power-sum basis throughout. Intermediate stages are
    memoized by the content of f, so reruns and smaller b come back instantly.
    """
    if b < 0:
        raise ValueError("degree must be >= 0")
    content = tuple(sorted(f.coeffs.items()))
    hit = _pleth_memo.get((b, f.degree, content))
    if hit is not None:
        return hit
    stages = [PSeries(0, {(): Fraction(1)})]
    powers = {}
    for j in range(1, b + 1):
        prior = _pleth_memo.get((j, f.degree, content))
        if prior is not None:
            stages.append(prior)
            continue
        acc: dict[Partition, Fraction] = {}
        for k in range(1, j + 1):
            if k not in powers:
                powers[k] = plethysm_power(k, f)
            for mu, c in multiply(powers[k], stages[j - k]).coeffs.items():
                acc[mu] = acc.get(mu, Fraction(0)) + c
        stage = PSeries(j * f.degree, {mu: c / j for mu, c in acc.items()})
        _pleth_memo[(j, f.degree, content)] = stage
        stages.append(stage)
    return stages[b]


def inner(f: PSeries, g: PSeries) -> Fraction:
    """Hall inner product; power sums are orthogonal with weight z_mu."""
    if f.degree != g.degree:
        raise ValueError("inner product needs equal degrees")
    small, large = (f.coeffs, g.coeffs) if len(f.coeffs) <= len(g.coeffs) else (g.coeffs, f.coeffs)
    total = Fraction(0)
    for mu, c in small.items():
        d = large.get(mu)
        if d is not None:
            total += c * d * centralizer_order(mu)
    return total


def to_class_function(f: PSeries) -> ClassFunction:
    """Reinterpret f as the class function it represents; must be integer valued."""
    values = {}
    for mu in enum_partitions(f.degree):
        v = f.coeffs.get(mu, Fraction(0)) * centralizer_order(mu)
        if v.denominator != 1:
            raise ValueError(f"value on class {mu} is {v}, not an integer")
        values[mu] = int(v)
    return ClassFunction(degree=f.degree, values=values)


def from_class_function(cf: ClassFunction) -> PSeries:
    return PSeries(cf.degree, {
        mu: Fraction(v, centralizer_order(mu)) for mu, v in cf.values.items()})


def schur_expansion(f: PSeries, max_rows: int | None = None, jobs: int = 1,
                    deadline: float | None = None) -> dict[Partition, Fraction]:
    """Expand f over Schur functions: the returned dict maps shape to coefficient.

    Walks the support as a prefix trie, keeping a running bag of shapes built
    by inserting one border strip per cycle length; partial insertions shared
    by many cycle types are computed once. With max_rows set, shapes are
    pruned the moment they grow too many rows, which is exact because strip
    insertion never shrinks the row count. `deadline` is a wall-clock budget
    in seconds; `jobs` > 1 splits the support across worker processes.
    """
    items = sorted(f.coeffs.items())
    stop = None if deadline is None else time.monotonic() + deadline
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(items) < 4 * jobs:
        return _expand_items(items, max_rows, stop)

    width = max(1, len(items) // (4 * jobs))
    chunks = [items[i:i + width] for i in range(0, len(items), width)]
    out: dict[Partition, Fraction] = {}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        budget = None if stop is None else max(stop - time.monotonic(), 0.001)
        pending = {pool.submit(_expand_chunk, chunk, max_rows, budget)
                   for chunk in chunks}
        try:
            while pending:
                remaining = None if stop is None else stop - time.monotonic()
                if remaining is not None and remaining <= 0:
                    raise ComputeBudgetExceeded("schur expansion passed its time limit")
                done, pending = wait(pending, timeout=remaining,
                                     return_when=FIRST_COMPLETED)
                if not done and pending:
                    raise ComputeBudgetExceeded("schur expansion passed its time limit")
                for fut in done:
                    for shape, c in fut.result().items():
                        out[shape] = out.get(shape, Fraction(0)) + c
        finally:
            for fut in pending:
                fut.cancel()
    return {shape: c for shape, c in out.items() if c}


def _expand_chunk(items, max_rows, budget):
    stop = None if budget is None else time.monotonic() + budget
    return _expand_items(items, max_rows, stop)


def _expand_items(items, max_rows, stop) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}

    def rec(lo: int, hi: int, depth: int, state: dict[Partition, Fraction]) -> None:
        if stop is not None and time.monotonic() > stop:
            raise ComputeBudgetExceeded("schur expansion passed its time limit")
        i = lo
        while i < hi:
            mu = items[i][0]
            if len(mu) == depth:
                c = items[i][1]
                for shape, m in state.items():
                    prev = out.get(shape)
                    cm = c * m
                    out[shape] = cm if prev is None else prev + cm
                i += 1
                continue
            part = mu[depth]
            j = i
            while j < hi and len(items[j][0]) > depth and items[j][0][depth] == part:
                j += 1
            nxt: dict[Partition, Fraction] = {}
            for shape, m in state.items():
                for nshape, height in border_strip_additions(shape, part, max_rows):
                    delta = -m if height % 2 else m
                    prev = nxt.get(nshape)
                    nxt[nshape] = delta if prev is None else prev + delta
            nxt = {k: v for k, v in nxt.items() if v}
            if nxt:
                rec(i, j, depth + 1, nxt)
            i = j

    rec(0, len(items), 0, {(): Fraction(1)})
    return {shape: c for shape, c in out.items() if c}
