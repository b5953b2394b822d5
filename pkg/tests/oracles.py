"""Independent ground truth for the test suite.

Character values here come from a completely different construction than the
package's border-strip recursion: permutation character values of Young
subgroups are counted by a cycle-distribution argument, then the irreducible
rows fall out of Gram-Schmidt in an order compatible with dominance. Nothing
below imports package internals, so agreement is meaningful evidence.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial


def oracle_partitions(n):
    """Partitions of n, descending lexicographic."""
    if n == 0:
        return [()]
    out = []
    acc = []

    def rec(rem, biggest):
        if rem == 0:
            out.append(tuple(acc))
            return
        for part in range(min(rem, biggest), 0, -1):
            acc.append(part)
            rec(rem - part, part)
            acc.pop()

    rec(n, n)
    return out


def oracle_centralizer(mu):
    z = 1
    for value, count in Counter(mu).items():
        z *= value ** count * factorial(count)
    return z


@lru_cache(maxsize=None)
def _distribute(cycles, caps):
    """Ways to deal the cycles onto capacity slots, filling each exactly.

    Slots are distinguishable; the memo key only needs the sorted capacities
    because equal capacities have identical futures.
    """
    if not cycles:
        return 1 if not caps else 0
    head, rest = cycles[0], cycles[1:]
    total = 0
    tried = set()
    for i, cap in enumerate(caps):
        if cap < head or cap in tried:
            continue
        tried.add(cap)
        remaining = list(caps)
        remaining.pop(i)
        if cap > head:
            remaining.append(cap - head)
        total += caps.count(cap) * _distribute(
            rest, tuple(sorted(remaining, reverse=True)))
    return total


def oracle_young_value(mu, cycles):
    """Permutation character of the Young subgroup of mu, on cycle type cycles.

    A coset is fixed exactly when every cycle lands inside one row, so the
    value counts ways to distribute the cycles over rows with exact fill.
    """
    return _distribute(tuple(sorted(cycles, reverse=True)),
                       tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def oracle_char_table(n):
    """Full irreducible character table of the symmetric group on n points.

    Young rows expand over irreducibles with unitriangular coefficients
    against dominance, and descending lex refines dominance, so peeling
    earlier rows off in that order leaves exactly one new irreducible each
    time. The unit norm assertion would catch any ordering mistake.
    """
    classes = oracle_partitions(n)
    weights = {mu: oracle_centralizer(mu) for mu in classes}

    def ip(u, v):
        return sum(Fraction(u[mu] * v[mu], weights[mu]) for mu in classes)

    table = {}
    for shape in classes:
        row = {mu: Fraction(oracle_young_value(shape, mu)) for mu in classes}
        for prior in table.values():
            coeff = ip(row, prior)
            if coeff:
                row = {mu: row[mu] - coeff * prior[mu] for mu in classes}
        assert ip(row, row) == 1, f"lost orthonormality at {shape}"
        table[shape] = row
    out = {}
    for shape, row in table.items():
        assert all(v.denominator == 1 for v in row.values()), shape
        out[shape] = {mu: int(v) for mu, v in row.items()}
    return out


def oracle_char(lam, mu):
    return oracle_char_table(sum(lam))[tuple(lam)][tuple(sorted(mu, reverse=True))]
