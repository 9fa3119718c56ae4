"""Partitions, compositions and the statistics attached to them.

Partitions are plain tuples of positive integers in weakly decreasing order;
compositions are tuples of positive integers in any order.  The empty tuple is
the (only) partition of 0.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]

DEFAULT_ORACLE_CAP = 16


class OracleScopeError(ValueError):
    """The brute-force oracle was asked for an input larger than its cap."""


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def _partitions(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def compositions_of(total: int, num_parts: int) -> list[Composition]:
    """Compositions of ``total`` into exactly ``num_parts`` positive parts, lexicographic."""
    if total < 1 or num_parts < 1:
        raise ValueError("total and num_parts must be positive")
    out = []
    # lexicographic cut sets give lexicographic compositions
    for cuts in itertools.combinations(range(1, total), num_parts - 1):
        bounds = (0,) + cuts + (total,)
        out.append(tuple(b - a for a, b in zip(bounds, bounds[1:])))
    return out


def all_compositions(total: int) -> Iterator[Composition]:
    """Every composition of ``total``, grouped by number of parts."""
    for l in range(1, total + 1):
        yield from compositions_of(total, l)


def multiplicities(mu: Sequence[int]) -> Counter:
    return Counter(mu)


def z_mu(mu: Sequence[int]) -> int:
    """``prod_i i**m_i * m_i!`` over the part multiplicities ``m_i``."""
    z = 1
    for part, m in Counter(mu).items():
        z *= part**m * math.factorial(m)
    return z


def composition_count(mu: Sequence[int]) -> int:
    """Number of distinct orderings of the parts: ``l! / prod m_i!``."""
    c = math.factorial(len(mu))
    for m in Counter(mu).values():
        c //= math.factorial(m)
    return c


def pochhammer(a: int | Fraction, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Fraction(1)
    for j in range(n):
        out *= a + j
    return out


def gen_binomial(a: int, k: int) -> int:
    """``binom(a, k)`` for any integer ``a`` (possibly negative); zero when ``k < 0``."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= a - j
    den = math.factorial(k)
    q, rem = divmod(num, den)
    assert rem == 0, f"binom({a}, {k}) is not integral"
    return q


def pbin(mu: Sequence[int], r: int) -> int:
    """Number of ways to pick ``r`` cells of the diagram of ``mu`` hitting every row.

    Each row of length ``m`` contributes the factor ``sum_{k>=1} binom(m, k) t**k``;
    the answer is the coefficient of ``t**r`` in the product.
    """
    if r < len(mu) or r > sum(mu):
        return 0
    poly = [1]
    for m in mu:
        row = [0] + [math.comb(m, k) for k in range(1, m + 1)]
        out = [0] * (len(poly) + len(row) - 1)
        for i, a in enumerate(poly):
            if a:
                for j, b in enumerate(row):
                    out[i + j] += a * b
        poly = out
    return poly[r]


def pbin_expanded(mu: Sequence[int], r: int) -> int:
    """``pbin`` as a sum over compositions ``r_1 + ... + r_l = r`` of ``prod binom(mu_i, r_i)``."""
    l = len(mu)
    if l == 0:
        return 1 if r == 0 else 0
    if r < l:
        return 0
    total = 0
    for rc in compositions_of(r, l):
        prod = 1
        for m, k in zip(mu, rc):
            prod *= math.comb(m, k)
            if not prod:
                break
        total += prod
    return total


def pbin_oracle(mu: Sequence[int], r: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Brute force: enumerate ``r``-subsets of the diagram cells and keep those covering every row."""
    size = sum(mu)
    if size > cap:
        raise OracleScopeError(f"|mu| = {size} exceeds oracle cap {cap}")
    cells = [(row, col) for row, m in enumerate(mu) for col in range(m)]
    rows = set(range(len(mu)))
    count = 0
    for subset in itertools.combinations(cells, r):
        if {row for row, _ in subset} == rows:
            count += 1
    return count
