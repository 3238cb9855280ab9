"""Integer partitions, half-integer shifted coordinates, and statistics.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the unique partition of 0.  Shifted parts lam_i - i + 1/2 are
half-integers and are stored as Fractions throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

Partition = tuple


def partitions_of(d) -> Iterator[Partition]:
    """All partitions of d, each exactly once, in decreasing lex order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        yield ()
        return
    lam = [d]
    while True:
        yield tuple(lam)
        k = len(lam) - 1
        while k >= 0 and lam[k] == 1:
            k -= 1
        if k < 0:
            return
        rem = len(lam) - k  # cells freed: the trailing ones plus one unit
        lam[k] -= 1
        del lam[k + 1:]
        cap = lam[k]
        while rem > 0:
            t = min(cap, rem)
            lam.append(t)
            rem -= t


@lru_cache(maxsize=None)
def partition_count(n) -> int:
    """p(n) by the pentagonal-number recurrence (independent of partitions_of)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n and g2 > n:
            break
        sign = 1 if k % 2 else -1
        if g1 <= n:
            total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(lam) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def shifted(lam, length) -> list:
    """Shifted parts (lam_i - i + 1/2) for i = 1..length, parts past the end 0."""
    if length < len(lam):
        raise ValueError("length must cover every part")
    return [Fraction(2 * (lam[i - 1] if i <= len(lam) else 0) - 2 * i + 1, 2)
            for i in range(1, length + 1)]


class FrobeniusCoords(NamedTuple):
    """Half-integer arm/leg coordinates: P from lam, Q from its conjugate."""

    P: tuple
    Q: tuple


def frobenius(lam) -> FrobeniusCoords:
    """Positive shifted parts of lam and of its conjugate, both decreasing."""
    def positive_shifted(mu):
        out = []
        for i, part in enumerate(mu, 1):
            v = Fraction(2 * part - 2 * i + 1, 2)
            if v <= 0:
                break
            out.append(v)
        return tuple(out)

    return FrobeniusCoords(positive_shifted(lam), positive_shifted(conjugate(lam)))


@lru_cache(maxsize=None)
def _neg_odd_power_totals(length, kmax):
    # totals[k][i] = sum_{j=1..i} (1-2j)^k, exact integers
    totals = []
    for k in range(kmax + 1):
        row = [0]
        for i in range(1, length + 1):
            row.append(row[-1] + (1 - 2 * i) ** k)
        totals.append(tuple(row))
    return tuple(totals)


def power_sums(lam, kmax) -> list:
    """Shifted power sums p_0..p_kmax of lam.

    p_k = sum_i ((lam_i - i + 1/2)^k - (1/2 - i)^k); the sum over i may stop
    at the number of parts since later terms vanish.  Numerators are odd
    integers 2*lam_i - 2*i + 1, so everything is integer arithmetic until a
    single division by 2^k.
    """
    length = len(lam)
    neg = _neg_odd_power_totals(length, kmax)
    nums = [2 * part - 2 * i + 1 for i, part in enumerate(lam, 1)]
    out = []
    for k in range(kmax + 1):
        s = sum(n ** k for n in nums) - neg[k][length]
        out.append(Fraction(s, 2 ** k))
    return out


def power_sum(lam, k) -> Fraction:
    return power_sums(lam, k)[k]


def power_sum_frobenius(lam, k) -> Fraction:
    """p_k recomputed from Frobenius coordinates: sum_P p^k - sum_Q (-q)^k."""
    P, Q = frobenius(lam)
    return sum((p ** k for p in P), Fraction(0)) - sum(((-q) ** k for q in Q),
                                                       Fraction(0))


def elementary_and_complete(values, jmax):
    """e_j and h_j of the given values for j = 0..jmax, via generating products.

    e from the truncated product prod(1 + v y); h by inverting prod(1 - v y).
    """
    e = [Fraction(0)] * (jmax + 1)
    e[0] = Fraction(1)
    c = [Fraction(0)] * (jmax + 1)  # coefficients of prod (1 - v y)
    c[0] = Fraction(1)
    for v in values:
        for j in range(jmax, 0, -1):
            e[j] += v * e[j - 1]
            c[j] -= v * c[j - 1]
    h = [Fraction(0)] * (jmax + 1)
    h[0] = Fraction(1)
    for n in range(1, jmax + 1):
        h[n] = -sum(c[t] * h[n - t] for t in range(1, n + 1))
    return e, h


def content_sum(lam) -> int:
    """Sum of the contents j - i over the cells (i, j) of lam."""
    return sum(part * (part + 1) // 2 - part * i for i, part in enumerate(lam, 1))


def n_stat(lam) -> int:
    """sum_i (i - 1) lam_i."""
    return sum((i - 1) * part for i, part in enumerate(lam, 1))


def hook_dim(lam) -> int:
    """Dimension of the irreducible S_d representation of shape lam.

    Hook-length formula: d! divided by the product of hook lengths.
    """
    d = sum(lam)
    if d == 0:
        return 1
    conj = conjugate(lam)
    dim = factorial(d)
    for i, part in enumerate(lam, 1):
        for j in range(1, part + 1):
            dim //= part - j + conj[j - 1] - i + 1
    return dim
