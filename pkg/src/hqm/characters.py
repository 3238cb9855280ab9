"""Weighted symmetric-group character values on the class of single m-cycles.

For a partition lam of d and the conjugacy class c of cycle type (m, 1^(d-m)),
the weighted value is |c| * chi_lam(c) / dim(lam).  Three independent routes
are provided: border-strip recursion (mn), residue extraction from a rational
generating function (residue), and evaluation of the universal shifted
power-sum polynomial (phi).  When d < m the class is empty and the value is 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import hook_dim, power_sums


def m_cycle_class_size(d, m) -> int:
    """Number of m-cycles in S_d."""
    if d < 0 or m < 2:
        raise ValueError("need d >= 0 and m >= 2")
    if d < m:
        return 0
    return factorial(d) // (m * factorial(d - m))


def char_m_cycle(lam, m) -> int:
    """chi_lam on the class (m, 1^(d-m)).

    Beta-number form of border-strip removal: beta_i = lam_i + (L - i) are
    distinct; removing a strip of size m moves one beta down by m onto a free
    value, with sign (-1)^(number of betas jumped over).  What remains has
    cycle type (1^(d-m)), whose character value is the dimension.
    """
    d = sum(lam)
    if d < m:
        raise ValueError("class is empty for d < m")
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - m
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((bset - {b}) | {nb}, reverse=True)
        rest = tuple(x - (len(nbeta) - 1 - i) for i, x in enumerate(nbeta))
        rest = tuple(x for x in rest if x > 0)
        total += (-1) ** height * hook_dim(rest)
    return total


def weighted_char_mn(lam, m) -> Fraction:
    """|c| * chi / dim via border strips; 0 when the class is empty."""
    d = sum(lam)
    if d < m:
        return Fraction(0)
    return Fraction(m_cycle_class_size(d, m) * char_m_cycle(lam, m), hook_dim(lam))


def weighted_char_residue(lam, m) -> Fraction:
    """Same value by residue extraction; requires d >= m.

    With mu_i = lam_i + d - i, the value is the y^(m+1) coefficient, negated
    and divided by m^2, of

        prod_{t=0}^{m-1} (1 - t y) * prod_i (1 - (m + mu_i) y) / prod_i (1 - mu_i y)

    expanded as an exact power series to order m + 2.
    """
    d = sum(lam)
    if d < m:
        raise ValueError("residue route requires d >= m")
    order = m + 2
    mu = [(lam[i] if i < len(lam) else 0) + d - (i + 1) for i in range(d)]

    num = [0] * (order + 1)
    num[0] = 1
    for t in range(1, m):  # the t = 0 factor is 1
        for e in range(order, 0, -1):
            num[e] -= t * num[e - 1]
    for u in mu:
        v = m + u
        for e in range(order, 0, -1):
            num[e] -= v * num[e - 1]

    den = [0] * (order + 1)
    den[0] = 1
    for u in mu:
        for e in range(order, 0, -1):
            den[e] -= u * den[e - 1]
    inv = [0] * (order + 1)
    inv[0] = 1
    for e in range(1, order + 1):
        inv[e] = -sum(den[t] * inv[e - t] for t in range(1, e + 1))

    target = m + 1
    coeff = sum(num[e] * inv[target - e] for e in range(target + 1))
    return Fraction(-coeff, m * m)


def weighted_char_phi(lam, m, phi) -> Fraction:
    """Evaluate the degree-m shifted power-sum polynomial at p_1..p_m of lam.

    Returns 0 for d < m (empty class); phi must be built for the same m.
    """
    if sum(lam) < m:
        return Fraction(0)
    return phi.evaluate(power_sums(lam, m)[1:])
