"""Counting branched covers of an elliptic curve by character sums.

A degree-d cover with b branch points, all of ramification index m, induces a
tuple (alpha, beta, gamma_1..gamma_b) in S_d with every gamma_i an m-cycle and
gamma_1 ... gamma_b = [alpha, beta]; covers are counted weighted by 1/|Aut|,
which turns the tuple count into |tuples| / d!.  The disconnected count equals
the character sum sum_{lam |- d} f_lam^b with f_lam the weighted m-cycle
character value, and the connected counting series is extracted by a formal
logarithm in the branch-point variable.  The genus is tied to the data by
2g - 2 = (m - 1) b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from ._par import pmap
from .characters import weighted_char_phi
from .partitions import partitions_of
from .phipoly import build_phi_symbolic
from .qseries import DENOM_EXP, QSeries, euler_product

BRUTE_DEGREE_LIMIT = 6


@dataclass(frozen=True)
class CountSeries:
    m: int
    g: int
    series: QSeries

    def to_json_obj(self):
        return {"m": self.m, "g": self.g, "series": self.series.to_json_obj()}


def genus_for(m, b):
    """Genus of a cover with b branch points of index m; None if fractional."""
    if (m - 1) * b % 2:
        return None
    return 1 + (m - 1) * b // 2


def branch_count(m, g):
    """Number of branch points for genus g, or None when 2(g-1)/(m-1) is not
    a nonnegative integer."""
    if g < 1 or (2 * (g - 1)) % (m - 1):
        return None
    return 2 * (g - 1) // (m - 1)


@lru_cache(maxsize=None)
def char_values(m, d):
    """Weighted m-cycle character values over all partitions of d."""
    phi = build_phi_symbolic(m)
    return tuple(weighted_char_phi(lam, m, phi) for lam in partitions_of(d))


def nhat(m, b, d) -> Fraction:
    """Disconnected weighted count at degree d with b branch points."""
    if d < 0 or b < 0 or m < 2:
        raise ValueError("need d >= 0, b >= 0, m >= 2")
    return sum((f ** b for f in char_values(m, d)), Fraction(0))


def zhat_blocks(m, bmax, dmax):
    """Disconnected count series for b = 0..bmax, sharing one pass over
    partitions: block_b = sum_d sum_{lam |- d} f_lam^b q^d."""
    trunc = DENOM_EXP * (dmax + 1)

    def column(d):
        acc = [Fraction(0)] * (bmax + 1)
        for f in char_values(m, d):
            p = Fraction(1)
            acc[0] += p
            for b in range(1, bmax + 1):
                p *= f
                acc[b] += p
        return acc

    columns = pmap(column, range(dmax + 1))
    return [QSeries.from_q_coeffs({d: columns[d][b] for d in range(dmax + 1)},
                                  trunc)
            for b in range(bmax + 1)]


def zhat_block(m, b, dmax) -> QSeries:
    return zhat_blocks(m, b, dmax)[b]


def _x_mul(a, b, bmax, trunc):
    out = [QSeries.zero(trunc) for _ in range(bmax + 1)]
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            if i + j > bmax:
                break
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def connected_series(m, g, dmax) -> CountSeries:
    """Counting series of connected covers of genus g.

    Computed as b! times the X^b coefficient of log(prod(1-q^n) * Zhat), with
    Zhat the disconnected two-variable generating function.  That product has
    constant term 1 and integer exponents, so the formal log is total; its
    X^0 slot vanishes identically (the genus-one data lives elsewhere, see
    genus_one_series).  Returns the zero series when 2(g-1)/(m-1) is not a
    positive integer.
    """
    if g < 2:
        raise ValueError("connected extraction needs g >= 2")
    trunc = DENOM_EXP * (dmax + 1)
    b = branch_count(m, g)
    if b is None:
        return CountSeries(m, g, QSeries.zero(trunc))
    blocks = zhat_blocks(m, b, dmax)
    prod = euler_product(trunc)
    w = [prod * blocks[k] * Fraction(1, factorial(k)) for k in range(b + 1)]
    if w[0] != QSeries.one(trunc):
        raise AssertionError("b=0 block times prod(1-q^n) must be 1")
    u = [QSeries.zero(trunc)] + w[1:]
    log_x = [QSeries.zero(trunc) for _ in range(b + 1)]
    power = [QSeries.one(trunc)] + [QSeries.zero(trunc)] * b
    for j in range(1, b + 1):
        power = _x_mul(power, u, b, trunc)
        sign = Fraction((-1) ** (j - 1), j)
        for k in range(b + 1):
            log_x[k] = log_x[k] + power[k] * sign
    return CountSeries(m, g, log_x[b] * factorial(b))


def etaz_block_direct(m, b, dmax) -> QSeries:
    """X^b coefficient of prod(1-q^n) * Zhat: the character-sum route."""
    trunc = DENOM_EXP * (dmax + 1)
    return euler_product(trunc) * zhat_block(m, b, dmax) * Fraction(1, factorial(b))


def _sigma1(n):
    return sum(t for t in range(1, n + 1) if n % t == 0)


def genus_one_series(dmax) -> QSeries:
    """Unramified-cover counting series sum_d (sigma_1(d)/d) q^d.

    The genus-one count is independent of m.  The accompanying -log(q)/24
    term is never materialized as a series; callers report it symbolically.
    """
    return QSeries.from_q_coeffs(
        {d: Fraction(_sigma1(d), d) for d in range(1, dmax + 1)},
        DENOM_EXP * (dmax + 1))


# -- brute-force tuple oracle ------------------------------------------------

def _compose(p, q):
    # (p o q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def _inverse(p):
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def _is_m_cycle(p, m):
    seen = [False] * len(p)
    big = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        if length == m:
            big += 1
        elif length != 1:
            return False
    return big == 1


def _transitive(gens, d):
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == d


def _brute_count(m, d, b, connected):
    if d < 0 or b < 0 or m < 2:
        raise ValueError("need d >= 0, b >= 0, m >= 2")
    if d > BRUTE_DEGREE_LIMIT:
        cost = factorial(d) ** 2 * m_count(d, m) ** max(b - 1, 0)
        raise ValueError(
            f"brute force refused for d={d}: about {cost} tuples to scan")
    perms = list(permutations(range(d)))
    cycles = [p for p in perms if _is_m_cycle(p, m)]
    identity = tuple(range(d))
    # Enumerate gamma_1..gamma_{b-1} and solve for the last factor, which
    # removes one cycle-class factor from the scan.
    if b == 0:
        prefixes = None
    else:
        prefixes = []
        for combo in product(cycles, repeat=b - 1):
            prod_perm = identity
            for gamma in combo:
                prod_perm = _compose(prod_perm, gamma)
            prefixes.append((combo, _inverse(prod_perm)))
    total = 0
    for alpha in perms:
        alpha_inv = _inverse(alpha)
        for beta in perms:
            comm = _compose(_compose(alpha, beta),
                            _compose(alpha_inv, _inverse(beta)))
            if b == 0:
                if comm != identity:
                    continue
                if not connected or _transitive((alpha, beta), d):
                    total += 1
                continue
            for combo, prefix_inv in prefixes:
                last = _compose(prefix_inv, comm)
                if not _is_m_cycle(last, m):
                    continue
                if not connected or _transitive((alpha, beta) + combo + (last,), d):
                    total += 1
    return Fraction(total, factorial(d))


def m_count(d, m):
    if d < m:
        return 0
    return factorial(d) // (m * factorial(d - m))


def brute_hom_count(m, d, b) -> Fraction:
    """Tuples (alpha, beta, gamma_1..gamma_b), gamma_i m-cycles with
    gamma_1...gamma_b = [alpha, beta], counted exactly and divided by d!."""
    return _brute_count(m, d, b, connected=False)


def brute_connected_count(m, d, b) -> Fraction:
    """Same count restricted to tuples generating a transitive subgroup."""
    return _brute_count(m, d, b, connected=True)
