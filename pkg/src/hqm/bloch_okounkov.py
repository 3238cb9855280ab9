"""Taylor blocks of the renormalized partition generating series.

The two-variable-family generating function

    sum_{d >= 0} sum_{lam |- d} q^d exp(p_2(lam) t_2 + p_3(lam) t_3 + ...)

has Taylor blocks indexed by multi-indices K = (k_2, k_3, ...): the
t^K / K! coefficient is the moment series sum_d q^d sum_lam prod_i p_i^{k_i}.
Renormalizing by exp(-sum_j zeta_half_neg(j) t_j), with t_1 tied to q by
q = e^(t_1), multiplies by q^(-1/24) and convolves the remaining constants
into the blocks; eta times the renormalized K = 0 block is exactly 1, and
eta times any block is expected to lie in Q[E2, E4, E6] with weight
sum (i+1) k_i.

The operator route reconstructs the branch-count blocks of the cover
counting series by applying the phi polynomial, with its arguments shifted
by the renormalization constants, to these Taylor blocks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import _mpoly
from ._par import pmap
from .partitions import partitions_of, power_sums
from .phipoly import build_phi_symbolic
from .qseries import DENOM_EXP, QSeries, eta_series, q_derivative
from .quasimod import bernoulli


def zeta_half_neg(j) -> Fraction:
    """Value at s = -j of sum_{n>=1} (n - 1/2)^(-s) = (2^s - 1) zeta(s).

    Exactly (2^(-j) - 1) * (-B_{j+1}/(j+1)); zero for even j >= 2.
    """
    if j < 1:
        raise ValueError("j must be a positive integer")
    zeta_neg = -bernoulli(j + 1) / (j + 1)
    return (Fraction(1, 2 ** j) - 1) * zeta_neg


def normalize_index(K):
    """Canonical multi-index: a tuple (k_2, k_3, ...) without trailing zeros."""
    K = tuple(int(k) for k in K)
    if any(k < 0 for k in K):
        raise ValueError("multi-index entries must be nonnegative")
    while K and K[-1] == 0:
        K = K[:-1]
    return K


def expected_weight(K) -> int:
    """sum_{i >= 2} (i + 1) k_i for K = (k_2, k_3, ...)."""
    return sum((pos + 3) * k for pos, k in enumerate(normalize_index(K)))


@lru_cache(maxsize=None)
def _psum_table(d, kmax):
    return tuple(tuple(power_sums(lam, kmax)) for lam in partitions_of(d))


@lru_cache(maxsize=None)
def moment_block(K, dmax) -> QSeries:
    """sum_{d=0}^{dmax} q^d sum_{lam |- d} prod_{i>=2} p_i(lam)^{k_i}."""
    K = normalize_index(K)
    kmax = len(K) + 1
    trunc = DENOM_EXP * (dmax + 1)

    def coeff(d):
        total = Fraction(0)
        for ps in _psum_table(d, kmax):
            term = Fraction(1)
            for pos, k in enumerate(K):
                if k:
                    term *= ps[pos + 2] ** k
            total += term
        return total

    values = pmap(coeff, range(dmax + 1))
    return QSeries.from_q_coeffs(dict(enumerate(values)), trunc)


def _sub_indices(K):
    if not K:
        yield ()
        return
    for rest in _sub_indices(K[1:]):
        for l in range(K[0] + 1):
            yield (l,) + rest


def renorm_block(K, dmax) -> QSeries:
    """Renormalized Taylor block; carries the global factor q^(-1/24).

    Exponential generating data multiply by binomial convolution, so the
    block is sum over sub-indices L <= K of
    prod_i C(k_i, l_i) (-zeta_half_neg(i))^(l_i) times the moment block at
    K - L, all shifted by one exponent index for q^(-1/24).
    """
    K = normalize_index(K)
    out = QSeries.zero(DENOM_EXP * (dmax + 1))
    for L in _sub_indices(K):
        scale = Fraction(1)
        for pos, l in enumerate(L):
            if l:
                scale *= comb(K[pos], l) * (-zeta_half_neg(pos + 2)) ** l
        if scale:
            rest = tuple(k - l for k, l in zip(K, L))
            out = out + moment_block(normalize_index(rest), dmax) * scale
    return out.shifted(-1)


class TaylorTable:
    """Finitely many renormalized Taylor blocks, keyed by multi-index."""

    def __init__(self, blocks, dmax):
        self.blocks = dict(blocks)
        self.dmax = dmax

    @classmethod
    def build(cls, indices, dmax):
        keys = sorted({normalize_index(K) for K in indices})
        return cls({K: renorm_block(K, dmax) for K in keys}, dmax)

    def block(self, K) -> QSeries:
        K = normalize_index(K)
        if K not in self.blocks:
            raise KeyError(
                f"Taylor block {K} not built; extend the table to t-degrees "
                f"covering it")
        return self.blocks[K]


def operator_poly(phi, m):
    """Expand phi with every argument shifted by its renormalization constant.

    Returns exponent-tuple -> coefficient over (a_1, ..., a_m), where slot 1
    stands for the q d/dq operator and slot k >= 2 for d/dt_k.
    """
    shifts = [zeta_half_neg(k) for k in range(1, m + 1)]
    out = {}
    for exps, c in phi.terms.items():
        term = {(0,) * m: c}
        for slot, a in enumerate(exps):
            if not a:
                continue
            unit = [0] * m
            unit[slot] = 1
            lin = {tuple(unit): Fraction(1)}
            if shifts[slot]:
                lin[(0,) * m] = shifts[slot]
            term = _mpoly.mmul(term, _mpoly.mpow(lin, a, m))
        out = _mpoly.madd(out, term)
    return out


def etaz_block_operator(m, b, dmax, phi=None) -> QSeries:
    """X^b coefficient of the eta-normalized counting series, operator route.

    (1/b!) * eta * [phi(D + c_1, D_2 + c_2, ..., D_m + c_m)^b applied to the
    renormalized generating series, at t = 0], with c_k = zeta_half_neg(k).
    Differentiating b times in t_k and setting t = 0 picks the Taylor block
    at the accumulated multi-index; D acts on blocks by multiplying each term
    by its full exponent e/24, offset included.
    """
    if b < 0:
        raise ValueError("b must be nonnegative")
    if phi is None:
        phi = build_phi_symbolic(m)
    op = operator_poly(phi, m)
    op_b = _mpoly.mpow(op, b, m)
    table = TaylorTable.build((key[1:] for key in op_b), dmax)
    total = QSeries.zero(DENOM_EXP * (dmax + 1))
    for key, c in op_b.items():
        block = table.block(key[1:])
        for _ in range(key[0]):
            block = q_derivative(block)
        total = total + block * c
    eta = eta_series(DENOM_EXP * (dmax + 2))
    return eta * total * Fraction(1, factorial(b))
