"""The universal polynomial phi_m with f = phi_m(p_1, ..., p_m).

phi_m is the polynomial in the shifted power sums p_1..p_m whose value at any
partition equals the weighted m-cycle character value, independently of the
partition's size.  It is built symbolically from a residue expansion whose
coefficients b_ij are polynomials in the size d, then d is eliminated via
d = p_1.  An interpolation route over exact linear systems serves as an
independent oracle.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import _mpoly
from .characters import weighted_char_mn
from .linalg import InconsistentSystem, UnderdeterminedSystem, solve_exact
from .partitions import partitions_of, power_sums


class PhiDegreeError(Exception):
    """The requested weighted-degree bound cannot reproduce the character values."""


class DPoly:
    """Dense univariate polynomial over Fraction (variable: the size d)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cleaned = [Fraction(c) for c in coeffs]
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        self.coeffs = tuple(cleaned)

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return DPoly([(self.coeffs[i] if i < len(self.coeffs) else 0)
                      + (other.coeffs[i] if i < len(other.coeffs) else 0)
                      for i in range(n)])

    def __mul__(self, other):
        if isinstance(other, DPoly):
            if self.is_zero() or other.is_zero():
                return DPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return DPoly(out)
        return DPoly([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, DPoly) and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"DPoly({list(self.coeffs)})"


def shifted_faulhaber(k) -> DPoly:
    """Polynomial in d equal to sum_{i=1}^{d} (1/2 - i)^k; constant term 0.

    Degree k + 1, so Lagrange interpolation through d = 0..k+1 is exact.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    points = [(0, Fraction(0))]
    acc = Fraction(0)
    for d in range(1, k + 2):
        acc += Fraction(1 - 2 * d, 2) ** k
        points.append((d, acc))
    poly = DPoly()
    for xi, yi in points:
        num = DPoly([1])
        den = Fraction(1)
        for xj, _ in points:
            if xj != xi:
                num = num * DPoly([-xj, 1])
                den *= xi - xj
        poly = poly + num * (yi / den)
    return poly


def residue_coeff(m, i, j) -> DPoly:
    """The coefficient b_ij, a polynomial in d of degree at most m+1-i-j.

    b_ij is the y^(m+1-i-j) coefficient of
        prod_{t=1}^{m} (1 + (d - t + 1/2) y) * (1 - m y)^(d - i),
    expanded by elementary symmetric polynomials of the linear factors and
    binomials of d - i.  Zero whenever i + j >= m + 2.
    """
    if min(m, i, j) < 0 or m < 2:
        raise ValueError("need m >= 2 and i, j >= 0")
    n = m + 1 - i - j
    if n < 0:
        return DPoly()
    elem = [DPoly([1])] + [DPoly() for _ in range(n)]
    for t in range(1, m + 1):
        lin = DPoly([Fraction(1 - 2 * t, 2), 1])
        for e in range(min(t, n), 0, -1):
            elem[e] = elem[e] + lin * elem[e - 1]
    out = DPoly()
    for s in range(n + 1):
        binom = DPoly([1])
        for u in range(s):
            binom = binom * DPoly([-i - u, 1])
        binom = binom * Fraction(1, factorial(s))
        out = out + elem[n - s] * binom * (Fraction(-m) ** s)
    return out


def _graded_lex_key(exps):
    return (sum(exps), exps)


class YPoly:
    """Sparse polynomial in Y_1..Y_m over Fraction with deg(Y_j) = j."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms):
        self.m = m
        cleaned = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c:
                cleaned[tuple(exps)] = c
        self.terms = cleaned

    def evaluate(self, values) -> Fraction:
        """Evaluate at values[j-1] substituted for Y_j."""
        if len(values) < self.m:
            raise ValueError("need a value for each variable")
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, a in zip(values, exps):
                if a:
                    term *= Fraction(v) ** a
            total += term
        return total

    def weighted_degree(self):
        """Max over monomials of sum_j j * a_j (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(sum((k + 1) * a for k, a in enumerate(exps))
                   for exps in self.terms)

    def monomials(self):
        """(exponents, coefficient) pairs in graded lex order."""
        return [(exps, self.terms[exps])
                for exps in sorted(self.terms, key=_graded_lex_key)]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def to_json_obj(self):
        return {"m": self.m,
                "monomials": [[list(e), str(c)] for e, c in self.monomials()]}

    def __eq__(self, other):
        return (isinstance(other, YPoly) and self.m == other.m
                and self.terms == other.terms)

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*Y^{e}" for e, c in self.monomials())
        return f"YPoly(m={self.m}: {body or '0'})"


def _check_shape(phi, m):
    top = [(e, c) for e, c in phi.terms.items()
           if sum((k + 1) * a for k, a in enumerate(e)) >= m]
    ym = tuple(0 if k != m - 1 else 1 for k in range(m))
    expected = [(ym, Fraction(1, m))]
    if phi.weighted_degree() > m or sorted(top) != expected:
        warnings.warn(
            f"phi_{m}: weighted degree {phi.weighted_degree()} or top term "
            f"deviates from the expected (1/{m}) Y_{m}", stacklevel=3)


@lru_cache(maxsize=None)
def build_phi_symbolic(m) -> YPoly:
    """Construct phi_m from the residue expansion.

    Working in Q[Y_1..Y_m, D] (D standing for the size d): the raw power sums
    of the shifted parts are Y_k + S_k(D) with S_k the shifted Faulhaber
    polynomial; e_i and h_j follow by Newton's triangular recurrences, each
    stratum is weighted by b_ij(D), and finally D is replaced by Y_1.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    nv = m + 1  # slots: Y_1..Y_m, then D
    one = {(0,) * nv: Fraction(1)}

    def from_dpoly(p):
        out = {}
        for e, c in enumerate(p.coeffs):
            if c:
                key = [0] * nv
                key[m] = e
                out[tuple(key)] = c
        return out

    ptil = [None]
    for k in range(1, m + 1):
        key = [0] * nv
        key[k - 1] = 1
        ptil.append(_mpoly.madd({tuple(key): Fraction(1)},
                                from_dpoly(shifted_faulhaber(k))))

    elem = [one]
    for i in range(1, m + 1):
        acc = {}
        for t in range(1, i + 1):
            acc = _mpoly.madd(acc, _mpoly.mscale(
                _mpoly.mmul(elem[i - t], ptil[t]), (-1) ** (t - 1)))
        elem.append(_mpoly.mscale(acc, Fraction(1, i)))
    comp = [one]
    for j in range(1, m + 1):
        acc = {}
        for t in range(1, j + 1):
            acc = _mpoly.madd(acc, _mpoly.mmul(comp[j - t], ptil[t]))
        comp.append(_mpoly.mscale(acc, Fraction(1, j)))

    total = {}
    for i in range(m + 1):
        for j in range(m + 1 - i):
            b = residue_coeff(m, i, j)
            if b.is_zero():
                continue
            term = _mpoly.mmul(_mpoly.mmul(elem[i], comp[j]), from_dpoly(b))
            total = _mpoly.madd(total, _mpoly.mscale(term, (-1) ** i))
    total = _mpoly.mscale(total, Fraction(-1, m * m))

    collapsed = {}
    for key, c in total.items():
        nk = (key[0] + key[m],) + key[1:m]
        nv2 = collapsed.get(nk, Fraction(0)) + c
        if nv2:
            collapsed[nk] = nv2
        elif nk in collapsed:
            del collapsed[nk]
    phi = YPoly(m, collapsed)
    _check_shape(phi, m)
    return phi


def _monomials_up_to(m, bound):
    """Exponent vectors of weighted degree <= bound, graded lex order."""
    out = []

    def rec(idx, prefix, remaining):
        if idx == m:
            out.append(tuple(prefix))
            return
        j = idx + 1
        for a in range(remaining // j + 1):
            rec(idx + 1, prefix + [a], remaining - j * a)

    rec(0, [], bound)
    return sorted(out, key=_graded_lex_key)


def build_phi_interpolate(m, degree_bound=None, surplus=20) -> YPoly:
    """Recover phi_m by exact interpolation against border-strip values.

    Solves for the coefficients of every monomial of weighted degree up to
    degree_bound (default m) over partitions of consecutive sizes d >= m,
    taking enough sizes that equations exceed unknowns by at least `surplus`.
    The solution is then re-verified on partitions of two further sizes.

    Raises PhiDegreeError when no polynomial of the given degree matches
    (retry with a larger bound); an underdetermined system enlarges the
    sample automatically.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    bound = m if degree_bound is None else degree_bound
    if bound < m:
        raise ValueError("degree bound below m cannot carry the top term")
    monos = _monomials_up_to(m, bound)

    def rows_for_size(d):
        rows, rhs = [], []
        for lam in partitions_of(d):
            ps = power_sums(lam, m)[1:]
            row = []
            for exps in monos:
                val = Fraction(1)
                for v, a in zip(ps, exps):
                    if a:
                        val *= v ** a
                row.append(val)
            rows.append(row)
            rhs.append(weighted_char_mn(lam, m))
        return rows, rhs

    rows, rhs = [], []
    d = m
    while len(rows) < len(monos) + surplus:
        r, y = rows_for_size(d)
        rows += r
        rhs += y
        d += 1
    while True:
        try:
            solution, _ = solve_exact(rows, rhs)
            break
        except InconsistentSystem as exc:
            raise PhiDegreeError(
                f"degree bound {bound} too small for m={m}") from exc
        except UnderdeterminedSystem:
            r, y = rows_for_size(d)
            rows += r
            rhs += y
            d += 1
            if d > m + 12:
                raise

    phi = YPoly(m, dict(zip(monos, solution)))
    for extra in (d, d + 1):
        for lam in partitions_of(extra):
            if phi.evaluate(power_sums(lam, m)[1:]) != weighted_char_mn(lam, m):
                raise PhiDegreeError(
                    f"degree bound {bound} too small for m={m}: "
                    f"verification failed at partition {lam}")
    return phi
