"""Exact truncated q-series with fractional exponents in units of 1/24.

Every series is a finite map from an integer exponent index e to a rational
coefficient, the term being c * q^(e/24).  Indices e >= trunc24 are unknown
(not merely zero), so truncation must be tracked through every operation.
Exponents are kept in 1/24 units so that eta = q^(1/24) * prod(1 - q^n) and
plain integer-exponent series live in one ring.
"""

from __future__ import annotations

from fractions import Fraction

DENOM_EXP = 24
DEFAULT_QORDER = 40
DEFAULT_TRUNC24 = DEFAULT_QORDER * DENOM_EXP


def _clean(coeffs, trunc24):
    out = {}
    for e, c in coeffs.items():
        if e < trunc24 and c:
            out[int(e)] = c
    return out


class QSeries:
    """Truncated formal series sum_e c_e q^(e/24) over exact rationals.

    Instances are immutable by convention: all operations return new series.
    Stored coefficients are nonzero and lie strictly below trunc24.
    """

    __slots__ = ("coeffs", "trunc24")

    def __init__(self, coeffs=None, trunc24=DEFAULT_TRUNC24):
        self.coeffs = _clean(coeffs, trunc24) if coeffs else {}
        self.trunc24 = int(trunc24)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, trunc24=DEFAULT_TRUNC24):
        return cls({}, trunc24)

    @classmethod
    def one(cls, trunc24=DEFAULT_TRUNC24):
        return cls({0: Fraction(1)}, trunc24)

    @classmethod
    def q_power24(cls, e, trunc24=DEFAULT_TRUNC24):
        """The monomial q^(e/24)."""
        return cls({int(e): Fraction(1)}, trunc24)

    @classmethod
    def from_q_coeffs(cls, coeffs, trunc24=DEFAULT_TRUNC24):
        """Build an integer-exponent series from a map {d: coefficient}."""
        return cls({DENOM_EXP * d: Fraction(c) for d, c in coeffs.items()}, trunc24)

    # -- accessors ---------------------------------------------------------

    def coeff(self, e):
        if e >= self.trunc24:
            raise ValueError(f"exponent index {e} is beyond truncation {self.trunc24}")
        return self.coeffs.get(e, Fraction(0))

    def coeff_q(self, d):
        """Coefficient of q^d (integer power)."""
        return self.coeff(DENOM_EXP * d)

    @property
    def known_q_order(self):
        """Largest integer d with the q^d coefficient fully determined."""
        return (self.trunc24 - 1) // DENOM_EXP

    def q_coeffs_through(self, dmax):
        return [self.coeff_q(d) for d in range(dmax + 1)]

    def valuation(self):
        """Least stored exponent index; trunc24 when no term is stored."""
        return min(self.coeffs) if self.coeffs else self.trunc24

    def is_zero(self):
        return not self.coeffs

    def has_integer_exponents(self):
        return all(e % DENOM_EXP == 0 for e in self.coeffs)

    def require_integer_exponents(self):
        if not self.has_integer_exponents():
            raise ValueError("series has exponents not divisible by 24")
        return self

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.trunc24, other.trunc24)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return QSeries(out, t)

    def __neg__(self):
        return QSeries({e: -c for e, c in self.coeffs.items()}, self.trunc24)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            # A product coefficient at e is complete only when every split
            # e = e1 + e2 uses known factors, hence the valuation offsets.
            t = min(self.trunc24 + other.valuation(), other.trunc24 + self.valuation())
            out = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    if e < t:
                        out[e] = out.get(e, Fraction(0)) + c1 * c2
            return QSeries(out, t)
        c = Fraction(other)
        return QSeries({e: v * c for e, v in self.coeffs.items()}, self.trunc24)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = QSeries.one(self.trunc24)
        for _ in range(n):
            out = out * self
        return out

    def truncated(self, trunc24):
        if trunc24 > self.trunc24:
            raise ValueError("cannot extend truncation")
        return QSeries(self.coeffs, trunc24)

    def shifted(self, delta_e):
        """Multiply by q^(delta_e/24)."""
        return QSeries({e + delta_e: c for e, c in self.coeffs.items()},
                       self.trunc24 + delta_e)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, QSeries) and self.coeffs == other.coeffs
                and self.trunc24 == other.trunc24)

    __hash__ = None

    def __repr__(self):
        terms = sorted(self.coeffs.items())[:6]
        body = " + ".join(f"({c})q^({e}/24)" for e, c in terms)
        if len(self.coeffs) > 6:
            body += " + ..."
        return f"QSeries({body or '0'}; trunc24={self.trunc24})"

    def to_json_obj(self):
        return {
            "denom_exp": DENOM_EXP,
            "trunc": self.trunc24,
            "terms": [[e, str(c)] for e, c in sorted(self.coeffs.items())],
        }


def _mul_trunc(a, b, t):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            if e < t:
                out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def exp_series(f):
    """exp of a series with zero constant term and no negative exponents."""
    if f.valuation() < 1:
        raise ValueError("exp_series requires zero constant term and "
                         "no negative exponents")
    t = f.trunc24
    acc = {0: Fraction(1)}
    term = {0: Fraction(1)}
    n = 1
    while True:
        term = _mul_trunc(term, f.coeffs, t)
        if not term:
            break
        inv = Fraction(1, n)
        term = {e: c * inv for e, c in term.items()}
        for e, c in term.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        n += 1
    return QSeries(acc, t)


def log_series(f):
    """log of a series with constant term 1 and no negative exponents."""
    if f.valuation() != 0 or f.coeff(0) != 1:
        raise ValueError("log_series requires constant term 1 and "
                         "no negative exponents")
    t = f.trunc24
    g = dict(f.coeffs)
    del g[0]
    acc = {}
    power = {0: Fraction(1)}
    j = 1
    while True:
        power = _mul_trunc(power, g, t)
        if not power:
            break
        sign = Fraction((-1) ** (j - 1), j)
        for e, c in power.items():
            acc[e] = acc.get(e, Fraction(0)) + sign * c
        j += 1
    return QSeries(acc, t)


def q_derivative(f):
    """The operator q d/dq: the term c q^(e/24) maps to c (e/24) q^(e/24)."""
    return QSeries({e: c * Fraction(e, DENOM_EXP) for e, c in f.coeffs.items()},
                   f.trunc24)


def euler_product(trunc24=DEFAULT_TRUNC24):
    """prod_{n >= 1} (1 - q^n), over every factor contributing below trunc24."""
    out = {0: Fraction(1)}
    n = 1
    while DENOM_EXP * n < trunc24:
        shift = DENOM_EXP * n
        new = dict(out)
        for e, c in out.items():
            if e + shift < trunc24:
                new[e + shift] = new.get(e + shift, Fraction(0)) - c
        out = {e: c for e, c in new.items() if c}
        n += 1
    return QSeries(out, trunc24)


def eta_series(trunc24=DEFAULT_TRUNC24):
    """q^(1/24) * prod_{n >= 1} (1 - q^n)."""
    if trunc24 < 1:
        raise ValueError("trunc24 must be at least 1")
    prod = euler_product(trunc24)
    return QSeries({e + 1: c for e, c in prod.coeffs.items()}, trunc24)
