"""Eisenstein q-expansions, the ring Q[E2, E4, E6], and exact fitting.

Weights: E2, E4, E6 carry weights 2, 4, 6, so the monomial E2^a E4^b E6^c has
weight 2a + 4b + 6c.  Fitting a q-series into the ring is exact: a candidate
must reproduce every known coefficient, with a required surplus of
coefficients acting purely as verification equations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .linalg import InconsistentSystem, UnderdeterminedSystem, solve_exact
from .qseries import DENOM_EXP, QSeries, log_series, q_derivative


@lru_cache(maxsize=None)
def bernoulli(n) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2 (from x / (e^x - 1))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    return Fraction(-1, n + 1) * sum(
        (comb(n + 1, k) * bernoulli(k) for k in range(n)), Fraction(0))


def divisor_power_sum(n, k) -> int:
    return sum(t ** k for t in range(1, n + 1) if n % t == 0)


@lru_cache(maxsize=None)
def eisenstein(k, dmax) -> QSeries:
    """Normalized weight-k Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k not in (2, 4, 6):
        raise ValueError("only weights 2, 4, 6 are supported")
    scale = Fraction(-2 * k) / bernoulli(k)
    coeffs = {0: Fraction(1)}
    for n in range(1, dmax + 1):
        coeffs[n] = scale * divisor_power_sum(n, k - 1)
    return QSeries.from_q_coeffs(coeffs, DENOM_EXP * (dmax + 1))


def monomials_up_to_weight(wmax):
    """Exponent triples (a, b, c) with 2a + 4b + 6c <= wmax, weight-then-lex."""
    out = []
    for c in range(wmax // 6 + 1):
        for b in range((wmax - 6 * c) // 4 + 1):
            for a in range((wmax - 6 * c - 4 * b) // 2 + 1):
                out.append((a, b, c))
    return sorted(out, key=lambda t: (2 * t[0] + 4 * t[1] + 6 * t[2], t))


def monomial_weight(exps):
    a, b, c = exps
    return 2 * a + 4 * b + 6 * c


class QMPoly:
    """Polynomial in E2, E4, E6 with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        cleaned = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c:
                cleaned[tuple(exps)] = c
        self.terms = cleaned

    def weights(self):
        return sorted({monomial_weight(e) for e in self.terms})

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def monomials(self):
        return [(e, self.terms[e]) for e in
                sorted(self.terms, key=lambda t: (monomial_weight(t), t))]

    def weight_parts(self):
        parts = {}
        for e, c in self.terms.items():
            parts.setdefault(monomial_weight(e), {})[e] = c
        return {w: QMPoly(t) for w, t in sorted(parts.items())}

    def to_json_obj(self):
        return {"monomials": [[list(e), str(c)] for e, c in self.monomials()]}

    def __eq__(self, other):
        return isinstance(other, QMPoly) and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*E2^{a}E4^{b}E6^{c2}"
                          for (a, b, c2), c in self.monomials())
        return f"QMPoly({body or '0'})"


def _monomial_series(exps, dmax):
    a, b, c = exps
    out = QSeries.one(DENOM_EXP * (dmax + 1))
    for k, power in ((2, a), (4, b), (6, c)):
        for _ in range(power):
            out = out * eisenstein(k, dmax)
    return out


def qm_eval(poly, dmax) -> QSeries:
    """Expand a QMPoly into its exact q-series."""
    out = QSeries.zero(DENOM_EXP * (dmax + 1))
    for exps, c in poly.terms.items():
        out = out + _monomial_series(exps, dmax) * c
    return out


class FitFailure(Exception):
    """No polynomial in E2, E4, E6 of the allowed weight matches the series."""

    def __init__(self, wmax, first_bad_qorder):
        super().__init__(f"no weight<={wmax} fit: first unmatched coefficient "
                         f"at q^{first_bad_qorder}")
        self.wmax = wmax
        self.first_bad_qorder = first_bad_qorder


class FitUnderdetermined(Exception):
    """Too few known coefficients to pin the fit plus the surplus margin."""

    def __init__(self, wmax, needed_qorder):
        super().__init__(f"underdetermined at weight {wmax}: "
                         f"need coefficients through q^{needed_qorder}")
        self.wmax = wmax
        self.needed_qorder = needed_qorder


@dataclass(frozen=True)
class QMFit:
    poly: QMPoly
    wmax: int
    surplus_verified: int

    def to_json_obj(self):
        return {
            "wmax": self.wmax,
            "weights": self.poly.weights(),
            "homogeneous": self.poly.is_homogeneous(),
            "weight_breakdown": {str(w): p.to_json_obj()["monomials"]
                                 for w, p in self.poly.weight_parts().items()},
            "monomials": self.poly.to_json_obj()["monomials"],
            "surplus_verified": self.surplus_verified,
        }


def fit_qm(f, wmax, margin=8) -> QMFit:
    """Fit f exactly as a polynomial in E2, E4, E6 of weight at most wmax.

    Every known coefficient of f must be matched; at least `margin` known
    coefficients beyond those needed to determine the candidate are required,
    and they serve as verification equations.  Raises FitFailure (no exact
    match) or FitUnderdetermined (not enough known coefficients).
    """
    f.require_integer_exponents()
    monos = monomials_up_to_weight(wmax)
    dmax = f.known_q_order
    n_known = dmax + 1
    if n_known < len(monos) + margin:
        raise FitUnderdetermined(wmax, len(monos) + margin - 1)
    basis = [_monomial_series(e, dmax) for e in monos]
    rows = [[s.coeff_q(d) for s in basis] for d in range(dmax + 1)]
    rhs = [f.coeff_q(d) for d in range(dmax + 1)]
    try:
        x, pivot_rows = solve_exact(rows, rhs)
    except InconsistentSystem as exc:
        raise FitFailure(wmax, exc.row_index) from None
    except UnderdeterminedSystem:
        raise FitUnderdetermined(wmax, len(monos) + margin - 1) from None
    poly = QMPoly(dict(zip(monos, x)))
    fit = QMFit(poly, wmax, n_known - len(pivot_rows))
    # independent re-check: the expansion must reproduce f exactly
    if qm_eval(poly, dmax).truncated(f.trunc24) != QSeries(f.coeffs, f.trunc24):
        raise FitFailure(wmax, -1)
    return fit


def fit_escalating(f, w_start, margin=8, w_cap=20) -> QMFit:
    """Try fit_qm at w_start, then escalate the weight bound by 2 up to w_cap."""
    w = w_start
    last = None
    while w <= w_cap:
        try:
            return fit_qm(f, w, margin)
        except FitFailure as exc:
            last = exc
            w += 2
    raise last if last is not None else FitFailure(w_cap, -1)


def eta_derivative_iterate(eta_f, j) -> QSeries:
    """Given the series eta * f, return eta * D^j(f).

    Uses eta * D(f) = D(eta * f) - (1/24) E2 * (eta * f) repeatedly; D is the
    q d/dq operator.
    """
    if j < 0:
        raise ValueError("j must be nonnegative")
    out = eta_f
    if j == 0:
        return out
    e2 = eisenstein(2, out.known_q_order)
    for _ in range(j):
        out = q_derivative(out) - e2 * out * Fraction(1, 24)
    return out


@dataclass
class DerivationReport:
    checked_qorder: int
    failures: list = field(default_factory=list)  # (name, first divergent d)

    @property
    def ok(self):
        return not self.failures

    def to_json_obj(self):
        return {"checked_qorder": self.checked_qorder,
                "ok": self.ok,
                "failures": [{"identity": n, "first_divergent_q": d}
                             for n, d in self.failures]}


def check_derivation_system(dmax=40) -> DerivationReport:
    """Verify the differentiation identities of the ring exactly through q^dmax:

        D(E2) = (E2^2 - E4)/12,  D(E4) = (E2 E4 - E6)/3,
        D(E6) = (E2 E6 - E4^2)/2,  and  D(log Delta) = E2
    with Delta = (E4^3 - E6^2)/1728 = q prod(1-q^n)^24.
    """
    e2 = eisenstein(2, dmax + 1)
    e4 = eisenstein(4, dmax + 1)
    e6 = eisenstein(6, dmax + 1)
    half = Fraction(1, 2)
    identities = [
        ("D(E2) = (E2^2 - E4)/12", q_derivative(e2), (e2 * e2 - e4) * Fraction(1, 12)),
        ("D(E4) = (E2*E4 - E6)/3", q_derivative(e4), (e2 * e4 - e6) * Fraction(1, 3)),
        ("D(E6) = (E2*E6 - E4^2)/2", q_derivative(e6), (e2 * e6 - e4 * e4) * half),
    ]
    delta = (e4 * e4 * e4 - e6 * e6) * Fraction(1, 1728)
    # Delta = q * (unit series); log of the unit plus D(log q) = 1 handles the
    # q factor without materializing log q.
    unit = delta.shifted(-DENOM_EXP)
    dlog = q_derivative(log_series(unit)) + QSeries.one(unit.trunc24)
    identities.append(("D(log Delta) = E2", dlog, e2))

    report = DerivationReport(checked_qorder=dmax)
    for name, lhs, rhs in identities:
        bad = next((d for d in range(dmax + 1)
                    if lhs.coeff_q(d) != rhs.coeff_q(d)), None)
        if bad is not None:
            report.failures.append((name, bad))
    return report
