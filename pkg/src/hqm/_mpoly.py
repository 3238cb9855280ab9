"""Sparse multivariate polynomial arithmetic on exponent-tuple dicts.

A polynomial is a dict mapping fixed-length exponent tuples to nonzero
Fractions.  Shared by the symbolic polynomial construction and the operator
expansion; not part of the public API.
"""

from __future__ import annotations

from fractions import Fraction


def madd(a, b):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, Fraction(0)) + v
        if nv:
            out[k] = nv
        elif k in out:
            del out[k]
    return out


def mscale(a, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def mmul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            nv = out.get(k, Fraction(0)) + v1 * v2
            if nv:
                out[k] = nv
            elif k in out:
                del out[k]
    return out


def mpow(a, n, nvars):
    out = {(0,) * nvars: Fraction(1)}
    for _ in range(n):
        out = mmul(out, a)
    return out
