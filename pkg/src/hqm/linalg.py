"""Exact rational Gaussian elimination for small overdetermined systems."""

from __future__ import annotations

from fractions import Fraction


class InconsistentSystem(Exception):
    """No exact solution; row_index is the first row that cannot be matched."""

    def __init__(self, row_index):
        super().__init__(f"no exact solution: row {row_index} is inconsistent")
        self.row_index = row_index


class UnderdeterminedSystem(Exception):
    def __init__(self, rank, unknowns):
        super().__init__(f"system is underdetermined: rank {rank} of {unknowns}")
        self.rank = rank
        self.unknowns = unknowns


def solve_exact(rows, rhs):
    """Solve rows * x = rhs exactly over the rationals.

    Rows are consumed in order; the first linearly independent ones pin the
    solution and every remaining row is verified against it, so surplus rows
    act as checks rather than fitting data.  Returns (x, pivot_row_indices).

    Raises InconsistentSystem with the first unmatched row index, or
    UnderdeterminedSystem when the rows do not determine every unknown.
    """
    if not rows:
        raise UnderdeterminedSystem(0, 0)
    ncols = len(rows[0])
    pivots = {}  # col -> (reduced row, reduced rhs)
    pivot_rows = []
    for idx, (row, y) in enumerate(zip(rows, rhs)):
        r = [Fraction(v) for v in row]
        y = Fraction(y)
        for col in range(ncols):
            if r[col] and col in pivots:
                factor = r[col]
                prow, py = pivots[col]
                for c2 in range(col, ncols):
                    r[c2] -= factor * prow[c2]
                y -= factor * py
        lead = next((c for c in range(ncols) if r[c]), None)
        if lead is None:
            if y:
                raise InconsistentSystem(idx)
            continue
        inv = Fraction(1) / r[lead]
        pivots[lead] = ([v * inv for v in r], y * inv)
        pivot_rows.append(idx)
    if len(pivots) < ncols:
        raise UnderdeterminedSystem(len(pivots), ncols)
    x = [Fraction(0)] * ncols
    for col in sorted(pivots, reverse=True):
        prow, py = pivots[col]
        x[col] = py - sum(prow[c] * x[c] for c in range(col + 1, ncols))
    return x, pivot_rows
