"""Data behind the truncation-error table and the two figures."""

import math
import statistics
from dataclasses import dataclass, field

from .errors import DomainError
from .series import TABLE_ORDER, _sign_product, table_exact, truncation_errors, truncation_T_N
from .special import bessel_j
from .summation import NeumaierSum

TABLE_A = math.pi / 2
TABLE_N = (1, 10, 100, 1000, 10_000)
TABLE_B_MULTIPLES = (1, 2, 3, 4, 5, 6)

FIG1_A_MULTIPLES = (1, 2, 3)
FIG1_TERMS = 10
FIG2_TERMS = 20


def table1_rows():
    """(N, b / (pi/4), R_N(pi/2, b)) in row-major order N, then b."""
    errors = {j: truncation_errors(TABLE_A, j * math.pi / 4, TABLE_N[-1]) for j in TABLE_B_MULTIPLES}
    return [(N, j, errors[j][N - 1]) for N in TABLE_N for j in TABLE_B_MULTIPLES]


def fig1_rows(a_values=None, b_max=2 * math.pi, samples=401, terms=FIG1_TERMS):
    """(a, b, exact, T_terms) with b = b_max i / samples, i = 1..samples."""
    if samples < 2:
        raise DomainError("need at least two samples")
    if not b_max > 0:
        raise DomainError("b_max must be positive")
    if a_values is None:
        a_values = [m * math.pi / 4 for m in FIG1_A_MULTIPLES]
    rows = []
    for a in a_values:
        for i in range(1, samples + 1):
            b = b_max * i / samples
            signed = _sign_product(a, b) * truncation_T_N(a, b, terms)
            rows.append((a, b, table_exact(a, b), signed))
    return rows


def grid_axis(n, half_width=2 * math.pi):
    """Left edges -w + 2w i / n of n equal cells on [-w, w].

    Cell centres of an odd grid include zero, where R is undefined; the left
    edges never do, so odd n keeps every sample off both axes.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError("grid size must be odd and at least 3")
    return [-half_width + 2 * half_width * i / n for i in range(n)]


@dataclass
class GridSweep:
    axis: list
    terms: int
    values: list = field(default_factory=list)  # values[i][j] = R(axis[i], axis[j])

    def cells(self):
        for i, a in enumerate(self.axis):
            for j, b in enumerate(self.axis):
                yield a, b, self.values[i][j]

    def median_abs(self, predicate):
        sel = [abs(r) for a, b, r in self.cells() if predicate(a, b)]
        if not sel:
            raise DomainError("no cells selected")
        return statistics.median(sel)

    def contrast(self, inner=0.9, outer=1.1):
        """(median |R| inside |a|+|b| < inner 2pi, median outside > outer 2pi)."""
        lim = 2 * math.pi
        inside = self.median_abs(lambda a, b: abs(a) + abs(b) < inner * lim)
        outside = self.median_abs(lambda a, b: abs(a) + abs(b) > outer * lim)
        return inside, outside


def fig2_sweep(n=201, terms=FIG2_TERMS, half_width=2 * math.pi):
    """R_terms over the n x n grid, reusing J_{5/2}(|x| m) across cells."""
    axis = grid_axis(n, half_width)
    jv = [[bessel_j(TABLE_ORDER, abs(x) * m) for m in range(1, terms + 1)] for x in axis]
    values = []
    for i, a in enumerate(axis):
        row = []
        for j, b in enumerate(axis):
            acc = NeumaierSum()
            for m in range(terms):
                acc.add(jv[i][m] * jv[j][m] / (m + 1))
            row.append(table_exact(a, b) - _sign_product(a, b) * acc.value)
        values.append(row)
    return GridSweep(axis, terms, values)
