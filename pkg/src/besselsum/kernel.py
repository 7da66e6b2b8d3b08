"""Radial resolution of the Newtonian kernel.

The l-th radial component K_l(r, r') of 1/|r - r'| factors as
sum_n K_nl(r) K_nl(r') with K_nl(r) = sqrt(4 pi eps_n / (r n)) J_{l+1/2}(r n),
valid while both radii stay below pi.
"""

import math

from .errors import DomainError
from .series import TruncationReport, bessel_product_term
from .special import bessel_j, bessel_j_scaled
from .summation import NeumaierSum
from .weber import corollary2_closed_form


def _check_l(l):
    if l < 0 or int(l) != l:
        raise DomainError("l must be a non-negative integer")


def _check_radius(r):
    if not 0 < r < math.pi:
        raise DomainError(f"radius must lie in (0, pi), got {r}")


def kl_closed_form(r, r_prime, l):
    """4 pi / ((2l+1) sqrt(r r')) (min/max)^(l+1/2)."""
    if not (r > 0 and r_prime > 0):
        raise DomainError("radii must be positive")
    _check_l(l)
    lo, hi = sorted((r, r_prime))
    return 4.0 * math.pi / ((2 * l + 1) * math.sqrt(r * r_prime)) * (lo / hi) ** (l + 0.5)


def knl_radial(n, l, r):
    """sqrt(4 pi eps_n / (r n)) J_{l+1/2}(r n); the n = 0 value is the limit."""
    _check_radius(r)
    _check_l(l)
    if n < 0 or int(n) != n:
        raise DomainError("n must be a non-negative integer")
    if n == 0:
        if l > 0:
            return 0.0
        # J_{1/2}(x) / sqrt(x) -> Jt_{1/2}(0) / sqrt(2)
        return math.sqrt(2.0 * math.pi) * bessel_j_scaled(0.5, 0.0) / math.sqrt(2.0)
    x = r * n
    return math.sqrt(4.0 * math.pi / x) * bessel_j(l + 0.5, x)


def resolution_partial_sum(r, r_prime, l, N):
    """sum_{n=0}^N K_nl(r) K_nl(r') against the closed form of K_l."""
    _check_radius(r)
    _check_radius(r_prime)
    _check_l(l)
    if N < 0:
        raise DomainError("N must be non-negative")
    acc = NeumaierSum()
    per_term = []
    for n in range(N + 1):
        t = knl_radial(n, l, r) * knl_radial(n, l, r_prime)
        acc.add(t)
        per_term.append((n, t))
    exact = kl_closed_form(r, r_prime, l)
    return TruncationReport(exact=exact, partial_sum=acc.value, error=exact - acc.value,
                            per_term=per_term, inside_conjecture=r + r_prime < 2 * math.pi)


def scaled_corollary_error(r, r_prime, l, N):
    """(4 pi / sqrt(r r')) times the truncation error of sum eps_n J J / n with mu = l + 1/2."""
    mu = l + 0.5
    acc = NeumaierSum()
    for n in range(N + 1):
        acc.add(bessel_product_term(r, r_prime, mu, mu, 1.0, n))
    scale = 4.0 * math.pi / math.sqrt(r * r_prime)
    return scale * (corollary2_closed_form(r, r_prime, mu) - acc.value)
