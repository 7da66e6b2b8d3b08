"""The compactly supported function h(x; a) and its Fourier cosine series.

On [0, pi],

    h(x; a) = A (1 - x^2/a^2)^(mu-2k-1/2) C_{2k}^(mu-2k)(x/a)   for x < a,
    h(x; a) = 0                                                 for x >= a,

and its cosine coefficients (2/pi) int_0^a h(x) cos(n x) dx equal
Jt_mu(n a) n^(2k), with Jt the scaled Bessel function.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .quadrature import integrate_finite_cosine
from .special import bessel_j, bessel_j_scaled, gamma, gegenbauer, rgamma
from .summation import compensated_sum


@dataclass(frozen=True)
class HSpec:
    a: float
    mu: float
    k: int = 0

    def __post_init__(self):
        if not 0 < self.a < math.pi:
            raise DomainError(f"need 0 < a < pi, got a={self.a}")
        if self.k < 0 or int(self.k) != self.k:
            raise DomainError("k must be a non-negative integer")
        if not self.mu > 2 * self.k - 0.5:
            raise DomainError(f"need mu > 2k - 1/2, got mu={self.mu}, k={self.k}")

    @property
    def sigma(self):
        return self.mu - 2 * self.k


def coefficient_A(spec):
    """(-1)^k (2k)! Gamma(mu-2k) 2^(2mu-2k-1) / (a^(2k+1) Gamma(2mu-2k))."""
    k, mu, a = spec.k, spec.mu, spec.a
    sign = -1.0 if k % 2 else 1.0
    return (sign * math.factorial(2 * k) * gamma(mu - 2 * k) * 2.0 ** (2 * mu - 2 * k - 1)
            / a ** (2 * k + 1) * rgamma(2 * mu - 2 * k))


def eval_h(x, spec):
    if not 0.0 <= x <= math.pi:
        raise DomainError(f"h is defined on [0, pi], got x={x}")
    if x >= spec.a:
        return 0.0
    u = x / spec.a
    return coefficient_A(spec) * (1.0 - u * u) ** (spec.sigma - 0.5) * gegenbauer(2 * spec.k, spec.sigma, u)


def fourier_coefficient_closed(spec, n):
    """Jt_mu(n a) n^(2k), the value the cosine coefficient should take."""
    if n < 0 or int(n) != n:
        raise DomainError("n must be a non-negative integer")
    if n == 0:
        return rgamma(spec.mu + 1.0) if spec.k == 0 else 0.0
    return bessel_j_scaled(spec.mu, n * spec.a) * float(n) ** (2 * spec.k)


def fourier_coefficient_numeric(spec, n, tol=1e-10):
    """(2/pi) int_0^a h(x; a) cos(n x) dx by quadrature.

    With x = a sin(theta) the weight becomes cos(theta)^(2 sigma), which
    QUADPACK's algebraic weight (pi/2 - theta)^(2 sigma) absorbs, leaving a
    smooth integrand on [0, pi/2].
    """
    if n < 0 or int(n) != n:
        raise DomainError("n must be a non-negative integer")
    A = coefficient_A(spec)
    a, s2, deg, sig = spec.a, 2.0 * spec.sigma, 2 * spec.k, spec.sigma
    half_pi = 0.5 * math.pi

    def f(theta):
        d = half_pi - theta
        ratio = math.cos(theta) / d if d > 1e-8 else 1.0 - d * d / 6.0
        return ratio ** s2 * gegenbauer(deg, sig, math.sin(theta)) * math.cos(n * a * math.sin(theta))

    scale = 2.0 / math.pi * a * A
    res = integrate_finite_cosine(f, 0.0, half_pi, abs_tol=tol / max(abs(scale), 1e-300),
                                  alg=(0.0, s2))
    return scale * res.value


def gegenbauer_cosine_closed(sigma, alpha, k):
    """pi (-1)^k Gamma(2k+2sigma) / ((2k)! Gamma(sigma) (2 alpha)^sigma) J_{sigma+2k}(alpha)."""
    sign = -1.0 if k % 2 else 1.0
    return (math.pi * sign * gamma(2 * k + 2 * sigma) * rgamma(sigma)
            / (math.factorial(2 * k) * (2.0 * alpha) ** sigma) * bessel_j(sigma + 2 * k, alpha))


def gegenbauer_cosine_integral_check(sigma, alpha, k, tol=1e-10):
    """(quadrature, closed form) of int_0^1 (1-t^2)^(sigma-1/2) C_{2k}^(sigma)(t) cos(alpha t) dt."""
    if not sigma > -0.5:
        raise DomainError("need sigma > -1/2")
    if not alpha > 0:
        raise DomainError("need alpha > 0")
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    e = sigma - 0.5

    def f(t):
        return (1.0 + t) ** e * gegenbauer(2 * k, sigma, t) * math.cos(alpha * t)

    numeric = integrate_finite_cosine(f, 0.0, 1.0, abs_tol=tol, alg=(0.0, e)).value
    return numeric, gegenbauer_cosine_closed(sigma, alpha, k)


def fourier_partial_sum(x, spec, N):
    """sum_{n=0}^N eps_n Jt_mu(n a) n^(2k) cos(n x)."""
    if N < 0:
        raise DomainError("N must be non-negative")
    return compensated_sum(
        (0.5 if n == 0 else 1.0) * fourier_coefficient_closed(spec, n) * math.cos(n * x)
        for n in range(N + 1))
