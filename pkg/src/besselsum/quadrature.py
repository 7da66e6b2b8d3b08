"""Numerical oracle for int_0^inf J_mu(a t) J_nu(b t) t^-lambda dt.

Deliberately independent of the closed forms: Bessel values come from
``scipy.special.jv`` and nothing from :mod:`besselsum.weber` is used.

The half line is cut into three pieces.

* [0, delta]: the product of the two ascending series, integrated term by
  term, so the t^(mu+nu-lambda) behaviour at the origin is exact.
* [delta, T]: adaptive Gauss-Kronrod (QUADPACK) on chunks two periods of
  the fast oscillation long.
* [T, inf): both Bessel functions replaced by their Hankel expansions.
  The product splits into components oscillating at a+b and |a-b| with
  algebraic envelopes, and each envelope term integrates in closed form as
  a generalised exponential integral. This covers the non-oscillating
  a = b component that defeats extrapolation of partial integrals.
"""

import cmath
import math
from dataclasses import dataclass

import mpmath
from scipy import integrate, special

from .errors import ConvergenceError, DomainError
from .weber import check_conditions

DEFAULT_REL_TOL = 1e-9
MIN_LAMBDA = 0.5


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float

    def __float__(self):
        return self.value


def integrate_finite_cosine(f, lo, hi, abs_tol=1e-12, alg=None, limit=200):
    """Adaptive Gauss-Kronrod estimate of int_lo^hi f(x) dx.

    ``alg=(alpha, beta)`` multiplies the integrand by the algebraic weight
    (x - lo)^alpha (hi - x)^beta and integrates it exactly (QUADPACK QAWS),
    for endpoint singularities.
    """
    kwargs = {"epsabs": abs_tol, "epsrel": 0.0, "limit": limit, "full_output": 1}
    if alg is not None:
        kwargs.update(weight="alg", wvar=alg)
    out = integrate.quad(f, lo, hi, **kwargs)
    value, err = out[0], out[1]
    if len(out) > 3 and err > abs_tol:
        raise ConvergenceError(f"adaptive quadrature on [{lo}, {hi}] stalled: {out[3]}")
    return QuadResult(value, err)


def _series_coefficients(x_half, order, terms):
    """(-1)^m (x/2)^(2m) / (m! Gamma(order+m+1)) for m < terms."""
    out = []
    c = 1.0 / math.gamma(order + 1.0) if order + 1.0 < 171 else math.exp(-math.lgamma(order + 1.0))
    q = x_half * x_half
    for m in range(terms):
        out.append(c)
        c *= -q / ((m + 1.0) * (order + m + 1.0))
    return out


def _origin_piece(a, b, mu, nu, lam, delta, terms=40):
    p = mu + nu - lam
    ca = _series_coefficients(0.5 * a, mu, terms)
    cb = _series_coefficients(0.5 * b, nu, terms)
    scale = (0.5 * a) ** mu * (0.5 * b) ** nu
    total = 0.0
    last = 0.0
    for m in range(terms):
        g = math.fsum(ca[i] * cb[m - i] for i in range(m + 1))
        last = g * delta ** (p + 2 * m + 1) / (p + 2 * m + 1)
        total += last
    return scale * total, abs(scale * last) * 10.0


def _hankel_coefficients(order, count):
    mu4 = 4.0 * order * order
    out = [1.0]
    for k in range(1, count):
        out.append(out[-1] * (mu4 - (2 * k - 1) ** 2) / (8.0 * k))
    return out


def _envelope(order, x_scale, count):
    """Coefficients of t^-k in sum_k i^k a_k(order) (x_scale t)^-k."""
    ak = _hankel_coefficients(order, count)
    return [(1j ** k) * ak[k] / x_scale ** k for k in range(count)]


def _expint_tail(s, omega, T):
    """int_T^inf t^-s e^(i omega t) dt for s > 1."""
    if omega == 0.0:
        return T ** (1.0 - s) / (s - 1.0)
    if omega < 0.0:
        return _expint_tail(s, -omega, T).conjugate()
    val = mpmath.expint(s, mpmath.mpc(0.0, -omega * T))
    return complex(val) * T ** (1.0 - s)


def _tail_piece(a, b, mu, nu, lam, T, count):
    A = _envelope(mu, a, count)
    B = _envelope(nu, b, count)
    theta_mu = 0.5 * mu * math.pi + 0.25 * math.pi
    theta_nu = 0.5 * nu * math.pi + 0.25 * math.pi
    total = 0.0j
    last = 0.0
    for j in range(count):
        c = sum(A[i] * B[j - i] for i in range(j + 1))
        d = sum(A[i] * B[j - i].conjugate() for i in range(j + 1))
        s = 1.0 + lam + j
        piece = (cmath.exp(-1j * (theta_mu + theta_nu)) * c * _expint_tail(s, a + b, T)
                 + cmath.exp(-1j * (theta_mu - theta_nu)) * d * _expint_tail(s, a - b, T))
        total += piece
        last = abs(piece)
    return (total.real / (math.pi * math.sqrt(a * b))), last / (math.pi * math.sqrt(a * b))


def _tail_terms(a, b, mu, nu, T, eps=1e-18, cap=40):
    """Number of envelope terms until the product expansion is below eps."""
    x = min(a, b) * T
    big = max(abs(mu), abs(nu))
    mag = 1.0
    for k in range(1, cap):
        mag *= abs(4.0 * big * big - (2 * k - 1) ** 2) / (8.0 * k * x)
        if mag < eps:
            return 2 * k + 1
    return cap


def integrate_bessel_product(spec, rel_tol=DEFAULT_REL_TOL):
    """Integral of J_mu(a t) J_nu(b t) t^-lambda over (0, inf) with an error estimate."""
    verdict = check_conditions(spec)
    if not verdict:
        raise DomainError(f"invalid integral spec: {verdict.reason}")
    a, b, mu, nu, lam = spec.a, spec.b, spec.mu, spec.nu, spec.lam
    if lam < MIN_LAMBDA:
        raise DomainError(f"oracle supports lambda >= {MIN_LAMBDA} only")

    delta = 1.0 / max(a, b)
    origin, origin_err = _origin_piece(a, b, mu, nu, lam, delta)

    big = max(abs(mu), abs(nu))
    T = max((30.0 + big * big) / min(a, b), 8.0 * math.pi * max(1.0, 1.0 / min(a, b)), 2 * delta)
    count = _tail_terms(a, b, mu, nu, T)
    tail, tail_err = _tail_piece(a, b, mu, nu, lam, T, count)

    def f(t):
        return special.jv(mu, a * t) * special.jv(nu, b * t) * t ** -lam

    step = 4.0 * math.pi / (a + b)
    n_chunks = max(1, math.ceil((T - delta) / step))
    edges = [delta + (T - delta) * i / n_chunks for i in range(n_chunks + 1)]
    budget = rel_tol * 1e-2 * max(abs(origin) + abs(tail), 1e-3) / n_chunks
    epsrel = rel_tol * 1e-2
    for _ in range(4):
        chunks, quad_err = _middle_piece(f, edges, budget, epsrel, rel_tol)
        l1 = sum(abs(c) for c in chunks) + abs(origin) + abs(tail)
        value = math.fsum([origin, math.fsum(chunks), tail])
        # QUADPACK's estimates already carry its own rounding floor; what is
        # left is adding up chunks of mixed sign
        error = quad_err + origin_err + tail_err + 8.0 * 2.2e-16 * l1
        target = rel_tol * max(abs(value), 1e-3 * l1)
        if error <= target:
            return QuadResult(value, error)
        if quad_err < 0.1 * error:
            break
        # tighten the per-chunk budget toward what the value turned out to need
        budget = min(budget, 0.1 * target / n_chunks)
        epsrel = 1e-14
    raise ConvergenceError(
        f"oracle error estimate {error:.3g} exceeds tolerance for value {value:.6g}")


def _middle_piece(f, edges, budget, epsrel, rel_tol):
    chunks = []
    quad_err = 0.0
    for lo, hi in zip(edges, edges[1:]):
        out = integrate.quad(f, lo, hi, epsabs=budget, epsrel=epsrel,
                             limit=200, full_output=1)
        if len(out) > 3 and out[1] > max(budget, rel_tol * abs(out[0])):
            raise ConvergenceError(f"chunk [{lo:.4g}, {hi:.4g}] did not converge: {out[3]}")
        chunks.append(out[0])
        quad_err += out[1]
    return chunks, quad_err
