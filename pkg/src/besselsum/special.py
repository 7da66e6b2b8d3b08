"""Scalar special functions on the real line.

Gamma, Pochhammer, Bessel J of real order, Gauss 2F1 and Gegenbauer
polynomials. Everything here is a pure function of float arguments;
complex orders and arguments are not supported.
"""

import math
from fractions import Fraction

from .errors import ConvergenceError, DomainError, PoleError
from .summation import NeumaierSum, is_nonpositive_integer

__all__ = [
    "gamma",
    "rgamma",
    "pochhammer",
    "bessel_j",
    "bessel_j_scaled",
    "bessel_j_series",
    "bessel_j_half_integer",
    "hyp2f1",
    "gegenbauer",
    "gegenbauer_quadratic_form",
]

_EPS = 1e-17
_SERIES_MAX_TERMS = 500
_HYP_MAX_TERMS = 1_000_000
_HANKEL_MIN_Z = 25.0


# ---------------------------------------------------------------------------
# Gamma and friends
# ---------------------------------------------------------------------------

def gamma(x):
    """Gamma function; raises :class:`PoleError` at non-positive integers.

    ``math.gamma`` already uses a Lanczos-type rational approximation with
    reflection for negative arguments and is accurate to a few ulp.
    """
    if is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at {x}")
    return math.gamma(x)


def rgamma(x):
    """Reciprocal gamma, entire: 0 at the poles of gamma."""
    if is_nonpositive_integer(x):
        return 0.0
    if x > 171.5:
        return math.exp(-math.lgamma(x))
    return 1.0 / math.gamma(x)


def pochhammer(u, k):
    """Rising factorial u(u+1)...(u+k-1); the empty product is 1."""
    if k < 0 or int(k) != k:
        raise DomainError("pochhammer needs a non-negative integer k")
    p = 1.0
    for j in range(int(k)):
        p *= u + j
        if p == 0.0:
            return 0.0
    return p


# ---------------------------------------------------------------------------
# Bessel J
# ---------------------------------------------------------------------------

def _check_order(nu):
    if not math.isfinite(nu):
        raise DomainError(f"order must be finite, got {nu}")
    if isinstance(nu, complex):
        raise DomainError("complex orders are not implemented")
    if nu <= -1.0:
        raise DomainError(f"order must exceed -1, got {nu}")


def _half_integer_index(nu):
    """Return n if nu == n + 1/2 for an integer n >= -1, else None."""
    twice = 2.0 * nu
    if twice.is_integer() and int(twice) % 2 == 1:
        return int(twice) // 2
    return None


def _scaled_series(nu, z):
    """sum_m (-1)^m (z^2/4)^m / (m! (nu+1)_m)  ==  Gamma(nu+1) J_nu(z) (z/2)^-nu."""
    q = 0.25 * z * z
    term = 1.0
    acc = NeumaierSum()
    acc.add(term)
    for m in range(1, _SERIES_MAX_TERMS):
        term *= -q / (m * (nu + m))
        acc.add(term)
        if abs(term) <= _EPS * abs(acc.value):
            break
    return acc.value


def _scaled_series_exact(nu, z):
    nu_q = Fraction(nu)
    q = Fraction(z) ** 2 / 4
    term = Fraction(1)
    total = Fraction(1)
    for m in range(1, 10 * _SERIES_MAX_TERMS):
        term *= -q / (m * (nu_q + m))
        total += term
        if abs(term) <= Fraction(1, 10 ** 20) * abs(total):
            break
    return float(total)


def bessel_j_series(nu, z, exact=False):
    """J_nu(z) from its ascending power series.

    With ``exact=True`` the series is accumulated in rational arithmetic,
    which removes the cancellation that ruins the double-precision sum for
    large z. Slow; meant for checking the other branches.
    """
    _check_order(nu)
    if z < 0:
        raise DomainError("bessel_j is restricted to z >= 0")
    s = _scaled_series_exact(nu, z) if exact else _scaled_series(nu, z)
    return s * (0.5 * z) ** nu * rgamma(nu + 1.0)


def _phase_trig(nu):
    """cos and sin of (nu/2 + 1/4) pi, exact for half-integer nu."""
    n = _half_integer_index(nu)
    if n is not None:
        return ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))[(n + 1) % 4]
    phi = (0.5 * nu + 0.25) * math.pi
    return math.cos(phi), math.sin(phi)


def _hankel(nu, z):
    """Hankel expansion of J_nu(z); returns (value, converged).

    The expansion terminates for half-integer orders and is then exact.
    """
    terminating = _half_integer_index(nu) is not None
    mu4 = 4.0 * nu * nu
    inv8z = 0.125 / z
    p = 1.0
    q = 0.0
    term = 1.0
    converged = False
    for k in range(1, 200):
        term *= (mu4 - (2 * k - 1) ** 2) * inv8z / k
        if term == 0.0:
            converged = True
            break
        r = k % 4
        if r == 1:
            q += term
        elif r == 2:
            p -= term
        elif r == 3:
            q -= term
        else:
            p += term
        if not terminating:
            if abs(term) < _EPS:
                converged = True
                break
            if k > 2 * z + 4:
                break
    cphi, sphi = _phase_trig(nu)
    cz, sz = math.cos(z), math.sin(z)
    cos_chi = cz * cphi + sz * sphi
    sin_chi = sz * cphi - cz * sphi
    value = math.sqrt(2.0 / (math.pi * z)) * (p * cos_chi - q * sin_chi)
    return value, converged


def bessel_j_half_integer(nu, z):
    """Closed trigonometric form of J_{n+1/2}(z).

    Exact finite expression; loses relative accuracy through cancellation
    when z is small compared with the order, which is why :func:`bessel_j`
    only uses it for z >= max(1, n, n^2/8).
    """
    if _half_integer_index(nu) is None:
        raise DomainError(f"{nu} is not a half-integer order")
    if z <= 0:
        raise DomainError("closed form needs z > 0")
    return _hankel(nu, z)[0]


def _miller(nu, z):
    """Backward recurrence normalised by (z/2)^nu = sum_k (nu+2k) G(nu+k)/k! J_{nu+2k}."""
    m_top = int(z + 30.0 + 4.0 * math.sqrt(z)) + 2
    if m_top % 2:
        m_top += 1
    # weights w_j for the even-index terms, divided by Gamma(nu+1)
    w = [1.0]
    ratio = 1.0  # (nu+1)_{j-1} / j!, updated as a ratio so neither part overflows
    for j in range(1, m_top // 2 + 1):
        if j > 1:
            ratio *= (nu + j - 1) / j
        w.append((nu + 2 * j) * ratio)
    f_next = 0.0
    f_cur = 1e-30
    norm = w[m_top // 2] * f_cur
    for k in range(m_top, 0, -1):
        f_prev = 2.0 * (nu + k) / z * f_cur - f_next
        f_next, f_cur = f_cur, f_prev
        idx = k - 1
        if idx % 2 == 0:
            norm += w[idx // 2] * f_cur
        if abs(f_cur) > 1e250:
            f_cur *= 1e-250
            f_next *= 1e-250
            norm *= 1e-250
    return f_cur / norm * (0.5 * z) ** nu * rgamma(nu + 1.0)


def _closed_form_ok(n, z):
    # cancellation in the trig form grows like (n^2 / z)^n
    return n is not None and z >= max(1.0, n, n * n / 8.0)


def _small_argument(nu, z):
    """True where the ascending series is the branch of choice."""
    if _closed_form_ok(_half_integer_index(nu), z):
        return False
    return z <= 6.0 or z * z <= 4.0 * (nu + 1.0)


def bessel_j(nu, z):
    """Bessel function of the first kind J_nu(z), real nu > -1, z >= 0.

    Branches: ascending series for small z, the terminating trigonometric
    form for half-integer orders n + 1/2 once z >= max(1, n, n^2/8), the Hankel
    expansion for large z, and Miller's backward recurrence in between.
    """
    _check_order(nu)
    if z < 0:
        raise DomainError("bessel_j is restricted to z >= 0")
    if z == 0.0:
        if nu == 0.0:
            return 1.0
        if nu > 0.0:
            return 0.0
        raise DomainError("J_nu(0) is infinite for -1 < nu < 0")
    if _small_argument(nu, z):
        return bessel_j_series(nu, z)
    n = _half_integer_index(nu)
    if _closed_form_ok(n, z):
        return _hankel(nu, z)[0]
    # the asymptotic terms peak near exp(nu^2 / 2z) before they shrink
    if n is None and z >= max(_HANKEL_MIN_Z, 0.25 * nu * nu):
        value, ok = _hankel(nu, z)
        if ok:
            return value
    return _miller(nu, z)


def bessel_j_scaled(nu, z):
    """J_nu(z) (z/2)^-nu, with the exact limit 1/Gamma(nu+1) at z = 0."""
    _check_order(nu)
    if z < 0:
        raise DomainError("bessel_j_scaled is restricted to z >= 0")
    if z == 0.0:
        return rgamma(nu + 1.0)
    if _small_argument(nu, z):
        return _scaled_series(nu, z) * rgamma(nu + 1.0)
    return bessel_j(nu, z) / (0.5 * z) ** nu


# ---------------------------------------------------------------------------
# Gauss hypergeometric 2F1
# ---------------------------------------------------------------------------

def _terminating_degree(a, b):
    degs = [int(-p) for p in (a, b) if is_nonpositive_integer(p)]
    return min(degs) if degs else None


def _hyp_series(a, b, c, z, degree=None):
    term = 1.0
    acc = NeumaierSum()
    acc.add(term)
    settle = abs(a) + abs(b) + abs(c) + 2.0
    limit = degree if degree is not None else _HYP_MAX_TERMS
    for m in range(limit):
        term *= (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z
        acc.add(term)
        if degree is None and m > settle and abs(term) <= _EPS * abs(acc.value):
            return acc.value
        if term == 0.0 and degree is None and m > settle:
            return acc.value
    if degree is None:
        raise ConvergenceError(
            f"2F1({a}, {b}; {c}; {z}) did not converge in {_HYP_MAX_TERMS} terms")
    return acc.value


def hyp2f1(a, b, c, z):
    """Gauss hypergeometric function 2F1(a, b; c; z) for real parameters.

    Terminating series are summed exactly term by term. z = 1 uses Gauss'
    summation formula. For 0.9 <= z < 1 Euler's transformation is applied
    when it shortens the series.
    """
    for v in (a, b, c, z):
        if not math.isfinite(v):
            raise DomainError("2F1 parameters must be finite reals")
    degree = _terminating_degree(a, b)
    if is_nonpositive_integer(c):
        if degree is None or degree > -c:
            raise PoleError(f"2F1 undefined for c = {c}")
    if z == 0.0 or degree == 0:
        return 1.0
    if degree is not None:
        return _hyp_series(a, b, c, z, degree)
    if z == 1.0:
        if c - a - b <= 0:
            raise DomainError("2F1 at z = 1 diverges unless c - a - b > 0")
        return gamma(c) * gamma(c - a - b) * rgamma(c - a) * rgamma(c - b)
    if abs(z) > 1.0:
        raise DomainError(f"2F1 series diverges for |z| = {abs(z)} > 1")
    if z == -1.0:
        raise DomainError("2F1 at z = -1 is not supported")
    euler_degree = _terminating_degree(c - a, c - b)
    if euler_degree is not None or (z >= 0.9 and c - a - b < 0):
        return (1.0 - z) ** (c - a - b) * _hyp_series(c - a, c - b, c, z, euler_degree)
    return _hyp_series(a, b, c, z)


# ---------------------------------------------------------------------------
# Gegenbauer polynomials
# ---------------------------------------------------------------------------

def _gegenbauer_explicit(n, lam, x):
    """sum_j (-1)^j (lam)_{n-j} / (j! (n-2j)!) (2x)^{n-2j}; polynomial in lam."""
    acc = NeumaierSum()
    for j in range(n // 2 + 1):
        coef = pochhammer(lam, n - j) / (math.factorial(j) * math.factorial(n - 2 * j))
        acc.add((-1) ** j * coef * (2.0 * x) ** (n - 2 * j))
    return acc.value


def gegenbauer(n, lam, x):
    """Gegenbauer polynomial C_n^(lam)(x).

    Evaluated from ((2 lam)_n / n!) 2F1(-n, n + 2 lam; lam + 1/2; (1 - x)/2).
    When the prefactor vanishes and the 2F1 is finite the result is exactly
    zero. When lam + 1/2 is a non-positive integer the hypergeometric form
    is 0 * inf and the polynomial is taken as its limit in lam, which is the
    explicit power sum.
    """
    if n < 0 or int(n) != n:
        raise DomainError("gegenbauer degree must be a non-negative integer")
    if not math.isfinite(lam):
        raise DomainError("gegenbauer prefactor undefined for non-finite lambda")
    n = int(n)
    if n == 0:
        return 1.0
    c = lam + 0.5
    if is_nonpositive_integer(c):
        return _gegenbauer_explicit(n, lam, x)
    pref = pochhammer(2.0 * lam, n) / math.factorial(n)
    if pref == 0.0:
        return 0.0
    return pref * hyp2f1(-n, n + 2.0 * lam, c, 0.5 * (1.0 - x))


def gegenbauer_quadratic_form(k, mu, x):
    """((k+1-mu)_k / k!) (1-x^2)^(1/2-mu+2k) 2F1(1/2+k, 1/2-mu+k; 1/2; x^2).

    Equal to C_{2k}^(mu-2k)(x) for |x| < 1.
    """
    if abs(x) >= 1.0:
        raise DomainError("quadratic Gegenbauer form needs |x| < 1")
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    k = int(k)
    pref = pochhammer(k + 1.0 - mu, k) / math.factorial(k)
    if pref == 0.0:
        return 0.0
    x2 = x * x
    return pref * (1.0 - x2) ** (0.5 - mu + 2 * k) * hyp2f1(0.5 + k, 0.5 - mu + k, 0.5, x2)
