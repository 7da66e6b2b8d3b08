"""Schlomilch-type Bessel sums and their closed forms.

The central object is the weighted sum

    S_k(a, b) = sum_{n>=0} eps_n Jt_mu(a n) Jt_nu(b n) (a n / 2)^(2k),

with Jt_nu(z) = J_nu(z) (z/2)^-nu and eps_0 = 1/2, eps_n = 1 otherwise.
For 0 < b < a < pi it equals a Gamma-weighted 2F1 of (b/a)^2, which makes
the unscaled sum of J_mu(a n) J_nu(b n) / n^(mu+nu-2k) agree with the
corresponding Weber-Schafheitlin integral. The n = 0 summand is always
taken as its analytic limit.
"""

import math
import statistics
from dataclasses import dataclass, field

from .errors import DomainError
from .special import bessel_j, bessel_j_scaled, gamma, hyp2f1, rgamma
from .summation import NeumaierSum, compensated_sum
from .weber import corollary2_closed_form

TABLE_ORDER = 2.5
DECADE_GRID = (10, 100, 1000, 10_000)


def weight(n):
    return 0.5 if n == 0 else 1.0


@dataclass(frozen=True)
class SumSpec:
    a: float
    b: float
    mu: float
    nu: float
    k: int = 0
    n_terms: int = 10_000

    def __post_init__(self):
        if self.k < 0 or int(self.k) != self.k:
            raise DomainError("k must be a non-negative integer")
        if self.n_terms < 0:
            raise DomainError("n_terms must be non-negative")
        if not self.mu > 2 * self.k - 0.5:
            raise DomainError(f"need mu > 2k - 1/2, got mu={self.mu}, k={self.k}")
        if not self.nu > -0.5:
            raise DomainError(f"need nu > -1/2, got nu={self.nu}")

    @property
    def proven(self):
        """Inside the square 0 < |a|, |b| < pi where the identity is a theorem."""
        lo, hi = sorted((abs(self.a), abs(self.b)))
        return lo > 0 and hi < math.pi

    @property
    def conjecture_regime(self):
        return not self.proven


@dataclass
class TruncationReport:
    exact: float
    partial_sum: float
    error: float
    per_term: list = field(default_factory=list)
    inside_conjecture: bool | None = None


# ---------------------------------------------------------------------------
# Scaled sums
# ---------------------------------------------------------------------------

def summand_scaled(spec, n):
    """eps_n Jt_mu(|a| n) Jt_nu(|b| n) (|a| n / 2)^(2k), exact limit at n = 0."""
    if n == 0:
        if spec.k > 0:
            return 0.0
        return 0.5 * rgamma(spec.mu + 1.0) * rgamma(spec.nu + 1.0)
    x = abs(spec.a) * n
    y = abs(spec.b) * n
    return bessel_j_scaled(spec.mu, x) * bessel_j_scaled(spec.nu, y) * (0.5 * x) ** (2 * spec.k)


def sum_S_k(spec):
    return compensated_sum(summand_scaled(spec, n) for n in range(spec.n_terms + 1))


def theorem1_rhs(a, b, mu, nu, k, force=False):
    """Gamma(k+1/2) / (a Gamma(nu+1) Gamma(mu-k+1/2)) 2F1(1/2+k, 1/2-mu+k; nu+1; (b/a)^2).

    ``force=True`` skips the 0 < b < a < pi check, for probing outside the
    proven region.
    """
    if not force and not (0 < b < a < math.pi):
        raise DomainError(f"closed form proven only for 0 < b < a < pi (a={a}, b={b})")
    if not force and not (mu > 2 * k - 0.5 and nu > -0.5):
        raise DomainError("order bounds mu > 2k - 1/2, nu > -1/2 violated")
    pref = gamma(k + 0.5) / a * rgamma(nu + 1.0) * rgamma(mu - k + 0.5)
    return pref * hyp2f1(0.5 + k, 0.5 - mu + k, nu + 1.0, (b / a) ** 2)


# ---------------------------------------------------------------------------
# Unscaled sums  sum eps_n J_mu(a n) J_nu(b n) / n^lam
# ---------------------------------------------------------------------------

def _zero_limit(a, b, mu, nu, lam):
    excess = mu + nu - lam
    if excess > 1e-12:
        return 0.0
    if excess < -1e-12:
        raise DomainError("n = 0 term diverges for lambda > mu + nu")
    return 0.5 * (0.5 * a) ** mu * (0.5 * b) ** nu * rgamma(mu + 1.0) * rgamma(nu + 1.0)


def bessel_product_term(a, b, mu, nu, lam, n):
    """eps_n J_mu(a n) J_nu(b n) / n^lam for a, b > 0."""
    if n == 0:
        return _zero_limit(a, b, mu, nu, lam)
    return bessel_j(mu, a * n) * bessel_j(nu, b * n) / n ** lam


def bessel_product_sum(a, b, mu, nu, lam, N):
    if not (a > 0 and b > 0):
        raise DomainError("bessel product sums need a, b > 0")
    return compensated_sum(bessel_product_term(a, b, mu, nu, lam, n) for n in range(N + 1))


def corollary1_term(a, b, mu, nu, k, n):
    if n == 0 and k > 0:
        return 0.0
    return bessel_product_term(a, b, mu, nu, mu + nu - 2 * k, n)


def corollary1_sum(a, b, mu, nu, k, N):
    """sum_{n=0}^N eps_n J_mu(a n) J_nu(b n) / n^(mu+nu-2k)."""
    if not (a > 0 and b > 0):
        raise DomainError("corollary sums need a, b > 0")
    if k < 0 or int(k) != k:
        raise DomainError("k must be a non-negative integer")
    return compensated_sum(corollary1_term(a, b, mu, nu, k, n) for n in range(N + 1))


def corollary2_sum(a, b, mu, N):
    """sum_{n=0}^N eps_n J_mu(a n) J_mu(b n) / n."""
    return bessel_product_sum(a, b, mu, mu, 1.0, N)


# ---------------------------------------------------------------------------
# Order-5/2 truncation study
# ---------------------------------------------------------------------------

def _table_terms(a, b, N):
    a, b = abs(a), abs(b)
    for n in range(1, N + 1):
        yield n, bessel_j(TABLE_ORDER, a * n) * bessel_j(TABLE_ORDER, b * n) / n


def truncation_T_N(a, b, N):
    """sum_{n=1}^N J_{5/2}(|a| n) J_{5/2}(|b| n) / n."""
    if N < 1:
        raise DomainError("N must be at least 1")
    return compensated_sum(t for _, t in _table_terms(a, b, N))


def _sign_product(a, b):
    # sqrt(|a|/a) sqrt(|b|/b) times the principal-branch sum over signed
    # arguments reduces to sign(a) sign(b) T_N(|a|, |b|)
    return math.copysign(1.0, a) * math.copysign(1.0, b)


def table_exact(a, b):
    """(1/5) (min(|a|,|b|) / max(|a|,|b|))^(5/2)."""
    return corollary2_closed_form(a, b, TABLE_ORDER)


def truncation_R_N(a, b, N):
    """(1/5)(min/max)^(5/2) - sqrt(|a|/a) sqrt(|b|/b) T_N(a, b)."""
    if a == 0 or b == 0:
        raise DomainError("truncation error needs nonzero a and b")
    return table_exact(a, b) - _sign_product(a, b) * truncation_T_N(a, b, N)


def truncation_errors(a, b, N):
    """R_1, ..., R_N from a single compensated pass."""
    if a == 0 or b == 0:
        raise DomainError("truncation error needs nonzero a and b")
    exact = table_exact(a, b)
    s = _sign_product(a, b)
    acc = NeumaierSum()
    out = []
    for _, t in _table_terms(a, b, N):
        acc.add(t)
        out.append(exact - s * acc.value)
    return out


def _half_decade_windows(grid):
    windows = {}
    for n in grid:
        windows.setdefault(math.floor(2 * math.log10(n) + 1e-12), []).append(n)
    out = [windows[w] for w in sorted(windows)]
    # on a dense grid a lone endpoint (N = 10^4) joins its neighbour rather
    # than weigh as much as a whole half decade
    if len(out) > 1 and len(out[-1]) == 1 and len(out[-2]) > 1:
        out[-2].extend(out.pop())
    return out


def convergence_exponent(a, b, N_grid=None):
    """Least-squares slope of log|R_N| against log N.

    Within each half decade the geometric mean of |R_N| is used, since R_N
    oscillates in sign and a fit to raw values is dominated by near zeros.
    The default grid is the powers of ten 10..10^4. A dense grid can give a
    different answer: for some b, |R_N| alternates between two decay laws
    depending on N mod 8, and the powers of ten all fall in one class.
    """
    grid = sorted(N_grid) if N_grid is not None else list(DECADE_GRID)
    if len(grid) < 2 or grid[0] < 1:
        raise DomainError("need at least two positive N values")
    errors = truncation_errors(a, b, grid[-1])
    xs, ys = [], []
    for window in _half_decade_windows(grid):
        logs = []
        for n in window:
            r = abs(errors[n - 1])
            if r == 0.0:
                raise DomainError(f"R_N vanishes at N={n}; slope undefined")
            logs.append(math.log(r))
        xs.append(statistics.fmean(math.log(n) for n in window))
        ys.append(statistics.fmean(logs))
    if len(xs) < 2:
        raise DomainError("grid spans less than two half-decade windows")
    return statistics.linear_regression(xs, ys).slope


def conjecture_probe(a, b, N):
    """R_N report treating the closed form as exact anywhere in [-2pi, 2pi]^2."""
    if a == 0 or b == 0:
        raise DomainError("probe needs nonzero a and b")
    s = _sign_product(a, b)
    terms = [(n, s * t) for n, t in _table_terms(a, b, N)]
    exact = table_exact(a, b)
    partial = compensated_sum(t for _, t in terms)
    return TruncationReport(
        exact=exact,
        partial_sum=partial,
        error=exact - partial,
        per_term=terms,
        inside_conjecture=abs(a) + abs(b) < 2 * math.pi,
    )


# ---------------------------------------------------------------------------
# 2F1 through the sum
# ---------------------------------------------------------------------------

def _as_half_integer_k(p):
    k = p - 0.5
    if k >= 0 and float(k).is_integer():
        return int(k)
    return None


def hyp2f1_via_bessel_sum(p, q, c, z, N=10_000):
    """2F1(p, q; c; z) by inverting the closed form of S_k.

    Needs p = 1/2 + k (or q, the function being symmetric), mu = p - q with
    mu > 2k - 1/2, nu = c - 1 > -1/2 and 0 < z < 1.
    """
    k = _as_half_integer_k(p)
    if k is None or not (p - q > 2 * k - 0.5):
        k2 = _as_half_integer_k(q)
        if k2 is not None and q - p > 2 * k2 - 0.5:
            p, q, k = q, p, k2
    if k is None:
        raise DomainError(f"neither {p} nor {q} is of the form 1/2 + k")
    mu = p - q
    nu = c - 1.0
    if not (mu > 2 * k - 0.5 and nu > -0.5):
        raise DomainError("parameters do not map to mu > 2k - 1/2, nu > -1/2")
    if not 0 < z < 1:
        raise DomainError("z must lie in (0, 1)")
    a = 2.0
    spec = SumSpec(a, a * math.sqrt(z), mu, nu, k, N)
    return sum_S_k(spec) * a * gamma(nu + 1.0) * gamma(mu - k + 0.5) / gamma(k + 0.5)
