"""Closed forms of the discontinuous integral

    I(a, b) = int_0^inf J_mu(a t) J_nu(b t) t^-lambda dt

on both sides of a = b and on the diagonal itself.
"""

import enum
from dataclasses import dataclass

from .errors import DomainError
from .special import gamma, hyp2f1, rgamma

DIAGONAL_RTOL = 1e-14


class Validity(enum.Enum):
    VALID_DISTINCT = "valid-distinct"
    VALID_EQUAL = "valid-equal"
    INVALID = "invalid"


@dataclass(frozen=True)
class Verdict:
    validity: Validity
    reason: str = ""

    def __bool__(self):
        return self.validity is not Validity.INVALID


@dataclass(frozen=True)
class IntegralSpec:
    a: float
    b: float
    mu: float
    nu: float
    lam: float

    def swapped(self):
        return IntegralSpec(self.b, self.a, self.nu, self.mu, self.lam)


def on_diagonal(a, b):
    return a == b or abs(a - b) <= DIAGONAL_RTOL * max(abs(a), abs(b))


def check_conditions(spec):
    """Classify a spec against mu + nu + 1 > lambda > -1 (> 0 when a = b)."""
    if not (spec.a > 0 and spec.b > 0):
        return Verdict(Validity.INVALID, "a > 0 and b > 0 required")
    if not spec.mu + spec.nu + 1 > spec.lam:
        return Verdict(Validity.INVALID, "mu + nu + 1 > lambda violated")
    if on_diagonal(spec.a, spec.b):
        if not spec.lam > 0:
            return Verdict(Validity.INVALID, "lambda > 0 required when a = b")
        return Verdict(Validity.VALID_EQUAL)
    if not spec.lam > -1:
        return Verdict(Validity.INVALID, "lambda > -1 violated")
    return Verdict(Validity.VALID_DISTINCT)


def _sonine(a, b, mu, nu, lam):
    """The 2F1 expression for b <= a (b = a goes through Gauss' formula)."""
    p = 0.5 * (nu + mu - lam + 1.0)
    q = 0.5 * (nu - mu - lam + 1.0)
    pref = (a ** (lam - nu - 1.0) * b ** nu * gamma(p)
            / 2.0 ** lam * rgamma(nu + 1.0) * rgamma(0.5 * (lam + mu - nu + 1.0)))
    if pref == 0.0:
        return 0.0
    return pref * hyp2f1(p, q, nu + 1.0, (b / a) ** 2)


def _diagonal(a, mu, nu, lam):
    return (a ** (lam - 1.0) * gamma(0.5 * (nu + mu - lam + 1.0)) * gamma(lam) / 2.0 ** lam
            * rgamma(0.5 * (lam + mu - nu + 1.0))
            * rgamma(0.5 * (lam + nu - mu + 1.0))
            * rgamma(0.5 * (nu + mu + lam + 1.0)))


def integral_closed_form(spec):
    verdict = check_conditions(spec)
    if not verdict:
        raise DomainError(f"invalid integral spec: {verdict.reason}")
    a, b, mu, nu, lam = spec.a, spec.b, spec.mu, spec.nu, spec.lam
    if verdict.validity is Validity.VALID_EQUAL:
        return _diagonal(a, mu, nu, lam)
    if b < a:
        return _sonine(a, b, mu, nu, lam)
    return _sonine(b, a, nu, mu, lam)


def corollary2_closed_form(a, b, mu):
    """(1 / (2 mu)) (min(|a|,|b|) / max(|a|,|b|))^mu."""
    if a == 0 or b == 0:
        raise DomainError("corollary closed form needs nonzero a and b")
    if not mu > 0:
        raise DomainError("corollary closed form needs mu > 0")
    lo, hi = sorted((abs(a), abs(b)))
    return (lo / hi) ** mu / (2.0 * mu)
