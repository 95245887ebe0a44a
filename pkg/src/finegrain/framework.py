"""Exact exponent calculus for decomposition/composition trade-offs.

All quantities are :class:`fractions.Fraction`; nothing here touches
floating point. ``ceil_pow`` evaluates ``ceil(n ** (p/r))`` with integer
roots so block sizes derived from rational exponents are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

Rational = Union[int, Fraction, str]

__all__ = [
    "ExponentQuery",
    "as_fraction",
    "iroot",
    "ceil_pow",
    "block_parameters",
    "obs1_envelope",
    "thm24_beta_max",
    "cor25_kernel_beta_max",
    "thm24_lambda",
    "lambda_max",
    "excluded_region",
]


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, float):
        raise TypeError("exponents must be exact rationals, not floats")
    return Fraction(x)


def iroot(x: int, r: int) -> int:
    """Largest integer ``m`` with ``m**r <= x`` (x >= 0, r >= 1)."""
    if x < 0 or r < 1:
        raise ValueError("iroot needs x >= 0 and r >= 1")
    if x < 2 or r == 1:
        return x
    m = 1 << ((x.bit_length() + r - 1) // r)  # m**r > x
    while True:
        nxt = ((r - 1) * m + x // m ** (r - 1)) // r
        if nxt >= m:
            break
        m = nxt
    while m**r > x:
        m -= 1
    while (m + 1) ** r <= x:
        m += 1
    return m


def ceil_pow(n: int, e: Rational) -> int:
    """``ceil(n ** e)`` for integer ``n >= 1`` and rational ``e >= 0``."""
    e = as_fraction(e)
    if n < 1 or e < 0:
        raise ValueError("ceil_pow needs n >= 1 and e >= 0")
    x = n**e.numerator
    m = iroot(x, e.denominator)
    return m if m**e.denominator == x else m + 1


def block_parameters(n: int, alpha: Rational, lam: Rational) -> tuple[Fraction, int, int]:
    """``(epsilon, q, z)`` with ``epsilon = alpha/(alpha+lam)``,
    ``q = ceil(n^epsilon)`` and ``z = ceil(n^(1-epsilon))``."""
    alpha, lam = as_fraction(alpha), as_fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    eps = alpha / (alpha + lam)
    return eps, ceil_pow(n, eps), ceil_pow(n, 1 - eps)


@dataclass(frozen=True)
class ExponentQuery:
    alpha: Fraction = Fraction(2)
    beta: Optional[Fraction] = None
    gamma: Optional[Fraction] = None
    lam: Optional[Fraction] = None
    nu: Fraction = Fraction(1)
    mu: Fraction = Fraction(1)
    xi: Fraction = Fraction(1)


def obs1_envelope(beta: Rational, gamma: Rational, lam: Rational) -> tuple[Fraction, Fraction, Fraction]:
    """Turn an ``ell^beta * n^gamma`` algorithm into ``ell^b' + n^g'``.

    Returns ``(b', g', s)`` where the case split is ``ell <= n^s``.
    """
    beta, gamma, lam = map(as_fraction, (beta, gamma, lam))
    if lam <= 0 or beta <= 0:
        raise ValueError("need lambda > 0 and beta > 0")
    return beta + gamma * beta / lam, gamma + lam, lam / beta


def _check_thm24(alpha: Fraction, gamma: Fraction, nu: Fraction, mu: Fraction) -> None:
    if gamma <= 1:
        raise ValueError("gamma must exceed 1")
    if mu <= 0:
        raise ValueError("mu must be positive")
    if not alpha > nu * gamma:
        raise ValueError("need alpha > nu * gamma")


def thm24_beta_max(alpha: Rational, gamma: Rational, nu: Rational = 1, mu: Rational = 1) -> Fraction:
    """Supremum of the ``beta`` excluded for ``n^gamma + ell^beta`` algorithms."""
    alpha, gamma, nu, mu = map(as_fraction, (alpha, gamma, nu, mu))
    _check_thm24(alpha, gamma, nu, mu)
    return gamma * (alpha - nu) / ((gamma - 1) * mu)


def cor25_kernel_beta_max(
    alpha: Rational, gamma: Rational, nu: Rational = 1, mu: Rational = 1, xi: Rational = 1
) -> Fraction:
    """Same bound for ``ell^beta``-size kernels followed by an ``n^xi`` decider."""
    xi = as_fraction(xi)
    if xi <= 0:
        raise ValueError("xi must be positive")
    return thm24_beta_max(alpha, gamma, nu, mu) / xi


def thm24_lambda(beta: Rational, gamma: Rational, mu: Rational = 1, nu: Rational = 1) -> Fraction:
    """The trade-off ``lambda = beta*mu/gamma - nu`` fed to the decomposition."""
    beta, gamma, mu, nu = map(as_fraction, (beta, gamma, mu, nu))
    lam = beta * mu / gamma - nu
    if lam <= 0:
        raise ValueError(f"lambda = {lam} is not positive; pick a larger beta")
    return lam


def lambda_max(alpha: Rational, gamma: Rational, nu: Rational = 1) -> Fraction:
    alpha, gamma, nu = map(as_fraction, (alpha, gamma, nu))
    return (alpha - nu * gamma) / (gamma - 1)


def excluded_region(
    alpha: Rational, gamma: Rational, nu: Rational = 1, mu: Rational = 1, xi: Optional[Rational] = None
) -> dict[str, Fraction]:
    """Key facts printed by ``bounds``: running-time and kernel beta limits."""
    out = {
        "alpha": as_fraction(alpha),
        "gamma": as_fraction(gamma),
        "nu": as_fraction(nu),
        "mu": as_fraction(mu),
        "beta_max": thm24_beta_max(alpha, gamma, nu, mu),
        "lambda_max": lambda_max(alpha, gamma, nu),
    }
    if xi is not None:
        out["xi"] = as_fraction(xi)
        out["kernel_beta_max"] = cor25_kernel_beta_max(alpha, gamma, nu, mu, xi)
    return out
