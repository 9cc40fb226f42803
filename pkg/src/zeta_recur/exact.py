"""Exact values of zeta at even integers, computed two independent ways.

Both routes produce the rational coefficient q_n with zeta(2n) = q_n * pi^(2n):

* ``zeta_even_euler``     -- the Bernoulli closed form
                             q_n = 2^(2n) (-1)^(n+1) B_(2n) / (2 (2n)!).
* ``zeta_even_recursive`` -- the recursion derived from the rectangle-contour
                             identity (docs/derivation.md, eqs. 10-11):

                                 Gamma(2n) q_n + sum_{k=0}^{n-1} a(n,k) q_{n-k}
                                     = (-1)^(n-1) / (4n)

                             where a(n,k) is the rational part of the
                             coefficient alpha(n,k) = a(n,k) * pi^(2k).  The
                             k = 0 term carries q_n itself, so it is moved to
                             the left before solving:

                                 (Gamma(2n) + a(n,0)) q_n
                                     = (-1)^(n-1)/(4n) - sum_{k>=1} a(n,k) q_{n-k}.

                             The divisor is a sum of positive rationals and
                             never vanishes.

All arithmetic is exact.  ``Rational`` is the standard-library Fraction,
which keeps canonical form (positive denominator, gcd 1) after every
operation and supports integer powers with negative exponents.

Concurrency: every returned value is immutable.  The Bernoulli and q_n memo
tables are guarded by a module lock (single shared writer), so concurrent
callers are safe and results are deterministic regardless of interleaving.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .machin import MAX_DIGITS, decimal_str, pi_scaled

Rational = Fraction

__all__ = [
    "Rational",
    "ZetaEvenValue",
    "AlphaCoeff",
    "binomial",
    "gamma_int",
    "bernoulli",
    "zeta_even_euler",
    "alpha_coeff",
    "zeta_even_recursive",
    "recursion_divisor",
    "render_decimal",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    return math.comb(n, k)


def gamma_int(m: int) -> int:
    """Gamma at a positive integer argument: Gamma(m) = (m-1)!."""
    if m < 1:
        raise ValueError(f"gamma_int requires m >= 1, got {m}")
    return math.factorial(m - 1)


_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (convention B_1 = -1/2), memoized.

    Uses the recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_0 = 1, i.e.
    B_m = -(1/(m+1)) sum_{k<m} C(m+1, k) B_k.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    with _lock:
        while len(_bernoulli_cache) <= m:
            j = len(_bernoulli_cache)
            acc = Fraction(0)
            for k, bk in enumerate(_bernoulli_cache):
                if bk:
                    acc += math.comb(j + 1, k) * bk
            _bernoulli_cache.append(-acc / (j + 1))
        return _bernoulli_cache[m]


@dataclass(frozen=True)
class ZetaEvenValue:
    """zeta(2n) as the exact rational coefficient of pi^(2n)."""

    n: int
    coeff: Fraction

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.coeff <= 0:
            raise ValueError("zeta(2n) coefficient must be positive")

    def approx(self) -> float:
        """Double-precision value of q_n * pi^(2n)."""
        return float(self.coeff) * math.pi ** (2 * self.n)


@dataclass(frozen=True)
class AlphaCoeff:
    """Rational part of alpha(n,k) = coeff * pi^(2k) in the recursion."""

    n: int
    k: int
    coeff: Fraction


def zeta_even_euler(n: int) -> ZetaEvenValue:
    """zeta(2n) coefficient from the Bernoulli closed form."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = 1 if n % 2 == 1 else -1
    coeff = Fraction(sign * 2 ** (2 * n)) * bernoulli(2 * n) / (2 * math.factorial(2 * n))
    return ZetaEvenValue(n, coeff)


def alpha_coeff(n: int, k: int) -> AlphaCoeff:
    """Rational part of alpha(n,k) = (1 - 2^(1-2n+2k)) (-pi^2)^k C(2n-1, 2k) Gamma(2n-2k).

    The power of two always has a negative exponent for valid (n, k) and is
    kept exact as 1 / 2^(2n-2k-1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must be in 0..{n - 1}, got {k}")
    two_pow = Fraction(1, 1 << (2 * n - 2 * k - 1))
    sign = -1 if k % 2 else 1
    coeff = (1 - two_pow) * sign * math.comb(2 * n - 1, 2 * k) * math.factorial(2 * n - 2 * k - 1)
    return AlphaCoeff(n, k, coeff)


def recursion_divisor(n: int) -> Fraction:
    """Gamma(2n) + a(n,0): the factor multiplying q_n once the k=0 term moves left."""
    return gamma_int(2 * n) + alpha_coeff(n, 0).coeff


_q_cache: list[Fraction] = []


def zeta_even_recursive(n: int) -> ZetaEvenValue:
    """zeta(2n) coefficient from the contour recursion, memoized."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with _lock:
        while len(_q_cache) < n:
            m = len(_q_cache) + 1
            rhs = Fraction(1 if m % 2 == 1 else -1, 4 * m)
            for k in range(1, m):
                rhs -= alpha_coeff(m, k).coeff * _q_cache[m - k - 1]
            _q_cache.append(rhs / recursion_divisor(m))
        return ZetaEvenValue(n, _q_cache[n - 1])


def render_decimal(value: ZetaEvenValue, d: int) -> str:
    """Decimal expansion of q_n * pi^(2n), truncated to d correct digits.

    Same guard policy as pi_digits: the fixed-point result carries a proven
    error bound in last-place units (pi's own bound, amplified by the 2n-th
    power, plus one floor), and the truncation is accepted only when the
    discarded guard block clears that bound on both sides.  zeta(2n) * 10^d
    is irrational, so the widening retry terminates.
    """
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValueError("digit count must be an integer")
    if not 1 <= d <= MAX_DIGITS:
        raise ValueError(f"digit count must be in 1..{MAX_DIGITS}, got {d}")

    n = value.n
    p, q = value.coeff.numerator, value.coeff.denominator
    guard = 12
    power_margin = 20
    while True:
        precision = d + guard + power_margin
        v, pi_err = pi_scaled(precision)
        # S approximates zeta(2n) * 10^(d+guard); relative error of v**(2n)
        # is below 2n * (pi_err+1) * 10^-precision, and zeta(2n) < 2.
        s_int = (p * v ** (2 * n)) // (q * 10 ** (2 * n * precision - d - guard))
        margin = 10**power_margin
        err = 2 + (4 * n * (pi_err + 1) + margin - 1) // margin
        block = 10**guard
        rem = s_int % block
        if 2 * err < block and err <= rem <= block - err:
            text = decimal_str(s_int // block)  # 1 < zeta(2n) < 2, so d+1 characters
            return text[0] + "." + text[1:]
        guard += 16
