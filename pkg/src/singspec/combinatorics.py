"""Closed-form integer formulas.

Two binomial conventions live here and are never mixed:

* :func:`binom_poly` is the polynomial extension ``p(p-1)...(p-q+1)/q!``,
  valid (and possibly negative) for every integer ``p``.  The Hodge number
  formulas need it.
* :func:`binom_std` is the counting convention, zero unless ``p >= q >= 0``.
  Composition counts and gamma-power coefficients need it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .spectrum import Spectrum, to_rational

__all__ = [
    "HodgeQuery",
    "binom_poly",
    "binom_std",
    "bounded_compositions",
    "gamma_power_coefficient",
    "gamma_power_coefficient_at",
    "gamma_power_spectrum",
    "primitive_hodge",
    "chi_omega",
    "b_poly",
]


def binom_poly(p: int, q: int) -> int:
    if q < 0:
        raise ValueError(f"binomial needs q >= 0, got {q}")
    if p >= 0:
        return math.comb(p, q)
    # C(p, q) = (-1)^q C(q - p - 1, q) for p < 0
    return (-1) ** q * math.comb(q - p - 1, q)


def binom_std(p: int, q: int) -> int:
    if q < 0:
        raise ValueError(f"binomial needs q >= 0, got {q}")
    if p < q:
        return 0
    return math.comb(p, q)


def bounded_compositions(N: int, k: int, alpha: int) -> int:
    """Number of ``(x_1..x_k)`` with ``1 <= x_i <= alpha`` and ``sum x_i = N``.

    Inclusion-exclusion over the variables that exceed ``alpha``.  Terms past
    the truncation point vanish under :func:`binom_std`, so the sum simply
    runs over all ``i <= k``.
    """
    if k < 1 or alpha < 1:
        raise ValueError("bounded_compositions needs k >= 1 and alpha >= 1")
    if N < k or N > k * alpha:
        return 0
    total = 0
    for i in range(k + 1):
        top = N - alpha * i - 1
        if top < k - 1:
            break
        total += (-1) ** i * math.comb(k, i) * math.comb(top, k - 1)
    return total


def gamma_power_coefficient(factors: int, d: int, p: int) -> int:
    """Multiplicity of ``[p/d]`` in ``gamma(d)`` star-raised to ``factors``.

    Every term of the power is ``[(factors - 1) - sum(x_i)/d]`` with
    ``1 <= x_i <= d - 1``, so the coefficient counts compositions of
    ``d(factors - 1) - p``.
    """
    if factors < 1 or d < 2:
        raise ValueError("gamma_power_coefficient needs factors >= 1 and d >= 2")
    if not factors - d <= p <= factors * (d - 1) - d:
        return 0
    return bounded_compositions(d * (factors - 1) - p, factors, d - 1)


def gamma_power_coefficient_at(factors: int, d: int, value) -> int:
    """As :func:`gamma_power_coefficient`, addressed by the rational value."""
    q = to_rational(value)
    if d % q.denominator:
        raise ValueError(f"{q} is not a multiple of 1/{d}")
    return gamma_power_coefficient(factors, d, q.numerator * (d // q.denominator))


def gamma_power_spectrum(factors: int, d: int) -> Spectrum:
    """``gamma(d)^{*factors}`` assembled from closed-form coefficients.

    Cheap for large ``d``, where repeated convolution is not.
    """
    if d == 1:
        return Spectrum()
    lo, hi = factors - d, factors * (d - 1) - d
    return Spectrum(
        {Fraction(p, d): gamma_power_coefficient(factors, d, p) for p in range(lo, hi + 1)}
    )


@dataclass(frozen=True)
class HodgeQuery:
    """Middle primitive Hodge number ``[h^{k, n-1-k}]'`` of a smooth degree-d
    hypersurface in P^n."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.d < 1:
            raise ValueError(f"need n >= 2 and d >= 1, got n={self.n}, d={self.d}")
        if not 0 <= self.k <= self.n - 1:
            raise ValueError(f"need 0 <= k <= n-1, got k={self.k}")


def primitive_hodge(q: HodgeQuery, *, branch: str = "general") -> int:
    """``[h^{k, n-1-k}_{n,d}]'``.

    ``branch="general"`` uses the polynomial-binomial formula valid for all
    ``d``; ``branch="large_d"`` the counting form that needs ``d > n``.
    Indices past the middle are answered by Hodge symmetry.
    """
    n, d, k = q.n, q.d, q.k
    if 2 * k > n - 1:
        k = n - 1 - k
    if branch == "general":
        s = sum(
            (-1) ** i * math.comb(n + 1, i) * binom_poly(n - (k + 1) * d + (d - 1) * i, n)
            for i in range(k + 1)
        )
        return (-1) ** n * s
    if branch == "large_d":
        if d <= n:
            raise ValueError(f"the large-d branch needs d > n, got d={d}, n={n}")
        return sum(
            (-1) ** i * math.comb(n + 1, i) * binom_std((k + 1) * d - 1 - (d - 1) * i, n)
            for i in range(k + 1)
        )
    raise ValueError(f"unknown branch {branch!r}")


def chi_omega(n: int, d: int, k: int) -> int:
    """Euler characteristic of ``Omega^k_X`` for a smooth degree-d X in P^n.

    Closed double sum from unwinding the Koszul-type recurrence; all
    binomials use the polynomial convention.
    """
    if n < 1 or d < 1 or not 0 <= k <= n - 1:
        raise ValueError(f"invalid (n, d, k) = ({n}, {d}, {k})")
    total = 0
    for m in range(k + 1):
        inner = 0
        for j in range(m + 1):
            inner += (
                (-1) ** j
                * math.comb(n + 1, m - j)
                * (
                    binom_poly(n - m - (k - m) * d + j, n)
                    - binom_poly(n - m - (k - m + 1) * d + j, n)
                )
            )
        total += (-1) ** (k - m) * inner
    return total


def b_poly(d: int, p: int) -> int:
    """Coefficient of ``[p/d]`` in ``gamma(d)^{*4}`` with the inclusion-exclusion
    cut after three terms; exact for ``p >= 0``, where the rest vanish."""
    return binom_std(3 * d - p - 1, 3) - 4 * binom_std(2 * d - p, 3) + 6 * binom_std(d - p + 1, 3)
