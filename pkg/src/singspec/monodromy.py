"""Characteristic polynomials of monodromy whose roots are roots of unity.

A :class:`CycloPoly` is the formal product ``prod (lam - e(theta))^{k_theta}``
with ``e(theta) = exp(2 pi i theta)``; it is stored as the exponent map
``theta -> k_theta`` over reduced rationals in ``[0, 1)``.  No complex numbers
are ever formed, so equality of eigenvalues is exact.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

from .catalog import GermConfiguration, GermSpec
from .errors import NoBound, NotApplicable
from .spectrum import format_rational, to_rational

__all__ = [
    "CycloPoly",
    "charpoly_from_spectrum",
    "m_reg",
    "lifted_det",
    "yomdin_charpoly",
    "eigenvalue_constraints",
    "eigenvalue_max_r",
]


def _mod1(q: Fraction) -> Fraction:
    return q - math.floor(q)


class CycloPoly:
    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping | Iterable | None = None):
        acc: dict[Fraction, int] = defaultdict(int)
        if factors is not None:
            items = factors.items() if isinstance(factors, Mapping) else factors
            for theta, e in items:
                acc[_mod1(to_rational(theta))] += e
        self._factors = {t: acc[t] for t in sorted(acc) if acc[t]}

    @classmethod
    def root_packet(cls, m: int, exponent: int = 1) -> "CycloPoly":
        """``(lam^m - 1)^exponent``."""
        return cls({Fraction(j, m): exponent for j in range(m)})

    def exponent(self, theta) -> int:
        return self._factors.get(_mod1(to_rational(theta)), 0)

    def items(self):
        return self._factors.items()

    def degree(self) -> int:
        return sum(self._factors.values())

    def is_polynomial(self) -> bool:
        return all(e > 0 for e in self._factors.values())

    def __eq__(self, other):
        if not isinstance(other, CycloPoly):
            return NotImplemented
        return self._factors == other._factors

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __mul__(self, other: "CycloPoly") -> "CycloPoly":
        if not isinstance(other, CycloPoly):
            return NotImplemented
        return CycloPoly([*self._factors.items(), *other._factors.items()])

    def __truediv__(self, other: "CycloPoly") -> "CycloPoly":
        if not isinstance(other, CycloPoly):
            return NotImplemented
        return self * other ** -1

    def __pow__(self, k: int) -> "CycloPoly":
        return CycloPoly({t: k * e for t, e in self._factors.items()})

    def __repr__(self):
        return f"CycloPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Render via packets ``(lam^m - 1)^b`` when every primitive class is
        uniform, listing leftover roots as ``(lam-e(theta))^k``."""
        by_order: dict[int, dict[Fraction, int]] = defaultdict(dict)
        for t, e in self._factors.items():
            by_order[t.denominator][t] = e
        uniform: dict[int, int] = {}
        loose: list[tuple[Fraction, int]] = []
        for m, cls in by_order.items():
            values = set(cls.values())
            if len(cls) == _totient(m) and len(values) == 1:
                uniform[m] = values.pop()
            else:
                loose.extend(cls.items())
        packets: dict[int, int] = defaultdict(int)
        # Phi_m = prod_{k | m} (lam^k - 1)^{mu(m/k)}
        for m, c in uniform.items():
            for k in _divisors(m):
                mu = _mobius(m // k)
                if mu:
                    packets[k] += mu * c
        parts = []
        for k in sorted(packets):
            if packets[k]:
                base = "λ-1" if k == 1 else f"λ^{k}-1"
                parts.append(f"({base})^{packets[k]}")
        for t, e in sorted(loose):
            parts.append(f"(λ-e({format_rational(t)}))^{e}")
        return " ".join(parts) if parts else "1"


def _totient(m: int) -> int:
    return sum(1 for j in range(m) if math.gcd(j, m) == 1) if m > 1 else 1


def _divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]


def _mobius(m: int) -> int:
    result, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def charpoly_from_spectrum(g: GermSpec) -> CycloPoly:
    """Each spectral value ``q`` contributes the eigenvalue ``e(-q)``."""
    return CycloPoly((-q, m) for q, m in g.spectrum.items())


def m_reg(n: int, d: int) -> CycloPoly:
    """Monodromy characteristic polynomial of a degree-d homogeneous germ in
    n+1 variables with an isolated singularity."""
    if d < 2:
        raise ValueError(f"m_reg needs d >= 2, got {d}")
    top = (d - 1) ** (n + 1)
    if n % 2 == 0:
        e, lin = (1 + top) // d, -1
    else:
        e, lin = (top - 1) // d, 1
    return CycloPoly.root_packet(d, e) * CycloPoly({0: lin})


def lifted_det(charpoly: CycloPoly, k: int, power: int) -> CycloPoly:
    """``det(lam^k I - T^power)`` from the characteristic polynomial of T.

    An eigenvalue ``e(theta)`` of ``T`` contributes the ``k`` roots
    ``e((theta*power + j)/k)``.
    """
    acc = []
    for theta, e in charpoly.items():
        base = theta * power
        acc.extend(((base + j) / k, e) for j in range(k))
    return CycloPoly(acc)


def yomdin_charpoly(n: int, d: int, config: GermConfiguration, k: int) -> CycloPoly:
    if k <= d:
        raise ValueError(f"Yomdin exponent must exceed the degree: k={k}, d={d}")
    result = m_reg(n, d) * CycloPoly.root_packet(d, -config.total_milnor())
    for g, r in config.entries:
        result = result * lifted_det(charpoly_from_spectrum(g), k, k - d) ** r
    return result


def eigenvalue_constraints(n: int, d: int, g: GermSpec) -> list[tuple[Fraction, int, int]]:
    """``(theta, c, rhs)`` meaning ``r*c <= rhs`` at each d-th root of unity.

    ``c = mu - m_theta(det(lam^{d+1} I - T))`` and ``rhs = m_theta(M_reg)``;
    roots with ``c = 0`` carry no constraint and are skipped.
    """
    reg = m_reg(n, d)
    lift = lifted_det(charpoly_from_spectrum(g), d + 1, 1)
    out = []
    for j in range(d):
        theta = Fraction(j, d)
        c = g.milnor - lift.exponent(theta)
        if c > 0:
            out.append((theta, c, reg.exponent(theta)))
    return out


def eigenvalue_max_r(n: int, d: int, g: GermSpec) -> int:
    """Largest r for which ``(lam^d - 1)^{r mu}`` divides
    ``M_reg * det(lam^{d+1} I - T)^r``, scanning every d-th root of unity."""
    return _eigenvalue_solve(n, d, g)[0]


def _eigenvalue_solve(n: int, d: int, g: GermSpec):
    if d < 3:
        raise NotApplicable(f"the eigenvalue method needs d >= 3, got {d}")
    cons = eigenvalue_constraints(n, d, g)
    if not cons:
        raise NoBound(f"no d-th root of unity constrains {g.label}")
    best = min(cons, key=lambda t: (t[2] // t[1], t[0]))
    return best[2] // best[1], best, cons
