import math
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from singspec.combinatorics import (
    HodgeQuery,
    b_poly,
    binom_poly,
    binom_std,
    bounded_compositions,
    chi_omega,
    gamma_power_coefficient,
    gamma_power_coefficient_at,
    gamma_power_spectrum,
    primitive_hodge,
)
from singspec.spectrum import gamma, star_power


def falling(p, q):
    out = F(1)
    for i in range(q):
        out *= p - i
    return out / math.factorial(q)


@given(st.integers(-30, 30), st.integers(0, 8))
def test_binom_poly_is_polynomial_extension(p, q):
    assert binom_poly(p, q) == falling(p, q)


def test_binom_conventions_differ_for_negative_top():
    assert binom_poly(-1, 3) == -1
    assert binom_std(-1, 3) == 0
    assert binom_std(2, 3) == 0
    assert binom_std(5, 2) == 10
    with pytest.raises(ValueError):
        binom_poly(3, -1)


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("alpha", range(1, 5))
def test_bounded_compositions_brute(k, alpha):
    counts = {}
    for xs in product(range(1, alpha + 1), repeat=k):
        counts[sum(xs)] = counts.get(sum(xs), 0) + 1
    for N in range(-2, k * alpha + 3):
        assert bounded_compositions(N, k, alpha) == counts.get(N, 0)


@pytest.mark.parametrize("factors", range(2, 8))
@pytest.mark.parametrize("d", range(2, 8))
def test_closed_form_matches_convolution(factors, d):
    brute = star_power(gamma(d), factors)
    lo, hi = factors - d, factors * (d - 1) - d
    for p in range(lo - 3, hi + 4):
        assert gamma_power_coefficient(factors, d, p) == brute[F(p, d)]
    assert gamma_power_spectrum(factors, d) == brute


def test_gamma_power_coefficient_at():
    assert gamma_power_coefficient_at(4, 4, F(1)) == 19
    assert gamma_power_coefficient_at(4, 4, "3/4") == 16
    with pytest.raises(ValueError):
        gamma_power_coefficient_at(4, 4, F(1, 3))


def test_gamma_power_spectrum_degenerate():
    assert not gamma_power_spectrum(5, 1)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(2, 8))
def test_adjacent_powers_identity(n, d):
    # coefficient of [p/d] one factor up equals the count in (p/d - 1, p/d)
    low = star_power(gamma(d), n)
    for p in range((n + 1) - d - 2, (n + 1) * (d - 1) - d + 3):
        x = F(p, d)
        assert gamma_power_coefficient(n + 1, d, p) == low.count_open_interval(x - 1, x)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("d", range(3, 10))
def test_hodge_equals_integer_coefficient(n, d):
    if d <= n:
        pytest.skip("identity stated for d > n")
    for k in range(0, (n - 1) // 2 + 1):
        assert primitive_hodge(HodgeQuery(n, d, k)) == gamma_power_coefficient(n + 1, d, d * (n - k - 1))


def jacobian_count(n, d, k):
    """Monomials in n+1 variables, exponents <= d-2, of degree (k+1)d - n - 1.

    These span the graded piece of the Fermat Jacobian ring that carries the
    primitive middle cohomology of type (n-1-k, k).
    """
    target = (k + 1) * d - n - 1
    if target < 0:
        return 0
    return sum(1 for xs in product(range(d - 1), repeat=n + 1) if sum(xs) == target)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("d", range(1, 7))
def test_primitive_hodge_against_jacobian_ring(n, d):
    for k in range(n):
        expected = jacobian_count(n, d, k) if d >= 2 else 0
        assert primitive_hodge(HodgeQuery(n, d, k)) == expected


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("d", range(2, 12))
def test_large_d_branch_agrees(n, d):
    for k in range(n):
        q = HodgeQuery(n, d, k)
        if d > n:
            assert primitive_hodge(q, branch="large_d") == primitive_hodge(q)
        else:
            with pytest.raises(ValueError):
                primitive_hodge(q, branch="large_d")


def test_hodge_symmetry_and_known_values():
    assert primitive_hodge(HodgeQuery(3, 4, 1)) == 19
    assert primitive_hodge(HodgeQuery(3, 4, 0)) == primitive_hodge(HodgeQuery(3, 4, 2)) == 1
    assert primitive_hodge(HodgeQuery(3, 1000, 1)) == 664668999
    with pytest.raises(ValueError):
        primitive_hodge(HodgeQuery(3, 4, 1), branch="other")


def test_hodge_query_validation():
    for args in [(1, 3, 0), (3, 0, 0), (3, 3, 3), (3, 3, -1)]:
        with pytest.raises(ValueError):
            HodgeQuery(*args)


# -- Euler characteristic via the recurrence it was unwound from ----------------

def _chi_O(n, d, i):
    return binom_poly(i + n, n) - binom_poly(i + n - d, n)


def _chi_P(n, k, i):
    return sum((-1) ** j * math.comb(n + 1, k - j) * binom_poly(n - k + i + j, n) for j in range(k + 1))


def chi_recurrence(n, d, k, i=0):
    if k == 0:
        return _chi_O(n, d, i)
    P = _chi_P(n, k, i) - _chi_P(n, k, i - d)
    return P - chi_recurrence(n, d, k - 1, i - d)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("d", range(1, 8))
def test_chi_matches_recurrence(n, d):
    for k in range(n):
        assert chi_omega(n, d, k) == chi_recurrence(n, d, k)


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("d", range(1, 8))
def test_hodge_from_chi(n, d):
    for k in range(0, (n - 1) // 2 + 1):
        expected = (-1) ** (n - 1 - k) * chi_omega(n, d, k) + (-1) ** n
        assert primitive_hodge(HodgeQuery(n, d, k)) == expected


def test_chi_validation():
    with pytest.raises(ValueError):
        chi_omega(3, 3, 3)


@pytest.mark.parametrize("d", range(2, 15))
def test_b_poly_is_surface_coefficient(d):
    for p in range(0, 4 * (d - 1) - d + 1):
        assert b_poly(d, p) == gamma_power_coefficient(4, d, p)
