from fractions import Fraction as F

import pytest

from singspec.catalog import GermConfiguration, named
from singspec.errors import NoBound, NotApplicable
from singspec.monodromy import (
    CycloPoly,
    charpoly_from_spectrum,
    eigenvalue_constraints,
    eigenvalue_max_r,
    lifted_det,
    m_reg,
    yomdin_charpoly,
)

CATALOG = [named("A", [k], n) for k in (1, 2, 5, 11) for n in (3, 4)] + [
    named(kind, variables=n) for kind in ("E6t", "E7t", "E8t") for n in (3, 4)
]


def test_canonical_keys():
    p = CycloPoly({F(4, 3): 2, F(-2, 3): 1, 0: 0})
    assert dict(p.items()) == {F(1, 3): 3}
    assert p == CycloPoly({F(1, 3): 3})


def test_text_forms():
    assert CycloPoly().to_text() == "1"
    assert charpoly_from_spectrum(named("E6t", variables=3)).to_text() == "(λ-1)^-1 (λ^3-1)^3"
    assert m_reg(3, 3).to_text() == "(λ-1)^1 (λ^3-1)^5"
    assert CycloPoly({F(1, 3): 2}).to_text() == "(λ-e(1/3))^2"
    assert CycloPoly.root_packet(6).to_text() == "(λ^6-1)^1"


def test_arithmetic():
    a, b = CycloPoly.root_packet(3), CycloPoly({0: 1})
    assert (a / b) * b == a
    assert (a ** 2).degree() == 6
    assert not (b / a).is_polynomial()


def test_charpoly_examples():
    assert dict(charpoly_from_spectrum(named("E6t", variables=3)).items()) == {0: 2, F(1, 3): 3, F(2, 3): 3}
    assert dict(charpoly_from_spectrum(named("A", [1], 3)).items()) == {F(1, 2): 1}
    assert dict(charpoly_from_spectrum(named("A", [1], 4)).items()) == {0: 1}


@pytest.mark.parametrize("g", CATALOG, ids=lambda g: f"{g.label}/{g.variables}")
def test_charpoly_degree_is_milnor(g):
    p = charpoly_from_spectrum(g)
    assert p.degree() == g.milnor and p.is_polynomial()


def test_m_reg_examples():
    assert dict(m_reg(3, 3).items()) == {0: 6, F(1, 3): 5, F(2, 3): 5}
    assert m_reg(2, 3) == CycloPoly.root_packet(3, 3) / CycloPoly({0: 1})
    with pytest.raises(ValueError):
        m_reg(3, 1)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("d", range(2, 9))
def test_m_reg_degree(n, d):
    reg = m_reg(n, d)
    assert reg.degree() == (d - 1) ** (n + 1)
    packet = ((d - 1) ** (n + 1) - (-1) ** (n + 1)) // d
    assert reg.exponent(F(1, d)) == packet


def test_lifted_det():
    # T = -1, det(lam^2 - T) = lam^2 + 1
    assert dict(lifted_det(CycloPoly({F(1, 2): 1}), 2, 1).items()) == {F(1, 4): 1, F(3, 4): 1}


def test_yomdin_empty_is_regular():
    assert yomdin_charpoly(3, 4, GermConfiguration((), 3), 5) == m_reg(3, 4)
    with pytest.raises(ValueError):
        yomdin_charpoly(3, 4, GermConfiguration((), 3), 4)


@pytest.mark.parametrize("g", CATALOG[:4] + CATALOG[-6:], ids=lambda g: f"{g.label}/{g.variables}")
@pytest.mark.parametrize("d", (3, 4, 5))
def test_yomdin_divisibility_threshold(g, d):
    n = g.variables
    try:
        r = eigenvalue_max_r(n, d, g)
    except NoBound:
        pytest.skip("no eigenvalue bound")
    k = d + 1
    at = yomdin_charpoly(n, d, GermConfiguration(((g, r),) if r else (), n), k)
    over = yomdin_charpoly(n, d, GermConfiguration(((g, r + 1),), n), k)
    assert at.is_polynomial()
    assert not over.is_polynomial()
    mu = g.milnor * (r + 1)
    assert over.degree() == (d - 1) ** (n + 1) - d * mu + k * mu


def test_eigenvalue_examples():
    assert eigenvalue_max_r(3, 6, named("E6t", variables=3)) == 13
    assert eigenvalue_max_r(3, 4, named("A", [1], 3)) == 20
    assert eigenvalue_max_r(4, 3, named("A", [1], 4)) == 11
    with pytest.raises(NotApplicable):
        eigenvalue_max_r(3, 2, named("A", [1], 3))


@pytest.mark.parametrize("n", (3, 4, 5))
@pytest.mark.parametrize("d", range(3, 11))
def test_node_closed_form(n, d):
    expected = ((d - 1) ** (n + 1) - (-1) ** (n + 1)) // d
    assert eigenvalue_max_r(n, d, named("A", [1], n)) == expected


@pytest.mark.parametrize("d", range(5, 11))
def test_e6_closed_form(d):
    assert eigenvalue_max_r(3, d, named("E6t", variables=3)) == ((d - 1) ** 4 - 1) // (8 * d)


def test_e6_d4_is_floor_of_closed_form():
    # closed form gives 5/2
    assert F((3 ** 4 - 1), 8 * 4) == F(5, 2)
    assert eigenvalue_max_r(3, 4, named("E6t", variables=3)) == 2


def test_constraints_only_positive():
    for theta, c, rhs in eigenvalue_constraints(3, 6, named("E6t", variables=3)):
        assert c > 0 and theta.denominator in (1, 2, 3, 6)
