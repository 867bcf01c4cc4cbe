from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from singspec.spectrum import (
    Spectrum,
    beta,
    count_open_interval,
    gamma,
    is_effective,
    linear_combination,
    shift,
    star,
    star_power,
    to_rational,
)

rationals = st.builds(F, st.integers(-12, 12), st.integers(1, 6))
spectra = st.lists(st.tuples(rationals, st.integers(-4, 4)), max_size=6).map(Spectrum)
effective_spectra = st.lists(st.tuples(rationals, st.integers(1, 4)), max_size=6).map(Spectrum)

ONE = Spectrum.single(-1)  # star identity


def test_canonical_form_sums_and_drops_zeros():
    s = Spectrum([(F(1, 2), 2), ("1/2", -2), (0, 3), (F(0), 1)])
    assert list(s.items()) == [(F(0), 4)]
    assert Spectrum({F(1, 3): 0}) == Spectrum()


def test_floats_are_refused():
    with pytest.raises(TypeError):
        Spectrum({0.5: 1})
    with pytest.raises(TypeError):
        to_rational(True)
    with pytest.raises(TypeError):
        Spectrum({F(1, 2): 1.0})


def test_gamma_and_beta():
    assert gamma(3) == Spectrum({F(-1, 3): 1, F(-2, 3): 1})
    assert gamma(1) == Spectrum()
    assert beta(3) == Spectrum({0: 1, F(-1, 3): 1, F(-2, 3): 1})
    with pytest.raises(ValueError):
        gamma(0)
    with pytest.raises(ValueError):
        beta(0)


def test_star_basic():
    assert star(Spectrum.single(F(1, 3)), Spectrum.single(F(1, 2))) == Spectrum.single(F(11, 6))
    assert star(Spectrum(), gamma(3)) == Spectrum()
    assert star_power(gamma(2), 4) == Spectrum.single(1)


def test_star_power_rejects_zero():
    with pytest.raises(ValueError):
        star_power(gamma(3), 0)


@given(spectra, spectra)
def test_star_commutative(a, b):
    assert star(a, b) == star(b, a)


@given(spectra, spectra, spectra)
@settings(max_examples=50)
def test_star_associative(a, b, c):
    assert star(star(a, b), c) == star(a, star(b, c))


@given(spectra, spectra, spectra)
@settings(max_examples=50)
def test_star_distributes(a, b, c):
    assert star(a, b + c) == star(a, b) + star(a, c)


@given(spectra)
def test_star_identity(a):
    assert star(a, ONE) == a


@given(spectra, spectra)
def test_mass_multiplicative(a, b):
    assert star(a, b).mass() == a.mass() * b.mass()


@given(spectra, st.integers(1, 4))
@settings(max_examples=40)
def test_star_power_matches_repeated_star(a, m):
    expected = a
    for _ in range(m - 1):
        expected = star(expected, a)
    assert star_power(a, m) == expected


@given(st.lists(st.integers(2, 6), min_size=1, max_size=4))
def test_joined_spectra_symmetric(exps):
    # spectrum of sum x_j^{a_j} in k variables is symmetric about k/2 - 1
    s = gamma(exps[0])
    for a in exps[1:]:
        s = star(s, gamma(a))
    k = len(exps)
    for q, m in s.items():
        assert s[k - 2 - q] == m
    total = 1
    for a in exps:
        total *= a - 1
    assert s.mass() == total


@given(spectra, rationals, rationals)
def test_count_open_interval_brute(a, lo, hi):
    if lo >= hi:
        with pytest.raises(ValueError):
            count_open_interval(a, lo, hi)
        return
    assert count_open_interval(a, lo, hi) == sum(m for q, m in a.items() if lo < q < hi)


def test_count_excludes_endpoints():
    s = Spectrum({0: 1, F(1, 2): 2, 1: 4})
    assert s.count_open_interval(0, 1) == 2
    assert s.count_open_interval(F(-1, 10), F(11, 10)) == 7


@given(spectra)
def test_text_round_trip(a):
    assert Spectrum.from_text(a.to_text()) == a


@given(spectra)
def test_json_round_trip(a):
    assert Spectrum.from_json(a.to_json()) == a


def test_text_forms():
    assert Spectrum().to_text() == "0"
    s = Spectrum({0: 1, F(1, 3): 3, 1: -2})
    assert s.to_text() == "1[0] + 3[1/3] - 2[1]"
    assert Spectrum.from_text("[1/2] - [-1]") == Spectrum({F(1, 2): 1, -1: -1})
    for bad in ("", "1[0] 2[1]", "3[x]", "1[0] + junk"):
        with pytest.raises(ValueError):
            Spectrum.from_text(bad)


def test_json_schema_is_ascending():
    s = Spectrum({1: 1, F(-1, 2): 2})
    assert s.to_json_obj() == {
        "terms": [{"num": -1, "den": 2, "mult": 2}, {"num": 1, "den": 1, "mult": 1}]
    }
    with pytest.raises(ValueError):
        Spectrum.from_json_obj({"terms": [{"num": 1, "den": 0, "mult": 1}]})


def test_effectiveness_witness():
    s = Spectrum({0: 1, F(1, 4): -2, F(1, 2): -1})
    verdict = is_effective(s)
    assert not verdict and verdict.witness == F(1, 4)
    assert is_effective(Spectrum())


@given(effective_spectra)
def test_nonnegative_is_effective(a):
    assert is_effective(a)
    assert len(a.values()) == a.mass()


def test_linear_combination_and_shift():
    a, b = gamma(2), gamma(3)
    assert linear_combination([(2, a), (-1, b)]) == a * 2 - b
    assert shift(a, F(1, 2)) == Spectrum.single(0)
    assert 3 * a == a + a + a
    assert -a + a == Spectrum()


def test_hash_consistent_with_eq():
    assert hash(Spectrum({F(1, 2): 1})) == hash(Spectrum([("1/2", 1)]))
