"""Elements of the free abelian group Z[Q] and the star product.

A spectrum is a finite formal sum ``sum m_q [q]`` with rational ``q`` and
integer (possibly negative) multiplicities ``m_q``.  Values are kept as
:class:`fractions.Fraction`, multiplicities as Python ints, so everything is
exact.

The star product is the bilinear extension of ``[q] * [q'] = [q + q' + 1]``;
it is the spectrum of a sum of germs in disjoint variables.
"""

from __future__ import annotations

import bisect
import json
import re
from collections import defaultdict
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Mapping, NamedTuple, Union

RationalLike = Union[Fraction, int, str]

__all__ = [
    "Spectrum",
    "Effectivity",
    "to_rational",
    "star",
    "star_power",
    "gamma",
    "beta",
    "coefficient",
    "count_open_interval",
    "is_effective",
    "linear_combination",
    "shift",
    "format_rational",
]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-2/3"`` to a Fraction.

    Floats are refused: a binary float is never the rational a user meant.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Effectivity(NamedTuple):
    """Verdict of :func:`is_effective`; truthy iff effective."""

    effective: bool
    witness: Fraction | None = None

    def __bool__(self) -> bool:
        return self.effective


class Spectrum:
    """Immutable element of Z[Q] in canonical sparse form.

    Construct from a mapping ``{value: multiplicity}`` or an iterable of
    ``(value, multiplicity)`` pairs; repeated values are summed and zero
    multiplicities dropped.
    """

    __slots__ = ("_terms", "_keys", "_prefix", "_hash")

    def __init__(
        self,
        terms: Mapping[RationalLike, int] | Iterable[tuple[RationalLike, int]] | None = None,
    ):
        acc: dict[Fraction, int] = defaultdict(int)
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for value, mult in items:
                if isinstance(mult, bool) or not isinstance(mult, int):
                    raise TypeError(f"multiplicity must be an int, got {mult!r}")
                acc[to_rational(value)] += mult
        self._terms = {q: acc[q] for q in sorted(acc) if acc[q] != 0}
        self._keys: list[Fraction] | None = None
        self._prefix: list[int] | None = None
        self._hash: int | None = None

    @classmethod
    def single(cls, value: RationalLike, mult: int = 1) -> "Spectrum":
        return cls({value: mult})

    # -- queries ---------------------------------------------------------

    def items(self):
        return self._terms.items()

    def support(self) -> list[Fraction]:
        return list(self._terms)

    def __getitem__(self, value: RationalLike) -> int:
        return self._terms.get(to_rational(value), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def mass(self) -> int:
        """Total multiplicity (the Milnor number for a germ spectrum)."""
        return sum(self._terms.values())

    def values(self) -> list[Fraction]:
        """Spectral values repeated by multiplicity; requires effectiveness."""
        out = []
        for q, m in self._terms.items():
            if m < 0:
                raise ValueError(f"negative multiplicity at {q}")
            out.extend([q] * m)
        return out

    def count_open_interval(self, lo: RationalLike, hi: RationalLike) -> int:
        lo, hi = to_rational(lo), to_rational(hi)
        if lo >= hi:
            raise ValueError(f"empty interval ({lo}, {hi})")
        if self._keys is None:
            self._keys = list(self._terms)
            self._prefix = [0, *accumulate(self._terms.values())]
        i = bisect.bisect_right(self._keys, lo)
        j = bisect.bisect_left(self._keys, hi)
        if j <= i:
            return 0
        return self._prefix[j] - self._prefix[i]

    # -- group structure -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "Spectrum") -> "Spectrum":
        if not isinstance(other, Spectrum):
            return NotImplemented
        return Spectrum([*self._terms.items(), *other._terms.items()])

    def __neg__(self) -> "Spectrum":
        return Spectrum({q: -m for q, m in self._terms.items()})

    def __sub__(self, other: "Spectrum") -> "Spectrum":
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "Spectrum":
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return Spectrum({q: k * m for q, m in self._terms.items()})

    __rmul__ = __mul__

    def star(self, other: "Spectrum") -> "Spectrum":
        return star(self, other)

    def shift(self, c: RationalLike) -> "Spectrum":
        return shift(self, c)

    # -- serialization -----------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Spectrum({self.to_text()!r})"

    def to_text(self) -> str:
        """Render as ``1[-2/3] + 1[-1/3]``; the zero element renders ``0``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (q, m) in enumerate(self._terms.items()):
            body = f"{abs(m)}[{format_rational(q)}]"
            if i == 0:
                parts.append(body if m > 0 else f"-{body}")
            else:
                parts.append(("+ " if m > 0 else "- ") + body)
        return " ".join(parts)

    _TERM = re.compile(r"([+-])?\s*(\d*)\s*\[\s*(-?\d+(?:/\d+)?)\s*\]")

    @classmethod
    def from_text(cls, text: str) -> "Spectrum":
        text = text.strip()
        if text == "0":
            return cls()
        pos = 0
        terms = []
        for match in cls._TERM.finditer(text):
            if text[pos:match.start()].strip():
                raise ValueError(f"unparseable spectrum text near {text[pos:match.start()]!r}")
            sign, mult, value = match.groups()
            if terms and sign is None:
                raise ValueError("terms must be separated by + or -")
            m = int(mult) if mult else 1
            terms.append((Fraction(value), -m if sign == "-" else m))
            pos = match.end()
        if text[pos:].strip() or not terms:
            raise ValueError(f"unparseable spectrum text {text!r}")
        return cls(terms)

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"num": q.numerator, "den": q.denominator, "mult": m}
                for q, m in self._terms.items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Spectrum":
        terms = []
        for t in obj["terms"]:
            if t["den"] < 1 or t["mult"] == 0:
                raise ValueError(f"malformed spectrum term {t!r}")
            terms.append((Fraction(t["num"], t["den"]), t["mult"]))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        return cls.from_json_obj(json.loads(text))


def star(a: Spectrum, b: Spectrum) -> Spectrum:
    out: dict[Fraction, int] = defaultdict(int)
    for q, m in a.items():
        q1 = q + 1
        for q2, m2 in b.items():
            out[q1 + q2] += m * m2
    return Spectrum(out)


def star_power(a: Spectrum, m: int) -> Spectrum:
    """The ``m``-fold star product of ``a`` with itself (``m >= 1``).

    ``m = 0`` would be the star identity ``[-1]``; it is rejected on purpose.
    """
    if m < 1:
        raise ValueError(f"star_power needs m >= 1, got {m}")
    result = a
    base = a
    m -= 1
    # binary exponentiation; star is associative and commutative
    while m:
        if m & 1:
            result = star(result, base)
        m >>= 1
        if m:
            base = star(base, base)
    return result


def gamma(d: int) -> Spectrum:
    """Spectrum of ``x^d``: ``sum_{i=1}^{d-1} [-i/d]``."""
    if d < 1:
        raise ValueError(f"gamma needs d >= 1, got {d}")
    return Spectrum({Fraction(-i, d): 1 for i in range(1, d)})


def beta(m: int) -> Spectrum:
    """``sum_{i=0}^{m-1} [-i/m]``, the correction kernel of Yomdin formulas."""
    if m < 1:
        raise ValueError(f"beta needs m >= 1, got {m}")
    return Spectrum({Fraction(-i, m): 1 for i in range(m)})


def coefficient(a: Spectrum, q: RationalLike) -> int:
    return a[q]


def count_open_interval(a: Spectrum, lo: RationalLike, hi: RationalLike) -> int:
    """Sum of multiplicities of ``a`` strictly inside ``(lo, hi)``."""
    return a.count_open_interval(lo, hi)


def is_effective(a: Spectrum) -> Effectivity:
    for q, m in a.items():
        if m < 0:
            return Effectivity(False, q)
    return Effectivity(True)


def linear_combination(pairs: Iterable[tuple[int, Spectrum]]) -> Spectrum:
    terms: list[tuple[Fraction, int]] = []
    for c, a in pairs:
        terms.extend((q, c * m) for q, m in a.items())
    return Spectrum(terms)


def shift(a: Spectrum, c: RationalLike) -> Spectrum:
    c = to_rational(c)
    return Spectrum({q + c: m for q, m in a.items()})
