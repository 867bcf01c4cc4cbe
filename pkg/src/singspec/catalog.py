"""Local isolated singularities: spectra, Milnor numbers, presets.

Germs of a hypersurface in P^n live in n variables.  Spectra shift by 1/2
for every added square, so a germ is always built at the variable count it
will be used with; nothing downstream pads automatically.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .spectrum import Spectrum, format_rational, gamma, is_effective, star, to_rational

__all__ = [
    "InvalidGerm",
    "GermSpec",
    "GermConfiguration",
    "pham_brieskorn",
    "named",
    "from_raw_spectrum",
    "alpha_values",
    "parse_germ",
    "parse_configuration",
]


class InvalidGerm(ValueError):
    """A germ violates one of its invariants; ``invariant`` names which."""

    def __init__(self, invariant: str, detail: str):
        super().__init__(f"{invariant}: {detail}")
        self.invariant = invariant


@dataclass(frozen=True)
class GermSpec:
    label: str
    variables: int
    spectrum: Spectrum
    milnor: int
    middle_hodge_mult: int | None = None

    def __post_init__(self):
        if self.variables < 1:
            raise InvalidGerm("variables", f"need at least one variable, got {self.variables}")
        if not self.spectrum:
            raise InvalidGerm("milnor", "empty spectrum (smooth point)")
        eff = is_effective(self.spectrum)
        if not eff:
            raise InvalidGerm("effectiveness", f"negative multiplicity at {eff.witness}")
        if self.spectrum.mass() != self.milnor:
            raise InvalidGerm(
                "milnor", f"spectrum mass {self.spectrum.mass()} != Milnor number {self.milnor}"
            )
        lo, hi = -1, self.variables
        for q in self.spectrum:
            if not lo < q < hi:
                raise InvalidGerm("support", f"value {q} outside ({lo}, {hi})")
        centre2 = self.variables - 2
        for q, m in self.spectrum.items():
            if self.spectrum[centre2 - q] != m:
                raise InvalidGerm(
                    "symmetry",
                    f"multiplicity of [{q}] differs from that of [{centre2 - q}]",
                )
        if self.middle_hodge_mult is not None and self.middle_hodge_mult < 0:
            raise InvalidGerm("middle_hodge_mult", "must be nonnegative")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class GermConfiguration:
    """A multiset of germs sitting on one hypersurface in P^{ambient_n}."""

    entries: tuple[tuple[GermSpec, int], ...]
    ambient_n: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple((g, int(r)) for g, r in self.entries))
        for g, r in self.entries:
            if r < 1:
                raise ValueError(f"count for {g.label} must be positive, got {r}")
            if g.variables != self.ambient_n:
                raise ValueError(
                    f"germ {g.label} has {g.variables} variables; "
                    f"a hypersurface in P^{self.ambient_n} needs {self.ambient_n}"
                )

    @property
    def germs(self) -> list[GermSpec]:
        return [g for g, _ in self.entries]

    @property
    def counts(self) -> list[int]:
        return [r for _, r in self.entries]

    def total_milnor(self) -> int:
        return sum(g.milnor * r for g, r in self.entries)

    def __str__(self) -> str:
        return "+".join(f"{g.label}*{r}" for g, r in self.entries)


def pham_brieskorn(exponents: Sequence[int], label: str | None = None) -> GermSpec:
    """Germ of ``sum x_j^{a_j}``; its spectrum is the star of the ``gamma(a_j)``."""
    exps = list(exponents)
    if not exps:
        raise InvalidGerm("exponents", "need at least one exponent")
    for a in exps:
        if a < 2:
            raise InvalidGerm("exponents", f"exponent {a} < 2 is not singular")
    spec = gamma(exps[0])
    for a in exps[1:]:
        spec = star(spec, gamma(a))
    return GermSpec(
        label=label or "PB:" + ",".join(map(str, exps)),
        variables=len(exps),
        spectrum=spec,
        milnor=math.prod(a - 1 for a in exps),
    )


# normal forms before padding with squares
_TILDE_E = {"E6t": [3, 3, 3], "E7t": [2, 4, 4], "E8t": [2, 3, 6]}


def named(kind: str, params: Sequence[int] = (), variables: int | None = None) -> GermSpec:
    """Preset germs ``A`` (params ``[k]``), ``E6t``, ``E7t``, ``E8t``, ``PB``.

    The normal form is padded with squares up to ``variables``.  The
    vanishing-cohomology middle Hodge multiplicity is recorded only where it
    is known: 1 for A_1, 6 for E6t in three variables.
    """
    params = list(params)
    if kind == "A":
        if len(params) != 1 or params[0] < 1:
            raise InvalidGerm("kind", f"A needs one index k >= 1, got {params}")
        k = params[0]
        base, label = [k + 1], f"A:{k}"
    elif kind in _TILDE_E:
        if params:
            raise InvalidGerm("kind", f"{kind} takes no parameters")
        base, label = list(_TILDE_E[kind]), kind
    elif kind == "PB":
        base, label = params, "PB:" + ",".join(map(str, params))
    else:
        raise InvalidGerm("kind", f"unknown germ kind {kind!r}")
    if variables is None:
        variables = len(base)
    if variables < len(base):
        raise InvalidGerm(
            "variables", f"{label} needs at least {len(base)} variables, got {variables}"
        )
    germ = pham_brieskorn(base + [2] * (variables - len(base)), label=label)
    mult = None
    if kind == "A" and params == [1]:
        mult = 1
    elif kind == "E6t" and variables == 3:
        mult = 6
    if mult is not None:
        germ = GermSpec(germ.label, germ.variables, germ.spectrum, germ.milnor, mult)
    return germ


def from_raw_spectrum(
    terms: Iterable[tuple[object, int]],
    variables: int,
    label: str | None = None,
    middle_hodge_mult: int | None = None,
) -> GermSpec:
    terms = [(to_rational(q), m) for q, m in terms]
    if not terms:
        raise InvalidGerm("milnor", "raw spectrum needs at least one term")
    for q, m in terms:
        if m < 1:
            raise InvalidGerm("effectiveness", f"multiplicity {m} at {q} is not positive")
    spec = Spectrum(terms)
    if label is None:
        label = "raw:[" + ",".join(f"{format_rational(q)}x{m}" for q, m in spec.items()) + "]"
    return GermSpec(label, variables, spec, spec.mass(), middle_hodge_mult)


def alpha_values(g: GermSpec, d: int) -> list[Fraction]:
    """Fractional parts ``d*lam - floor(d*lam)`` per spectral value, with
    multiplicity, in ascending order of ``lam``."""
    if d < 2:
        raise ValueError(f"alpha_values needs d >= 2, got {d}")
    out = []
    for lam in g.spectrum.values():
        x = d * lam
        out.append(x - math.floor(x))
    return out


# -- germ mini-language ----------------------------------------------------

_RAW = re.compile(r"^raw:\[(.*)\]$")


def parse_germ(text: str, variables: int) -> GermSpec:
    """Parse ``A:11``, ``E6t``, ``E7t``, ``E8t``, ``PB:3,3,3`` or
    ``raw:[0x1,1/3x3,2/3x3,1x1]`` (value ``x`` multiplicity)."""
    text = text.strip()
    m = _RAW.match(text)
    if m:
        terms = []
        for chunk in re.split(r"[,;]", m.group(1)):
            chunk = chunk.strip()
            if not chunk:
                continue
            value, sep, mult = chunk.partition("x")
            try:
                terms.append((Fraction(value.strip()), int(mult) if sep else 1))
            except ValueError as exc:
                raise InvalidGerm("syntax", f"bad raw term {chunk!r}") from exc
        return from_raw_spectrum(terms, variables)
    if text in _TILDE_E:
        return named(text, variables=variables)
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InvalidGerm("kind", f"unknown germ {text!r}")
    try:
        params = [int(x) for x in rest.split(",")]
    except ValueError as exc:
        raise InvalidGerm("syntax", f"bad parameters in {text!r}") from exc
    return named(kind, params, variables)


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_configuration(
    text: str, n: int | None = None, d: int | None = None
) -> tuple[GermConfiguration, int, int | None]:
    """Parse ``A:1*16+E6t*2@n=3,d=4``.

    The ``@n=..,d=..`` suffix is optional when ``n`` (and ``d``) are passed;
    values given in both places must agree.  Returns ``(config, n, d)``.
    """
    body, at, tail = text.strip().partition("@")
    if at:
        for item in tail.split(","):
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in ("n", "d"):
                raise InvalidGerm("syntax", f"bad configuration suffix {tail!r}")
            val = int(val)
            given = n if key == "n" else d
            if given is not None and given != val:
                raise InvalidGerm("syntax", f"{key}={val} conflicts with {key}={given}")
            if key == "n":
                n = val
            else:
                d = val
    if n is None:
        raise InvalidGerm("syntax", "ambient dimension n not given")
    entries = []
    for part in _split_top(body, "+"):
        part = part.strip()
        if not part:
            continue
        germ_text, star_, count = part.rpartition("*")
        if not star_ or "]" in count:
            germ_text, count = part, "1"
        entries.append((parse_germ(germ_text, n), int(count)))
    return GermConfiguration(tuple(entries), n), n, d
