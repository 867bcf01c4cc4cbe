"""Upper bounds on the number of isolated singularities of a fixed type.

Every method produces a finite family of linear inequalities
``sum_i c_i r_i <= rhs`` in the counts ``r_i``; a single-type bound is the
minimum of ``rhs // c`` over the inequalities with ``c > 0``.

Spectra of germs must already live in ``n`` variables (see :mod:`.catalog`).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .catalog import GermConfiguration, GermSpec
from .combinatorics import HodgeQuery, gamma_power_coefficient, gamma_power_spectrum, primitive_hodge
from .errors import BoundError, InsufficientData, NoBound, NotApplicable
from .monodromy import _eigenvalue_solve
from .spectrum import Spectrum, beta, format_rational, star

__all__ = [
    "LinearConstraint",
    "BoundReport",
    "Feasibility",
    "METHODS",
    "yomdin_spectrum",
    "conical_reduced_spectrum",
    "effective_max_r",
    "conical_constraints",
    "conical_max_r",
    "varchenko_constraint",
    "varchenko_max_r",
    "restricted_varchenko_max_r",
    "naive_bound",
    "mixed_feasible",
    "conjecture_sweep",
    "run_method",
    "compare_methods",
]

METHODS = ("naive", "varchenko", "eigenvalue", "conical")


@dataclass(frozen=True)
class LinearConstraint:
    """``sum(c_i * r_i) <= rhs``; ``kind`` says what ``tag`` is (p, alpha or theta)."""

    coefficients: tuple[int, ...]
    rhs: int
    tag: Fraction
    kind: str = "p"

    def holds(self, counts: Sequence[int]) -> bool:
        return sum(c * r for c, r in zip(self.coefficients, counts)) <= self.rhs

    def to_json_obj(self) -> dict:
        tag = self.tag
        value = tag.numerator if tag.denominator == 1 and self.kind == "p" else format_rational(tag)
        return {self.kind: value, "c": list(self.coefficients), "rhs": self.rhs}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LinearConstraint":
        for kind in ("p", "alpha", "theta"):
            if kind in obj:
                return cls(tuple(obj["c"]), obj["rhs"], Fraction(str(obj[kind])), kind)
        raise ValueError(f"constraint without tag: {obj!r}")


def _single_min(constraints: Iterable[LinearConstraint], label: str) -> tuple[int, LinearConstraint]:
    best = None
    for con in constraints:
        c = con.coefficients[0]
        if c <= 0:
            continue
        r = con.rhs // c
        if best is None or r < best[0]:
            best = (r, con)
    if best is None:
        raise NoBound(f"no constraint involves {label}")
    return best


@dataclass(frozen=True)
class BoundReport:
    method: str
    max_r: int | None
    constraints: tuple[LinearConstraint, ...] = ()
    notes: tuple[str, ...] = ()
    binding: LinearConstraint | None = None

    def binding_obj(self) -> dict | None:
        if self.binding is None:
            return None
        obj = self.binding.to_json_obj()
        return {self.binding.kind: obj[self.binding.kind]}

    def to_json_obj(self) -> dict:
        return {
            "method": self.method,
            "max_r": self.max_r,
            "binding": self.binding_obj(),
            "constraints": [c.to_json_obj() for c in self.constraints],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BoundReport":
        cons = tuple(LinearConstraint.from_json_obj(c) for c in obj["constraints"])
        binding = None
        if obj.get("binding"):
            (kind, value), = obj["binding"].items()
            tag = Fraction(str(value))
            binding = next((c for c in cons if c.kind == kind and c.tag == tag), None)
            if binding is None:
                raise ValueError(f"binding {obj['binding']} not among the constraints")
        return cls(obj["method"], obj["max_r"], cons, tuple(obj.get("notes", ())), binding)

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        return cls.from_json_obj(json.loads(text))


def _check_config(n: int, d: int, germs: Iterable[GermSpec]):
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    for g in germs:
        if g.variables != n:
            raise ValueError(f"germ {g.label} has {g.variables} variables, expected {n}")


# -- spectra of the Yomdin deformation --------------------------------------

def yomdin_spectrum(n: int, d: int, config: GermConfiguration, k: int) -> Spectrum:
    """Spectrum of ``f + eps*l^k`` at the cone point of a degree-d hypersurface
    with the given isolated singularities."""
    if k <= d:
        raise ValueError(f"Yomdin exponent must exceed the degree: k={k}, d={d}")
    if config.ambient_n != n:
        raise ValueError(f"configuration lives in P^{config.ambient_n}, not P^{n}")
    _check_config(n, d, config.germs)
    bd, bk = beta(d), beta(k)
    terms = list(gamma_power_spectrum(n + 1, d).items())
    for g, r in config.entries:
        for lam, m in g.spectrum.items():
            x = d * lam
            a = x - math.floor(x)
            w = m * r
            terms.extend((q, -w * e) for q, e in star(Spectrum.single(lam - a / d), bd).items())
            terms.extend((q, w * e) for q, e in star(Spectrum.single(lam - a / k), bk).items())
    return Spectrum(terms)


def conical_reduced_spectrum(n: int, d: int, config: GermConfiguration) -> Spectrum:
    """The simplified form of :func:`yomdin_spectrum` at ``k = d + 1``."""
    if config.ambient_n != n:
        raise ValueError(f"configuration lives in P^{config.ambient_n}, not P^{n}")
    _check_config(n, d, config.germs)
    terms = list(gamma_power_spectrum(n + 1, d).items())
    for g, r in config.entries:
        for lam, m in g.spectrum.items():
            w = m * r
            fl = math.floor(d * lam)
            terms.extend((Fraction(fl + j, d), -w) for j in range(1, d))
            if d * lam != fl:
                terms.append((Fraction(fl, d) + 1, -w))
    return Spectrum(terms)


def effective_max_r(n: int, d: int, g: GermSpec, form: str = "reduced", k: int | None = None) -> int:
    """Largest r keeping the spectrum of ``r`` copies of ``g`` effective.

    Both spectra are affine in r, ``S(r) = S(0) + r*(S(1) - S(0))``, so the
    answer is a minimum over the values where the slope is negative.
    """
    def build(r):
        config = GermConfiguration(((g, r),) if r else (), n)
        if form == "reduced":
            return conical_reduced_spectrum(n, d, config)
        if form == "yomdin":
            return yomdin_spectrum(n, d, config, d + 1 if k is None else k)
        raise ValueError(f"unknown form {form!r}")

    base = build(0)
    slope = build(1) - base
    best = None
    for q, s in slope.items():
        if s < 0:
            r = base[q] // -s
            best = r if best is None else min(best, r)
    if best is None:
        raise NoBound(f"{g.label} never makes the spectrum ineffective")
    return best


# -- conical bound -----------------------------------------------------------

def _p_window(d: int, germs: Sequence[GermSpec]) -> range:
    # p/d - 1 < lam < p/d  <=>  d*lam < p < d*lam + d
    values = [q for g in germs for q in g.spectrum]
    if not values:
        return range(0)
    lo = math.floor(d * min(values)) + 1
    hi = math.ceil(d * max(values) + d) - 1
    return range(lo, hi + 1)


def conical_constraints(n: int, d: int, germs: Sequence[GermSpec]) -> list[LinearConstraint]:
    """One inequality per integer p: interval counts of the local spectra in
    ``(p/d - 1, p/d)`` against the coefficient of ``[p/d]`` in
    ``gamma(d)^{*(n+1)}``."""
    germs = list(germs)
    _check_config(n, d, germs)
    out = []
    for p in _p_window(d, germs):
        hi = Fraction(p, d)
        c = tuple(g.spectrum.count_open_interval(hi - 1, hi) for g in germs)
        if any(c):
            rhs = gamma_power_coefficient(n + 1, d, p) if d >= 2 else 0
            out.append(LinearConstraint(c, rhs, Fraction(p), "p"))
    return out


def conical_report(n: int, d: int, g: GermSpec) -> BoundReport:
    cons = tuple(conical_constraints(n, d, [g]))
    r, con = _single_min(cons, g.label)
    return BoundReport("conical", r, cons, (), con)


def conical_max_r(n: int, d: int, g: GermSpec) -> int:
    return conical_report(n, d, g).max_r


# -- Varchenko ---------------------------------------------------------------

def varchenko_constraint(
    n: int, d: int, germs: Sequence[GermSpec], alpha, _gamma: Spectrum | None = None
) -> LinearConstraint | None:
    """Counts in ``(alpha, alpha + 1)``; ``None`` when no germ is touched."""
    alpha = Fraction(alpha)
    c = tuple(g.spectrum.count_open_interval(alpha, alpha + 1) for g in germs)
    if not any(c):
        return None
    gam = gamma_power_spectrum(n, d) if _gamma is None else _gamma
    return LinearConstraint(c, gam.count_open_interval(alpha, alpha + 1), alpha, "alpha")


def _alpha_candidates(gam: Spectrum, g: GermSpec) -> list[Fraction]:
    # Both counts are step functions of alpha that jump only where alpha or
    # alpha + 1 hits a spectral value.  Open intervals exclude their ends, so
    # breakpoints are candidates too, not just the gaps between them.
    pts = set()
    for q in [*gam.support(), *g.spectrum.support()]:
        pts.add(q)
        pts.add(q - 1)
    pts = sorted(pts)
    cands = list(pts)
    cands.extend((a + b) / 2 for a, b in zip(pts, pts[1:]))
    # alpha must satisfy lam - 1 < alpha < lam for some spectral value lam
    lo, hi = min(g.spectrum) - 1, max(g.spectrum)
    return sorted(a for a in cands if lo < a < hi)


def varchenko_report(n: int, d: int, g: GermSpec) -> BoundReport:
    _check_config(n, d, [g])
    gam = gamma_power_spectrum(n, d)
    cons = []
    for a in _alpha_candidates(gam, g):
        con = varchenko_constraint(n, d, [g], a, gam)
        if con is not None:
            cons.append(con)
    r, con = _single_min(cons, g.label)
    return BoundReport("varchenko", r, tuple(cons), (), con)


def varchenko_max_r(n: int, d: int, g: GermSpec) -> int:
    """Exact minimum over all real alpha, via breakpoint enumeration."""
    return varchenko_report(n, d, g).max_r


def restricted_varchenko_max_r(n: int, d: int, g: GermSpec) -> tuple[int, Fraction]:
    """Varchenko minimized only over ``alpha = p/d - 1``; returns ``(r, alpha)``."""
    _check_config(n, d, [g])
    gam = gamma_power_spectrum(n, d)
    cons = []
    for p in _p_window(d, [g]):
        con = varchenko_constraint(n, d, [g], Fraction(p, d) - 1, gam)
        if con is not None:
            cons.append(con)
    r, con = _single_min(cons, g.label)
    return r, con.tag


# -- naive and eigenvalue ------------------------------------------------------

def naive_bound(n: int, d: int, g: GermSpec) -> int:
    """Each singularity spends ``middle_hodge_mult`` dimensions of the
    primitive middle Hodge space of a smooth degree-d hypersurface."""
    if n % 2 == 0:
        raise NotApplicable("the naive bound needs odd n")
    if g.middle_hodge_mult is None:
        raise InsufficientData(f"no middle Hodge multiplicity recorded for {g.label}")
    if g.middle_hodge_mult == 0:
        raise NoBound(f"{g.label} does not touch the middle Hodge space")
    return primitive_hodge(HodgeQuery(n, d, (n - 1) // 2)) // g.middle_hodge_mult


def eigenvalue_report(n: int, d: int, g: GermSpec) -> BoundReport:
    _check_config(n, d, [g])
    r, (theta, c, rhs), cons = _eigenvalue_solve(n, d, g)
    cons = tuple(LinearConstraint((ci,), rh, th, "theta") for th, ci, rh in cons)
    binding = next(x for x in cons if x.tag == theta)
    return BoundReport("eigenvalue", r, cons, (), binding)


def naive_report(n: int, d: int, g: GermSpec) -> BoundReport:
    return BoundReport("naive", naive_bound(n, d, g))


_RUNNERS = {
    "naive": naive_report,
    "varchenko": varchenko_report,
    "eigenvalue": eigenvalue_report,
    "conical": conical_report,
}


def run_method(method: str, n: int, d: int, g: GermSpec) -> BoundReport:
    """Run one method; :class:`BoundError` subclasses propagate."""
    try:
        runner = _RUNNERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return runner(n, d, g)


def compare_methods(n: int, d: int, g: GermSpec, methods: Sequence[str] = METHODS) -> list[BoundReport]:
    out = []
    for m in methods:
        try:
            out.append(run_method(m, n, d, g))
        except NotApplicable as exc:
            out.append(BoundReport(m, None, notes=(f"not applicable: {exc}",)))
        except NoBound as exc:
            out.append(BoundReport(m, None, notes=(f"no bound from this method: {exc}",)))
    return out


# -- mixed configurations ------------------------------------------------------

@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    violated: LinearConstraint | None = None
    constraints: tuple[LinearConstraint, ...] = field(default=(), repr=False)

    def __bool__(self) -> bool:
        return self.feasible


def mixed_feasible(n: int, d: int, config: GermConfiguration) -> Feasibility:
    """Check every conical inequality at the configuration's counts."""
    if config.ambient_n != n:
        raise ValueError(f"configuration lives in P^{config.ambient_n}, not P^{n}")
    if not config.entries:
        return Feasibility(True)
    cons = tuple(conical_constraints(n, d, config.germs))
    for con in cons:
        if not con.holds(config.counts):
            return Feasibility(False, con, cons)
    return Feasibility(True, None, cons)


# -- conjecture evidence -------------------------------------------------------

def conjecture_sweep(
    n_range: Iterable[int], d_range: Iterable[int], germs: Sequence[tuple[str, object]]
) -> list[dict]:
    """Compare exact Varchenko with its restriction to ``alpha = p/d - 1``.

    ``germs`` holds ``(label, factory)`` pairs where ``factory(n)`` builds the
    germ in n variables.  The restricted minimum runs over fewer alphas, so it
    can never be smaller; ``direction_ok`` records that.
    """
    rows = []
    d_values = list(d_range)
    for n in n_range:
        for d in d_values:
            for label, factory in germs:
                g = factory(n)
                row = {"n": n, "d": d, "germ": label}
                try:
                    exact = varchenko_report(n, d, g)
                    restricted, alpha = restricted_varchenko_max_r(n, d, g)
                except BoundError as exc:
                    row.update(status="no_bound", detail=str(exc))
                    rows.append(row)
                    continue
                if restricted == exact.max_r:
                    status = "equal"
                elif restricted > exact.max_r:
                    status = "restricted_weaker"
                else:
                    status = "restricted_stronger"
                row.update(
                    exact=exact.max_r,
                    exact_alpha=format_rational(exact.binding.tag),
                    restricted=restricted,
                    restricted_alpha=format_rational(alpha),
                    status=status,
                    direction_ok=restricted >= exact.max_r,
                )
                rows.append(row)
    return rows
