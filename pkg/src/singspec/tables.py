"""Reference tables rebuilt from first principles and diffed against the
printed values in :mod:`._golden`.

A cell whose recomputed value differs from the printed one is a failure
unless it appears in :data:`KNOWN_DISCREPANCIES` *and* the recomputed value
equals the exact value recorded there, so a regression at a known cell is
still caught.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import _golden
from .bounds import conical_constraints, conical_max_r, naive_bound
from .catalog import GermSpec, named
from .combinatorics import b_poly, gamma_power_coefficient, gamma_power_spectrum
from .errors import BoundError
from .monodromy import eigenvalue_max_r
from .spectrum import Spectrum, format_rational

__all__ = ["Cell", "Table", "PRESETS", "KNOWN_DISCREPANCIES", "build_table", "a2m1_polynomial"]

# (preset, row, column) -> (exact value, reason)
KNOWN_DISCREPANCIES: dict[tuple[str, object, str], tuple[object, str]] = {
    ("gamma-appendix", (6, 6), "spectrum"): (
        str(gamma_power_spectrum(7, 6)),
        "printed row drops 455[4] and shifts the remaining tail coefficients by one slot",
    ),
    ("e6-n3", 4, "eigenvalue"): (2, "closed form gives 5/2; the printed 3 is not its floor"),
    ("e6-n3", 20, "eigenvalue"): (814, "exact value 814.5 printed rounded up"),
    ("e6-n3", 40, "eigenvalue"): (7229, "exact value 7229.5 printed rounded up"),
    ("e6-n3", 100, "eigenvalue"): (120074, "exact value 120074.5 printed rounded up"),
    ("e6-n3", 1000, "eigenvalue"): (124500749, "exact value 124500749.5 printed rounded up"),
    ("e6-n3", 10, "naive"): (81, "exact value 81.5 printed rounded up"),
    ("e6-n3", 30, "naive"): (2711, "exact value 2711.5 printed rounded up"),
    ("e6-n3", 50, "naive"): (13074, "exact value 13074.5 printed rounded up"),
    ("e6-n3", 100, "naive"): (107816, "exact value 107816.5 printed rounded up"),
    ("e6-n3", 1000, "naive"): (110778166, "exact value 110778166.5 printed rounded up"),
    ("e6-n3", 20, "conical"): (571, "binding value is b(20,14)/7 = 4000/7, whose floor is 571"),
    ("e6-n3", 1000, "conical"): (81764820, "binding value is 572353740/7 = 81764820 exactly"),
    ("e6e7e8-n3", 9, "naive"): (57, "exact value 344/6, whose floor is 57"),
    ("e6e7e8-n3", 5, "weighted"): (
        "1 violations",
        "at d <= 6 the chosen p equals d, where the interval counts are 6,7,8 rather than 7,8,9",
    ),
    ("e6e7e8-n3", 6, "weighted"): (
        "9 violations",
        "at d <= 6 the chosen p equals d, where the interval counts are 6,7,8 rather than 7,8,9",
    ),
}


@dataclass(frozen=True)
class Cell:
    value: object
    expected: object = None
    status: str = ""  # "" (unchecked), "match", "known", "mismatch"
    note: str = ""

    def display(self) -> str:
        return "n/a" if self.value is None else str(self.value)


@dataclass
class Table:
    preset: str
    title: str
    key: str
    columns: list[str]
    rows: list[tuple[object, dict[str, Cell]]] = field(default_factory=list)

    def cells(self):
        for row, cells in self.rows:
            for col, cell in cells.items():
                yield row, col, cell

    @property
    def mismatches(self) -> list[tuple[object, str, Cell]]:
        return [(r, c, x) for r, c, x in self.cells() if x.status == "mismatch"]

    @property
    def known(self) -> list[tuple[object, str, Cell]]:
        return [(r, c, x) for r, c, x in self.cells() if x.status == "known"]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def records(self) -> list[dict]:
        out = []
        for row, cells in self.rows:
            rec = {self.key: _row_text(row)}
            for col in self.columns:
                cell = cells.get(col)
                rec[col] = "" if cell is None else cell.display()
            out.append(rec)
        return out


def _row_text(row) -> str:
    if isinstance(row, tuple):
        return ",".join(map(str, row))
    return str(row)


def _check(preset: str, row, col: str, value, expected) -> Cell:
    if expected is None:
        return Cell(value)
    if value == expected:
        return Cell(value, expected, "match")
    known = KNOWN_DISCREPANCIES.get((preset, row, col))
    if known is not None and known[0] == value:
        return Cell(value, expected, "known", known[1])
    return Cell(value, expected, "mismatch")


def _safe(fn: Callable[[], object]):
    try:
        return fn()
    except BoundError:
        return None


def _single_type(preset: str, title: str, n: int, germ: GermSpec, golden: dict, columns) -> Table:
    t = Table(preset, title, "d", list(columns))
    runners = {
        "naive": lambda d: naive_bound(n, d, germ),
        "eigenvalue": lambda d: eigenvalue_max_r(n, d, germ) if d >= 3 else None,
        "conical": lambda d: conical_max_r(n, d, germ) if d >= 2 else None,
    }
    for d, printed in golden.items():
        cells = {}
        for col, expected in zip(columns, printed):
            value = _safe(lambda: runners[col](d))
            cells[col] = _check(preset, d, col, value, expected)
        t.rows.append((d, cells))
    return t


def _a1_n3() -> Table:
    return _single_type(
        "a1-n3", "A1 singularities on surfaces in P^3", 3, named("A", [1], 3),
        _golden.A1_N3, ("naive", "eigenvalue", "conical"),
    )


def _a1_n4() -> Table:
    return _single_type(
        "a1-n4", "A1 singularities on threefolds in P^4", 4, named("A", [1], 4),
        _golden.A1_N4, ("eigenvalue", "conical"),
    )


def _e6_n3() -> Table:
    return _single_type(
        "e6-n3", "E6~ singularities on surfaces in P^3", 3, named("E6t", variables=3),
        _golden.E6_N3, ("naive", "eigenvalue", "conical"),
    )


def _gamma_appendix() -> Table:
    t = Table("gamma-appendix", "gamma(d) star-raised to n+1", "n,d", ["spectrum"])
    for (n, d), printed in _golden.GAMMA_APPENDIX.items():
        # re-serialize so the comparison is on canonical form
        expected = str(Spectrum.from_text(printed))
        value = str(gamma_power_spectrum(n + 1, d))
        t.rows.append(((n, d), {"spectrum": _check(t.preset, (n, d), "spectrum", value, expected)}))
    return t


def weighted_boundary_violations(d: int) -> tuple[int, tuple[int, ...], int]:
    """Configurations of E6~, E7~, E8~ on a degree-d surface that pass every
    conical inequality yet have ``7 n6 + 8 n7 + 9 n8 > b(d, floor(5d/6)+1)``.

    Only the band ``b - 9 < w <= b + 9`` is scanned: past it the single
    inequality at that p already forbids everything.  Returns
    ``(violations, coefficients at p, b)``.
    """
    germs = [named(k, variables=3) for k in ("E6t", "E7t", "E8t")]
    cons = conical_constraints(3, d, germs)
    p = 5 * d // 6 + 1
    b = b_poly(d, p)
    at_p = next((c.coefficients for c in cons if c.tag == p), (0, 0, 0))
    bad = 0
    for x in range(b // 7 + 2):
        for y in range(b // 8 + 2):
            rest = 7 * x + 8 * y
            for z in range(b // 9 + 2):
                w = rest + 9 * z
                if w <= b - 9 or w > b + 9:
                    continue
                if w > b and all(c.holds((x, y, z)) for c in cons):
                    bad += 1
    return bad, at_p, b


def _e6e7e8_n3() -> Table:
    columns = ["b/7", "naive", "conical", "c@5d/6", "b@5d/6", "weighted"]
    t = Table("e6e7e8-n3", "E6~, E7~, E8~ on surfaces in P^3", "d", columns)
    e6 = named("E6t", variables=3)
    for d, (b7, naive) in _golden.E6_SURFACE_COMPARISON.items():
        bad, at_p, b = weighted_boundary_violations(d)
        cells = {
            "b/7": _check(t.preset, d, "b/7", b_poly(d, 2 * d // 3 + 1) // 7, b7),
            "naive": _check(t.preset, d, "naive", naive_bound(3, d, e6), naive),
            "conical": Cell(conical_max_r(3, d, e6)),
            "c@5d/6": Cell(",".join(map(str, at_p))),
            "b@5d/6": Cell(b),
            "weighted": _check(t.preset, d, "weighted", "ok" if not bad else f"{bad} violations", "ok"),
        }
        t.rows.append((d, cells))
    return t


def a2m1_polynomial(d: int) -> Fraction:
    """The quartic claimed to equal the coefficient of ``[p/d]`` in
    ``gamma(d)^{*5}`` at ``p = 3d/2`` (d even) or ``(3d+1)/2`` (d odd)."""
    F = Fraction
    if d % 2 == 0:
        return F(115, 192) * d**4 - F(115, 48) * d**3 + F(185, 48) * d**2 - F(35, 12) * d + 1
    return F(115, 192) * d**4 - F(115, 48) * d**3 + F(355, 96) * d**2 - F(125, 48) * d + F(45, 64)


def _a2m1_n4() -> Table:
    columns = ["p", "c", "gamma", "poly", "poly_check", "r_bound", "conical"]
    t = Table("a2m1-n4", "A_{2m+1} singularities on threefolds in P^4", "m,d", columns)
    for m in range(4):
        g = named("A", [2 * m + 1], 4)
        for d in range(3, 11):
            p = 3 * d // 2 if d % 2 == 0 else (3 * d + 1) // 2
            con = next((c for c in conical_constraints(4, d, [g]) if c.tag == p), None)
            c = con.coefficients[0] if con else 0
            gam = gamma_power_coefficient(5, d, p)
            poly = a2m1_polynomial(d)
            cells = {
                "p": Cell(p),
                "c": Cell(c),
                "gamma": Cell(gam),
                "poly": Cell(format_rational(poly)),
                "r_bound": Cell(gam // c if c else None),
                "conical": Cell(conical_max_r(4, d, g)),
            }
            if d % 2 == 0 or d > m + 1:
                verdict = "ok" if abs(poly - gam) <= 1 and c == 2 * m + 1 else "off"
                cells["poly_check"] = _check(t.preset, (m, d), "poly_check", verdict, "ok")
            else:
                cells["poly_check"] = Cell(None, note="outside the stated range d > m+1")
            t.rows.append(((m, d), cells))
    return t


PRESETS: dict[str, Callable[[], Table]] = {
    "a1-n3": _a1_n3,
    "a1-n4": _a1_n4,
    "e6-n3": _e6_n3,
    "e6e7e8-n3": _e6e7e8_n3,
    "gamma-appendix": _gamma_appendix,
    "a2m1-n4": _a2m1_n4,
}


def build_table(preset: str) -> Table:
    try:
        return PRESETS[preset]()
    except KeyError:
        raise ValueError(f"unknown preset {preset!r}; choose from {', '.join(PRESETS)}") from None
