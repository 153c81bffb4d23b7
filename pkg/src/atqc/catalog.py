"""Code-family parameter tables, asymptotic rates, and curve data.

Two distinct limit conventions coexist and are exposed separately:
family rows take p -> infinity at fixed q (rates (q-2)/q), while a fixed
{p,q} pair takes g -> infinity (rate (pq-2p-2q)/pq).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import IO, Iterable, Sequence

from . import geometry
from .errors import InputError
from .geometry import SchlafliPair, census, distance_bounds, edge_length, fundamental_diameter
from .torus import APOTHEM, HexTorusSpec

BOUND = "bound"
EXACT = "exact"


@dataclass(frozen=True)
class CodeParams:
    """An [[n, k, d_z/d_x]] record; distances are bounds unless marked exact."""

    pair: SchlafliPair
    g: int
    n: int
    k: int
    d_x: int
    d_z: int
    exactness: str
    rate: Fraction

    def to_dict(self) -> dict:
        return {
            "pair": [self.pair.p, self.pair.q],
            "g": self.g,
            "n": self.n,
            "k": self.k,
            "d_x": self.d_x,
            "d_z": self.d_z,
            "exactness": self.exactness,
            "rate": f"{self.rate.numerator}/{self.rate.denominator}",
        }


def family_params(pair: SchlafliPair, g: int) -> CodeParams:
    """Parameters of the hyperbolic {p,q} code on genus g (distances are bounds)."""
    cen = census(pair, g)
    if not cen.feasible:
        raise InputError(
            f"census for {pair} at genus {g} is infeasible: n_f = {cen.n_f}, "
            f"n_f* = {cen.n_f_star} must both be positive integers"
        )
    d_x, d_z = distance_bounds(pair, g)
    n = int(cen.n_edges)
    k = 2 * g
    return CodeParams(
        pair=pair, g=g, n=n, k=k, d_x=d_x, d_z=d_z, exactness=BOUND, rate=Fraction(k, n)
    )


def toric_family_params(spec: HexTorusSpec) -> CodeParams:
    """Closed-form parameters of the hexagonal torus families (genus 1).

    The distance entries are the ceiling bounds ceil(d_e / l); whether they
    are attained is checked against the exact search per instance, never
    assumed.
    """
    from math import sqrt

    s = spec.scale
    if spec.variant == APOTHEM:
        n = 3 * s * s
        d_x = geometry.guarded_ceil(s * sqrt(3))
        d_z = s
    else:
        n = s * s
        d_x = s
        d_z = geometry.guarded_ceil(s / sqrt(3))
    return CodeParams(
        pair=SchlafliPair(6, 3),
        g=1,
        n=n,
        k=2,
        d_x=d_x,
        d_z=d_z,
        exactness=BOUND,
        rate=Fraction(2, n),
    )


def swap_dual(params: CodeParams) -> CodeParams:
    """Exchange the tessellation with its dual: d_x and d_z trade places."""
    return replace(params, pair=params.pair.dual, d_x=params.d_z, d_z=params.d_x)


@dataclass(frozen=True)
class FamilyRow:
    """A fixed-q family {p,q}: symbolic census formulas and asymptotic rate."""

    q: int
    n_f_formula: str
    n_f_star_formula: str
    n_formula: str

    def n_f(self, p: int, g: int) -> Fraction:
        return Fraction(4 * self.q * (g - 1), p * self.q - 2 * p - 2 * self.q)

    def n_f_star(self, p: int, g: int) -> Fraction:
        return self.n_f(p, g) * p / self.q

    def n(self, p: int, g: int) -> Fraction:
        return self.n_f(p, g) * p / 2

    @property
    def asymptotic_rate(self) -> Fraction:
        """Limit of 2g/n as g and p grow within the family."""
        return Fraction(self.q - 2, self.q)


TABLE1_FAMILIES: dict[int, FamilyRow] = {
    3: FamilyRow(3, "12(g-1)/(p-6)", "4p(g-1)/(p-6)", "6p(g-1)/(p-6)"),
    4: FamilyRow(4, "8(g-1)/(p-4)", "2p(g-1)/(p-4)", "4p(g-1)/(p-4)"),
    5: FamilyRow(5, "20(g-1)/(3p-10)", "4p(g-1)/(3p-10)", "10p(g-1)/(3p-10)"),
    6: FamilyRow(6, "6(g-1)/(p-3)", "p(g-1)/(p-3)", "3p(g-1)/(p-3)"),
}

#: The nine tabulated hyperbolic pairs, in print order.
TABLE2_PAIRS: tuple[SchlafliPair, ...] = (
    SchlafliPair(7, 3),
    SchlafliPair(8, 3),
    SchlafliPair(9, 3),
    SchlafliPair(10, 3),
    SchlafliPair(12, 3),
    SchlafliPair(5, 4),
    SchlafliPair(6, 4),
    SchlafliPair(8, 4),
    SchlafliPair(10, 5),
)


def asymptotic_rate(family: FamilyRow) -> Fraction:
    return family.asymptotic_rate


def fixed_pair_rate(pair: SchlafliPair) -> Fraction:
    """Limit of k/n = 2g/(c(g-1)) as g -> infinity for a fixed hyperbolic pair."""
    p, q = pair.p, pair.q
    denom = p * q - 2 * p - 2 * q
    if denom <= 0:
        raise InputError(f"{pair} is not hyperbolic")
    return Fraction(denom, p * q)


def pair_coefficients(pair: SchlafliPair) -> tuple[int, int, int]:
    """(n_f, n_f*, n) as integer multiples of (g-1); requires divisibility."""
    cen = census(pair, 2)
    if not cen.feasible:
        raise InputError(f"{pair} census coefficients are not integers")
    return int(cen.n_f), int(cen.n_f_star), int(cen.n_edges)


TABLE_COLUMNS = [
    "table",
    "pair",
    "n_f",
    "n_f_star",
    "n",
    "k",
    "d_z_bound",
    "d_x_bound",
    "rate",
    "edge_length",
    "dual_edge_length",
]


def emit_tables(sink: IO[str]) -> None:
    """Regenerate both printed tables as one CSV (RFC 4180, header row)."""
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for q, fam in sorted(TABLE1_FAMILIES.items()):
        writer.writerow(
            [
                "families",
                f"{{p,{q}}}",
                fam.n_f_formula,
                fam.n_f_star_formula,
                fam.n_formula,
                "2g",
                "ceil(d_h/l(q,p))",
                "ceil(d_h/l(p,q))",
                f"{fam.asymptotic_rate.numerator}/{fam.asymptotic_rate.denominator}",
                "",
                "",
            ]
        )
    for pair in TABLE2_PAIRS:
        n_f, n_f_star, n = pair_coefficients(pair)
        l_pq = edge_length(pair)
        l_qp = edge_length(pair.dual)
        rate = fixed_pair_rate(pair)
        writer.writerow(
            [
                "pairs",
                str(pair),
                f"{n_f}(g-1)",
                f"{n_f_star}(g-1)",
                f"{n}(g-1)",
                "2g",
                f"ceil(d_h/{l_qp:.4f})",
                f"ceil(d_h/{l_pq:.4f})",
                f"{rate.numerator}/{rate.denominator}",
                f"{l_pq:.4f}",
                f"{l_qp:.4f}",
            ]
        )


CURVE_COLUMNS = [
    "pair",
    "g",
    "d_h",
    "dx_raw",
    "dz_raw",
    "diff_raw",
    "dx_bound",
    "dz_bound",
    "diff_bound",
    "n",
    "k",
    "rate",
]


def emit_curves(pairs: Sequence[SchlafliPair], g_range: Iterable[int], sink: IO[str]) -> None:
    """Per-genus raw (unrounded) d_h/l ratios, ceilinged bounds, and rates."""
    gs = sorted(set(g_range))
    if not gs:
        raise InputError("empty genus range")
    if gs[0] < 2 or gs[-1] > 64:
        raise InputError(f"genus range must lie within 2..64, got {gs[0]}..{gs[-1]}")
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CURVE_COLUMNS)
    for pair in pairs:
        l_pq = edge_length(pair)
        l_qp = edge_length(pair.dual)
        for g in gs:
            d_h = fundamental_diameter(g)
            params = family_params(pair, g)
            dx_raw = d_h / l_pq
            dz_raw = d_h / l_qp
            writer.writerow(
                [
                    str(pair),
                    g,
                    f"{d_h:.12g}",
                    f"{dx_raw:.12g}",
                    f"{dz_raw:.12g}",
                    f"{dx_raw - dz_raw:.12g}",
                    params.d_x,
                    params.d_z,
                    params.d_x - params.d_z,
                    params.n,
                    params.k,
                    f"{params.rate.numerator}/{params.rate.denominator}",
                ]
            )


def first_genus_with_bounds(
    pair: SchlafliPair, target: tuple[int, int], g_range: Iterable[int]
) -> int | None:
    """Smallest genus in the range whose (d_x, d_z) bounds hit the target."""
    for g in sorted(set(g_range)):
        if distance_bounds(pair, g) == target:
            return g
    return None
