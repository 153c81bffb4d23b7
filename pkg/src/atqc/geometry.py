"""Closed-form metric and counting formulas for {p,q} tessellations.

Everything here is a pure function of (p, q, genus).  Census arithmetic is
exact rational; the hyperbolic lengths are double precision with a snap
guard where a ratio is provably an exact integer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError

SPHERICAL = "spherical"
EUCLIDEAN = "euclidean"
HYPERBOLIC = "hyperbolic"

#: Ratios within this distance of an integer are snapped before the ceiling.
CEILING_GUARD = 1e-9


@dataclass(frozen=True)
class SchlafliPair:
    """A {p,q} tessellation: p-gonal faces, q around each vertex."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 3 or self.q < 3:
            raise InputError(f"Schlafli symbol needs p, q >= 3, got {{{self.p},{self.q}}}")

    @property
    def dual(self) -> "SchlafliPair":
        return SchlafliPair(self.q, self.p)

    @property
    def indicator(self) -> int:
        """(p-2)(q-2); >4 hyperbolic, =4 Euclidean, <4 spherical."""
        return (self.p - 2) * (self.q - 2)

    def __str__(self) -> str:
        return f"{{{self.p},{self.q}}}"


@dataclass(frozen=True)
class TessellationCensus:
    """Exact face/vertex/edge counts for {p,q} on a genus-g surface."""

    n_f: Fraction
    n_f_star: Fraction
    n_edges: Fraction
    feasible: bool


def classify(pair: SchlafliPair) -> str:
    ind = pair.indicator
    if ind > 4:
        return HYPERBOLIC
    if ind == 4:
        return EUCLIDEAN
    return SPHERICAL


def _require_hyperbolic(pair: SchlafliPair) -> None:
    cls = classify(pair)
    if cls != HYPERBOLIC:
        raise InputError(f"{pair} is {cls}, not hyperbolic")


def edge_length(pair: SchlafliPair) -> float:
    """Edge length of a hyperbolic {p,q} tessellation."""
    _require_hyperbolic(pair)
    p, q = pair.p, pair.q
    arg = (math.cos(math.pi / q) ** 2 + math.cos(2 * math.pi / p)) / math.sin(math.pi / q) ** 2
    return math.acosh(arg)


def fundamental_diameter(g: int) -> float:
    """Distance between opposite edge-pairings of the regular 4g-gon, g >= 2."""
    if g < 2:
        raise InputError(f"fundamental diameter needs genus >= 2, got {g}")
    angle = math.pi / (4 * g)
    return 2.0 * math.acosh(math.cos(angle) / math.sin(angle))


def census(pair: SchlafliPair, g: int) -> TessellationCensus:
    """Exact tessellation census on genus g; requires a hyperbolic pair, g >= 2."""
    _require_hyperbolic(pair)
    if g < 2:
        raise InputError(f"census needs genus >= 2, got {g}")
    p, q = pair.p, pair.q
    denom = p * q - 2 * p - 2 * q
    n_f = Fraction(4 * q * (g - 1), denom)
    n_f_star = n_f * p / q
    n_edges = n_f * p / 2
    feasible = all(x > 0 and x.denominator == 1 for x in (n_f, n_f_star, n_edges))
    return TessellationCensus(n_f=n_f, n_f_star=n_f_star, n_edges=n_edges, feasible=feasible)


def guarded_ceil(ratio: float) -> int:
    """Ceiling with a snap for ratios within CEILING_GUARD of an integer."""
    nearest = round(ratio)
    if abs(ratio - nearest) < CEILING_GUARD:
        return int(nearest)
    return math.ceil(ratio)


def distance_bounds(pair: SchlafliPair, g: int) -> tuple[int, int]:
    """(d_x lower bound, d_z lower bound) for {p,q} on genus g >= 2."""
    _require_hyperbolic(pair)
    if g < 2:
        raise InputError(f"distance bounds need genus >= 2, got {g}")
    d_h = fundamental_diameter(g)
    d_x = guarded_ceil(d_h / edge_length(pair))
    d_z = guarded_ceil(d_h / edge_length(pair.dual))
    return d_x, d_z
