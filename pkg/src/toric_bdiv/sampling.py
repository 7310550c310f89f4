"""Seeded random objects for property suites (``random.Random`` instances only)."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .bdivisors import FanPL
from .filtrations import Filtration, IdealPower, Intersect, RegionFiltration, Scale, ValuationFiltration
from .geometry import Region
from .monomial import MonomialIdeal, Polynomial
from .valuations import WeightVector


def random_rational(rng: random.Random, lo: int, hi: int, max_den: int = 6) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_region(rng: random.Random, n: int, max_vertices: int = 5, max_den: int = 6, max_coord: int = 3) -> Region:
    """A cobounded region: one vertex per axis plus a few interior points."""
    pts = []
    for i in range(n):
        den = rng.randint(1, max_den)
        a = Fraction(rng.randint(1, max_coord * den), den)
        pts.append(tuple(a if j == i else Fraction(0) for j in range(n)))
    for _ in range(rng.randint(0, max(0, max_vertices - n))):
        p = tuple(random_rational(rng, 0, max_coord, max_den) for _ in range(n))
        if any(p):  # the origin would swallow the whole orthant
            pts.append(p)
    return Region(tuple(pts))


def random_weights(rng: random.Random, n: int, partial: bool = False, max_den: int = 6) -> WeightVector:
    while True:
        w = [Fraction(rng.randint(1, 6), rng.randint(1, max_den)) for _ in range(n)]
        if partial:
            for i in rng.sample(range(n), rng.randint(1, n - 1)):
                w[i] = Fraction(0)
        return WeightVector(tuple(w))


def random_exponent(rng: random.Random, n: int, max_entry: int = 4) -> tuple[int, ...]:
    return tuple(rng.randint(0, max_entry) for _ in range(n))


def random_monomial_weight_pair(rng: random.Random, n: int, partial: bool = False) -> tuple[WeightVector, Polynomial]:
    return random_weights(rng, n, partial=partial), Polynomial(n, ((random_exponent(rng, n), Fraction(1)),))


def random_polynomial(rng: random.Random, n: int, terms: int = 3, max_entry: int = 4) -> Polynomial:
    return Polynomial(
        n,
        tuple((random_exponent(rng, n, max_entry), Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))) for _ in range(terms)),
    )


def random_m_primary_ideal(rng: random.Random, n: int, max_power: int = 4, extra: int = 2) -> MonomialIdeal:
    gens = [tuple(rng.randint(1, max_power) if j == i else 0 for j in range(n)) for i in range(n)]
    gens += [random_exponent(rng, n, max_power - 1) for _ in range(rng.randint(0, extra))]
    gens = [g for g in gens if any(g)]
    return MonomialIdeal(n, tuple(gens))


def random_filtration(rng: random.Random, n: int, kinds=("ideal_power", "valuation", "intersect")) -> Filtration:
    kind = rng.choice(kinds)
    if kind == "ideal_power":
        return IdealPower(random_m_primary_ideal(rng, n, max_power=3))
    if kind == "valuation":
        return ValuationFiltration(WeightVector(tuple(Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(n))))
    if kind == "region":
        return RegionFiltration(random_region(rng, n))
    if kind == "scale":
        return Scale(Fraction(rng.randint(1, 6), rng.randint(1, 4)), random_filtration(rng, n, ("ideal_power", "valuation", "region")))
    return Intersect(
        random_filtration(rng, n, ("ideal_power", "valuation")),
        random_filtration(rng, n, ("ideal_power", "valuation")),
    )


def random_fan_divisor(rng: random.Random, interior_rays: int = 3, max_entry: int = 4) -> FanPL:
    """A Div^b divisor: negative values on random interior rays, zero on the boundary."""
    rays = {(1, 0): Fraction(0), (0, 1): Fraction(0)}
    while len(rays) < interior_rays + 2:
        a, b = rng.randint(1, max_entry), rng.randint(1, max_entry)
        g = math.gcd(a, b)
        rays.setdefault((a // g, b // g), -Fraction(rng.randint(1, 12), rng.randint(1, 6)))
    return FanPL(tuple(rays), tuple(rays.values()))
