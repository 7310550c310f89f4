"""Exactly evaluable m-filtrations of monomial ideals.

Each constructor knows its ideals ``a_lambda``, its asymptotic Newton region
(whose support function gives every ``v(a_.)``), the induced order function
``ord_{a_.}`` on monomials, and certified linear-boundedness constants.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import DimensionMismatch, InvalidInput, NotMPrimary
from .geometry import INFINITY, Region, dot, enumerate_minimal_lattice_points, lattice_staircase, unit_vector
from .monomial import MonomialIdeal, Polynomial, ideal_intersection, is_m_primary, maximal_ideal_power_inside, newton_region
from .valuations import WeightVector, as_weights, value_of_ideal


def region_bounds(region: Region) -> tuple[Fraction, Fraction]:
    """``(eps, C)`` with ``|u| >= C*lam => u in lam*Q`` and ``u in lam*Q => |u| >= eps*lam``."""
    intercepts = region.axis_intercepts()
    if any(a is None for a in intercepts):
        raise NotMPrimary(f"{region} does not meet every coordinate axis")
    return min(sum(c) for c in region.vertices), max(intercepts)


class Filtration:
    """Base class; concrete constructors are frozen dataclasses below."""

    #: how the asymptotic values are justified: "closed-form" or "oracle-certified"
    provenance = "closed-form"

    @property
    def n(self) -> int:
        raise NotImplementedError

    def ideal_at(self, lam) -> MonomialIdeal:
        lam = Fraction(lam)
        if lam < 0:
            raise InvalidInput("filtration index must be nonnegative")
        if lam == 0:
            return MonomialIdeal.unit(self.n)
        return _cached_ideal(self, lam)

    def _ideal(self, lam: Fraction) -> MonomialIdeal:
        raise NotImplementedError

    def asymptotic_region(self) -> Region:
        raise NotImplementedError

    def asymptotic_value(self, w) -> Fraction:
        w = as_weights(w)
        if w.n != self.n:
            raise DimensionMismatch(f"weights of length {w.n} for a filtration in dimension {self.n}")
        return self._asymptotic_value(w)

    def _asymptotic_value(self, w: WeightVector) -> Fraction:
        return self.asymptotic_region().support(w.weights)

    def monomial_order(self, u: Sequence[int]):
        """``sup{lam : x^u in a_lam}``."""
        raise NotImplementedError

    def linear_boundedness(self) -> tuple[Fraction, Fraction]:
        raise NotImplementedError

    def generator_box(self, lam) -> int:
        """Coordinate bound for minimal generators of every ``a_mu`` with ``mu <= lam``."""
        raise NotImplementedError


@lru_cache(maxsize=65536)
def _cached_ideal(F: Filtration, lam: Fraction) -> MonomialIdeal:
    return F._ideal(lam)


def _region_box(region: Region, lam) -> int:
    return max(1, math.ceil(region_bounds(region)[1] * Fraction(lam)))


@dataclass(frozen=True)
class IdealPower(Filtration):
    """``a_lam = b^ceil(lam)``."""

    ideal: MonomialIdeal

    def __post_init__(self):
        if not is_m_primary(self.ideal):
            raise NotMPrimary(f"{self.ideal} is not m-primary")

    @property
    def n(self) -> int:
        return self.ideal.n

    def _ideal(self, lam):
        return self.ideal ** math.ceil(lam)

    @cached_property
    def _region(self) -> Region:
        return newton_region(self.ideal)

    def asymptotic_region(self):
        return self._region

    def _asymptotic_value(self, w):
        return value_of_ideal(w, self.ideal)

    def monomial_order(self, u):
        # u in b^k forces |u| >= k * ord(b), which bounds the scan
        k = 0
        for j in range(1, sum(u) // self.ideal.order() + 1):
            if tuple(u) not in self.ideal ** j:
                break
            k = j
        return Fraction(k)

    def linear_boundedness(self):
        # valid at integer indices: m^(N k) = (m^N)^k is inside b^k
        return Fraction(self.ideal.order()), Fraction(maximal_ideal_power_inside(self.ideal))

    def generator_box(self, lam):
        return max(1, math.ceil(Fraction(lam))) * max(max(g) for g in self.ideal.generators)


@dataclass(frozen=True)
class ValuationFiltration(Filtration):
    """``a_lam = <x^u : <w, u> >= lam>`` for a weight vector centred at the closed point."""

    weights: WeightVector

    def __post_init__(self):
        w = as_weights(self.weights)
        if not w.is_full_support:
            raise NotMPrimary("valuation filtrations need weights with full support")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return self.weights.n

    def _ideal(self, lam):
        gens = lattice_staircase([(self.weights.weights, 1)], lam, self.generator_box(lam), self.n)
        return MonomialIdeal(self.n, gens)

    @cached_property
    def _region(self) -> Region:
        return Region(tuple(tuple(x / wi for x in unit_vector(self.n, i)) for i, wi in enumerate(self.weights.weights)))

    def asymptotic_region(self):
        return self._region

    def _asymptotic_value(self, w):
        return min(a / b for a, b in zip(w.weights, self.weights.weights))

    def monomial_order(self, u):
        return dot(self.weights.weights, u)

    def linear_boundedness(self):
        inv = [1 / x for x in self.weights.weights]
        return min(inv), max(inv)

    def generator_box(self, lam):
        return max(1, math.ceil(Fraction(lam) / min(self.weights.weights)))


@dataclass(frozen=True)
class RegionFiltration(Filtration):
    """``a_lam`` generated by the lattice points of ``lam * Q``; always saturated."""

    region: Region

    def __post_init__(self):
        if not self.region.is_cobounded():
            raise NotMPrimary(f"{self.region} must have a positive vertex on every axis")

    @property
    def n(self) -> int:
        return self.region.dimension

    def _ideal(self, lam):
        return MonomialIdeal(self.n, enumerate_minimal_lattice_points(self.region, lam, self.generator_box(lam)))

    def asymptotic_region(self):
        return self.region

    def monomial_order(self, u):
        return self.region.gauge(u)

    def linear_boundedness(self):
        return region_bounds(self.region)

    def generator_box(self, lam):
        return _region_box(self.region, lam)


@dataclass(frozen=True)
class Scale(Filtration):
    """``a_lam = F_{c lam}``."""

    c: Fraction
    inner: Filtration

    def __post_init__(self):
        c = Fraction(self.c)
        if c <= 0:
            raise InvalidInput("scale factor must be positive")
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def provenance(self):
        return self.inner.provenance

    def _ideal(self, lam):
        return self.inner.ideal_at(self.c * lam)

    @cached_property
    def _region(self) -> Region:
        return self.inner.asymptotic_region().scaled(self.c)

    def asymptotic_region(self):
        return self._region

    def _asymptotic_value(self, w):
        return self.c * self.inner.asymptotic_value(w)

    def monomial_order(self, u):
        return self.inner.monomial_order(u) / self.c

    def linear_boundedness(self):
        eps, C = self.inner.linear_boundedness()
        return self.c * eps, self.c * C

    def generator_box(self, lam):
        return self.inner.generator_box(self.c * Fraction(lam))


@dataclass(frozen=True)
class Intersect(Filtration):
    """``a_lam = F_lam  cap  G_lam``."""

    left: Filtration
    right: Filtration

    # the region of an intersection is the intersection of regions; this is
    # cross-checked against Fekete estimates rather than derived in closed form
    provenance = "oracle-certified"

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise DimensionMismatch("intersected filtrations live in different dimensions")

    @property
    def n(self) -> int:
        return self.left.n

    def _ideal(self, lam):
        return ideal_intersection(self.left.ideal_at(lam), self.right.ideal_at(lam))

    @cached_property
    def _region(self) -> Region:
        return self.left.asymptotic_region().intersect(self.right.asymptotic_region())

    def asymptotic_region(self):
        return self._region

    def monomial_order(self, u):
        return min(self.left.monomial_order(u), self.right.monomial_order(u))

    def linear_boundedness(self):
        (e1, c1), (e2, c2) = self.left.linear_boundedness(), self.right.linear_boundedness()
        return max(e1, e2), max(c1, c2)

    def generator_box(self, lam):
        return max(self.left.generator_box(lam), self.right.generator_box(lam))


# ---------------------------------------------------------------------------
# operations


def ideal_at(F: Filtration, lam) -> MonomialIdeal:
    return F.ideal_at(lam)


def asymptotic_value(F: Filtration, w) -> Fraction:
    return F.asymptotic_value(w)


def asymptotic_region(F: Filtration) -> Region:
    return F.asymptotic_region()


def saturate(F: Filtration) -> RegionFiltration:
    return RegionFiltration(F.asymptotic_region())


def is_saturated(F: Filtration, lambdas: Iterable) -> tuple[bool, tuple | None]:
    """Compare ``a_lam`` with the saturation on the given indices.

    Returns ``(True, None)`` or ``(False, (lam, u))`` where ``x^u`` lies in
    exactly one of the two ideals (in practice: in the saturation only).
    """
    lambdas = sorted({Fraction(x) for x in lambdas})
    if not lambdas:
        raise InvalidInput("need at least one index")
    sat = saturate(F)
    for lam in lambdas:
        a, b = F.ideal_at(lam), sat.ideal_at(lam)
        if a != b:
            extra = [u for u in b.generators if u not in a] or [u for u in a.generators if u not in b]
            return False, (lam, extra[0])
    return True, None


def norm_value(F: Filtration, f: Polynomial):
    """``ord_{a_.}(f) = sup{lam : f in a_lam}``; ``INFINITY`` for ``f = 0``."""
    if f.n != F.n:
        raise DimensionMismatch(f"polynomial in dimension {f.n} for a filtration in dimension {F.n}")
    if f.is_zero:
        return INFINITY
    # a monomial ideal contains f iff it contains every term of f
    return min(F.monomial_order(u) for u in f.support)


def linear_boundedness(F: Filtration) -> tuple[Fraction, Fraction]:
    return F.linear_boundedness()


@dataclass
class AxiomReport:
    passed: bool
    axiom: str | None = None
    witness: dict = field(default_factory=dict)
    checked: list = field(default_factory=list)


def _left_gap(F: Filtration, lam: Fraction) -> Fraction:
    """A ``delta > 0`` below the gap to the previous jump of ``a_.`` before ``lam``."""
    box = F.generator_box(lam)
    below = [o for u in itertools.product(range(box + 1), repeat=F.n) if (o := F.monomial_order(u)) < lam]
    prev = max(below, default=Fraction(0))
    return (lam - Fraction(prev)) / 2


def axioms_check(F: Filtration, lambda_samples: Iterable, pair_samples: Iterable[tuple] = ()) -> AxiomReport:
    """Check m-primary, decreasing, multiplicative and left-continuous on samples."""
    lams = sorted({Fraction(x) for x in lambda_samples})
    if not lams:
        raise InvalidInput("need at least one sample index")
    pairs = [(Fraction(a), Fraction(b)) for a, b in pair_samples]
    report = AxiomReport(True)

    for lam in lams:
        if lam > 0 and not is_m_primary(F.ideal_at(lam)):
            return AxiomReport(False, "m-primary", {"lambda": lam, "ideal": F.ideal_at(lam)}, report.checked)
    report.checked.append("m-primary")

    for mu, lam in itertools.combinations(lams, 2):
        big, small = F.ideal_at(mu), F.ideal_at(lam)
        if not small.issubset(big):
            u = next(g for g in small.generators if g not in big)
            return AxiomReport(False, "decreasing", {"lambda": lam, "mu": mu, "monomial": u}, report.checked)
    report.checked.append("decreasing")

    for lam, mu in pairs:
        prod = F.ideal_at(lam) * F.ideal_at(mu)
        target = F.ideal_at(lam + mu)
        if not prod.issubset(target):
            u = next(g for g in prod.generators if g not in target)
            return AxiomReport(False, "multiplicative", {"lambda": lam, "mu": mu, "monomial": u}, report.checked)
    report.checked.append("multiplicative")

    for lam in lams:
        if lam <= 0:
            continue
        delta = _left_gap(F, lam)
        if F.ideal_at(lam - delta) != F.ideal_at(lam):
            return AxiomReport(False, "left-continuous", {"lambda": lam, "delta": delta}, report.checked)
    report.checked.append("left-continuous")
    return report
