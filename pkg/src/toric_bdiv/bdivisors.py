"""Toric b-divisors over the closed point, as homogeneous functions on weight vectors.

A b-divisor ``W`` is encoded by ``phi(w) = v_w(W)`` on the orthant ``w >= 0``.
Anti-effective means ``phi <= 0``.  Exact representations:

* :class:`FanPL` -- piecewise linear on a fan in the plane, zero on the two
  boundary rays (every component is centred at the closed point);
* :class:`ConvexVertexSet` -- ``phi(w) = -min_c <w, c>`` in any dimension;
* :class:`FromFiltration` -- ``phi = -v(a_.)``;
* :class:`Scaled` -- ``t * phi``.

:class:`Sampled` wraps an arbitrary evaluator and is excluded from every
certified operation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .errors import (
    DegenerateDivisor,
    DimensionMismatch,
    InvalidInput,
    NotAntiEffective,
    NotMPrimary,
    UnboundedBelow,
    UnsupportedRepresentation,
)
from .filtrations import Filtration, region_bounds
from .geometry import INFINITY, Region, dot, lattice_staircase, lp_minimize, minimal_elements, primitive_integer_vector, qvec
from .monomial import MonomialIdeal, Polynomial, is_m_primary, newton_region
from .valuations import WeightVector

DIAGONAL = (1, 1)


def _slope_key(r: Sequence[int]) -> Fraction:
    return Fraction(r[1], r[0] + r[1])


def _normalize_ray(r: Sequence) -> tuple[tuple[int, int], Fraction]:
    """Primitive integer ray and the factor ``g`` with ``r = g * primitive``."""
    r = qvec(r)
    if len(r) != 2:
        raise DimensionMismatch("fan rays live in the plane")
    if any(x < 0 for x in r) or all(x == 0 for x in r):
        raise InvalidInput(f"ray {r} is not a nonzero vector of the closed positive quadrant")
    p = primitive_integer_vector(r)
    g = next(x / y for x, y in zip(r, p) if y != 0)
    return p, g


def _cone_coordinates(r, s, w) -> tuple[Fraction, Fraction] | None:
    """``(a, b)`` with ``w = a r + b s`` and ``a, b >= 0``, else None."""
    det = Fraction(r[0] * s[1] - r[1] * s[0])
    a = (w[0] * s[1] - w[1] * s[0]) / det
    b = (r[0] * w[1] - r[1] * w[0]) / det
    if a < 0 or b < 0:
        return None
    return a, b


@dataclass(frozen=True)
class Fan2D:
    """Complete fan of the positive quadrant, given by its rays sorted by slope."""

    rays: tuple

    def __post_init__(self):
        rays = sorted({_normalize_ray(r)[0] for r in self.rays}, key=_slope_key)
        if not rays or rays[0] != (1, 0) or rays[-1] != (0, 1):
            raise InvalidInput("a fan of the quadrant must contain the rays (1,0) and (0,1)")
        object.__setattr__(self, "rays", tuple(rays))

    def cones(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        return list(zip(self.rays, self.rays[1:]))

    def with_diagonal(self) -> "Fan2D":
        return Fan2D(self.rays + (DIAGONAL,))

    def merge(self, other: "Fan2D") -> "Fan2D":
        return Fan2D(self.rays + other.rays)


class ToricBDivisor:
    n: int

    def evaluate(self, w) -> Fraction:
        w = _weights(w)
        if len(w) != self.n:
            raise DimensionMismatch(f"weights of length {len(w)} for a divisor in dimension {self.n}")
        return self._evaluate(w)

    def _evaluate(self, w) -> Fraction:
        raise NotImplementedError

    @property
    def is_exact(self) -> bool:
        return True


def _weights(w) -> tuple[Fraction, ...]:
    if isinstance(w, WeightVector):
        return w.weights
    w = qvec(w)
    if any(x < 0 for x in w) or all(x == 0 for x in w):
        raise InvalidInput("weights must be nonnegative and not all zero")
    return w


@dataclass(frozen=True)
class FanPL(ToricBDivisor):
    """Piecewise-linear ``phi`` on a planar fan; the diagonal ray is always present."""

    rays: tuple
    values: tuple

    def __post_init__(self):
        if len(self.rays) != len(self.values):
            raise InvalidInput("one value per ray is required")
        table: dict[tuple[int, int], Fraction] = {}
        for r, v in zip(self.rays, self.values):
            p, g = _normalize_ray(r)
            v = Fraction(v) / g
            if table.setdefault(p, v) != v:
                raise InvalidInput(f"conflicting values on ray {p}")
        rays = sorted(table, key=_slope_key)
        if rays[0] != (1, 0) or rays[-1] != (0, 1):
            raise InvalidInput("the fan must contain the rays (1,0) and (0,1)")
        if table[(1, 0)] != 0 or table[(0, 1)] != 0:
            raise InvalidInput("boundary rays must carry value 0 (the divisor lies over the closed point)")
        if DIAGONAL not in table:
            r, s = next((r, s) for r, s in zip(rays, rays[1:]) if _cone_coordinates(r, s, DIAGONAL))
            a, b = _cone_coordinates(r, s, DIAGONAL)
            table[DIAGONAL] = a * table[r] + b * table[s]
            rays = sorted(table, key=_slope_key)
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "values", tuple(table[r] for r in rays))

    n = 2

    @property
    def fan(self) -> Fan2D:
        return Fan2D(self.rays)

    def _evaluate(self, w):
        for (r, vr), (s, vs) in zip(zip(self.rays, self.values), zip(self.rays[1:], self.values[1:])):
            ab = _cone_coordinates(r, s, w)
            if ab is not None:
                return ab[0] * vr + ab[1] * vs
        raise InvalidInput(f"{w} is outside the quadrant")  # unreachable for w >= 0


@dataclass(frozen=True)
class ConvexVertexSet(ToricBDivisor):
    """``phi(w) = -min_c <w, c>``; vertices are reduced to the extreme points of their up-set."""

    vertices: tuple

    def __post_init__(self):
        pts = [qvec(v) for v in self.vertices]
        if not pts:
            raise InvalidInput("need at least one vertex")
        if any(len(p) != len(pts[0]) for p in pts):
            raise DimensionMismatch("vertices of unequal length")
        if any(x < 0 for p in pts for x in p):
            raise InvalidInput("vertices must be nonnegative")
        if len(pts[0]) <= 3:
            pts = Region(tuple(pts)).vertices
        else:
            pts = minimal_elements(pts)
        object.__setattr__(self, "vertices", tuple(pts))

    @property
    def n(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def region(self) -> Region:
        return Region._canonical(self.vertices)

    def _evaluate(self, w):
        return -min(dot(w, c) for c in self.vertices)


@dataclass(frozen=True)
class FromFiltration(ToricBDivisor):
    filtration: Filtration

    @property
    def n(self) -> int:
        return self.filtration.n

    def _evaluate(self, w):
        return -self.filtration.asymptotic_value(w)


@dataclass(frozen=True)
class Scaled(ToricBDivisor):
    t: Fraction
    inner: ToricBDivisor

    def __post_init__(self):
        t = Fraction(self.t)
        if t <= 0:
            raise InvalidInput("scaling factor must be positive")
        object.__setattr__(self, "t", t)

    @property
    def n(self) -> int:
        return self.inner.n

    @property
    def is_exact(self) -> bool:
        return self.inner.is_exact

    def _evaluate(self, w):
        return self.t * self.inner.evaluate(w)


@dataclass(frozen=True)
class Sampled(ToricBDivisor):
    """Arbitrary degree-1 homogeneous evaluator; approximate operations only."""

    func: Callable = field(compare=False)
    n: int = 2

    @property
    def is_exact(self) -> bool:
        return False

    def _evaluate(self, w):
        return self.func(w)


def maximal_ideal_divisor(n: int) -> ConvexVertexSet:
    """``Z(m)``: ``phi(w) = -min_i w_i``."""
    return ConvexVertexSet(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def zero_divisor(n: int) -> ConvexVertexSet:
    return ConvexVertexSet(((0,) * n,))


# ---------------------------------------------------------------------------
# structural helpers


def _require_exact(W: ToricBDivisor) -> None:
    if not W.is_exact:
        raise UnsupportedRepresentation("sampled divisors are excluded from certified operations")


def convex_region(W: ToricBDivisor) -> Region | None:
    """The region ``Q`` with ``phi = -support(Q)`` when ``W`` is of convex type."""
    if isinstance(W, ConvexVertexSet):
        return W.region if W.n <= 3 else None
    if isinstance(W, FromFiltration):
        return W.filtration.asymptotic_region()
    if isinstance(W, Scaled):
        inner = convex_region(W.inner)
        return inner.scaled(W.t) if inner is not None else None
    return None


def _normal_fan_rays(region: Region) -> list[tuple[int, int]]:
    verts = sorted(region.vertices)
    rays = [(1, 0), (0, 1), DIAGONAL]
    for p, q in zip(verts, verts[1:]):
        dx, dy = q[0] - p[0], q[1] - p[1]
        rays.append(primitive_integer_vector((-dy, dx)))
    return rays


def pl_data(W: ToricBDivisor) -> tuple[tuple, tuple]:
    """Rays (sorted, diagonal included) and values on which ``phi`` is linear per cone (n = 2)."""
    _require_exact(W)
    if W.n != 2:
        raise UnsupportedRepresentation("piecewise-linear data only exists in the plane")
    if isinstance(W, FanPL):
        return W.rays, W.values
    if isinstance(W, Scaled):
        rays, values = pl_data(W.inner)
        return rays, tuple(W.t * v for v in values)
    region = convex_region(W)
    if region is None:
        raise UnsupportedRepresentation(f"no piecewise-linear data for {type(W).__name__}")
    rays = Fan2D(tuple(_normal_fan_rays(region))).rays
    return rays, tuple(W.evaluate(r) for r in rays)


def critical_rays(W: ToricBDivisor) -> tuple:
    """Finitely many weights at which ``<w,u> >= -lam*phi(w)`` for all ``w`` may be tested."""
    _require_exact(W)
    region = convex_region(W)
    if region is not None:
        return tuple(w for w, _ in region.inequalities)
    if W.n == 2:
        return pl_data(W)[0]
    raise UnsupportedRepresentation(f"no critical rays for {type(W).__name__} in dimension {W.n}")


def evaluate(W: ToricBDivisor, w) -> Fraction:
    return W.evaluate(w)


# ---------------------------------------------------------------------------
# ordering and boundedness


@dataclass
class Comparison:
    verdict: str  # "equal", "le", "ge" or "incomparable"
    certified: bool
    witnesses: list = field(default_factory=list)  # (w, phi_1(w), phi_2(w)) where they differ


def _verdict(diffs: list[Fraction]) -> str:
    lt = any(d < 0 for d in diffs)
    gt = any(d > 0 for d in diffs)
    if lt and gt:
        return "incomparable"
    if lt:
        return "le"
    if gt:
        return "ge"
    return "equal"


def positive_grid(n: int, resolution: int) -> list[tuple[Fraction, ...]]:
    """Points of the open simplex with coordinates ``k_i / (resolution * n)``, ``k_i >= 1``."""
    total = resolution * n
    out = []
    for ks in itertools.product(range(1, total), repeat=n - 1):
        last = total - sum(ks)
        if last >= 1:
            out.append(tuple(Fraction(k, total) for k in ks + (last,)))
    return out


def _rays_compare(W1, W2, rays, certified) -> Comparison:
    witnesses, diffs = [], []
    for r in rays:
        a, b = W1.evaluate(r), W2.evaluate(r)
        diffs.append(a - b)
        if a != b:
            witnesses.append((tuple(r), a, b))
    return Comparison(_verdict(diffs), certified, witnesses)


def compare(W1: ToricBDivisor, W2: ToricBDivisor, resolution: int = 12) -> Comparison:
    """Coefficientwise comparison: verdict ``le`` means ``W1 <= W2``."""
    if W1.n != W2.n:
        raise DimensionMismatch("divisors in different dimensions")
    if not (W1.is_exact and W2.is_exact):
        return _rays_compare(W1, W2, positive_grid(W1.n, resolution), certified=False)
    q1, q2 = convex_region(W1), convex_region(W2)
    if q1 is not None and q2 is not None:
        # phi_1 <= phi_2  <=>  supports h_1 >= h_2  <=>  Q_1 inside Q_2; facet normals carry witnesses
        rays = sorted({w for w, _ in q1.inequalities} | {w for w, _ in q2.inequalities})
        cmp = _rays_compare(W1, W2, rays, certified=True)
        inside, outside = q2.contains_region(q1), q1.contains_region(q2)
        cmp.verdict = {(True, True): "equal", (True, False): "le", (False, True): "ge"}.get((inside, outside), "incomparable")
        return cmp
    if W1.n == 2:
        rays = Fan2D(pl_data(W1)[0] + pl_data(W2)[0]).rays
        return _rays_compare(W1, W2, rays, certified=True)
    return _rays_compare(W1, W2, positive_grid(W1.n, resolution), certified=False)


@dataclass
class Boundedness:
    """Classification of ``W`` against multiples of ``Z(m)``.

    kind is one of ``not-anti-effective``, ``div`` (anti-effective, not bounded
    below), ``div-plus`` (``C Z(m) <= W <= 0``) or ``div-b`` (additionally
    ``W <= eps Z(m)``).  ``degenerate`` marks ``W = 0``.
    """

    kind: str
    epsilon: Fraction | None = None
    C: Fraction | None = None
    degenerate: bool = False
    certified: bool = True


def _classify_ratios(values: list, ratios: list, certified: bool) -> Boundedness:
    if any(v > 0 for v in values):
        return Boundedness("not-anti-effective", certified=certified)
    if all(v == 0 for v in values):
        return Boundedness("div-plus", C=Fraction(0), degenerate=True, certified=certified)
    C, eps = max(ratios), min(ratios)
    if eps > 0:
        return Boundedness("div-b", epsilon=eps, C=C, certified=certified)
    return Boundedness("div-plus", C=C, certified=certified)


def boundedness_constants(W: ToricBDivisor, resolution: int = 24) -> Boundedness:
    """Least constants with ``C Z(m) <= W <= eps Z(m)``.

    On each cone of a fan refined by the diagonal both ``phi`` and
    ``phi_{Z(m)}`` are linear, so their ratio is monotone along the cone and
    its extremes occur at interior rays; cones touching a boundary ray have a
    constant ratio because ``phi`` vanishes there.
    """
    if not W.is_exact:
        grid = positive_grid(W.n, resolution)
        values = [W.evaluate(w) for w in grid]
        ratios = [v / -min(w) for v, w in zip(values, grid)]
        return _classify_ratios(values, ratios, certified=False)
    region = convex_region(W)
    if region is not None:
        if any(all(x == 0 for x in c) for c in region.vertices):
            return Boundedness("div-plus", C=Fraction(0), degenerate=True)
        intercepts = region.axis_intercepts()
        if any(a is None for a in intercepts):
            return Boundedness("div")
        eps, C = region_bounds(region)
        return Boundedness("div-b", epsilon=eps, C=C)
    rays, values = pl_data(W)
    boundary = [v for r, v in zip(rays, values) if 0 in r]
    interior = [(r, v) for r, v in zip(rays, values) if 0 not in r]
    if any(v > 0 for v in values):
        return Boundedness("not-anti-effective")
    if any(v != 0 for v in boundary):
        return Boundedness("div")
    return _classify_ratios([v for _, v in interior], [v / -min(r) for r, v in interior], certified=True)


# ---------------------------------------------------------------------------
# divisors of ideals and filtrations, and extraction


def z_of_ideal(a: MonomialIdeal) -> ConvexVertexSet:
    if not is_m_primary(a):
        raise NotMPrimary(f"{a} is not m-primary")
    return ConvexVertexSet(newton_region(a).vertices)


def z_of_filtration(F: Filtration) -> ConvexVertexSet:
    return ConvexVertexSet(F.asymptotic_region().vertices)


@dataclass(frozen=True)
class Extracted(Filtration):
    """``a_lam(W) = <x^u : <w,u> >= -lam * phi(w) for all w>`` for ``W`` in Div+."""

    divisor: ToricBDivisor

    def __post_init__(self):
        _require_exact(self.divisor)
        cls = boundedness_constants(self.divisor)
        if cls.kind == "not-anti-effective":
            raise NotAntiEffective("extraction needs an anti-effective divisor")
        if cls.kind == "div":
            raise UnboundedBelow("extraction needs W >= C Z(m) for some C")
        if cls.degenerate:
            raise DegenerateDivisor("W = 0 extracts the unit ideal at every index")

    @property
    def n(self) -> int:
        return self.divisor.n

    @cached_property
    def inequalities(self) -> tuple:
        return tuple((w, -self.divisor.evaluate(w)) for w in critical_rays(self.divisor))

    @cached_property
    def _region(self) -> Region:
        return Region.from_inequalities(self.inequalities, self.n)

    def asymptotic_region(self):
        return self._region

    def _ideal(self, lam):
        gens = lattice_staircase(self.inequalities, lam, self.generator_box(lam), self.n)
        return MonomialIdeal(self.n, gens)

    def monomial_order(self, u):
        ratios = [dot(w, u) / b for w, b in self.inequalities if b > 0]
        return min(ratios) if ratios else INFINITY

    def linear_boundedness(self):
        return region_bounds(self._region)

    @cached_property
    def _lower_constant(self) -> Fraction:
        return boundedness_constants(self.divisor).C

    def generator_box(self, lam):
        return max(1, math.ceil(self._lower_constant * Fraction(lam)))


def extract_filtration(W: ToricBDivisor) -> Extracted:
    return Extracted(W)


# ---------------------------------------------------------------------------
# vanishing orders and Cartier determination


def vanishing_order(source, f: Polynomial) -> Fraction:
    """``ord_W(f) = inf_w v_w(f) / (-phi(w))`` over full-support rational weights."""
    W = z_of_filtration(source) if isinstance(source, Filtration) else source
    _require_exact(W)
    if f.n != W.n:
        raise DimensionMismatch(f"polynomial in dimension {f.n} for a divisor in dimension {W.n}")
    if f.is_zero:
        raise InvalidInput("vanishing orders are defined for nonzero f only")
    region = convex_region(W)
    if region is not None:
        if any(all(x == 0 for x in c) for c in region.vertices):
            raise DegenerateDivisor("vanishing order along the zero divisor")
        # -phi(w) >= 1 is the polyhedron <w, c> >= 1 for every vertex c
        cons = [(c, 1) for c in region.vertices]
        return min(lp_minimize(u, cons) for u in f.support)
    rays, values = pl_data(W)
    if any(v > 0 for v in values):
        raise NotAntiEffective("vanishing orders need an anti-effective divisor")
    # on each cone the ratio is linear-fractional, so its infimum sits on a ray
    # where phi < 0 (rays with phi = 0 only contribute +infinity limits)
    active = [(r, v) for r, v in zip(rays, values) if v < 0]
    if not active:
        raise DegenerateDivisor("vanishing order along the zero divisor")
    return min(dot(r, u) / -v for r, v in active for u in f.support)


def is_cartier_on(W: ToricBDivisor, fan: Fan2D) -> bool:
    """True iff ``phi`` is linear on every cone of ``fan``."""
    _require_exact(W)
    if W.n != 2:
        raise UnsupportedRepresentation("fan checks are planar")
    rays, _ = pl_data(W)
    for r, s in fan.cones():
        for q in rays:
            if q in (r, s):
                continue
            ab = _cone_coordinates(r, s, q)
            if ab is not None and W.evaluate(q) != ab[0] * W.evaluate(r) + ab[1] * W.evaluate(s):
                return False
    return True
