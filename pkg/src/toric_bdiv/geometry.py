"""Exact rational geometry in small dimension.

All arithmetic is done with :class:`fractions.Fraction`.  The polyhedra that
matter here are up-sets ``conv(V) + R^n_{>=0}`` with nonnegative rational
vertices; :class:`Region` stores the canonical vertex set and computes a facet
description on demand.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import DimensionMismatch, Infeasible, InternalError, InvalidInput, Unbounded

INFINITY = math.inf
MAX_HULL_DIMENSION = 3

QVector = tuple  # tuple[Fraction, ...]


def qvec(entries: Iterable) -> tuple[Fraction, ...]:
    """Coerce ints, Fractions or ``"p/q"`` strings to a tuple of Fractions."""
    return tuple(Fraction(x) for x in entries)


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise DimensionMismatch(f"length {len(a)} vs {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(j == i)) for j in range(n))


def dominates(a: Sequence, b: Sequence) -> bool:
    """``a >= b`` componentwise."""
    return all(x >= y for x, y in zip(a, b))


def minimal_elements(points: Iterable[Sequence]) -> tuple:
    """The componentwise-minimal elements, deduplicated and sorted lexicographically."""
    kept: list[tuple] = []
    # a strict dominator has strictly smaller coordinate sum, so it is seen first
    for p in sorted({tuple(p) for p in points}, key=lambda p: (sum(p), p)):
        if not any(dominates(p, q) for q in kept):
            kept.append(p)
    return tuple(sorted(kept))


def primitive_integer_vector(w: Sequence) -> tuple[int, ...]:
    """Smallest positive integer multiple of a nonzero rational vector."""
    w = qvec(w)
    lcm = reduce(math.lcm, (x.denominator for x in w), 1)
    ints = [int(x * lcm) for x in w]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        raise InvalidInput("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------
# linear algebra


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place reduced row echelon form; returns the pivot columns."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    rows = [list(qvec(v)) for v in vectors]
    return len(_row_reduce(rows, len(rows[0])))


def solve_linear(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """Unique solution of a square system, or None when singular."""
    n = len(matrix)
    rows = [list(qvec(row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivots = _row_reduce(rows, n)
    if len(pivots) < n:
        return None
    return tuple(rows[i][n] for i in range(n))


def null_vector(vectors: Sequence[Sequence], n: int) -> tuple[Fraction, ...] | None:
    """A spanning vector of the orthogonal complement when it is a line, else None."""
    rows = [list(qvec(v)) for v in vectors]
    pivots = _row_reduce(rows, n) if rows else []
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    out = [Fraction(0)] * n
    out[f] = Fraction(1)
    for i, c in enumerate(pivots):
        out[c] = -rows[i][f]
    return tuple(out)


# ---------------------------------------------------------------------------
# linear programming


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    point: tuple[Fraction, ...]


def _pivot(rows, rhs, basis, r, c):
    inv = 1 / rows[r][c]
    rows[r] = [x * inv for x in rows[r]]
    rhs[r] *= inv
    for i in range(len(rows)):
        if i != r and rows[i][c] != 0:
            f = rows[i][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            rhs[i] -= f * rhs[r]
    basis[r] = c


def _simplex(rows, rhs, cost, basis):
    """Minimise ``cost.x`` on ``{rows.x = rhs, x >= 0}`` from a feasible basis (Bland's rule)."""
    m = len(rows)
    while True:
        in_basis = set(basis)
        entering = None
        for j in range(len(cost)):
            if j in in_basis:
                continue
            reduced = cost[j] - sum((cost[basis[i]] * rows[i][j] for i in range(m)), Fraction(0))
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return
        leave, best = None, None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            raise Unbounded("objective unbounded below")
        _pivot(rows, rhs, basis, leave, entering)


def lp_solve(objective: Sequence, constraints: Sequence[tuple[Sequence, object]], nonneg: bool = True) -> LPSolution:
    """Exact two-phase simplex for ``min <objective, x>`` s.t. ``<a, x> >= b`` for each ``(a, b)``.

    With ``nonneg`` the variables are restricted to ``x >= 0``; otherwise they are
    free.  Raises :class:`Infeasible` or :class:`Unbounded`.
    """
    c0 = qvec(objective)
    n = len(c0)
    cons = [(qvec(a), Fraction(b)) for a, b in constraints]
    for a, _ in cons:
        if len(a) != n:
            raise DimensionMismatch(f"constraint of length {len(a)} in dimension {n}")

    # free variables are split as x = p - q
    if nonneg:
        expand = lambda v: list(v)  # noqa: E731
    else:
        expand = lambda v: list(v) + [-x for x in v]  # noqa: E731
    cost_x = expand(c0)
    nx = len(cost_x)
    m = len(cons)
    ncols = nx + 2 * m

    rows, rhs = [], []
    for i, (a, b) in enumerate(cons):
        row = expand(a) + [Fraction(0)] * (2 * m)
        row[nx + i] = Fraction(-1)  # surplus
        if b < 0:
            row = [-x for x in row]
            b = -b
        row[nx + m + i] = Fraction(1)  # artificial
        rows.append(row)
        rhs.append(b)
    basis = [nx + m + i for i in range(m)]

    phase1 = [Fraction(0)] * (nx + m) + [Fraction(1)] * m
    _simplex(rows, rhs, phase1, basis)
    if sum((rhs[i] for i in range(m) if basis[i] >= nx + m), Fraction(0)) > 0:
        raise Infeasible("constraints have no common solution")

    # drive remaining (zero-level) artificials out of the basis
    i = 0
    while i < len(rows):
        if basis[i] >= nx + m:
            j = next((j for j in range(nx + m) if rows[i][j] != 0), None)
            if j is None:
                del rows[i], rhs[i], basis[i]
                continue
            _pivot(rows, rhs, basis, i, j)
        i += 1
    rows = [row[: nx + m] for row in rows]
    cost = cost_x + [Fraction(0)] * m
    _simplex(rows, rhs, cost, basis)

    x = [Fraction(0)] * (nx + m)
    for i, j in enumerate(basis):
        x[j] = rhs[i]
    point = x[:n] if nonneg else [x[k] - x[n + k] for k in range(n)]
    point = tuple(point)
    return LPSolution(dot(c0, point), point)


def lp_minimize(objective: Sequence, constraints: Sequence[tuple[Sequence, object]], nonneg: bool = True) -> Fraction:
    return lp_solve(objective, constraints, nonneg).value


# ---------------------------------------------------------------------------
# up-set polyhedra


def _in_upset_hull(u: Sequence, points: Sequence[Sequence]) -> bool:
    """LP feasibility of a convex combination of ``points`` lying below ``u``."""
    k, n = len(points), len(u)
    if k == 0:
        return False
    cons = [([1] * k, 1), ([-1] * k, -1)]
    for i in range(n):
        cons.append(([-p[i] for p in points], -Fraction(u[i])))
    try:
        lp_solve([0] * k, cons)
    except Infeasible:
        return False
    return True


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _extreme_points(points: Sequence[tuple[Fraction, ...]], n: int) -> tuple:
    pts = minimal_elements(points)
    if n == 1 or len(pts) <= 2:
        return pts
    if n == 2:
        # incomparable points sorted by x ascending have y descending; keep the lower chain
        chain: list = []
        for p in pts:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return tuple(chain)
    kept = [p for i, p in enumerate(pts) if not _in_upset_hull(p, pts[:i] + pts[i + 1:])]
    return tuple(sorted(kept))


@dataclass(frozen=True)
class Region:
    """The up-set ``conv(vertices) + R^n_{>=0}``; vertices are canonicalised on construction."""

    vertices: tuple

    def __post_init__(self):
        pts = [qvec(v) for v in self.vertices]
        if not pts:
            raise InvalidInput("a region needs at least one vertex")
        n = len(pts[0])
        if n < 1 or any(len(p) != n for p in pts):
            raise DimensionMismatch("vertices of unequal length")
        if n > MAX_HULL_DIMENSION:
            raise InvalidInput(f"exact hulls are only available for n <= {MAX_HULL_DIMENSION}")
        if any(x < 0 for p in pts for x in p):
            raise InvalidInput("region vertices must be nonnegative")
        object.__setattr__(self, "vertices", _extreme_points(pts, n))

    @classmethod
    def _canonical(cls, vertices: tuple) -> "Region":
        obj = object.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        return obj

    @property
    def dimension(self) -> int:
        return len(self.vertices[0])

    def support(self, w: Sequence) -> Fraction:
        """``min <w, c>`` over the region (finite for ``w >= 0``)."""
        return min(dot(w, c) for c in self.vertices)

    @cached_property
    def inequalities(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        """Facets as ``(w, b)`` meaning ``<w, u> >= b``; ``w`` primitive and nonnegative."""
        n = self.dimension
        pts = self.vertices
        units = [unit_vector(n, i) for i in range(n)]
        dirs = units + [tuple(a - b for a, b in zip(p, q)) for p, q in itertools.combinations(pts, 2)]
        found: dict[tuple[int, ...], Fraction] = {}
        for combo in itertools.combinations(dirs, n - 1):
            w = null_vector(combo, n)
            if w is None:
                continue
            if all(x <= 0 for x in w):
                w = tuple(-x for x in w)
            if any(x < 0 for x in w):
                continue
            w = primitive_integer_vector(w)
            if w in found:
                continue
            b = self.support(w)
            tight = [p for p in pts if dot(w, p) == b]
            span = [tuple(a - c for a, c in zip(p, tight[0])) for p in tight[1:]]
            span += [units[i] for i in range(n) if w[i] == 0]
            if rank(span) == n - 1:
                found[w] = b
        return tuple(sorted(found.items()))

    def contains(self, u: Sequence) -> bool:
        if len(u) != self.dimension:
            raise DimensionMismatch(f"point of length {len(u)} in dimension {self.dimension}")
        return all(dot(w, u) >= b for w, b in self.inequalities)

    def gauge(self, u: Sequence):
        """``sup{t >= 0 : u in t * region}``; ``INFINITY`` when the region contains 0."""
        ratios = [dot(w, u) / b for w, b in self.inequalities if b > 0]
        return min(ratios) if ratios else INFINITY

    def axis_intercepts(self) -> tuple[Fraction | None, ...]:
        """Least ``s`` with ``s * e_i`` in the region, or None when the axis misses it."""
        n = self.dimension
        out = []
        for i in range(n):
            on_axis = [c[i] for c in self.vertices if all(c[j] == 0 for j in range(n) if j != i)]
            out.append(min(on_axis) if on_axis else None)
        return tuple(out)

    def is_cobounded(self) -> bool:
        """Every axis meets the region and 0 is outside it (the m-primary condition)."""
        return all(a is not None and a > 0 for a in self.axis_intercepts())

    def scaled(self, c) -> "Region":
        c = Fraction(c)
        if c <= 0:
            raise InvalidInput("scale factor must be positive")
        return Region._canonical(tuple(tuple(c * x for x in v) for v in self.vertices))

    def intersect(self, other: "Region") -> "Region":
        if other.dimension != self.dimension:
            raise DimensionMismatch("regions of different dimension")
        return Region.from_inequalities(self.inequalities + other.inequalities, self.dimension)

    def contains_region(self, other: "Region") -> bool:
        return all(self.contains(v) for v in other.vertices)

    @classmethod
    def from_inequalities(cls, inequalities: Iterable[tuple[Sequence, object]], n: int) -> "Region":
        """Vertex enumeration for ``{u >= 0 : <w, u> >= b}`` with every ``w >= 0``."""
        cons = [(qvec(w), Fraction(b)) for w, b in inequalities]
        for w, _ in cons:
            if len(w) != n:
                raise DimensionMismatch("inequality of wrong length")
            if any(x < 0 for x in w):
                raise InvalidInput("up-set inequalities need nonnegative normals")
        cons += [(unit_vector(n, i), Fraction(0)) for i in range(n)]
        points = set()
        for combo in itertools.combinations(cons, n):
            sol = solve_linear([w for w, _ in combo], [b for _, b in combo])
            if sol is not None and all(dot(w, sol) >= b for w, b in cons):
                points.add(sol)
        if not points:
            raise InternalError("up-set polyhedron without vertices")
        return cls(tuple(points))

    def __str__(self):
        return "Region{" + ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices) + "}"


def convex_hull_region(points: Iterable[Sequence]) -> Region:
    pts = [qvec(p) for p in points]
    if any(x < 0 for p in pts for x in p):
        raise InvalidInput("hull points must be nonnegative")
    return Region(tuple(pts))


def region_membership(u: Sequence, region: Region) -> bool:
    """Decide ``u in region`` by LP feasibility against the vertex set."""
    if len(u) != region.dimension:
        raise DimensionMismatch(f"point of length {len(u)} in dimension {region.dimension}")
    return _in_upset_hull(qvec(u), region.vertices)


# ---------------------------------------------------------------------------
# lattice points


def _integer_form(w: Sequence, rhs: Fraction) -> tuple[tuple[int, ...], int, int]:
    """Rewrite ``<w, u> >= rhs`` as ``q * <w_int, u> >= p`` with integers."""
    w = qvec(w)
    if all(x == 0 for x in w):
        return tuple(0 for _ in w), rhs.numerator, rhs.denominator
    w_int = primitive_integer_vector(w)
    k = next(x / y for x, y in zip(w, w_int) if y != 0)  # w = k * w_int
    t = rhs / k
    return w_int, t.numerator, t.denominator


def lattice_staircase(inequalities: Iterable[tuple[Sequence, object]], scale, bound: int, n: int) -> tuple:
    """Minimal lattice points of ``{u in N^n : <w, u> >= scale * b}`` inside ``[0, bound]^n``.

    All normals ``w`` must be nonnegative, which makes the feasible set an
    up-set: for each prefix the least feasible last coordinate is monotone, and a
    prefix is minimal exactly when lowering any prefix coordinate raises it.
    """
    scale = Fraction(scale)
    forms = [_integer_form(w, scale * Fraction(b)) for w, b in inequalities]
    if any(x < 0 for w, _, _ in forms for x in w):
        raise InvalidInput("staircases need nonnegative normals")
    least: dict[tuple[int, ...], float] = {}
    for prefix in itertools.product(range(bound + 1), repeat=n - 1):
        t = 0
        for w, p, q in forms:
            s = sum(wi * ui for wi, ui in zip(w, prefix))
            last = w[-1]
            if last > 0:
                t = max(t, -((q * s - p) // (q * last)))
            elif q * s < p:
                t = INFINITY
                break
        least[prefix] = t
    out = []
    for prefix, t in least.items():
        if t > bound:
            continue
        if all(least[prefix[:i] + (prefix[i] - 1,) + prefix[i + 1:]] > t for i in range(n - 1) if prefix[i] > 0):
            out.append(prefix + (int(t),))
    return tuple(sorted(out))


def enumerate_minimal_lattice_points(region: Region, scale, box_bound: int) -> tuple:
    """Minimal points of ``scale * region`` among lattice points of ``[0, box_bound]^n``."""
    if box_bound <= 0:
        raise InvalidInput("box bound must be positive")
    scale = Fraction(scale)
    if scale <= 0:
        raise InvalidInput("scale must be positive")
    out = lattice_staircase(region.inequalities, scale, box_bound, region.dimension)
    if not out:
        raise InternalError(f"no lattice point of {scale} * {region} in the box [0,{box_bound}]")
    return out
