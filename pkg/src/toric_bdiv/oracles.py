"""Deliberately naive computations used to certify the closed forms.

Nothing in the certified path calls into this module.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InsufficientBox, Infeasible, InvalidInput
from .filtrations import Filtration
from .geometry import dot, lp_minimize, minimal_elements, qvec, solve_linear, unit_vector
from .monomial import MonomialIdeal
from .valuations import as_weights, value_of_ideal


def fekete_estimate(F: Filtration, w, m_max: int, doubling: bool = False) -> list[tuple[int, Fraction]]:
    """``v_w(a_m) / m`` for ``m = 1..m_max`` (or ``1, 2, 4, ...`` with ``doubling``)."""
    if m_max < 1:
        raise InvalidInput("m_max must be at least 1")
    w = as_weights(w)
    ms = [2**k for k in range(m_max.bit_length()) if 2**k <= m_max] if doubling else range(1, m_max + 1)
    return [(m, value_of_ideal(w, F.ideal_at(m)) / m) for m in ms]


def grid_infimum(target: Callable, n: int, resolution: int) -> tuple[Fraction, tuple]:
    """Minimum of ``target`` over the interior simplex grid ``w_i = k_i / (resolution * n)``, ``k_i >= 1``.

    Points where ``target`` returns None or divides by zero are skipped.  The
    result is an upper bound for the infimum over the open orthant.
    """
    if resolution < 1:
        raise InvalidInput("resolution must be at least 1")
    total = resolution * n
    best = None
    for ks in itertools.product(range(1, total), repeat=n - 1):
        last = total - sum(ks)
        if last < 1:
            continue
        w = tuple(Fraction(k, total) for k in ks + (last,))
        try:
            val = target(w)
        except ZeroDivisionError:
            continue
        if val is not None and (best is None or val < best[0]):
            best = (Fraction(val), w)
    if best is None:
        raise InvalidInput("target undefined on the whole grid")
    return best


def saturation_oracle(F: Filtration, lam, box: int) -> MonomialIdeal:
    """Minimal ``u`` in ``[0, box]^n`` with ``<w,u> >= lam * v_w(a_.)`` for every ``w >= 0``.

    Each lattice point is decided by its own LP over weight space,
    ``min{<w,u> : <w,c> >= 1 for every vertex c}``, so no facet data is used.
    """
    lam = Fraction(lam)
    vertices = F.asymptotic_region().vertices
    cons = [(c, 1) for c in vertices]
    n = F.n

    def admitted(u):
        try:
            return lp_minimize(u, cons) >= lam
        except Infeasible:
            return True

    members = [u for u in itertools.product(range(box + 1), repeat=n) if admitted(u)]
    for i in range(n):
        if not any(all(u[j] == 0 for j in range(n) if j != i) for u in members):
            raise InsufficientBox(f"no pure power of x{i + 1} in the box [0,{box}]")
    return MonomialIdeal(n, minimal_elements(members))


def lattice_ideal_oracle(contains: Callable[[tuple], bool], n: int, box: int) -> MonomialIdeal:
    """Minimal elements of a membership predicate scanned over ``[0, box]^n``."""
    return MonomialIdeal(n, minimal_elements(u for u in itertools.product(range(box + 1), repeat=n) if contains(u)))


def lp_by_vertices(objective: Sequence, constraints: Sequence[tuple[Sequence, object]], nonneg: bool = True) -> Fraction | None:
    """Minimum over all basic feasible solutions; None if there are none.

    Assumes the LP is bounded and its feasible set has a vertex.
    """
    c = qvec(objective)
    n = len(c)
    cons = [(qvec(a), Fraction(b)) for a, b in constraints]
    if nonneg:
        cons += [(unit_vector(n, i), Fraction(0)) for i in range(n)]
    best = None
    for combo in itertools.combinations(cons, n):
        x = solve_linear([a for a, _ in combo], [b for _, b in combo])
        if x is not None and all(dot(a, x) >= b for a, b in cons):
            val = dot(c, x)
            best = val if best is None or val < best else best
    return best
