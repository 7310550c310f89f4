"""Monomial ideals and polynomials in k[x_1, ..., x_n] localised at the origin.

The base field never enters a computation; polynomial coefficients are
rationals only so that sums can cancel.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InvalidInput, ZeroIdeal
from .geometry import Region, convex_hull_region, dominates, minimal_elements

ExponentVector = tuple  # tuple[int, ...]


def _exponent(u: Iterable) -> tuple[int, ...]:
    out = []
    for x in u:
        if isinstance(x, bool) or int(x) != x:
            raise InvalidInput(f"exponent entries must be integers, got {x!r}")
        if x < 0:
            raise InvalidInput(f"exponent entries must be nonnegative, got {x!r}")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators.

    The empty antichain is the zero ideal and ``{0}`` is the unit ideal R.
    """

    n: int
    generators: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInput("ambient dimension must be at least 1")
        gens = [_exponent(g) for g in self.generators]
        if any(len(g) != self.n for g in gens):
            raise DimensionMismatch(f"generator of wrong length for n={self.n}")
        object.__setattr__(self, "generators", minimal_elements(gens))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, ((0,) * n,))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def maximal(cls, n: int) -> "MonomialIdeal":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    def __contains__(self, u) -> bool:
        return ideal_membership(u, self)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_product(self, other)

    def __pow__(self, k: int) -> "MonomialIdeal":
        return ideal_power(self, k)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_intersection(self, other)

    def issubset(self, other: "MonomialIdeal") -> bool:
        _check_same(self, other)
        return all(g in other for g in self.generators)

    def order(self) -> int:
        """Largest power of the maximal ideal containing this ideal."""
        if self.is_zero:
            raise ZeroIdeal("order of the zero ideal")
        return min(sum(g) for g in self.generators)

    def __str__(self):
        return "<" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators) + ">"


def _check_same(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.n != b.n:
        raise DimensionMismatch(f"ideals in dimensions {a.n} and {b.n}")


def minimal_generators(points: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    pts = [_exponent(p) for p in points]
    if n is None:
        if not pts:
            raise InvalidInput("dimension needed for the zero ideal")
        n = len(pts[0])
    return MonomialIdeal(n, tuple(pts))


def ideal_membership(u: Sequence[int], a: MonomialIdeal) -> bool:
    if len(u) != a.n:
        raise DimensionMismatch(f"exponent of length {len(u)} for n={a.n}")
    return any(dominates(u, g) for g in a.generators)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same(a, b)
    return MonomialIdeal(a.n, tuple(tuple(x + y for x, y in zip(g, h)) for g in a.generators for h in b.generators))


@lru_cache(maxsize=4096)
def ideal_power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0 or int(k) != k:
        raise InvalidInput("ideal powers need a nonnegative integer exponent")
    if k == 0:
        return MonomialIdeal.unit(a.n)
    if k == 1:
        return a
    half = ideal_power(a, k // 2)
    out = ideal_product(half, half)
    return ideal_product(out, a) if k % 2 else out


def ideal_intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_same(a, b)
    return MonomialIdeal(a.n, tuple(tuple(map(max, g, h)) for g in a.generators for h in b.generators))


def is_m_primary(a: MonomialIdeal) -> bool:
    """Some pure power of every variable lies in ``a``, and ``a`` is proper."""
    if a.is_zero or a.is_unit:
        return False
    return all(
        any(g[i] > 0 and all(g[j] == 0 for j in range(a.n) if j != i) for g in a.generators)
        for i in range(a.n)
    )


def newton_region(a: MonomialIdeal) -> Region:
    if a.is_zero:
        raise ZeroIdeal("the zero ideal has no Newton region")
    return convex_hull_region(a.generators)


def maximal_ideal_power_inside(a: MonomialIdeal) -> int:
    """Least N with m^N contained in the m-primary ideal ``a``."""
    if not is_m_primary(a):
        raise InvalidInput("ideal is not m-primary")
    pure = [min(g[i] for g in a.generators if all(g[j] == 0 for j in range(a.n) if j != i)) for i in range(a.n)]
    bound = sum(p - 1 for p in pure) + 1  # pigeonhole
    for N in range(1, bound + 1):
        if (MonomialIdeal.maximal(a.n) ** N).issubset(a):
            return N
    return bound


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial with rational coefficients; ``terms`` is sorted and has no zeros."""

    n: int
    terms: tuple = ()

    def __post_init__(self):
        acc: dict[tuple[int, ...], Fraction] = {}
        items = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        for u, c in items:
            u = _exponent(u)
            if len(u) != self.n:
                raise DimensionMismatch(f"term exponent of length {len(u)} for n={self.n}")
            acc[u] = acc.get(u, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "terms", tuple(sorted((u, c) for u, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, u: Sequence[int], coef=1) -> "Polynomial":
        return cls(len(u), ((tuple(u), coef),))

    @classmethod
    def constant(cls, n: int, c=1) -> "Polynomial":
        return cls(n, (((0,) * n, c),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> tuple:
        return tuple(u for u, _ in self.terms)

    def degree_order(self) -> int:
        """Least total degree of a term (``ord_m`` for nonzero polynomials)."""
        return min(sum(u) for u in self.support)

    def _check(self, other: "Polynomial") -> None:
        if other.n != self.n:
            raise DimensionMismatch(f"polynomials in dimensions {self.n} and {other.n}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self.n, self.terms + other.terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, tuple((u, -c) for u, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(
            self.n,
            tuple((tuple(x + y for x, y in zip(u, v)), c * d) for u, c in self.terms for v, d in other.terms),
        )

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for u, c in self.terms:
            mono = "*".join(f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(u) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)
