"""Monomial valuations ``v_w(f) = min <w, u>`` over the support of ``f``.

Rational weight vectors stand in for divisorial valuations; a vector with full
support is centred at the closed point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InvalidInput, ZeroIdeal
from .geometry import INFINITY, dot, qvec
from .monomial import MonomialIdeal, Polynomial


@dataclass(frozen=True)
class WeightVector:
    weights: tuple

    def __post_init__(self):
        w = qvec(self.weights)
        if not w:
            raise InvalidInput("empty weight vector")
        if any(x < 0 for x in w):
            raise InvalidInput("weights must be nonnegative")
        if all(x == 0 for x in w):
            raise InvalidInput("the zero weight vector is not a valuation")
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.weights) if x > 0)

    @property
    def is_full_support(self) -> bool:
        return len(self.support) == self.n

    def __call__(self, f: Polynomial):
        return value_of_polynomial(self, f)

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.weights) + ")"


def as_weights(w) -> WeightVector:
    return w if isinstance(w, WeightVector) else WeightVector(tuple(w))


def value_of_monomial(w: WeightVector, u: Sequence[int]) -> Fraction:
    if len(u) != w.n:
        raise DimensionMismatch(f"exponent of length {len(u)} for weights of length {w.n}")
    return dot(w.weights, u)


def value_of_polynomial(w, f: Polynomial):
    """``v_w(f)``; the zero polynomial gets ``INFINITY``."""
    w = as_weights(w)
    if f.n != w.n:
        raise DimensionMismatch(f"polynomial in dimension {f.n}, weights of length {w.n}")
    if f.is_zero:
        return INFINITY
    return min(dot(w.weights, u) for u in f.support)


def value_of_ideal(w, a: MonomialIdeal) -> Fraction:
    w = as_weights(w)
    if a.n != w.n:
        raise DimensionMismatch(f"ideal in dimension {a.n}, weights of length {w.n}")
    if a.is_zero:
        raise ZeroIdeal("valuation of the zero ideal")
    return min(dot(w.weights, g) for g in a.generators)


@dataclass(frozen=True)
class Center:
    """The prime ``(x_i : i in indices)`` of k[x_1..x_n]."""

    n: int
    indices: tuple[int, ...]

    @property
    def is_closed_point(self) -> bool:
        return len(self.indices) == self.n

    def __str__(self):
        if self.is_closed_point:
            return "m"
        return "(" + ", ".join(f"x{i + 1}" for i in self.indices) + ")"


def center(w) -> Center:
    w = as_weights(w)
    return Center(w.n, w.support)


def izumi_constants(w) -> tuple[Fraction, Fraction]:
    """``(min w_i, max w_i)``: these sandwich ``v_w`` between multiples of ``ord_m``."""
    w = as_weights(w)
    if not w.is_full_support:
        raise InvalidInput("Izumi constants need a valuation centred at the closed point")
    return min(w.weights), max(w.weights)


def order_at_origin(f: Polynomial):
    """``ord_m(f)``, the valuation with all weights 1."""
    return value_of_polynomial(WeightVector((1,) * f.n), f)
