"""JSON encoding of every object; rationals travel as ``"p/q"`` strings."""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .bdivisors import (
    Boundedness,
    Comparison,
    ConvexVertexSet,
    Extracted,
    FanPL,
    FromFiltration,
    Sampled,
    Scaled,
    ToricBDivisor,
)
from .errors import InvalidInput, UnsupportedRepresentation
from .filtrations import AxiomReport, Filtration, IdealPower, Intersect, RegionFiltration, Scale, ValuationFiltration
from .geometry import Region
from .monomial import MonomialIdeal, Polynomial
from .valuations import Center, WeightVector

FILTRATION_TYPES = {"ideal_power", "valuation", "region", "scale", "intersect", "extracted"}
DIVISOR_TYPES = {"fan_pl", "convex", "from_filtration", "scaled"}


def parse_rational(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise InvalidInput(f"rationals must be integers or 'p/q' strings, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InvalidInput(f"not a rational: {x!r}") from exc


def parse_vector(xs) -> tuple[Fraction, ...]:
    if not isinstance(xs, (list, tuple)):
        raise InvalidInput(f"expected an array, got {xs!r}")
    return tuple(parse_rational(x) for x in xs)


def rational_str(x) -> str:
    return str(Fraction(x))


def _field(data: dict, key: str):
    try:
        return data[key]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"missing field {key!r}") from exc


# ---------------------------------------------------------------------------
# decoding


def ideal_from_json(data: dict) -> MonomialIdeal:
    gens = _field(data, "generators")
    n = data.get("n", len(gens[0]) if gens else None)
    if n is None:
        raise InvalidInput("the zero ideal needs an explicit 'n'")
    return MonomialIdeal(int(n), tuple(tuple(g) for g in gens))


def polynomial_from_json(data: dict) -> Polynomial:
    terms = _field(data, "terms")
    n = data.get("n", len(terms[0]["exp"]) if terms else None)
    if n is None:
        raise InvalidInput("the zero polynomial needs an explicit 'n'")
    return Polynomial(int(n), tuple((tuple(_field(t, "exp")), parse_rational(t.get("coef", 1))) for t in terms))


def weights_from_json(data) -> WeightVector:
    if isinstance(data, dict):
        data = _field(data, "weights")
    return WeightVector(parse_vector(data))


def filtration_from_json(data: dict) -> Filtration:
    kind = _field(data, "type")
    if kind == "ideal_power":
        return IdealPower(ideal_from_json(_field(data, "ideal")))
    if kind == "valuation":
        return ValuationFiltration(weights_from_json(_field(data, "weights")))
    if kind == "region":
        return RegionFiltration(Region(tuple(parse_vector(v) for v in _field(data, "vertices"))))
    if kind == "scale":
        return Scale(parse_rational(_field(data, "c")), filtration_from_json(_field(data, "inner")))
    if kind == "intersect":
        return Intersect(filtration_from_json(_field(data, "left")), filtration_from_json(_field(data, "right")))
    if kind == "extracted":
        return Extracted(divisor_from_json(_field(data, "divisor")))
    raise InvalidInput(f"unknown filtration type {kind!r}")


def divisor_from_json(data: dict) -> ToricBDivisor:
    kind = _field(data, "type")
    if kind == "fan_pl":
        rays = tuple(parse_vector(r) for r in _field(data, "rays"))
        return FanPL(rays, parse_vector(_field(data, "values")))
    if kind == "convex":
        return ConvexVertexSet(tuple(parse_vector(v) for v in _field(data, "vertices")))
    if kind == "from_filtration":
        return FromFiltration(filtration_from_json(_field(data, "filtration")))
    if kind == "scaled":
        return Scaled(parse_rational(_field(data, "t")), divisor_from_json(_field(data, "inner")))
    raise InvalidInput(f"unknown divisor type {kind!r}")


def load_object(data):
    """Decode any supported JSON object by its shape."""
    if not isinstance(data, dict):
        raise InvalidInput("expected a JSON object")
    kind = data.get("type")
    if kind in FILTRATION_TYPES:
        return filtration_from_json(data)
    if kind in DIVISOR_TYPES:
        return divisor_from_json(data)
    if kind is not None:
        raise InvalidInput(f"unknown object type {kind!r}")
    if "generators" in data:
        return ideal_from_json(data)
    if "terms" in data:
        return polynomial_from_json(data)
    if "weights" in data:
        return weights_from_json(data)
    if "vertices" in data:
        return Region(tuple(parse_vector(v) for v in data["vertices"]))
    raise InvalidInput("cannot tell what this JSON object describes")


# ---------------------------------------------------------------------------
# encoding


def _vec(v) -> list[str]:
    return [rational_str(x) for x in v]


def ideal_to_json(a: MonomialIdeal) -> dict:
    return {"n": a.n, "generators": [list(g) for g in a.generators]}


def polynomial_to_json(f: Polynomial) -> dict:
    return {"n": f.n, "terms": [{"exp": list(u), "coef": rational_str(c)} for u, c in f.terms]}


def filtration_to_json(F: Filtration) -> dict:
    if isinstance(F, IdealPower):
        return {"type": "ideal_power", "ideal": ideal_to_json(F.ideal)}
    if isinstance(F, ValuationFiltration):
        return {"type": "valuation", "weights": _vec(F.weights.weights)}
    if isinstance(F, RegionFiltration):
        return {"type": "region", "vertices": [_vec(v) for v in F.region.vertices]}
    if isinstance(F, Scale):
        return {"type": "scale", "c": rational_str(F.c), "inner": filtration_to_json(F.inner)}
    if isinstance(F, Intersect):
        return {"type": "intersect", "left": filtration_to_json(F.left), "right": filtration_to_json(F.right)}
    if isinstance(F, Extracted):
        return {"type": "extracted", "divisor": divisor_to_json(F.divisor)}
    raise UnsupportedRepresentation(f"cannot encode {type(F).__name__}")


def divisor_to_json(W: ToricBDivisor) -> dict:
    if isinstance(W, FanPL):
        return {"type": "fan_pl", "rays": [list(r) for r in W.rays], "values": _vec(W.values)}
    if isinstance(W, ConvexVertexSet):
        return {"type": "convex", "vertices": [_vec(v) for v in W.vertices]}
    if isinstance(W, FromFiltration):
        return {"type": "from_filtration", "filtration": filtration_to_json(W.filtration)}
    if isinstance(W, Scaled):
        return {"type": "scaled", "t": rational_str(W.t), "inner": divisor_to_json(W.inner)}
    if isinstance(W, Sampled):
        raise UnsupportedRepresentation("sampled divisors have no JSON form")
    raise UnsupportedRepresentation(f"cannot encode {type(W).__name__}")


def to_jsonable(obj):
    """Recursively convert results to JSON-ready values with exact rationals."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational_str(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        raise InvalidInput("floating point values are not part of the exact core")
    if isinstance(obj, MonomialIdeal):
        return ideal_to_json(obj)
    if isinstance(obj, Polynomial):
        return polynomial_to_json(obj)
    if isinstance(obj, Region):
        return {"vertices": [_vec(v) for v in obj.vertices]}
    if isinstance(obj, WeightVector):
        return {"weights": _vec(obj.weights)}
    if isinstance(obj, Center):
        return {"prime": str(obj), "generators": [i + 1 for i in obj.indices], "closed_point": obj.is_closed_point}
    if isinstance(obj, Filtration):
        return filtration_to_json(obj)
    if isinstance(obj, ToricBDivisor):
        return divisor_to_json(obj)
    if isinstance(obj, (Boundedness, Comparison, AxiomReport)):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise InvalidInput(f"cannot encode {type(obj).__name__}")
