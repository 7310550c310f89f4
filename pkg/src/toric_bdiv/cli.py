"""Command-line front end.  Exit codes: 0 success, 1 failed check, 2 bad input."""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import oracles
from .bdivisors import (
    FanPL,
    FromFiltration,
    ToricBDivisor,
    boundedness_constants,
    extract_filtration,
    pl_data,
    vanishing_order,
    z_of_filtration,
    z_of_ideal,
)
from .correspondence import (
    CheckReport,
    b_divisoriality,
    check_continuity,
    check_extraction_inequality,
    check_injectivity,
    check_saturated_norm,
    check_saturated_roundtrip,
    main_inequality,
)
from .errors import InvalidInput, ToricError
from .filtrations import Filtration, IdealPower, RegionFiltration, axioms_check, is_saturated, norm_value, saturate
from .geometry import Region
from .io import load_object, parse_rational, polynomial_from_json, to_jsonable
from .monomial import MonomialIdeal, Polynomial
from .plotting import fan_svg, plot_svg, vertices_csv
from .sampling import random_fan_divisor, random_monomial_weight_pair, random_region
from .valuations import WeightVector, value_of_polynomial

DEFAULT_LAMBDAS = "1/2,1,2,3"


class CheckFailed(Exception):
    def __init__(self, payload):
        self.payload = payload


# ---------------------------------------------------------------------------
# argument helpers


def _rationals(text: str) -> list[Fraction]:
    try:
        return [parse_rational(x.strip()) for x in text.split(",") if x.strip()]
    except InvalidInput as exc:
        raise InvalidInput(f"bad rational list {text!r}") from exc


def _load_json(text_or_path: str):
    p = Path(text_or_path)
    if p.exists():
        return json.loads(p.read_text())
    return json.loads(text_or_path)


def _inputs(args, count: int | None = None) -> list:
    paths = args.input or []
    if count is not None and len(paths) != count:
        raise InvalidInput(f"expected {count} --input file(s), got {len(paths)}")
    return [load_object(_load_json(p)) for p in paths]


def _one(args):
    return _inputs(args, 1)[0]


def _filtration(obj) -> Filtration:
    if isinstance(obj, Filtration):
        return obj
    if isinstance(obj, MonomialIdeal):
        return IdealPower(obj)
    if isinstance(obj, Region):
        return RegionFiltration(obj)
    raise InvalidInput(f"expected a filtration, got {type(obj).__name__}")


def _divisor(obj) -> ToricBDivisor:
    if isinstance(obj, ToricBDivisor):
        return obj
    if isinstance(obj, MonomialIdeal):
        return z_of_ideal(obj)
    return FromFiltration(_filtration(obj))


def _poly(args) -> Polynomial:
    if not args.poly:
        raise InvalidInput("--poly is required")
    return polynomial_from_json(_load_json(args.poly))


def _weights(args) -> WeightVector:
    if not args.weights:
        raise InvalidInput("--weights is required")
    return WeightVector(tuple(_rationals(args.weights)))


def _lambda(args) -> Fraction:
    if args.lam is None:
        raise InvalidInput("--lambda is required")
    return parse_rational(args.lam)


def _report(rep: CheckReport):
    if not rep.passed:
        raise CheckFailed(rep.to_json())
    return rep.to_json()


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args):
    W = _divisor(_one(args))
    w = _weights(args)
    return {"weights": w.weights, "value": W.evaluate(w)}


def cmd_ideal_at(args):
    F, lam = _filtration(_one(args)), _lambda(args)
    a = F.ideal_at(lam)
    return {"lambda": lam, "ideal": a, "generators": a.generators}


def cmd_saturate(args):
    F = _filtration(_one(args))
    sat = saturate(F)
    out = {"saturation": sat, "region": sat.region}
    if args.lam is not None:
        a = sat.ideal_at(_lambda(args))
        out.update({"lambda": _lambda(args), "generators": a.generators})
    return out


def cmd_is_saturated(args):
    F = _filtration(_one(args))
    ok, witness = is_saturated(F, _rationals(args.lambdas))
    out = {"saturated": ok, "witness": None if ok else {"lambda": witness[0], "monomial": witness[1]}}
    if not ok:
        raise CheckFailed(to_jsonable(out))
    return out


def cmd_zdiv(args):
    obj = _one(args)
    return {"divisor": z_of_ideal(obj) if isinstance(obj, MonomialIdeal) else z_of_filtration(_filtration(obj))}


def cmd_extract(args):
    W, lam = _divisor(_one(args)), _lambda(args)
    E = extract_filtration(W)
    a = E.ideal_at(lam)
    return {"lambda": lam, "generators": a.generators, "region": E.asymptotic_region()}


def cmd_order(args):
    obj, f = _one(args), _poly(args)
    src = obj if isinstance(obj, ToricBDivisor) else _divisor(obj) if isinstance(obj, MonomialIdeal) else _filtration(obj)
    return {"vanishing_order": vanishing_order(src, f)}


def cmd_norm(args):
    F, f = _filtration(_one(args)), _poly(args)
    return {"norm_value": norm_value(F, f)}


def cmd_bounds(args):
    obj = _one(args)
    if isinstance(obj, ToricBDivisor):
        return {"classification": boundedness_constants(obj)}
    F = _filtration(obj)
    eps, C = F.linear_boundedness()
    return {"epsilon": eps, "C": C, "classification": boundedness_constants(z_of_filtration(F))}


def _suite(seed: int, count: int) -> dict:
    rng = random.Random(seed)
    lams = [Fraction(1, 2), Fraction(1), Fraction(2)]
    failures, tallies = [], {"roundtrip": 0, "extraction": 0, "b-divisoriality": 0}
    for i in range(count):
        F = RegionFiltration(random_region(rng, rng.choice((2, 3))))
        W = random_fan_divisor(rng)
        w, f = random_monomial_weight_pair(rng, rng.choice((2, 3)), partial=rng.random() < 0.2)
        for key, rep in (
            ("roundtrip", check_saturated_roundtrip(F, lams)),
            ("extraction", check_extraction_inequality(W)),
            ("b-divisoriality", b_divisoriality(w, f)),
        ):
            tallies[key] += 1
            if not rep.passed:
                failures.append({"case": i, "report": rep.to_json()})
    return {"seed": seed, "count": count, "checked": tallies, "failures": failures}


def cmd_check_theorem(args):
    which = args.which
    lams = _rationals(args.lambdas)
    if which == "roundtrip":
        return _report(check_saturated_roundtrip(_filtration(_one(args)), lams))
    if which == "extraction":
        return _report(check_extraction_inequality(_divisor(_one(args))))
    if which == "injectivity":
        F, G = (_filtration(x) for x in _inputs(args, 2))
        return _report(check_injectivity(F, G, lams))
    if which == "norm":
        return _report(check_saturated_norm(_filtration(_one(args)), _poly(args), lams))
    if which == "continuity":
        scales = _rationals(args.scales)
        return _report(check_continuity(_filtration(_one(args)), _weights(args), scales))
    if which == "axioms":
        F = _filtration(_one(args))
        rep = axioms_check(F, lams, [(a, b) for a in lams for b in lams])
        out = to_jsonable(rep)
        if not rep.passed:
            raise CheckFailed(out)
        return out
    out = _suite(args.seed, args.count)
    if out["failures"]:
        raise CheckFailed(to_jsonable(out))
    return out


def cmd_check_bdivisorial(args):
    w, f = _weights(args), _poly(args)
    reps = [b_divisoriality(w, f), main_inequality(w, f)]
    out = {"reports": [r.to_json() for r in reps]}
    if not all(r.passed for r in reps):
        raise CheckFailed(out)
    return out


def cmd_plot(args):
    if not args.out:
        raise InvalidInput("plot needs --out for the SVG file")
    obj = _one(args)
    if isinstance(obj, MonomialIdeal):
        svg, pts = plot_svg(ideal=obj), obj.generators
    elif isinstance(obj, Region):
        svg, pts = plot_svg(region=obj), obj.vertices
    elif isinstance(obj, FanPL):
        rays, values = pl_data(obj)
        svg, pts = fan_svg(rays, values), rays
    elif isinstance(obj, ToricBDivisor):
        E = extract_filtration(obj)
        lam = parse_rational(args.lam) if args.lam is not None else Fraction(1)
        region = E.asymptotic_region().scaled(lam)
        svg, pts = plot_svg(ideal=E.ideal_at(lam), region=region), region.vertices
    else:
        F = _filtration(obj)
        lam = parse_rational(args.lam) if args.lam is not None else Fraction(1)
        region = F.asymptotic_region().scaled(lam)
        svg, pts = plot_svg(ideal=F.ideal_at(lam), region=region), region.vertices
    Path(args.out).write_text(svg)
    if args.csv:
        Path(args.csv).write_text(vertices_csv(pts))
    return {"svg": args.out, "csv": args.csv, "points": pts}


def cmd_oracle(args):
    if args.which == "fekete":
        F, w = _filtration(_one(args)), _weights(args)
        seq = oracles.fekete_estimate(F, w, args.m_max, doubling=args.doubling)
        limit = F.asymptotic_value(w)
        ok = all(v >= limit for _, v in seq)
        out = {"sequence": seq, "asymptotic_value": limit, "bounded_below": ok}
    elif args.which == "saturation":
        F, lam = _filtration(_one(args)), _lambda(args)
        got = oracles.saturation_oracle(F, lam, args.box)
        closed = saturate(F).ideal_at(lam)
        ok = got == closed
        out = {"lambda": lam, "oracle": got, "closed_form": closed, "agree": ok}
    else:
        W, f = _divisor(_one(args)), _poly(args)
        lp = vanishing_order(W, f)

        def target(w):
            phi = W.evaluate(w)
            return None if phi >= 0 else value_of_polynomial(WeightVector(w), f) / -phi

        val, at = oracles.grid_infimum(target, W.n, args.resolution)
        ok = lp <= val
        out = {"grid_value": val, "grid_point": at, "lp_value": lp, "lp_le_grid": ok}
    if not ok:
        raise CheckFailed(to_jsonable(out))
    return out


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toric-bdiv", description="Filtrations and b-divisors in the toric model.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", help="JSON object file (or inline JSON); repeatable")
    common.add_argument("--out", help="write the report (or SVG for plot) here")
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--lambda", dest="lam", help="index as an exact rational, e.g. 5/2")
    common.add_argument("--lambdas", default=DEFAULT_LAMBDAS, help="comma-separated rationals")
    common.add_argument("--weights", help="comma-separated rationals")
    common.add_argument("--poly", help="polynomial JSON file or inline JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    simple = {
        "eval": cmd_eval,
        "ideal-at": cmd_ideal_at,
        "saturate": cmd_saturate,
        "is-saturated": cmd_is_saturated,
        "zdiv": cmd_zdiv,
        "extract": cmd_extract,
        "order": cmd_order,
        "norm": cmd_norm,
        "bounds": cmd_bounds,
        "check-bdivisorial": cmd_check_bdivisorial,
    }
    for name, fn in simple.items():
        sub.add_parser(name, parents=[common]).set_defaults(func=fn)

    p = sub.add_parser("check-theorem", parents=[common])
    p.add_argument("which", choices=("roundtrip", "extraction", "injectivity", "norm", "continuity", "axioms", "suite"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--scales", default="1/2,9/10,99/100,999/1000")
    p.set_defaults(func=cmd_check_theorem)

    p = sub.add_parser("plot", parents=[common])
    p.add_argument("--csv", help="also write vertex or generator coordinates as CSV")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("oracle", parents=[common])
    p.add_argument("which", choices=("fekete", "saturation", "grid"))
    p.add_argument("--m-max", type=int, default=16)
    p.add_argument("--doubling", action="store_true")
    p.add_argument("--box", type=int, default=8)
    p.add_argument("--resolution", type=int, default=8)
    p.set_defaults(func=cmd_oracle)
    return parser


def _table(payload) -> str:
    rows = []

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(f"{prefix}.{k}" if prefix else k, obj[k])
        else:
            rows.append((prefix, json.dumps(obj, sort_keys=True)))

    walk("", payload)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _emit(payload, args, stream) -> None:
    text = _table(payload) if args.format == "table" else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out and args.command != "plot":
        Path(args.out).write_text(text)
    else:
        stream.write(text)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        payload = to_jsonable(args.func(args))
    except CheckFailed as exc:
        _emit(exc.payload, args, stdout)
        return 1
    except ToricError as exc:
        stderr.write(json.dumps({"error": {"code": exc.code, "message": str(exc)}}, sort_keys=True) + "\n")
        return 2
    except json.JSONDecodeError as exc:
        stderr.write(json.dumps({"error": {"code": "malformed_json", "message": str(exc)}}, sort_keys=True) + "\n")
        return 2
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        stderr.write(json.dumps({"error": {"code": "invalid_input", "message": str(exc)}}, sort_keys=True) + "\n")
        return 2
    except OSError as exc:
        stderr.write(json.dumps({"error": {"code": "io_error", "message": str(exc)}}, sort_keys=True) + "\n")
        return 2
    _emit(payload, args, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
