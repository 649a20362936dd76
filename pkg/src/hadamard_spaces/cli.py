"""Command-line front end with deterministic JSON input/output.

Every subcommand reads a JSON payload (from --in or standard input), runs
one computation with a single seeded random state, and emits a JSON
document.  Identical payload + seed always produces byte-identical output.

Exit codes: 0 success, 1 payload validation error (the message points at
the offending field), 2 mathematical precondition failure (the message
names the violated hypothesis), 3 retry/sampling budget exhaustion.
"""

import argparse
import json
import random
import sys
import warnings
from fractions import Fraction
from itertools import combinations

from . import papersuite
from .brackets import (cubic_plane_square, quadric_bracket_display,
                       quadric_square_symbolic, quadric_symbolic_identity,
                       quadric_two_lines, verify_identity)
from .linalg import BudgetExhausted, PreconditionError, QMatrix, rat_str
from .line_powers import (line_power_matrix, line_power_pluecker,
                          power_linear_equations, sampled_power_span)
from .poly import SparsePoly
from .products import (expected_dimension, gen_vandermonde, interpolate_forms,
                       interpolate_hypersurface, span_dimension_formula,
                       terracini_span)
from .projective import LinSpace, PPoint, pluecker
from .samplers import (hadamard_power_sampler, hadamard_product_sampler,
                       linear_space_sampler, reciprocal_sampler, segre_sampler)
from .star_configs import PointSet, build_star, verify_star
from .tropical import degree_with_reciprocals, degree_linear_products, fan_degree_pipeline

DEFAULT_SEED = 20259


class ValidationError(ValueError):
    def __init__(self, field, message):
        self.field = field
        super().__init__(message)


def _want(payload, field, kind, required=True, default=None):
    if field not in payload:
        if required:
            raise ValidationError(field, "missing required field")
        return default
    value = payload[field]
    if kind is int and not (isinstance(value, int) and not isinstance(value, bool)):
        raise ValidationError(field, "expected an integer")
    if kind is list and not isinstance(value, list):
        raise ValidationError(field, "expected a list")
    if kind is dict and not isinstance(value, dict):
        raise ValidationError(field, "expected an object")
    if kind is str and not isinstance(value, str):
        raise ValidationError(field, "expected a string")
    return value


def _parse_matrix(data, field):
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValidationError(field, "expected a non-empty list of rows")
    try:
        return QMatrix([[Fraction(str(x)) for x in row] for row in data])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(field, "bad rational entry: %s" % exc)


def _parse_space(data, field):
    mat = _parse_matrix(data, field)
    try:
        return LinSpace(mat)
    except ValueError as exc:
        raise ValidationError(field, str(exc))


def _parse_point(data, field):
    if not isinstance(data, list) or not data:
        raise ValidationError(field, "expected a coordinate list")
    try:
        return PPoint([Fraction(str(x)) for x in data])
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(field, str(exc))


def _parse_sampler(data, field):
    if not isinstance(data, dict):
        raise ValidationError(field, "expected a sampler object")
    kind = data.get("type")
    if kind == "linear":
        return linear_space_sampler(_parse_space(data.get("generators"), field + ".generators"))
    if kind == "reciprocal":
        return reciprocal_sampler(_parse_space(data.get("generators"), field + ".generators"))
    if kind == "segre":
        a = data.get("a")
        b = data.get("b")
        if not isinstance(a, int) or not isinstance(b, int) or a < 1 or b < 1:
            raise ValidationError(field, "segre sampler needs positive integers a, b")
        return segre_sampler(a, b)
    if kind == "product":
        factors = data.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise ValidationError(field + ".factors", "need at least two factor samplers")
        built = [_parse_sampler(f, "%s.factors[%d]" % (field, i)) for i, f in enumerate(factors)]
        sampler = built[0]
        for nxt in built[1:]:
            sampler = hadamard_product_sampler(sampler, nxt)
        return sampler
    if kind == "power":
        r = data.get("r")
        if not isinstance(r, int) or r < 1:
            raise ValidationError(field + ".r", "power must be a positive integer")
        return hadamard_power_sampler(_parse_sampler(data.get("base"), field + ".base"), r)
    raise ValidationError(field + ".type",
                          "unknown sampler type %r (linear, reciprocal, segre, product, power)" % kind)


def _parse_dim_mult_list(data, field):
    if not isinstance(data, list):
        raise ValidationError(field, "expected a list of [dimension, multiplicity] pairs")
    out = []
    for i, pair in enumerate(data):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) for x in pair)):
            raise ValidationError("%s[%d]" % (field, i), "expected [dimension, multiplicity]")
        m, r = pair
        if m < 0 or r < 1:
            raise ValidationError("%s[%d]" % (field, i),
                                  "dimension must be >= 0 and multiplicity >= 1")
        out.append((m, r))
    return out


def _matrix_json(mat):
    return [[rat_str(x) for x in row] for row in mat.rows]


# ---------------------------------------------------------------------------
# subcommands


def cmd_line_power(payload, rng, args):
    line = _parse_space(_want(payload, "line", list), "line")
    if line.dim != 1:
        raise ValidationError("line", "expected exactly two generator rows")
    r = _want(payload, "r", int)
    if r < 1:
        raise ValidationError("r", "power must be >= 1")
    n = line.ambient_dim
    pl = pluecker(line)
    if pl.nonvanishing():
        mat = line_power_matrix(line, r)
        power = LinSpace.span_of(mat)
        method = "matrix"
        if r <= n:
            pk = {",".join(map(str, cols)): rat_str(line_power_pluecker(pl, r, cols))
                  for cols in combinations(range(n + 1), r + 1)}
        else:
            pk = pluecker(power).to_json()
        equations = power_linear_equations(line, r) if r < n else []
    else:
        power = sampled_power_span(line, r, rng)
        method = "sampled"
        pk = pluecker(power).to_json()
        equations = [SparsePoly.linear_form(vec).primitive()
                     for vec in power.generators.nullspace()]
    return {
        "method": method,
        "dim": power.dim,
        "generators": _matrix_json(power.generators),
        "pluecker": pk,
        "equations": [f.to_json() for f in equations],
    }


def cmd_star_config(payload, rng, args):
    line = _parse_space(_want(payload, "line", list), "line")
    if line.dim != 1:
        raise ValidationError("line", "expected exactly two generator rows")
    raw_points = _want(payload, "points", list)
    points = [_parse_point(p, "points[%d]" % i) for i, p in enumerate(raw_points)]
    r = _want(payload, "r", int)
    try:
        zset = PointSet(points)
    except ValueError as exc:
        raise ValidationError("points", str(exc))
    witness = build_star(zset, line, r)
    hyperplanes = []
    for h in witness.hyperplanes:
        hyperplanes.append({
            "generators": _matrix_json(h.generators),
            "equations": _matrix_json(h.equation_matrix()),
        })
    pts = []
    for point, subset in zip(witness.points, witness.origin_subsets):
        pts.append({"coords": point.to_json(), "subset": list(subset)})
    return {
        "ambient_space": _matrix_json(witness.ambient_space.generators),
        "hyperplanes": hyperplanes,
        "points": pts,
        "verified": verify_star(witness),
    }


def cmd_span_dim(payload, rng, args):
    if "spaces" in payload:
        raw = _want(payload, "spaces", list)
        entries = []
        for i, item in enumerate(raw):
            if not isinstance(item, dict):
                raise ValidationError("spaces[%d]" % i, "expected an object")
            space = _parse_space(item.get("generators"), "spaces[%d].generators" % i)
            mult = item.get("mult", 1)
            if not isinstance(mult, int) or mult < 1:
                raise ValidationError("spaces[%d].mult" % i, "multiplicity must be >= 1")
            entries.append((space, mult))
        n = entries[0][0].ambient_dim
    else:
        dims = _parse_dim_mult_list(_want(payload, "dims", list), "dims")
        n = _want(payload, "n", int)
        entries = []
        for m, r in dims:
            rows = [[rng.randint(-1000, 1000) for _ in range(n + 1)] for _ in range(m + 1)]
            entries.append((LinSpace(rows), r))
    matrix = gen_vandermonde(entries)
    rank = matrix.rank()
    formula = span_dimension_formula([(s.dim, r) for s, r in entries], n)
    return {
        "rank": rank,
        "span_dim": rank - 1,
        "formula_dim": formula,
        "match": rank - 1 == formula,
    }


def cmd_degree(payload, rng, args):
    plain = _parse_dim_mult_list(payload.get("plain", []), "plain")
    reciprocal = _parse_dim_mult_list(payload.get("reciprocal", []), "reciprocal")
    if not plain and not reciprocal:
        raise ValidationError("plain", "need at least one factor")
    n = _want(payload, "n", int)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if reciprocal:
            dim, degree = degree_with_reciprocals(plain, reciprocal, n)
        else:
            dim, degree = degree_linear_products(plain, n)
    doc = {"dim": dim, "degree": rat_str(degree)}
    if args.transcript:
        detail = fan_degree_pipeline(plain, reciprocal, n, rng, transcript=True)
        fan = detail["fan"]
        doc["transcript"] = {
            "delta": detail["delta"],
            "fan_degree": rat_str(detail["degree"]),
            "global_weight": rat_str(fan.global_weight),
            "displacement": [rat_str(x) for x in detail["displacement"]],
            "cones": [{"plus": sorted(c.plus), "minus": sorted(c.minus), "mult": c.mult}
                      for c in fan.cones],
            "contributing_pairs": [
                {"sigma1": {"plus": sorted(c1.plus), "minus": sorted(c1.minus), "mult": c1.mult},
                 "sigma2": {"plus": sorted(c2.plus), "minus": sorted(c2.minus), "mult": c2.mult},
                 "lattice_index": idx}
                for c1, c2, idx in detail["pairs"]],
        }
    return doc


def cmd_interp(payload, rng, args):
    sampler = _parse_sampler(_want(payload, "sampler", dict), "sampler")
    has_degree = "degree" in payload
    has_dmax = "dmax" in payload
    if has_degree == has_dmax:
        raise ValidationError("degree", "provide exactly one of 'degree' or 'dmax'")
    if has_degree:
        d = _want(payload, "degree", int)
        if d < 1:
            raise ValidationError("degree", "degree must be >= 1")
        forms = interpolate_forms(sampler, d, rng)
        return {"degree": d, "forms": [f.to_json() for f in forms]}
    dmax = _want(payload, "dmax", int)
    if dmax < 1:
        raise ValidationError("dmax", "dmax must be >= 1")
    degree, form = interpolate_hypersurface(sampler, dmax, rng)
    return {"degree": degree, "form": form.to_json()}


def cmd_dim_estimate(payload, rng, args):
    sampler_x = _parse_sampler(_want(payload, "x", dict), "x")
    sampler_y = _parse_sampler(_want(payload, "y", dict), "y")
    dim_h = _want(payload, "dim_h", int)
    dim_g = _want(payload, "dim_g", int)
    p, tp = sampler_x.sample(rng)
    q, tq = sampler_y.sample(rng)
    tangent = terracini_span(p, tp, q, tq)
    expected = expected_dimension(tp.dim, tq.dim, dim_h, dim_g)
    return {
        "dim_x": tp.dim,
        "dim_y": tq.dim,
        "terracini_dim": tangent.dim,
        "expected_dim": expected,
        "deficient": tangent.dim < expected,
    }


def cmd_bracket(payload, rng, args):
    mode = _want(payload, "mode", str)
    if mode == "quadric":
        line_l = _parse_space(_want(payload, "line_l", list), "line_l")
        line_m = _parse_space(_want(payload, "line_m", list), "line_m")
        form = quadric_two_lines(pluecker(line_l), pluecker(line_m))
        doc = {"form": form.to_json()}
        if args.format == "pretty":
            doc["bracket_display"] = quadric_bracket_display()
        return doc
    if mode == "cubic":
        plane = _parse_space(_want(payload, "plane", list), "plane")
        form = cubic_plane_square(pluecker(plane))
        return {"form": form.to_json()}
    if mode == "verify":
        identity = _want(payload, "identity", str)
        if identity not in ("quadric", "cubic"):
            raise ValidationError("identity", "expected 'quadric' or 'cubic'")
        if args.symbolic:
            if identity != "quadric":
                raise PreconditionError(
                    "symbolic expansion is only provided for the quadric identity; "
                    "the cubic identity is verified by sampling and interpolation")
            return {
                "mode": "symbolic",
                "expansion_zero": quadric_symbolic_identity().is_zero(),
                "square_identity": quadric_square_symbolic(),
            }
        trials = payload.get("trials", 25)
        if not isinstance(trials, int) or trials < 1:
            raise ValidationError("trials", "trials must be a positive integer")
        if identity == "quadric":
            line_l = _parse_space(payload.get("line_l", [[2, 3, 5, 7], [11, 13, 17, 19]]), "line_l")
            line_m = _parse_space(payload.get("line_m", [[23, 29, 31, 37], [41, 43, 47, 53]]), "line_m")
            form = quadric_two_lines(pluecker(line_l), pluecker(line_m))
            sampler = hadamard_product_sampler(
                linear_space_sampler(line_l), linear_space_sampler(line_m))
        else:
            plane = _parse_space(payload.get("plane", list(papersuite.PLANE_POINTS)), "plane")
            form = cubic_plane_square(pluecker(plane))
            sampler = hadamard_power_sampler(linear_space_sampler(plane), 2)
        ok = verify_identity(form, sampler, trials, rng)
        return {"mode": "sampling", "trials": trials, "verified": ok}
    raise ValidationError("mode", "expected 'quadric', 'cubic', or 'verify'")


def cmd_paper_suite(payload, rng, args):
    return papersuite.run_all(args.seed)


COMMANDS = {
    "line-power": cmd_line_power,
    "star-config": cmd_star_config,
    "span-dim": cmd_span_dim,
    "degree": cmd_degree,
    "interp": cmd_interp,
    "dim-estimate": cmd_dim_estimate,
    "bracket": cmd_bracket,
    "paper-suite": cmd_paper_suite,
}

NEEDS_PAYLOAD = {"line-power", "star-config", "span-dim", "degree", "interp",
                 "dim-estimate", "bracket"}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hadamard-spaces",
        description="Exact computations with Hadamard products of projective linear spaces.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="master seed for all randomness (default %(default)s)")
    parser.add_argument("--in", dest="infile", default=None,
                        help="payload path (default: standard input)")
    parser.add_argument("--out", dest="outfile", default=None,
                        help="output path (default: standard output)")
    parser.add_argument("--format", choices=("json", "pretty"), default="json")
    parser.add_argument("--symbolic", action="store_true",
                        help="symbolic verification mode for `bracket verify`")
    parser.add_argument("--transcript", action="store_true",
                        help="include the fan computation transcript in `degree` output")
    return parser


def _fail(code, field, message):
    doc = {"error": {"code": code, "message": message}}
    if field:
        doc["error"]["field"] = field
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.seed < 0:
        return _fail(1, "seed", "seed must be a nonnegative integer")

    payload = {}
    if args.command in NEEDS_PAYLOAD:
        try:
            if args.infile:
                with open(args.infile) as fh:
                    text = fh.read()
            else:
                text = sys.stdin.read()
            payload = json.loads(text) if text.strip() else {}
        except OSError as exc:
            return _fail(1, "in", str(exc))
        except json.JSONDecodeError as exc:
            return _fail(1, None, "malformed JSON payload: %s" % exc)
        if not isinstance(payload, dict):
            return _fail(1, None, "payload must be a JSON object")

    rng = random.Random(args.seed)
    try:
        doc = COMMANDS[args.command](payload, rng, args)
    except ValidationError as exc:
        return _fail(1, exc.field, str(exc))
    except PreconditionError as exc:
        return _fail(2, None, str(exc))
    except BudgetExhausted as exc:
        return _fail(3, None, str(exc))

    if args.format == "pretty":
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if args.outfile:
        with open(args.outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.command == "paper-suite" and not doc.get("all_pass", False):
        failing = [c["name"] for c in doc["checks"] if not c["pass"]]
        return _fail(2, None, "reproduction checks failed: %s" % ", ".join(failing))
    return 0


if __name__ == "__main__":
    sys.exit(main())
