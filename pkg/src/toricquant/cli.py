"""Command-line front end.

Usage::

    toricquant COMMAND [INPUT] [--format text|json] [--max-box N] [--m M] [--quiet]

``INPUT`` is a JSON polytope document (a path, or ``-`` for stdin).  Exit
codes: 0 success, 1 domain error, 2 usage or input error, 3 the two
dimension counts disagree.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import complex_side, generators
from .construction import build_construction
from .errors import InputError, ParseError, SchemaError, ToricError
from .polytope import (DEFAULT_MAX_BOX, HalfspacePolytope, build_polytope,
                       facet_family, lattice_points, validate_delzant)
from .quantize import QuantizationReport, dilate_sweep, quantize

COMMANDS = ("validate", "vertices", "lattice", "family", "construct",
            "quantize", "sweep")

GENERATOR_PARAMS = {
    "simplex": {"dim", "m"},
    "box": {"dim", "side"},
    "hirzebruch": {"a", "b"},
}


@dataclass
class PolytopeSpec:
    """Either inline facets or a named generator with integer parameters."""

    ambient_dim: Optional[int] = None
    facets: Optional[List[Tuple[Tuple[int, ...], int]]] = None
    generator: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)

    def raw_facets(self):
        if self.generator is None:
            return self.ambient_dim, self.facets
        p = self.params
        if self.generator == "simplex":
            return p["dim"], generators.simplex_facets(p["dim"], p.get("m", 1))
        if self.generator == "box":
            dim = p["dim"]
            sides = [p.get(f"side{i}", p.get("side", 1)) for i in range(1, dim + 1)]
            return dim, generators.box_facets(sides)
        return 2, generators.hirzebruch_facets(p["a"], p["b"])

    def to_polytope(self) -> HalfspacePolytope:
        n, facets = self.raw_facets()
        return build_polytope(n, facets)


def _no_duplicates(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise SchemaError(key, "duplicate key")
        out[key] = value
    return out


def _is_int(x):
    return type(x) is int


def _require_int(x, name, minimum=None):
    if not _is_int(x):
        raise SchemaError(name, f"expected an integer, got {json.dumps(x, default=str)}")
    if minimum is not None and x < minimum:
        raise SchemaError(name, f"must be >= {minimum}")
    return x


def _require_keys(obj, name, required, optional=()):
    if not isinstance(obj, dict):
        raise SchemaError(name, "expected an object")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise SchemaError(f"{name}.{unknown[0]}" if name else unknown[0],
                          "unknown key")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaError(f"{name}.{missing[0]}" if name else missing[0],
                          "missing")


def parse_spec(text: str) -> PolytopeSpec:
    """Strictly parse a polytope document.

    Inline form::

        {"ambient_dim": 2, "facets": [{"normal": [0, 1], "offset": 0}, ...]}

    Generator form::

        {"generator": {"name": "simplex", "params": {"dim": 2, "m": 2}}}
    """
    try:
        doc = json.loads(text, parse_float=Decimal,
                         parse_constant=lambda c: Decimal(c),
                         object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None

    if isinstance(doc, dict) and "generator" in doc:
        _require_keys(doc, "", ["generator"])
        return _parse_generator(doc["generator"])
    _require_keys(doc, "", ["ambient_dim", "facets"])
    n = _require_int(doc["ambient_dim"], "ambient_dim", 1)
    raw = doc["facets"]
    if not isinstance(raw, list) or not raw:
        raise SchemaError("facets", "expected a nonempty list")
    facets = []
    for j, f in enumerate(raw):
        name = f"facets[{j}]"
        _require_keys(f, name, ["normal", "offset"])
        normal = f["normal"]
        if not isinstance(normal, list) or len(normal) != n:
            raise SchemaError(f"{name}.normal", f"expected a list of {n} integers")
        for i, c in enumerate(normal):
            _require_int(c, f"{name}.normal[{i}]")
        if not any(normal):
            raise SchemaError(f"{name}.normal", "zero normal")
        facets.append((tuple(normal), _require_int(f["offset"], f"{name}.offset")))
    return PolytopeSpec(ambient_dim=n, facets=facets)


def _parse_generator(gen):
    _require_keys(gen, "generator", ["name", "params"])
    name = gen["name"]
    if name not in GENERATOR_PARAMS:
        raise SchemaError("generator.name",
                          f"expected one of {sorted(GENERATOR_PARAMS)}")
    params = gen["params"]
    if not isinstance(params, dict):
        raise SchemaError("generator.params", "expected an object")
    allowed = set(GENERATOR_PARAMS[name])
    if name == "box":
        dim = _require_int(params.get("dim"), "generator.params.dim", 1)
        allowed |= {f"side{i}" for i in range(1, dim + 1)}
    for key, value in params.items():
        if key not in allowed:
            raise SchemaError(f"generator.params.{key}", "unknown key")
        _require_int(value, f"generator.params.{key}", 1)
    required = {"simplex": ["dim"], "box": ["dim"], "hirzebruch": ["a", "b"]}[name]
    for key in required:
        if key not in params:
            raise SchemaError(f"generator.params.{key}", "missing")
    if name == "hirzebruch" and not params["b"] > params["a"]:
        raise SchemaError("generator.params.b", "must exceed a")
    return PolytopeSpec(generator=name, params=dict(params))


# -- serialization -----------------------------------------------------------

def _num(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else str(c)


def _ones(indices):
    return [j + 1 for j in sorted(indices)]


def polytope_dict(P):
    return {
        "ambient_dim": P.dim,
        "n_facets": P.n_facets,
        "facets": [{"index": j + 1, "normal": list(f.normal), "offset": f.offset}
                   for j, f in enumerate(P.facets)],
    }


def vertices_dict(P, dets=None):
    out = []
    for i, v in enumerate(P.vertex_list):
        d = {"point": [_num(c) for c in v.point],
             "active_facets": _ones(v.active_facets)}
        if dets is not None:
            d["determinant"] = dets[i]
        out.append(d)
    return out


def construction_dict(C):
    return {
        "pi": [list(r) for r in C.pi],
        "V": [list(r) for r in C.V],
        "kernel_basis": [list(r) for r in C.kernel_basis],
        "L": [list(r) for r in C.L],
        "lambda": list(C.lam),
        "nu": list(C.nu),
        "fiber_bounds": list(C.fiber_bounds),
    }


def family_dict(family, codim, witnesses):
    return {
        "members": [_ones(s) for s in family.sorted_members()],
        "size": len(family),
        "complement_codimension": codim,
        "complement_witnesses": [_ones(w) for w in witnesses],
    }


def report_dict(report: QuantizationReport):
    P = report.polytope
    b = report.bijection
    return {
        "polytope": polytope_dict(P),
        "vertices": vertices_dict(P, report.certificate.vertex_determinants),
        "construction": construction_dict(report.construction),
        "family": family_dict(report.family, report.complement_codim,
                              report.complement_witnesses),
        "lattice_points": [list(x) for x in report.lattice],
        "lattice_count": report.lattice_count,
        "section_basis": {
            "weight": list(report.basis.weight),
            "monomials": [list(I) for I in report.basis.monomials],
            "rendered": [complex_side.format_monomial(I)
                         for I in report.basis.monomials],
        },
        "bijection": {
            "complete": b.complete,
            "pairs": [{"x": list(x), "y": list(y)} for x, y in b.pairs],
            "counterexample": b.counterexample,
        },
        "dimension": report.dimension,
        "theorem_verified": report.theorem_verified,
    }


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# -- text rendering ------------------------------------------------------------

def _matrix_text(name, M):
    if not M:
        return [f"{name} = (empty)"]
    width = max(len(str(x)) for row in M for x in row)
    lines = [f"{name} ="]
    for row in M:
        lines.append("  [ " + " ".join(str(x).rjust(width) for x in row) + " ]")
    return lines


def _tuple_text(v):
    return "(" + ", ".join(str(_num(c)) for c in v) + ")"


def _set_text(s):
    return "{" + ", ".join(str(j) for j in s) + "}"


def _polytope_text(d):
    lines = [f"Polytope: n={d['ambient_dim']}, N={d['n_facets']} facets"]
    for f in d["facets"]:
        lines.append(f"  facet {f['index']}: <x, {_tuple_text(f['normal'])}> >= {f['offset']}")
    return lines


def _vertices_text(vs):
    lines = [f"Vertices ({len(vs)}):"]
    for v in vs:
        line = f"  {_tuple_text(v['point'])}  facets {_set_text(v['active_facets'])}"
        if "determinant" in v:
            line += f"  det {v['determinant']}"
        lines.append(line)
    return lines


def _construction_text(c):
    lines = _matrix_text("pi", c["pi"])
    lines += _matrix_text("L", c["L"])
    lines.append(f"lambda = {_tuple_text(c['lambda'])}")
    lines.append(f"nu = L(-lambda) = {_tuple_text(c['nu'])}")
    return lines


def _family_text(f):
    members = ", ".join(_set_text(s) for s in f["members"])
    wit = ", ".join(_set_text(s) for s in f["complement_witnesses"])
    return [f"Facet family ({f['size']} sets): {members}",
            f"Complement codimension: {f['complement_codimension']} (missing {wit})"]


def _points_text(title, pts):
    return [f"{title} ({len(pts)}): " + " ".join(_tuple_text(p) for p in pts)]


def report_text(d):
    lines = _polytope_text(d["polytope"]) + _vertices_text(d["vertices"])
    lines += _construction_text(d["construction"]) + _family_text(d["family"])
    lines += _points_text("Lattice points", d["lattice_points"])
    basis = d["section_basis"]
    lines.append(f"Section basis ({len(basis['rendered'])}): "
                 + " ".join(basis["rendered"]))
    b = d["bijection"]
    if b["complete"]:
        lines.append(f"Bijection: complete ({len(b['pairs'])} pairs)")
    else:
        lines.append(f"Bijection: FAILED: {b['counterexample']}")
    lines.append(f"dimension = {d['dimension']}")
    lines.append(f"theorem verified: {'yes' if d['theorem_verified'] else 'NO'}")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------

def _cmd_validate(P, args):
    cert = validate_delzant(P)
    d = {"delzant": True, "polytope": polytope_dict(P),
         "vertices": vertices_dict(P, cert.vertex_determinants)}
    text = _polytope_text(d["polytope"]) + _vertices_text(d["vertices"])
    return d, "\n".join(text + ["Delzant: yes"]) + "\n"


def _cmd_vertices(P, args):
    d = {"vertices": vertices_dict(P)}
    return d, "\n".join(_vertices_text(d["vertices"])) + "\n"


def _cmd_lattice(P, args):
    pts = [list(x) for x in lattice_points(P, args.max_box)]
    d = {"lattice_points": pts, "count": len(pts)}
    return d, "\n".join(_points_text("Lattice points", pts)) + "\n"


def _cmd_family(P, args):
    family = facet_family(validate_delzant(P), P.n_facets)
    codim, witnesses = complex_side.minimal_missing_sets(family)
    d = family_dict(family, codim, witnesses)
    return d, "\n".join(_family_text(d)) + "\n"


def _cmd_construct(P, args):
    d = construction_dict(build_construction(P))
    return d, "\n".join(_construction_text(d)) + "\n"


def _cmd_quantize(P, args):
    d = report_dict(quantize(P, args.max_box))
    return d, report_text(d)


def _cmd_sweep(P, args):
    rows = dilate_sweep(P, args.m, args.max_box)
    d = {"sweep": [{"m": m, "dimension": dim} for m, dim in rows]}
    text = "\n".join(["m  dimension"] + [f"{m}  {dim}" for m, dim in rows])
    return d, text + "\n"


HANDLERS = {
    "validate": _cmd_validate,
    "vertices": _cmd_vertices,
    "lattice": _cmd_lattice,
    "family": _cmd_family,
    "construct": _cmd_construct,
    "quantize": _cmd_quantize,
    "sweep": _cmd_sweep,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricquant",
        description="Quantization dimension of a Delzant polytope.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default="-",
                        help="JSON polytope document, or - for stdin")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-box", type=int, default=DEFAULT_MAX_BOX,
                        help="limit on enumeration box size")
    parser.add_argument("--m", type=int, default=3, help="sweep bound")
    parser.add_argument("--quiet", action="store_true")
    return parser


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if args.max_box < 1 or args.m < 1:
        print("error: --max-box and --m must be positive", file=stderr)
        return 2

    try:
        if args.input == "-":
            text = stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        P = parse_spec(text).to_polytope()
        data, rendered = HANDLERS[args.command](P, args)
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except ToricError as exc:
        where = f" [{exc.stage}]" if exc.stage else ""
        print(f"error{where}: {exc}", file=stderr)
        return 1

    if not args.quiet:
        stdout.write(dump_json(data) if args.format == "json" else rendered)
    if args.command == "quantize" and not data["theorem_verified"]:
        print("error: lattice count and section count disagree", file=stderr)
        return 3
    return 0


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
