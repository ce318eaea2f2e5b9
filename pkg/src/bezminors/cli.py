"""Command-line frontend.

Coefficients are given ascending, constant term first: ``--q-coeffs -6,11,-6,1``
is ``x^3 - 6x^2 + 11x - 6``. Rationals are written ``a`` or ``a/b``.

Exit codes: 0 success, 1 input error, 2 a verification found a violation.
"""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

import click

from . import families
from .analysis import (
    DEFAULT_WIDTH,
    MinorCheck,
    Verdict,
    classify_pattern,
    defect_check,
    interlace_verdict,
    minor_identity,
    rank_from_minors,
    subset_minor,
)
from .bezout import bezout_via_bilinear, bezout_via_product
from .divdiff import HermiteData, delta_matrix, newton_interp
from .linalg import RationalMatrix, rank, trailing_minors
from .poly import Polynomial, RootForm, expand, format_rational, gcd, squarefree_part, to_rational
from .sturm import cauchy_bound, count_real_roots, isolate_roots, sturm_chain

COMMANDS = ("bezout", "delta", "minors", "interp", "theorem1", "verify", "interlace", "defect", "sturm")

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class InputError(Exception):
    def __init__(self, fieldname: str, message: str):
        super().__init__(f"{fieldname}: {message}")
        self.field = fieldname


@dataclass
class JobSpec:
    command: str
    P: Optional[dict] = None
    Q: Optional[dict] = None
    nodes: Optional[list] = None
    options: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, data: dict) -> "JobSpec":
        if not isinstance(data, dict):
            raise InputError("input", "JSON job must be an object")
        command = data.get("command")
        if command not in COMMANDS:
            raise InputError("command", f"expected one of {', '.join(COMMANDS)}, got {command!r}")
        extra = set(data) - {"command", "P", "Q", "nodes", "options"}
        if extra:
            raise InputError(sorted(extra)[0], "unknown field")
        return cls(command, data.get("P"), data.get("Q"), data.get("nodes"), dict(data.get("options") or {}))


# ---------------------------------------------------------------- parsing


def _rat(fieldname: str, value: Any) -> Fraction:
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        try:
            return to_rational(value)
        except ValueError as exc:
            raise InputError(fieldname, str(exc)) from None
    raise InputError(fieldname, f"expected a rational string like '3' or '-2/5', got {value!r}")


def _rat_list(fieldname: str, value: Any) -> list[Fraction]:
    if isinstance(value, str):
        value = [v for v in value.split(",")] if value.strip() else []
    if not isinstance(value, list):
        raise InputError(fieldname, "expected a list of rationals")
    return [_rat(f"{fieldname}[{i}]", v) for i, v in enumerate(value)]


def _poly_spec(name: str, spec: Optional[dict], required: bool = True):
    """Returns a Polynomial, a RootForm, HermiteData, or None."""
    if spec is None:
        if required:
            raise InputError(name, "missing polynomial")
        return None
    if not isinstance(spec, dict):
        raise InputError(name, "expected an object")
    forms = [k for k in ("coeffs", "roots", "hermite") if k in spec]
    if len(forms) != 1:
        raise InputError(name, "give exactly one of coefficient form, root form or hermite data")
    if "coeffs" in spec:
        if "leading" in spec:
            raise InputError(f"{name}.leading", "only allowed with root form")
        return Polynomial(_rat_list(f"{name}.coeffs", spec["coeffs"]))
    if "roots" in spec:
        lead = _rat(f"{name}.leading", spec.get("leading", "1"))
        if lead == 0:
            raise InputError(f"{name}.leading", "must be nonzero")
        return RootForm(lead, _rat_list(f"{name}.roots", spec["roots"]))
    groups = spec["hermite"]
    if not isinstance(groups, list) or not groups:
        raise InputError(f"{name}.hermite", "expected a non-empty list of {node, values}")
    parsed = []
    for i, g in enumerate(groups):
        if not isinstance(g, dict) or "node" not in g or "values" not in g:
            raise InputError(f"{name}.hermite[{i}]", "expected {\"node\": ..., \"values\": [...]}")
        parsed.append((_rat(f"{name}.hermite[{i}].node", g["node"]), _rat_list(f"{name}.hermite[{i}].values", g["values"])))
    try:
        return HermiteData(parsed)
    except ValueError as exc:
        raise InputError(f"{name}.hermite", str(exc)) from None


def _as_poly(name: str, obj) -> Polynomial:
    if isinstance(obj, RootForm):
        return expand(obj)
    if isinstance(obj, Polynomial):
        return obj
    raise InputError(name, "hermite data is only accepted by delta, interp and interlace")


def _root_form(name: str, obj) -> RootForm:
    if not isinstance(obj, RootForm):
        raise InputError(name, "this command needs P in root form (--p-roots)")
    return obj


def _check_degrees(P: Polynomial, Q: Polynomial) -> None:
    if P.degree < 1:
        raise InputError("P", "degree must be at least 1")
    if Q.degree > P.degree:
        raise InputError("Q", f"degree order violated: deg Q = {Q.degree} > deg P = {P.degree}")


def _nodes_for(spec: JobSpec, P_obj, source=None) -> list[Fraction]:
    if spec.nodes is not None:
        nodes = _rat_list("nodes", spec.nodes)
    elif isinstance(source, HermiteData):
        nodes = source.expanded_nodes()
    elif isinstance(P_obj, RootForm):
        nodes = list(P_obj.roots)
    else:
        raise InputError("nodes", "give --nodes or P in root form")
    if not nodes:
        raise InputError("nodes", "need at least one node")
    return nodes


def _int_option(spec: JobSpec, key: str, default: Optional[int]) -> Optional[int]:
    value = spec.options.get(key, default)
    if value is None:
        return None
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise InputError(f"options.{key}", f"expected an integer, got {value!r}") from None
    if value < 0:
        raise InputError(f"options.{key}", "must be non-negative")
    return value


def _width(spec: JobSpec) -> Fraction:
    w = _rat("options.width", spec.options.get("width", format_rational(DEFAULT_WIDTH)))
    if w <= 0:
        raise InputError("options.width", "must be positive")
    return w


# ---------------------------------------------------------------- serialization

_q = format_rational


def _matrix(m: RationalMatrix) -> list[list[str]]:
    return [[_q(v) for v in row] for row in m.rows]


def _poly(p: Polynomial) -> dict:
    return {"coeffs": [_q(c) for c in p.coeffs], "text": str(p)}


def _intervals(iv) -> list[list[str]]:
    return [[_q(a), _q(b)] for a, b in iv]


def _checks(rows) -> list[dict]:
    return [{"size": c.size, "lhs": _q(c.lhs), "rhs": _q(c.rhs), "equal": c.equal} for c in rows]


# ---------------------------------------------------------------- commands


def _cmd_bezout(spec: JobSpec) -> tuple[int, dict]:
    P = _as_poly("P", _poly_spec("P", spec.P))
    Q = _as_poly("Q", _poly_spec("Q", spec.Q))
    _check_degrees(P, Q)
    B = bezout_via_product(P, Q)
    same = bezout_via_bilinear(P, Q) == B
    out = {"matrices": {"B": _matrix(B)}, "constructions_agree": same, "symmetric": B.is_symmetric()}
    return (EXIT_OK if same else EXIT_VIOLATION), out


def _cmd_delta(spec: JobSpec) -> tuple[int, dict]:
    P_obj = _poly_spec("P", spec.P, required=False)
    source = _poly_spec("Q", spec.Q)
    if isinstance(source, RootForm):
        source = expand(source)
    nodes = _nodes_for(spec, P_obj, source)
    D = delta_matrix(source, nodes)
    return EXIT_OK, {"nodes": [_q(x) for x in nodes], "matrices": {"Delta": _matrix(D)}}


def _cmd_minors(spec: JobSpec) -> tuple[int, dict]:
    P_obj = _poly_spec("P", spec.P)
    P = _as_poly("P", P_obj)
    Q = _as_poly("Q", _poly_spec("Q", spec.Q))
    _check_degrees(P, Q)
    B = bezout_via_product(P, Q)
    minors = trailing_minors(B)
    out: dict = {"matrices": {"B": _matrix(B)}, "minors": [_q(m) for m in minors]}
    if spec.nodes is not None or isinstance(P_obj, RootForm):
        nodes = _nodes_for(spec, P_obj)
        D = delta_matrix(Q, nodes)
        dm = trailing_minors(D)
        out["matrices"]["Delta"] = _matrix(D)
        out["delta_minors"] = [_q(m) for m in dm]
    out["pattern"] = classify_pattern(minors).classification.value
    return EXIT_OK, out


def _cmd_interp(spec: JobSpec) -> tuple[int, dict]:
    P_obj = _poly_spec("P", spec.P, required=False)
    source = _poly_spec("Q", spec.Q)
    if isinstance(source, RootForm):
        source = expand(source)
    nodes = _nodes_for(spec, P_obj, source)
    p = newton_interp(source, nodes)
    return EXIT_OK, {"nodes": [_q(x) for x in nodes], "interpolant": _poly(p)}


def _cmd_theorem1(spec: JobSpec) -> tuple[int, dict]:
    rf = _root_form("P", _poly_spec("P", spec.P))
    Q = _as_poly("Q", _poly_spec("Q", spec.Q))
    _check_degrees(expand(rf), Q)
    if len(set(rf.roots)) != len(rf.roots):
        raise InputError("P.roots", "subset formula requires simple roots")
    minors = trailing_minors(bezout_via_product(expand(rf), Q))
    size = _int_option(spec, "size", None)
    sizes = range(1, rf.degree + 1) if size is None else [size]
    if size is not None and not 1 <= size <= rf.degree:
        raise InputError("options.size", f"must lie in 1..{rf.degree}")
    checks = [MinorCheck(k, subset_minor(rf, Q, k), minors[k - 1]) for k in sizes]
    ok = all(c.equal for c in checks)
    return (EXIT_OK if ok else EXIT_VIOLATION), {"checks": _checks(checks)}


def _cmd_verify(spec: JobSpec) -> tuple[int, dict]:
    family = spec.options.get("family")
    if family is None:
        rf = _root_form("P", _poly_spec("P", spec.P))
        Q = _as_poly("Q", _poly_spec("Q", spec.Q))
        _check_degrees(expand(rf), Q)
        checks = minor_identity(rf, Q)
        ok = all(c.equal for c in checks)
        return (EXIT_OK if ok else EXIT_VIOLATION), {"checks": _checks(checks)}
    if family not in families.FAMILIES:
        raise InputError("options.family", f"expected one of {', '.join(families.FAMILIES)}")
    count = _int_option(spec, "count", 50)
    seed = _int_option(spec, "seed", 0)
    n = _int_option(spec, "n", None)
    if n is not None and not 1 <= n <= 12:
        raise InputError("options.n", "must lie in 1..12")
    instances = []
    failures = 0
    for i, (rf, Q) in enumerate(families.batch(family, count, seed, n=n)):
        checks = minor_identity(rf, Q)
        ok = all(c.equal for c in checks)
        failures += not ok
        instances.append(
            {
                "index": i,
                "P": {"leading": _q(rf.leading), "roots": [_q(x) for x in rf.roots]},
                "Q": {"coeffs": [_q(c) for c in Q.coeffs]},
                "equal": ok,
                "checks": _checks(checks),
            }
        )
    out = {"family": family, "seed": seed, "count": count, "failures": failures, "instances": instances}
    return (EXIT_OK if failures == 0 else EXIT_VIOLATION), out


def _cmd_interlace(spec: JobSpec) -> tuple[int, dict]:
    P_obj = _poly_spec("P", spec.P, required=False)
    source = _poly_spec("Q", spec.Q)
    if isinstance(source, RootForm):
        source = expand(source)
    nodes = _nodes_for(spec, P_obj, source)
    report = interlace_verdict(source, nodes, _width(spec))
    out = {
        "nodes": [_q(x) for x in nodes],
        "matrices": {"Delta": _matrix(report.delta)},
        "minors": [_q(m) for m in report.pattern.minors],
        "pattern": report.pattern.classification.value,
        "verdict": report.verdict.value,
        "interpolant": _poly(report.interpolant),
        "sturm_confirmed": report.sturm_confirmed,
        "isolated_roots": _intervals(report.isolated_roots),
    }
    if report.reason:
        out["reason"] = report.reason
    violated = report.verdict is Verdict.INTERLACING and not report.sturm_confirmed
    return (EXIT_VIOLATION if violated else EXIT_OK), out


def _cmd_defect(spec: JobSpec) -> tuple[int, dict]:
    P = _as_poly("P", _poly_spec("P", spec.P))
    Q = _as_poly("Q", _poly_spec("Q", spec.Q))
    _check_degrees(P, Q)
    defect, gdeg = defect_check(P, Q)
    B = bezout_via_product(P, Q)
    minors = trailing_minors(B)
    r = rank(B)
    out = {
        "matrices": {"B": _matrix(B)},
        "minors": [_q(m) for m in minors],
        "rank": r,
        "defect": defect,
        "gcd_degree": gdeg,
        "gcd": _poly(gcd(P, Q)),
        "rank_from_minors": rank_from_minors(minors),
    }
    ok = defect == gdeg and r == rank_from_minors(minors)
    return (EXIT_OK if ok else EXIT_VIOLATION), out


def _cmd_sturm(spec: JobSpec) -> tuple[int, dict]:
    p = _as_poly("P", _poly_spec("P", spec.P))
    if p.is_zero:
        raise InputError("P", "zero polynomial has no Sturm chain")
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    out = {
        "chain": [_poly(q) for q in chain],
        "bound": _q(bound),
        "real_roots": count_real_roots(chain, -bound, bound),
        "isolated_roots": _intervals(isolate_roots(squarefree_part(p), _width(spec))),
    }
    interval = spec.options.get("interval")
    if interval is not None:
        ends = _rat_list("options.interval", interval)
        if len(ends) != 2 or ends[0] >= ends[1]:
            raise InputError("options.interval", "expected two rationals a < b")
        a, b = ends
        out["interval"] = [_q(a), _q(b)]
        out["roots_in_interval"] = count_real_roots(chain, a, b)
    return EXIT_OK, out


_DISPATCH = {
    "bezout": _cmd_bezout,
    "delta": _cmd_delta,
    "minors": _cmd_minors,
    "interp": _cmd_interp,
    "theorem1": _cmd_theorem1,
    "verify": _cmd_verify,
    "interlace": _cmd_interlace,
    "defect": _cmd_defect,
    "sturm": _cmd_sturm,
}


def run(spec: JobSpec) -> tuple[int, dict]:
    """Execute a job; returns ``(exit code, JSON-ready payload)``."""
    try:
        code, out = _DISPATCH[spec.command](spec)
    except InputError as exc:
        return EXIT_INPUT, {"command": spec.command, "error": str(exc), "field": exc.field}
    except ValueError as exc:
        # grouping / Hermite-data / degree problems raised by the library
        return EXIT_INPUT, {"command": spec.command, "error": str(exc), "field": _guess_field(str(exc))}
    return code, {"command": spec.command, **out}


def _guess_field(message: str) -> str:
    if "Hermite" in message:
        return "Q.hermite"
    if "grouped" in message or "node" in message:
        return "nodes"
    return "input"


# ---------------------------------------------------------------- text rendering


def _approx(v: str) -> str:
    return f"{float(Fraction(v)):.6g}"


def render_text(payload: dict, approx: bool = False) -> str:
    lines = [f"command: {payload['command']}"]
    if "error" in payload:
        lines.append(f"error: {payload['error']}")
        return "\n".join(lines)
    for key, value in payload.items():
        if key == "command":
            continue
        if key == "matrices":
            for name, rows in value.items():
                lines.append(f"{name} =")
                width = max((len(x) for row in rows for x in row), default=1)
                lines.extend("  [" + "  ".join(x.rjust(width) for x in row) + "]" for row in rows)
        elif key in ("minors", "delta_minors"):
            label = "minors (size 1..n)" if key == "minors" else "Delta minors (size 1..n)"
            lines.append(f"{label}: " + ", ".join(value))
            if approx:
                lines.append("  approx (display only): " + ", ".join(_approx(v) for v in value))
        elif key == "checks":
            for c in value:
                mark = "ok" if c["equal"] else "MISMATCH"
                lines.append(f"  size {c['size']}: {c['lhs']} vs {c['rhs']}  {mark}")
        elif key == "instances":
            for inst in value:
                mark = "ok" if inst["equal"] else "MISMATCH"
                roots = ",".join(inst["P"]["roots"])
                lines.append(f"  #{inst['index']}: lead {inst['P']['leading']} roots [{roots}]  {mark}")
        elif key == "isolated_roots":
            lines.append("isolated roots:")
            for a, b in value:
                tail = f"   ~ {_approx(a)}" if approx else ""
                lines.append(f"  ({a}, {b}]{tail}")
        elif key == "chain":
            lines.append("Sturm chain:")
            lines.extend(f"  {q['text']}" for q in value)
        elif isinstance(value, dict) and "text" in value:
            lines.append(f"{key}: {value['text']}")
        elif isinstance(value, list):
            lines.append(f"{key}: " + ", ".join(map(str, value)))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def emit(code: int, payload: dict, fmt: str, approx: bool) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(render_text(payload, approx), err=code == EXIT_INPUT)


# ---------------------------------------------------------------- click wiring


def _flag_poly(name: str, coeffs, roots, lead, hermite=()) -> Optional[dict]:
    given = [x for x in (coeffs, roots) if x is not None] + ([hermite] if hermite else [])
    if len(given) > 1:
        raise InputError(name, "give exactly one of coefficient form, root form or hermite data")
    if coeffs is not None:
        if lead is not None:
            raise InputError(f"{name}.leading", "only allowed with root form")
        return {"coeffs": coeffs}
    if roots is not None:
        return {"roots": roots, "leading": lead if lead is not None else "1"}
    if hermite:
        groups = []
        for item in hermite:
            node, sep, values = item.partition(":")
            if not sep:
                raise InputError(f"{name}.hermite", f"expected NODE:V0,V1,..., got {item!r}")
            groups.append({"node": node, "values": values})
        return {"hermite": groups}
    if lead is not None:
        raise InputError(f"{name}.leading", "only allowed with root form")
    return None


_common = [
    click.option("--input", "input_file", type=click.File("r"), help="JSON job file."),
    click.option("--p-coeffs", help="P coefficients, ascending, comma separated."),
    click.option("--p-roots", help="P roots, comma separated."),
    click.option("--p-lead", help="Leading coefficient for --p-roots (default 1)."),
    click.option("--q-coeffs", help="Q coefficients, ascending, comma separated."),
    click.option("--q-roots", help="Q roots, comma separated."),
    click.option("--q-lead", help="Leading coefficient for --q-roots (default 1)."),
    click.option("--hermite", multiple=True, help="Hermite data for g as NODE:V0,V1,... (repeatable)."),
    click.option("--nodes", help="Interpolation nodes, comma separated."),
    click.option("--format", "fmt", type=click.Choice(["text", "json"]), default=None),
    click.option("--width", help="Isolation interval width a/b (default 1/4294967296)."),
    click.option("--seed", help="Seed for randomized batches."),
    click.option("--family", help="verify: distinct | shared-roots | multiple-roots."),
    click.option("--n", "n", help="verify: fixed degree of P."),
    click.option("--count", help="verify: number of instances."),
    click.option("--size", help="theorem1: single minor size."),
    click.option("--interval", help="sturm: count roots in (a, b], given as a,b."),
    click.option("--approx", is_flag=True, help="Add a float display column to text output."),
]


def _with_common(f):
    for opt in reversed(_common):
        f = opt(f)
    return f


def _spec_from_flags(command: str, kw: dict) -> tuple[JobSpec, str, bool]:
    if kw["input_file"] is not None:
        try:
            data = json.load(kw["input_file"])
        except json.JSONDecodeError as exc:
            raise InputError("input", f"invalid JSON: {exc}") from None
        if isinstance(data, dict):
            data.setdefault("command", command)
            if data["command"] != command:
                raise InputError("command", f"file says {data['command']!r} but {command!r} was invoked")
        spec = JobSpec.from_json(data)
    else:
        spec = JobSpec(command)
        spec.P = _flag_poly("P", kw["p_coeffs"], kw["p_roots"], kw["p_lead"])
        spec.Q = _flag_poly("Q", kw["q_coeffs"], kw["q_roots"], kw["q_lead"], kw["hermite"])
        spec.nodes = kw["nodes"]
    for key in ("width", "seed", "family", "n", "count", "size", "interval"):
        if kw[key] is not None:
            spec.options[key] = kw[key]
    if kw["fmt"] is not None:
        spec.options["format"] = kw["fmt"]
    if kw["approx"]:
        spec.options["approx"] = True
    fmt = spec.options.get("format", "text")
    if fmt not in ("text", "json"):
        raise InputError("options.format", "expected json or text")
    return spec, fmt, bool(spec.options.get("approx", False))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact Bezout / divided-difference minors and interlacing verdicts."""


def _make(command: str, doc: str):
    @_with_common
    def cmd(**kw):
        try:
            spec, fmt, approx = _spec_from_flags(command, kw)
        except InputError as exc:
            fmt = kw["fmt"] or "text"
            emit(EXIT_INPUT, {"command": command, "error": str(exc), "field": exc.field}, fmt, False)
            sys.exit(EXIT_INPUT)
        code, payload = run(spec)
        emit(code, payload, fmt, approx)
        sys.exit(code)

    cmd.__doc__ = doc
    return main.command(name=command)(cmd)


for _name, _doc in {
    "bezout": "Bezout matrix B(P, Q), cross-checked by both constructions.",
    "delta": "Newton divided-difference matrix of Q (or Hermite data) at the nodes.",
    "minors": "B, Delta and their trailing principal minors.",
    "interp": "Newton-Hermite interpolation polynomial.",
    "theorem1": "Subset-sum formula for trailing minors against direct determinants (simple roots).",
    "verify": "Check minors of B(P, Q) against p_n^s times minors of Delta(Q); single or seeded batch.",
    "interlace": "Sign pattern of Delta minors and Sturm-checked interlacing verdict.",
    "defect": "Defect of B(P, Q) against the degree of gcd(P, Q).",
    "sturm": "Sturm chain, real-root count and root isolation.",
}.items():
    _make(_name, _doc)


if __name__ == "__main__":
    main()
