"""Command-line front end `gq`.

Subcommands: classify, green, inverses, order, lines, plane, bell, metrics,
export, check.  Matrices are written `[a,b;c,d]` with rational entries and
values print exactly (rationals, `p + q*sqrt2`) unless --float is given.

Exit codes: 0 success, 1 usage or literal parse errors, 2 domain errors
(and failed `check` runs).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from greenquadrics import checks
from greenquadrics.errors import DomainError, LiteralParseError
from greenquadrics.exact import (
    LANE,
    QuadExt,
    Rational,
    format_quadext,
    format_rational,
    parse_quadext,
    parse_rational,
    to_float,
)
from greenquadrics.green import classify_plane, green_eq
from greenquadrics.mat2 import Mat2, format_mat2, parse_mat2
from greenquadrics.sections import (
    BellPoint,
    classify_section,
    from_bell,
    hyperboloid_metrics,
    to_bell,
)
from greenquadrics.semigroup import (
    chart_eval,
    generator_line,
    inverse_chart,
    minus_le,
    natural_le,
    order_section_report,
)
from greenquadrics.surfaces import sample_surface, write_csv, write_obj

__all__ = ["Command", "parse_command", "run", "main"]

_RELS = ("L", "R", "H", "D", "J")
_KINDS = ("idempotents", "nilpotents", "section", "generator-lines")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); usage errors are exit 1
        raise _UsageError(message)


@dataclass(frozen=True)
class Command:
    """A parsed invocation; `to_argv` is its canonical printable form and
    parsing that form again yields an equal Command."""

    name: str
    args: tuple = field(default_factory=tuple)  # sorted (key, value) pairs

    def arg(self, key, default=None):
        for k, v in self.args:
            if k == key:
                return v
        return default

    def to_argv(self) -> list[str]:
        def flag(key, v):
            text = str(v)
            # leading '-' would read as an option; use the = form
            return [f"--{key}={text}"] if text.startswith("-") else [f"--{key}", text]

        argv = [self.name]
        positional = []
        for key, value in self.args:
            if key.startswith("_pos"):
                positional.append(value)
                continue
            if value is True:
                argv.append(f"--{key}")
            elif value is False or value is None:
                continue
            elif isinstance(value, (list, tuple)):
                for v in value:
                    argv.extend(flag(key, v))
            else:
                argv.extend(flag(key, value))
        argv.extend(str(p) for p in positional)
        return argv


def _cmd(name: str, **kwargs) -> Command:
    return Command(name, tuple(sorted(kwargs.items(), key=lambda kv: kv[0])))


def _build_parser() -> _Parser:
    parser = _Parser(prog="gq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="affine type of a variety slice")
    p.add_argument("--a", required=True, metavar="MAT")
    p.add_argument("--lambda", dest="lam", required=True, metavar="RAT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("green", help="test a Green relation between two matrices")
    p.add_argument("--rel", required=True, choices=_RELS)
    p.add_argument("a", metavar="MAT_A")
    p.add_argument("b", metavar="MAT_B")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("inverses", help="bilinear chart of the inverses of a rank-1 matrix")
    p.add_argument("--a", required=True, metavar="MAT")
    p.add_argument("--grid", type=int, default=3, metavar="K")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", dest="as_float", action="store_true")

    p = sub.add_parser("order", help="natural/minus order verdicts, or a section report")
    p.add_argument("mats", nargs="*", metavar="MAT")
    p.add_argument("--report", action="store_true", help="sample the order/section agreement below MAT")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("lines", help="generating lines of the idempotent surface through e")
    p.add_argument("--e", required=True, metavar="MAT")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("plane", help="is span{b1,b2} minus 0 an L- or R-class?")
    p.add_argument("b1", metavar="MAT_B1")
    p.add_argument("b2", metavar="MAT_B2")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bell", help="convert between ambient and frame coordinates")
    p.add_argument("--lambda", dest="lam", required=True, metavar="RAT")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", metavar="MAT")
    g.add_argument("--from", dest="coords", metavar="X,Y,Z")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", dest="as_float", action="store_true")

    p = sub.add_parser("metrics", help="center/axis/radius of the trace-level slices")
    p.add_argument("--lambda", dest="lam", required=True, metavar="RAT")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", dest="as_float", action="store_true")

    p = sub.add_parser("export", help="sample a surface to CSV or OBJ")
    p.add_argument("--kind", required=True, choices=_KINDS)
    p.add_argument("--a", metavar="MAT")
    p.add_argument("--lambda", dest="lam", metavar="RAT")
    p.add_argument("--e", metavar="MAT")
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", choices=("csv", "obj"), default="csv")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--z-range", dest="z_range", metavar="LO:HI")

    p = sub.add_parser("check", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int)
    p.add_argument("--suite", action="append", choices=checks.available_suites())
    p.add_argument("--json", action="store_true")

    return parser


def _require_mat(text: str) -> Mat2:
    return parse_mat2(text)


def parse_command(argv) -> Command:
    """Parse argv into a canonical Command (literals parsed and re-rendered)."""
    ns = _build_parser().parse_args(argv)
    name = ns.command
    if name == "classify":
        return _cmd(
            name,
            a=format_mat2(_require_mat(ns.a)),
            **{"lambda": format_rational(parse_rational(ns.lam))},
            json=ns.json,
        )
    if name == "green":
        return _cmd(
            name,
            rel=ns.rel,
            _pos1=format_mat2(_require_mat(ns.a)),
            _pos2=format_mat2(_require_mat(ns.b)),
            json=ns.json,
        )
    if name == "inverses":
        if ns.grid < 1:
            raise _UsageError("--grid must be at least 1")
        return _cmd(
            name,
            a=format_mat2(_require_mat(ns.a)),
            grid=ns.grid,
            json=ns.json,
            float=ns.as_float,
        )
    if name == "order":
        if ns.report:
            if len(ns.mats) != 1:
                raise _UsageError("order --report takes exactly one matrix")
            return _cmd(
                name,
                report=True,
                _pos1=format_mat2(_require_mat(ns.mats[0])),
                trials=ns.trials,
                seed=ns.seed,
                json=ns.json,
            )
        if len(ns.mats) != 2:
            raise _UsageError("order takes two matrices: X Y")
        return _cmd(
            name,
            report=False,
            _pos1=format_mat2(_require_mat(ns.mats[0])),
            _pos2=format_mat2(_require_mat(ns.mats[1])),
            json=ns.json,
        )
    if name == "lines":
        return _cmd(name, e=format_mat2(_require_mat(ns.e)), json=ns.json)
    if name == "plane":
        return _cmd(
            name,
            _pos1=format_mat2(_require_mat(ns.b1)),
            _pos2=format_mat2(_require_mat(ns.b2)),
            json=ns.json,
        )
    if name == "bell":
        kwargs = {
            "lambda": format_rational(parse_rational(ns.lam)),
            "json": ns.json,
            "float": ns.as_float,
        }
        if ns.point is not None:
            kwargs["point"] = format_mat2(_require_mat(ns.point))
        else:
            coords = [parse_quadext(part) for part in ns.coords.split(",")]
            if len(coords) != 3:
                raise _UsageError("--from needs three comma-separated coordinates")
            kwargs["from"] = ",".join(format_quadext(c).replace(" ", "") for c in coords)
        return _cmd(name, **kwargs)
    if name == "metrics":
        return _cmd(
            name,
            **{"lambda": format_rational(parse_rational(ns.lam))},
            json=ns.json,
            float=ns.as_float,
        )
    if name == "export":
        kwargs = {
            "kind": ns.kind,
            "samples": ns.samples,
            "seed": ns.seed,
            "format": ns.fmt,
            "out": ns.out,
        }
        if ns.samples < 1:
            raise _UsageError("--samples must be positive")
        if ns.kind == "section":
            if ns.a is None or ns.lam is None:
                raise _UsageError("export --kind section needs --a and --lambda")
            kwargs["a"] = format_mat2(_require_mat(ns.a))
            kwargs["lambda"] = format_rational(parse_rational(ns.lam))
        elif ns.kind == "generator-lines":
            if ns.e is None:
                raise _UsageError("export --kind generator-lines needs --e")
            kwargs["e"] = format_mat2(_require_mat(ns.e))
        if ns.z_range is not None:
            lo, sep, hi = ns.z_range.partition(":")
            if not sep:
                raise _UsageError("--z-range must look like LO:HI")
            try:
                lo_f, hi_f = float(lo), float(hi)
            except ValueError as exc:
                raise _UsageError(f"bad --z-range: {exc}") from None
            if not lo_f < hi_f:
                raise _UsageError("--z-range needs LO < HI")
            kwargs["z-range"] = f"{lo_f!r}:{hi_f!r}"
        return _cmd(name, **kwargs)
    if name == "check":
        return _cmd(
            name,
            seed=ns.seed,
            trials=ns.trials,
            suite=tuple(ns.suite) if ns.suite else (),
            json=ns.json,
        )
    raise _UsageError(f"unknown command {name!r}")


# --- rendering helpers -----------------------------------------------------


def _fmt_scalar(x, as_float: bool) -> str:
    if as_float:
        return repr(to_float(x))
    if isinstance(x, QuadExt):
        return format_quadext(x)
    return format_rational(x)


def _fmt_mat(m: Mat2, as_float: bool) -> str:
    if not as_float:
        return format_mat2(m)
    return "[" + ",".join(repr(to_float(v)) for v in m.entries) + "]"


def _emit(text: str, payload, use_json: bool) -> str:
    if use_json:
        return json.dumps(payload, indent=2)
    return text


# --- command implementations ------------------------------------------------


def _run_classify(cmd: Command) -> str:
    a = parse_mat2(cmd.arg("a"))
    lam = parse_rational(cmd.arg("lambda"))
    verdict = classify_section(a, lam)
    lines = [verdict.kind.value]
    if verdict.l_rep is not None:
        lines.append(f"  L-class rep: {format_mat2(verdict.l_rep)}")
        lines.append(f"  R-class rep: {format_mat2(verdict.r_rep)}")
    payload = {
        "command": "classify",
        "a": cmd.arg("a"),
        "lambda": cmd.arg("lambda"),
        "kind": verdict.kind.value,
        "l_rep": format_mat2(verdict.l_rep) if verdict.l_rep else None,
        "r_rep": format_mat2(verdict.r_rep) if verdict.r_rep else None,
    }
    return _emit("\n".join(lines), payload, cmd.arg("json"))


def _run_green(cmd: Command) -> str:
    a = parse_mat2(cmd.arg("_pos1"))
    b = parse_mat2(cmd.arg("_pos2"))
    rel = cmd.arg("rel")
    related = green_eq(rel, a, b)
    payload = {
        "command": "green",
        "rel": rel,
        "a": cmd.arg("_pos1"),
        "b": cmd.arg("_pos2"),
        "related": related,
    }
    return _emit("true" if related else "false", payload, cmd.arg("json"))


def _grid_params(k: int):
    # 0, 1, -1, 2, -2, ... first k values
    vals = [0]
    step = 1
    while len(vals) < k:
        vals.append(step)
        if len(vals) < k:
            vals.append(-step)
        step += 1
    return [Rational(v) for v in vals[:k]]


def _run_inverses(cmd: Command) -> str:
    a = parse_mat2(cmd.arg("a"))
    as_float = cmd.arg("float")
    chart = inverse_chart(a)
    k = cmd.arg("grid")
    params = _grid_params(k)
    fmt2 = lambda vec: f"({_fmt_scalar(vec[0], as_float)}, {_fmt_scalar(vec[1], as_float)})"
    lines = [
        f"inverses of {format_mat2(a)}: x(s,t) = (d0 + s d1)(q0 + t q1)^T",
        f"  d0 = {fmt2(chart.d0)}  d1 = {fmt2(chart.d1)}",
        f"  q0 = {fmt2(chart.q0)}  q1 = {fmt2(chart.q1)}",
        f"  {k}x{k} grid:",
    ]
    grid_json = []
    for s in params:
        for t in params:
            x = chart_eval(chart, s, t)
            lines.append(
                f"    s={format_rational(s)} t={format_rational(t)}: {_fmt_mat(x, as_float)}"
            )
            grid_json.append(
                {"s": format_rational(s), "t": format_rational(t), "x": format_mat2(x)}
            )
    payload = {
        "command": "inverses",
        "a": cmd.arg("a"),
        "chart": {
            "d0": [format_rational(v) for v in chart.d0],
            "d1": [format_rational(v) for v in chart.d1],
            "q0": [format_rational(v) for v in chart.q0],
            "q1": [format_rational(v) for v in chart.q1],
        },
        "grid": grid_json,
    }
    return _emit("\n".join(lines), payload, cmd.arg("json"))


def _run_order(cmd: Command) -> str:
    if cmd.arg("report"):
        a = parse_mat2(cmd.arg("_pos1"))
        report = order_section_report(a, cmd.arg("trials"), cmd.arg("seed"))
        payload = {"command": "order-report", **report.to_dict()}
        return _emit(report.to_text(), payload, cmd.arg("json"))
    x = parse_mat2(cmd.arg("_pos1"))
    y = parse_mat2(cmd.arg("_pos2"))
    nat = natural_le(x, y)
    mns = minus_le(x, y)
    text = f"natural_le: {str(nat).lower()}\nminus_le:   {str(mns).lower()}"
    payload = {
        "command": "order",
        "x": cmd.arg("_pos1"),
        "y": cmd.arg("_pos2"),
        "natural_le": nat,
        "minus_le": mns,
    }
    return _emit(text, payload, cmd.arg("json"))


def _run_lines(cmd: Command) -> str:
    e = parse_mat2(cmd.arg("e"))
    out = []
    payload_lines = []
    for family in ("L1", "L2"):
        g = generator_line(family, e)
        out.append(
            f"{family}: base {format_mat2(g.base)} + t * {format_mat2(g.direction)}"
        )
        payload_lines.append(
            {
                "family": family,
                "base": format_mat2(g.base),
                "direction": format_mat2(g.direction),
            }
        )
    payload = {"command": "lines", "e": cmd.arg("e"), "lines": payload_lines}
    return _emit("\n".join(out), payload, cmd.arg("json"))


def _run_plane(cmd: Command) -> str:
    b1 = parse_mat2(cmd.arg("_pos1"))
    b2 = parse_mat2(cmd.arg("_pos2"))
    verdict = classify_plane(b1, b2)
    if verdict.kind == "not_contained":
        text = "not contained in the singular variety"
    else:
        text = f"{verdict.kind}-class plane; representative {format_mat2(verdict.rep)}"
    payload = {
        "command": "plane",
        "b1": cmd.arg("_pos1"),
        "b2": cmd.arg("_pos2"),
        "kind": verdict.kind,
        "rep": format_mat2(verdict.rep) if verdict.rep else None,
    }
    return _emit(text, payload, cmd.arg("json"))


def _run_bell(cmd: Command) -> str:
    lam = parse_rational(cmd.arg("lambda"))
    as_float = cmd.arg("float")
    if cmd.arg("point") is not None:
        x = parse_mat2(cmd.arg("point"))
        p = to_bell(x, lam)
        text = "\n".join(
            f"{axis} = {_fmt_scalar(val, as_float)}"
            for axis, val in (("X", p.X), ("Y", p.Y), ("Z", p.Z))
        )
        payload = {
            "command": "bell",
            "lambda": cmd.arg("lambda"),
            "point": cmd.arg("point"),
            "X": format_quadext(p.X),
            "Y": format_quadext(p.Y),
            "Z": format_quadext(p.Z),
        }
        return _emit(text, payload, cmd.arg("json"))
    coords = [parse_quadext(part) for part in cmd.arg("from").split(",")]
    q = from_bell(BellPoint(coords[0], coords[1], coords[2], lam))
    names = ("x1", "x2", "x3", "x4")
    text = "\n".join(f"{n} = {_fmt_scalar(v, as_float)}" for n, v in zip(names, q))
    payload = {
        "command": "bell",
        "lambda": cmd.arg("lambda"),
        "from": cmd.arg("from"),
        **{n: format_quadext(v) for n, v in zip(names, q)},
    }
    return _emit(text, payload, cmd.arg("json"))


def _run_metrics(cmd: Command) -> str:
    lam = parse_rational(cmd.arg("lambda"))
    as_float = cmd.arg("float")
    m = hyperboloid_metrics(lam)
    text = "\n".join(
        [
            f"center:     {_fmt_mat(m.center, as_float)}",
            f"axis dir:   {_fmt_mat(m.axis_dir, as_float)}",
            f"radius^2:   {_fmt_scalar(m.radius_sq, as_float)}",
            "asymptotic form (frame): "
            + " ".join(
                "[" + ",".join(format_rational(v) for v in row) + "]"
                for row in m.asymptotic_form
            ),
        ]
    )
    payload = {
        "command": "metrics",
        "lambda": cmd.arg("lambda"),
        "center": format_mat2(m.center),
        "axis_dir": format_mat2(m.axis_dir),
        "radius_sq": format_rational(m.radius_sq),
        "asymptotic_form": [[format_rational(v) for v in row] for row in m.asymptotic_form],
    }
    return _emit(text, payload, cmd.arg("json"))


def _run_export(cmd: Command) -> str:
    kind = cmd.arg("kind")
    kwargs = {}
    if kind == "section":
        kwargs["a"] = parse_mat2(cmd.arg("a"))
        kwargs["lam"] = parse_rational(cmd.arg("lambda"))
    if kind == "generator-lines":
        kwargs["e"] = parse_mat2(cmd.arg("e"))
    z_range = cmd.arg("z-range")
    if z_range:
        lo, _, hi = z_range.partition(":")
        kwargs["z_span"] = (float(lo), float(hi))
    sample = sample_surface(kind, cmd.arg("samples"), cmd.arg("seed"), **kwargs)
    out = cmd.arg("out")
    if cmd.arg("format") == "csv":
        write_csv(sample, out)
    else:
        write_obj(sample, out)
    return (
        f"wrote {len(sample.points)} points"
        + (f", {len(sample.segments)} segments" if sample.segments else "")
        + f" to {out}"
    )


def _run_check(cmd: Command) -> tuple[str, bool]:
    suites = list(cmd.arg("suite") or ()) or None
    results = checks.run_checks(suites=suites, seed=cmd.arg("seed"), trials=cmd.arg("trials"))
    ok = all(r.ok for r in results)
    if cmd.arg("json"):
        payload = {
            "command": "check",
            "seed": cmd.arg("seed"),
            "lane": LANE,
            "results": [
                {"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail}
                for r in results
            ],
            "passed": sum(1 for r in results if r.ok),
            "total": len(results),
        }
        return json.dumps(payload, indent=2), ok
    return checks.render_results(results), ok


_RUNNERS = {
    "classify": _run_classify,
    "green": _run_green,
    "inverses": _run_inverses,
    "order": _run_order,
    "lines": _run_lines,
    "plane": _run_plane,
    "bell": _run_bell,
    "metrics": _run_metrics,
    "export": _run_export,
}


def run(argv) -> tuple[int, str]:
    """Execute argv; returns (exit_code, output text)."""
    try:
        cmd = parse_command(argv)
    except _UsageError as exc:
        return 1, f"usage error: {exc}"
    except LiteralParseError as exc:
        return 1, f"parse error: {exc}"
    try:
        if cmd.name == "check":
            text, ok = _run_check(cmd)
            return (0 if ok else 2), text
        return 0, _RUNNERS[cmd.name](cmd)
    except LiteralParseError as exc:
        return 1, f"parse error: {exc}"
    except DomainError as exc:
        return 2, f"domain error: {exc}"


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
