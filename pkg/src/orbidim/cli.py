"""Command-line front end: ``orbidim <verb> ...``.

Every verb emits one OutputRecord ``{schema_version, verb, payload,
assumptions}``.  JSON output uses sorted keys, so a given argv and seed
always produce the same bytes.  Exit codes: 0 ok, 1 domain error, 2 parse
error.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import dimension as dm
from . import lawton
from . import tables
from . import three_orbifold as t3
from .centralizer import InconsistentDimensions, StabKind, stab_dim
from .lie import InvalidLieType, parse_lie_type
from .orbifold import (
    BoundaryList,
    OrbifoldError,
    SignatureSyntaxError,
    classify_geometry,
    euclidean_class,
    euler_char,
    parse_signature,
    render_signature,
)

SCHEMA_VERSION = "1"


class CliParseError(ValueError):
    pass


@dataclass
class OutputRecord:
    verb: str
    payload: Any
    assumptions: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        doc = {"schema_version": self.schema_version, "verb": self.verb,
               "payload": self.payload, "assumptions": self.assumptions}
        return json.dumps(_plain(doc), sort_keys=True, indent=2)


def _plain(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, complex):
        return format_complex(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return _plain(obj.item())
    return obj


# ------------------------------------------------------------ complex syntax

_IMAG_ONLY = re.compile(r"(?<![0-9.eE])([+-]?)i$")


def parse_complex(text: str) -> complex:
    """`1.5-2i`, `3`, `-i`, `2e-3+4i`."""
    s = text.strip().replace(" ", "")
    s = _IMAG_ONLY.sub(r"\g<1>1i", s)
    try:
        return complex(s.replace("i", "j"))
    except ValueError as exc:
        raise CliParseError(f"cannot parse complex number {text!r}; use a+bi") from exc


_NEGATIVE_COMPLEX = re.compile(r"^-(\d|\.\d|i$)")


def parse_matrix(tokens: str | Sequence[str], size: int = 9) -> list[complex]:
    text = tokens if isinstance(tokens, str) else ",".join(tokens)
    entries = [parse_complex(t) for t in text.split(",") if t.strip()]
    if len(entries) != size:
        raise CliParseError(f"expected {size} entries, got {len(entries)}")
    return entries


def format_complex(z: complex, digits: int = 12) -> str:
    re_, im = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0
    if im == 0:
        return repr(re_)
    sign = "+" if im >= 0 else "-"
    return f"{re_!r}{sign}{abs(im)!r}i"


# ------------------------------------------------------------------- parsing

def _group(text: str):
    try:
        return parse_lie_type(text)
    except InvalidLieType as exc:
        raise CliParseError(str(exc)) from exc


def _sig(text: str):
    try:
        return parse_signature(text)
    except SignatureSyntaxError as exc:
        raise CliParseError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "text"), default="text")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--n-max", type=int, default=None)
    common.add_argument("--assume-hyperbolic", action="store_true")

    p = argparse.ArgumentParser(prog="orbidim", description="Dimensions of orbifold character varieties.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    verb("chi", "orbifold Euler characteristic").add_argument("signature")
    verb("classify", "geometry of a closed 2-orbifold").add_argument("signature")

    s = verb("stab", "dim g^Stab at the principal representation")
    s.add_argument("--group", required=True)
    s.add_argument("--kind", choices=("cyclic", "dihedral", "reflection"), required=True)
    s.add_argument("--k", type=int, default=1)

    for name, help_ in (("hitchin", "dimension of the Hitchin component"),
                        ("euclidean", "Euclidean character and representation variety dims"),
                        ("relative", "relative character variety dimension")):
        v = verb(name, help_)
        v.add_argument("--group", required=True)
        v.add_argument("signature")

    c = verb("canonical", "canonical component of a hyperbolic 3-orbifold from its boundary")
    c.add_argument("--group", required=True)
    c.add_argument("--boundary", action="append", required=True)

    for name in ("fig8", "whitehead"):
        verb(name, f"{name} filling component dimensions").add_argument("--n", type=int, required=True)

    lw = verb("lawton", "SL(3) trace coordinates")
    lw.add_argument("action", choices=("selftest", "coords", "paper-points"))
    lw.add_argument("--samples", type=int, default=10_000)
    # 9 entries as separate tokens or one comma-separated string; entries such
    # as -0.5+0.8i must read as values, not options
    lw._negative_number_matcher = _NEGATIVE_COMPLEX
    lw.add_argument("--a", nargs="+", metavar="Z", help="9 complex entries, row major")
    lw.add_argument("--b", nargs="+", metavar="Z", help="9 complex entries, row major")

    verb("table", "regenerate a table and diff it against the printed one").add_argument(
        "number", type=int, choices=(1, 2, 3, 4, 5))
    verb("selftest", "run internal consistency checks and the table regression")
    return p


# ------------------------------------------------------------------- verbs

_HYPERBOLIC_NOTE = {
    True: "hyperbolicity of the 3-orbifold asserted by the user (--assume-hyperbolic)",
    False: "hyperbolicity of the 3-orbifold NOT asserted; the value is meaningful only if it is hyperbolic",
}


def _cmd_chi(a):
    o = _sig(a.signature)
    return OutputRecord("chi", {"orbifold": render_signature(o), "chi": euler_char(o)})


def _cmd_classify(a):
    o = _sig(a.signature)
    return OutputRecord("classify", {"orbifold": render_signature(o),
                                     "geometry": classify_geometry(o).value,
                                     "chi": euler_char(o)})


def _cmd_stab(a):
    g = _group(a.group)
    kind = {"cyclic": StabKind.cyclic, "dihedral": StabKind.dihedral}.get(a.kind)
    stab = StabKind.reflection() if kind is None else kind(a.k)
    return OutputRecord("stab", {"group": str(g), "kind": a.kind, "k": stab.k,
                                 "dimension": stab_dim(g, stab)},
                        ["principal representation tau o hol"])


def _cmd_hitchin(a):
    rep = dm.hitchin_dim(_sig(a.signature), _group(a.group))
    return OutputRecord("hitchin", rep.as_dict())


def _cmd_euclidean(a):
    o, g = _sig(a.signature), _group(a.group)
    e = euclidean_class(o)
    if e is None:
        raise OrbifoldError(f"{render_signature(o)} is not one of the five closed orientable Euclidean orbifolds")
    return OutputRecord("euclidean", {
        "orbifold": e.label, "group": str(g), "k": e.k,
        "twisted_euler": dm.euclidean_twisted_euler(e, g),
        "invariant_dim": dm.euclidean_invariant_dim(e, g),
        "char_dim": dm.euclidean_char_dim(e, g),
        "rep_variety_dim": dm.rep_variety_dim_euclidean(e, g),
    }, ["holonomy of a horospherical cusp composed with the principal representation"])


def _cmd_relative(a):
    o, g = _sig(a.signature), _group(a.group)
    return OutputRecord("relative", {"orbifold": render_signature(o), "group": str(g),
                                     "dimension": dm.relative_dim(o, g)})


def _cmd_canonical(a):
    g = _group(a.group)
    boundary = BoundaryList(tuple(_sig(t) for t in a.boundary))
    rep = t3.canonical_dim(boundary, g)
    payload = rep.as_dict()
    payload["lower_bound"] = t3.lower_bound_dim(boundary, g)
    return OutputRecord("canonical", payload,
                        [_HYPERBOLIC_NOTE[a.assume_hyperbolic], *rep.assumptions[1:]])


def _cmd_fig8(a):
    d = t3.fig8_component_dims(a.n)
    return OutputRecord("fig8", {"n": a.n, "dimensions": dict(zip(
        ("S2(3,3,4)", "S2(2,4,5)", "S2(2,3,7)"), d))})


def _cmd_whitehead(a):
    d = t3.whitehead_component_dims(a.n)
    return OutputRecord("whitehead", {"n": a.n, "dimensions": dict(zip(
        ("D2(3,3)", "D2(2,4)", "D2(2,3)"), d))})


def _cmd_lawton(a):
    if a.action == "selftest":
        rep = lawton.selftest(samples=a.samples, seed=a.seed, tol=a.tol)
        if not rep.passed:
            raise InconsistentDimensions(f"lawton selftest failed: {rep.as_dict()}")
        return OutputRecord("lawton", rep.as_dict())
    if a.action == "paper-points":
        tol = lawton.DEFAULT_CONFIG.point_atol if a.tol is None else a.tol
        rep = lawton.verify_paper_points(tol)
        if not rep.passed:
            raise InconsistentDimensions("reference point checks failed: " + ", ".join(rep.failures))
        return OutputRecord("lawton", rep.as_dict())
    if not (a.a and a.b):
        raise CliParseError("lawton coords needs --a and --b, 9 complex entries each (row major)")
    import numpy as np

    A = np.array(parse_matrix(a.a)).reshape(3, 3)
    B = np.array(parse_matrix(a.b)).reshape(3, 3)
    det_tol = lawton.DEFAULT_CONFIG.det_tol if a.tol is None else a.tol
    c = lawton.trace_coords(A, B, det_tol)
    payload = c.as_dict()
    payload["P"], payload["Q"] = lawton.eval_P(c), lawton.eval_Q(c)
    payload["residual"] = round(lawton.lawton_residual(A, B, det_tol), 12)
    return OutputRecord("lawton", payload)


def _cmd_table(a):
    cells = tables.table_cells(a.number, a.n_max)
    report = tables.RegressionReport(tuple(cells))
    return OutputRecord("table", {"table": a.number, "rows": [c.as_dict() for c in cells],
                                  "mismatches": [c.name for c in report.failures]})


def _cmd_selftest(a):
    from .orbifold import parse_signature as ps

    checks = {}
    reg = tables.regression_tables()
    checks["tables"] = {"cells": len(reg.cells), "mismatches": [c.name for c in reg.failures]}
    cw_ok = True
    for text in ("S2(3,3,4)", "T(3,3,4)", "D(3;4)", "D2(3,3)", "D(3;4);b=2", "Ng(g=3)(2,3)"):
        o = ps(text)
        for g in (parse_lie_type("PSL(5)"), parse_lie_type("E8")):
            cw_ok &= dm.twisted_euler_cw(dm.cells_for(o, g)) == dm.twisted_euler_2orbifold(o, g)
        cw_ok &= dm.euler_char_cw(o) == euler_char(o)
    checks["cw_vs_closed_form"] = cw_ok
    checks["lawton"] = lawton.selftest(samples=1000, seed=a.seed).passed
    checks["reference_points"] = lawton.verify_paper_points().passed
    passed = cw_ok and checks["lawton"] and checks["reference_points"] and reg.passed
    return OutputRecord("selftest", {"passed": passed, "checks": checks})


_VERBS = {
    "chi": _cmd_chi, "classify": _cmd_classify, "stab": _cmd_stab, "hitchin": _cmd_hitchin,
    "euclidean": _cmd_euclidean, "relative": _cmd_relative, "canonical": _cmd_canonical,
    "fig8": _cmd_fig8, "whitehead": _cmd_whitehead, "lawton": _cmd_lawton,
    "table": _cmd_table, "selftest": _cmd_selftest,
}


# ----------------------------------------------------------------- rendering

def _text(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out += _text(v, indent + 1)
            else:
                out.append(f"{pad}{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}")
        return out
    if isinstance(value, list):
        out = []
        for v in value:
            if isinstance(v, list):
                out.append(pad + "  ".join(str(x) for x in v))
            elif isinstance(v, dict):
                out.append(pad + "  ".join(f"{k}={v[k]}" for k in sorted(v)))
            else:
                out.append(f"{pad}{v}")
        return out
    return [f"{pad}{value}"]


def _tsv(record: OutputRecord) -> str:
    payload = _plain(record.payload)
    rows = payload.get("rows") if isinstance(payload, dict) else None
    if rows:
        keys = list(rows[0])
        lines = ["\t".join(keys)]
        lines += ["\t".join(json.dumps(r[k]) if isinstance(r[k], list) else str(r[k]) for k in keys)
                  for r in rows]
        return "\n".join(lines)

    def flat(prefix, v):
        if isinstance(v, dict):
            for k in sorted(v):
                yield from flat(f"{prefix}.{k}" if prefix else k, v[k])
        else:
            yield f"{prefix}\t{json.dumps(v) if isinstance(v, list) else v}"

    return "\n".join(flat("", payload))


def render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return record.to_json()
    if fmt == "tsv":
        return _tsv(record)
    lines = _text(_plain(record.payload))
    lines += [f"assumption: {s}" for s in record.assumptions]
    return "\n".join(lines)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        record = _VERBS[args.verb](args)
    except CliParseError as exc:
        print(f"orbidim: parse error: {exc}", file=stderr)
        return 2
    except (ValueError, NotImplementedError) as exc:
        print(f"orbidim: error: {exc}", file=stderr)
        return 1
    print(render(record, args.format), file=stdout)
    if isinstance(record.payload, dict) and record.payload.get("passed") is False:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
