"""Command-line front end.

Output is JSON on stdout unless ``--format`` or ``--out`` says otherwise.
Rationals are written as "p/q" strings and divisor classes as
``[d, [m1, ..., mr]]``, so nothing machine-readable goes through floats.
Exit codes: 0 success, 2 invalid input, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cohomology import hilbert_function
from .configuration import (SLUGS, ConfigurationType, catalog, enumerate_NEG, incidence_types,
                            resolve, slug_of)
from .errors import InconsistencyError, ValidationError
from .oracle import oracle_hilbert, realize, witness_count
from .picard import DivisorClass
from .polytope import (LimitReport, RationalPolygon, complement_area, limiting_shape,
                       newton_polytope, scale, segment_count)
from .render import render_figure
from .staircase import generator_count_by_degree, staircase_from_hilbert

FORMATS = ("json", "csv", "svg")


def class_json(c: DivisorClass) -> list:
    return [c.d, list(c.mults)]


def _q(v) -> str:
    return str(Fraction(v))


def _m_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ValidationError(f"--m expects comma-separated integers, got {text!r}") from None
    if not values:
        raise ValidationError("--m is empty")
    if any(v < 1 for v in values):
        raise ValidationError(f"multiplicities must be positive, got {values}")
    return values


def _single_m(text: str) -> int:
    values = _m_list(text)
    if len(values) != 1:
        raise ValidationError(f"this command takes a single m, got {values}")
    return values[0]


def _name(cfg: ConfigurationType, text: str) -> str:
    return slug_of(cfg) or text


def _configs(text: str) -> list[tuple[str, ConfigurationType]]:
    if text == "all":
        return [(e.slug, e.cfg) for e in catalog()]
    cfg = resolve(text)
    return [(_name(cfg, text), cfg)]


def limit_json(name: str, report: LimitReport) -> dict:
    out = {
        "config": name,
        "m": [m for m, _ in report.samples],
        "vertices": report.limit.to_json(),
        "exact": report.exact,
        "complement_area": _q(complement_area(report.limit)),
        "segments": segment_count(report.limit),
        "samples": {str(m): p.to_json() for m, p in report.samples},
    }
    out["extrapolated"] = report.extrapolated.to_json() if report.extrapolated else None
    out["agrees"] = report.agrees
    return out


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# --- commands -----------------------------------------------------------------
# Each returns (json-able payload, csv text or None, svg text or None).


def cmd_catalog(args):
    entries = []
    for e in catalog():
        _, n_types = incidence_types(e.cfg)
        entries.append({"slug": e.slug, "alias": e.alias, "presumed_alias": e.presumed_alias,
                        **e.cfg.to_json(), "incidence_types": n_types})
    rows = [[e["slug"], e["alias"] or e["presumed_alias"] or "",
             " ".join("-".join(map(str, c["points"])) for c in e["curves"])] for e in entries]
    return entries, _csv(["slug", "alias", "curves"], rows), None


def cmd_neg(args):
    (_, cfg), = _configs(args.config)
    negs = enumerate_NEG(cfg)
    classes = negs.all if args.all else negs.NEG
    payload = [class_json(c) for c in classes]
    rows = [[c.d, *c.mults] for c in classes]
    return payload, _csv(["d"] + [f"m{i}" for i in range(1, cfg.r + 1)], rows), None


def cmd_hilbert(args):
    (name, cfg), = _configs(args.config)
    m = _single_m(args.m)
    table = hilbert_function(cfg, m, through=args.through)
    values = table.as_dict()
    payload = {"config": name, "m": m, "alpha": table.alpha, "closure": table.closure,
               "values": {str(t): v for t, v in values.items()}}
    if args.oracle_check:
        ps = realize(name) if name in SLUGS else None
        if ps is None:
            raise ValidationError("--oracle-check needs a catalog configuration")
        payload["oracle_agrees"] = all(oracle_hilbert(ps, m, t) == v for t, v in values.items())
    return payload, _csv(["t", "H"], sorted(values.items())), None


def cmd_gin(args):
    (name, cfg), = _configs(args.config)
    m = _single_m(args.m)
    s = staircase_from_hilbert(hilbert_function(cfg, m))
    payload = {"config": name, "m": m, **s.to_json(),
               "generators": {str(t): n for t, n in generator_count_by_degree(s).items()}}
    rows = [[i, s.lambdas[i]] for i in range(s.alpha)]
    return payload, _csv(["i", "lambda"], rows), None


def cmd_polytope(args):
    (name, cfg), = _configs(args.config)
    m = _single_m(args.m)
    p = newton_polytope(staircase_from_hilbert(hilbert_function(cfg, m)))
    payload = {"config": name, "m": m, "vertices": p.to_json(),
               "complement_area": _q(complement_area(p)),
               "scaled_complement_area": _q(complement_area(scale(p, Fraction(1, m))))}
    svg = render_figure([(f"{name}, m={m}, scaled", scale(p, Fraction(1, m)))])
    return payload, _csv(["x", "y"], p.to_json()), svg


def cmd_limit(args):
    ms = _m_list(args.m)
    reports = [(name, limiting_shape(cfg, ms)) for name, cfg in _configs(args.config)]
    payloads = [limit_json(name, rep) for name, rep in reports]
    rows = [[d["config"], x, y] for d in payloads for x, y in d["vertices"]]
    svg = render_figure([(name, rep) for name, rep in reports])
    payload = payloads if args.config == "all" else payloads[0]
    return payload, _csv(["config", "x", "y"], rows), svg


def cmd_verify(args):
    ms = _m_list(args.m)
    out = []
    for name, cfg in _configs(args.config):
        if name not in SLUGS:
            raise ValidationError(f"no committed witness for {name!r}")
        for w in range(witness_count(name)):
            ps = realize(name, w)
            for m in ms:
                table = hilbert_function(cfg, m)
                for t in range(table.t_stop + 1):
                    o = oracle_hilbert(ps, m, t)
                    out.append({"config": name, "witness": w, "m": m, "t": t,
                                "pipeline": table[t], "oracle": o, "agrees": o == table[t]})
    payload = {"agrees": all(r["agrees"] for r in out), "checks": out}
    rows = [[r["config"], r["witness"], r["m"], r["t"], r["pipeline"], r["oracle"], r["agrees"]]
            for r in out]
    return payload, _csv(["config", "witness", "m", "t", "pipeline", "oracle", "agrees"], rows), None


def _load_limits(path: str) -> list[tuple[str, RationalPolygon]]:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed limit JSON: {exc}") from exc
    items = data if isinstance(data, list) else [data]
    try:
        return [(d.get("config", f"panel {k + 1}"), RationalPolygon.from_json(d["vertices"]))
                for k, d in enumerate(items)]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(f"not a limit report: {exc}") from exc


def cmd_figure(args):
    panels = _load_limits(args.input)
    svg = render_figure(panels)
    payload = {"panels": [name for name, _ in panels]}
    return payload, None, svg


COMMANDS = {
    "catalog": cmd_catalog, "neg": cmd_neg, "hilbert": cmd_hilbert, "gin": cmd_gin,
    "polytope": cmd_polytope, "limit": cmd_limit, "verify": cmd_verify, "figure": cmd_figure,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatgin",
                                     description="Fat points on six points of the plane: "
                                                 "Hilbert functions, gins and their limiting shapes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default json; figure defaults to svg)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", parents=[common], help="list the catalog of configuration types")

    p = sub.add_parser("neg", parents=[common], help="negative curve classes")
    p.add_argument("--config", required=True, help="slug, catalog letter or JSON file")
    p.add_argument("--all", action="store_true", help="include the exceptional classes")

    for name, helptext in (("hilbert", "Hilbert function of I^(m)"),
                           ("gin", "staircase of the generic initial ideal"),
                           ("polytope", "Newton polygon of the gin")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--config", required=True)
        p.add_argument("--m", required=True)
        if name == "hilbert":
            p.add_argument("--through", type=int, default=None, help="extend the table to this degree")
            p.add_argument("--oracle-check", action="store_true",
                           help="compare against linear algebra on committed coordinates")

    p = sub.add_parser("limit", parents=[common], help="limiting shape of P_m / m")
    p.add_argument("--config", required=True, help='configuration, or "all" for the catalog')
    p.add_argument("--m", default="12,24,36", help="sample multiplicities (default 12,24,36)")

    p = sub.add_parser("verify", parents=[common], help="oracle cross-check per (m, t)")
    p.add_argument("--config", required=True, help='configuration slug or "all"')
    p.add_argument("--m", default="1,2,3")

    p = sub.add_parser("figure", parents=[common], help="SVG panels from limit JSON")
    p.add_argument("--input", required=True, help="output of the limit command")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise ValidationError(f"cannot write {out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, csv_text, svg = COMMANDS[args.command](args)
        fmt = args.format or ("svg" if args.command == "figure" else "json")
        if fmt == "json":
            text = json.dumps(payload, indent=2) + "\n"
        elif fmt == "csv":
            if csv_text is None:
                raise ValidationError(f"{args.command} has no CSV form")
            text = csv_text
        else:
            if svg is None:
                raise ValidationError(f"{args.command} has no SVG form")
            text = svg
        _emit(text, args.out)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    return 0


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
