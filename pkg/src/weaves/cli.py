"""Command line front end.

Exit status: 0 on success, 1 on a domain error (message on stderr), 2 on
a usage error.  ``--json`` switches any subcommand to JSON output.
Matrices are given as ``01/10`` strings or ``@file.json`` weave documents.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .census import CSV_COLUMNS, CensusConfig, bound_check, census, write_csv
from .core import ComponentId, CrossingMatrix, WeaveError
from .formats import loads, parse_matrix, render
from .generators import plain, satin, twill
from .hyperbolicity import (
    HyperbolicityVerdict,
    JsjReport,
    Verdict,
    is_hyperbolic,
    is_layered,
    jsj_report,
    volume_upper_bound,
)
from .isotopy import (
    DEFAULT_CAP,
    canonical_form,
    homeo_canonical_form,
    is_isotopic,
    isotopy_witness,
    orbit,
)


def _matrix(arg: str) -> CrossingMatrix:
    if arg.startswith("@"):
        return loads(Path(arg[1:]).read_text()).matrix
    return parse_matrix(arg)


def _comp(c: ComponentId) -> dict:
    return {"kind": str(c.kind), "index": c.index}


def _moves(moves) -> list[dict]:
    return [mv.to_json() for mv in moves]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_canon(args) -> int:
    M = _matrix(args.matrix)
    cf = canonical_form(M, args.cap)
    moves = isotopy_witness(M, cf.matrix, args.cap)
    _emit(args, {"canonical": cf.text, "orbit_size": cf.orbit_size, "moves": _moves(moves)}, cf.text)
    return 0


def cmd_homeo_canon(args) -> int:
    M = _matrix(args.matrix)
    cf = homeo_canonical_form(M, args.cap)
    _emit(args, {"canonical": cf.text, "m": cf.matrix.m, "n": cf.matrix.n,
                 "orbit_size": cf.orbit_size, "moves": []}, cf.text)
    return 0


def cmd_isotopic(args) -> int:
    A, B = _matrix(args.a), _matrix(args.b)
    same = is_isotopic(A, B, args.cap)
    moves = isotopy_witness(A, B, args.cap) if same else ()
    canon = canonical_form(A, args.cap) if A.m and A.n else None
    text = "isotopic" if same else "not isotopic"
    if same and args.witness:
        text += "\n" + (" ".join(map(str, moves)) or "(identity)")
    _emit(args, {
        "isotopic": same,
        "canonical": canon.text if canon else None,
        "orbit_size": canon.orbit_size if canon else None,
        "moves": _moves(moves),
    }, text)
    return 0


def cmd_orbit(args) -> int:
    M = _matrix(args.matrix)
    orb = orbit(M, args.cap)
    members = orb.members()
    lines = [f"orbit size {orb.size}"]
    payload = {"canonical": members[0].text, "orbit_size": orb.size,
               "members": [X.text for X in members], "moves": []}
    if args.witness:
        paths = {X.text: _moves(orb.path_to(X)) for X in members}
        payload["witnesses"] = paths
        lines += [f"{X.text}  {' '.join(map(str, orb.path_to(X))) or '(seed)'}" for X in members]
    else:
        lines += [X.text for X in members]
    _emit(args, payload, "\n".join(lines))
    return 0


def verdict_json(M: CrossingMatrix, v: HyperbolicityVerdict) -> dict:
    witness = None
    if v.verdict is Verdict.LAYERED:
        witness = {"kind": "layering", "indices": [], "moves": [],
                   "layers": [[_comp(c) for c in layer] for layer in v.layering.layers]}
    elif v.verdict is Verdict.PARALLEL:
        w = v.parallel
        witness = {"kind": str(w.kind), "indices": list(w.indices), "moves": _moves(w.moves),
                   "layers": [], "arc": list(w.arc) if w.arc is not None else None}
    return {"verdict": v.verdict.value, "witness": witness,
            "volume_upper_bound": volume_upper_bound(M)}


def cmd_hyperbolic(args) -> int:
    M = _matrix(args.matrix)
    v = is_hyperbolic(M)
    text = str(v)
    if args.witness:
        if v.verdict is Verdict.LAYERED:
            text += "\n" + "\n".join(
                f"layer {k}: " + " ".join(map(str, layer))
                for k, layer in enumerate(v.layering.layers, start=1)
            )
        elif v.verdict is Verdict.PARALLEL:
            w = v.parallel
            text += f"\n{w.kind}s {w.indices[0]} and {w.indices[1]}"
            text += "\nmoves: " + (" ".join(map(str, w.moves)) or "(already adjacent)")
    _emit(args, verdict_json(M, v), text)
    return 0


def cmd_layered(args) -> int:
    M = _matrix(args.matrix)
    lv = is_layered(M)
    lines = ["layered" if lv.layered else "not layered"]
    if lv.layered:
        lines += [f"layer {k}: " + " ".join(map(str, layer)) for k, layer in enumerate(lv.layers, start=1)]
    _emit(args, {"layered": lv.layered, "layers": [[_comp(c) for c in layer] for layer in lv.layers]},
          "\n".join(lines))
    return 0


def report_json(rep: JsjReport) -> dict:
    return {"pieces": [
        {
            "type": p.kind.value,
            "components": [_comp(c) for c in p.components],
            "cores": [_comp(c) for c in p.cores],
            "multiplicity": p.multiplicity,
            "matrix": None if p.matrix is None else {"m": p.matrix.m, "n": p.matrix.n, "text": p.matrix.text},
        }
        for p in rep.pieces
    ]}


def cmd_decompose(args) -> int:
    M = _matrix(args.matrix)
    rep = jsj_report(M)
    lines = []
    for p in rep.pieces:
        comps = " ".join(f"{c}*" if c in p.cores else str(c) for c in p.components)
        shape = f" {p.matrix.m}x{p.matrix.n}" if p.matrix is not None else f" k={p.multiplicity}"
        lines.append(f"{p.kind.value}{shape}: {comps}")
    _emit(args, report_json(rep), "\n".join(lines))
    return 0


def cmd_census(args) -> int:
    config = CensusConfig(jobs=args.jobs, cap=args.cap, classes=not args.no_classes,
                          max_cells=args.max_cells)
    row = census(args.m, args.n, config)
    if args.csv:
        write_csv([row], args.csv)
    data = row.as_csv()
    payload = {k: getattr(row, k) for k in CSV_COLUMNS}
    payload["bounds_ok"] = bound_check(row)
    _emit(args, payload, "\n".join(f"{k}: {data[k]}" for k in CSV_COLUMNS))
    return 0


def cmd_render(args) -> int:
    M = _matrix(args.matrix)
    out = render(M, args.style)
    if args.output:
        Path(args.output).write_text(out)
        return 0
    if args.json:
        print(json.dumps({"style": args.style, "output": out}))
    else:
        sys.stdout.write(out if out.endswith("\n") else out + "\n")
    return 0


def cmd_gen(args) -> int:
    if args.family == "plain":
        doc = plain(args.m, args.n)
    elif args.family == "twill":
        doc = twill(args.m, args.n, args.over, args.under)
    else:
        doc = satin(args.n, args.step)
    _emit(args, doc.to_json(), doc.matrix.text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    capped = argparse.ArgumentParser(add_help=False)
    capped.add_argument("--cap", type=int, default=DEFAULT_CAP, help="orbit state budget")

    parser = argparse.ArgumentParser(prog="weaves", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", parents=[common, capped], help="canonical form up to isotopy")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("homeo-canon", parents=[common, capped], help="canonical form up to homeomorphism")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_homeo_canon)

    p = sub.add_parser("isotopic", parents=[common, capped], help="decide isotopy of two diagrams")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_isotopic)

    p = sub.add_parser("orbit", parents=[common, capped], help="list the isotopy orbit")
    p.add_argument("matrix")
    p.add_argument("--witness", action="store_true", help="show a move sequence to each member")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("hyperbolic", parents=[common], help="hyperbolicity verdict")
    p.add_argument("matrix")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_hyperbolic)

    p = sub.add_parser("layered", parents=[common], help="layering verdict")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_layered)

    p = sub.add_parser("decompose", parents=[common], help="JSJ-style piece report")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("census", parents=[common, capped], help="exhaustive census of m×n diagrams")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--csv", metavar="OUT")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-cells", type=int, default=25)
    p.add_argument("--no-classes", action="store_true", help="count only, skip class tables")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("render", parents=[common], help="draw a diagram")
    p.add_argument("matrix")
    p.add_argument("--style", choices=("ascii", "svg"), default="ascii")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("gen", parents=[common], help="generate a basic weave")
    fam = p.add_subparsers(dest="family", required=True)
    g = fam.add_parser("plain", parents=[common])
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g = fam.add_parser("twill", parents=[common])
    g.add_argument("m", type=int)
    g.add_argument("n", type=int)
    g.add_argument("over", type=int)
    g.add_argument("under", type=int)
    g = fam.add_parser("satin", parents=[common])
    g.add_argument("n", type=int)
    g.add_argument("step", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except WeaveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
