"""Command-line entry point.

Graph files use the rotgraph-v1 JSON format; ``-`` stands for stdin or
stdout.  Machine-readable results go to stdout as JSON, short human
summaries to stderr.  Exit codes: 0 success, 1 a check failed, 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import basilica, generators
from .connectivity import neighborhood_graph
from .core import RotationGraph, adjacency_matrix, connected_components, from_json, to_dot, to_json
from .errors import ZZLabError
from .iso import is_isomorphic, recognize_double_cycle
from .parity import block_component_correspondence, parity_decomposition
from .products import replacement_product, zigzag_product
from .spectral import circulant_spectrum, dc_spectrum, eigenvalues_symmetric


class CheckFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("detail", ""))
        self.payload = payload


def _default_seed() -> int:
    try:
        return int(os.environ.get("ZZLAB_SEED", "0"))
    except ValueError:
        return 0


def _read_graph(path: str) -> RotationGraph:
    if path == "-":
        return from_json(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return from_json(fh.read())


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_graph(g: RotationGraph, out: str, fmt: str, name: str = "G") -> None:
    _write_text(out, to_dot(g, name) if fmt == "dot" else to_json(g))


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


# -- verbs -----------------------------------------------------------------


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params

    def need(count: int) -> list[int]:
        if len(params) != count:
            raise SystemExit(_usage(f"gen {kind} takes {count} integer argument(s)"))
        try:
            return [int(x) for x in params]
        except ValueError:
            raise SystemExit(_usage("expected integer arguments")) from None

    if kind == "cycle":
        (n,) = need(1)
        g = generators.cycle_graph(n, start=args.start)
    elif kind == "complete":
        if not params:
            raise SystemExit(_usage("gen complete needs a labelling variant"))
        variant = params[0]
        param = int(params[1]) if len(params) > 1 else None
        g = generators.complete_graph(variant, param)
    elif kind == "kn":
        (m,) = need(1)
        g = generators.complete_cyclic(m)
    elif kind == "cube":
        (k,) = need(1)
        g = generators.hamming_cube(k)
    elif kind == "double-cycle":
        (n,) = need(1)
        g = generators.double_cycle(n)
    elif kind == "basilica":
        (n,) = need(1)
        g = basilica.schreier_graph(n)
    elif kind == "random":
        n, degree = need(2)
        g = generators.random_regular(n, degree, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(_usage(f"unknown generator {kind}"))
    _emit_graph(g, args.output, args.format, kind)
    _note(f"{kind}: {g.n} vertices, degree {g.degree}")
    return 0


def cmd_product(args) -> int:
    g1, g2 = _read_graph(args.g1), _read_graph(args.g2)
    build = zigzag_product if args.kind == "zigzag" else replacement_product
    g = build(g1, g2, allow_disconnected=args.allow_disconnected)
    _emit_graph(g, args.output, args.format, args.kind)
    _note(f"{args.kind} product: {g.n} vertices, degree {g.degree}")
    return 0


def _components_report(g: RotationGraph) -> dict:
    a = adjacency_matrix(g)
    comps = connected_components(g)
    rows = []
    for c in comps:
        sub = a[np.ix_(c, c)]
        rows.append({"size": len(c), "double_cycle": recognize_double_cycle(sub),
                     "vertices": [g.names[x] for x in c]})
    return {"components": len(comps), "sizes": [len(c) for c in comps], "parts": rows}


def _spectrum(g: RotationGraph, formula: str):
    a = adjacency_matrix(g)
    numeric = eigenvalues_symmetric(a)
    if formula == "numeric":
        return numeric, None
    if formula in ("dc", "auto"):
        n = recognize_double_cycle(a)
        if n is not None:
            return dc_spectrum(n), numeric
        if formula == "dc":
            raise CheckFailed({"error": "NotDoubleCycle", "detail": "graph is not a double cycle"})
    first = a[0].tolist()
    circulant = all(a[r].tolist() == first[-r:] + first[:-r] for r in range(1, len(a)))
    if formula in ("circulant", "auto") and circulant:
        return circulant_spectrum(first), numeric
    if formula == "circulant":
        raise CheckFailed({"error": "NotCirculant", "detail": "adjacency is not circulant in vertex order"})
    return numeric, None


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    if args.what == "parity":
        report = parity_decomposition(g).to_dict()
        _note(f"parity blocks: sizes {report['sizes']}")
    elif args.what == "correspond":
        dec = parity_decomposition(g)
        report = block_component_correspondence(g, dec).to_dict(dec)
        _note(f"{report['blocks']} blocks <-> {report['components']} components")
    elif args.what == "neighborhood":
        report = neighborhood_graph(g).to_dict()
        _note(f"neighborhood graph connected: {report['connected']}")
    elif args.what == "components":
        report = _components_report(g)
        _note(f"components: sizes {report['sizes']}")
    else:
        spec, numeric = _spectrum(g, args.formula)
        report = spec.to_dict()
        if numeric is not None:
            report["numeric_max_error"] = max(
                abs(x - y) for x, y in zip(spec.eigenvalues, numeric.eigenvalues))
        if args.csv:
            _write_text(args.csv, spec.to_csv())
        _note(f"spectrum ({spec.source}): {len(spec.eigenvalues)} eigenvalues")
    _emit_json(report)
    return 0


def cmd_check(args) -> int:
    a, b = _read_graph(args.a), _read_graph(args.b)
    result = is_isomorphic(adjacency_matrix(a), adjacency_matrix(b))
    _emit_json(result.to_dict())
    _note("isomorphic" if result else "not isomorphic")
    return 0 if result else 1


def _basilica_level(level: int, check: str) -> dict:
    out: dict = {"level": level}
    ok = True
    if check in ("graph", "all"):
        g = basilica.schreier_graph(level)
        comps = connected_components(g)
        graph_ok = g.n == 2 ** level and g.degree == 4 and len(comps) == 1
        out["graph"] = {"vertices": g.n, "degree": g.degree, "components": len(comps),
                        "ab_inverse_order": basilica.ab_inverse_order(level), "ok": graph_ok}
        ok &= graph_ok
    if check in ("zigzag", "all"):
        rep = basilica.basilica_zigzag_check(level)
        out["zigzag"] = rep.to_dict()
        ok &= rep.ok
    if check in ("spectrum", "all"):
        try:
            rep = basilica.basilica_spectrum_check(level, strict=False)
            out["spectrum"] = rep.to_dict()
            ok &= rep.ok
        except ZZLabError as exc:
            out["spectrum"] = {"error": exc.tag, "detail": str(exc), "ok": False}
            ok = False
    out["ok"] = bool(ok)
    return out


def cmd_basilica(args) -> int:
    levels = args.level
    if args.jobs > 1 and len(levels) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_basilica_level, levels, [args.check] * len(levels)))
    else:
        reports = [_basilica_level(n, args.check) for n in levels]
    _emit_json({"levels": reports, "ok": all(r["ok"] for r in reports)})
    for r in reports:
        extra = ""
        if "zigzag" in r:
            extra = f", DC_{r['zigzag']['double_cycle']}"
        _note(f"level {r['level']}: {'ok' if r['ok'] else 'FAILED'}{extra}")
    return 0 if all(r["ok"] for r in reports) else 1


def cmd_export(args) -> int:
    g = _read_graph(args.graph)
    _emit_graph(g, args.output, args.format, args.name)
    return 0


# -- parser ----------------------------------------------------------------


def _usage(msg: str) -> int:
    print(f"zzlab: error: {msg}", file=sys.stderr)
    return 2


def _level_list(text: str) -> list[int]:
    levels = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            levels.extend(range(int(lo), int(hi) + 1))
        else:
            levels.append(int(part))
    if not levels or min(levels) < 1:
        raise argparse.ArgumentTypeError("levels must be positive integers")
    return levels


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zzlab", description="Rotation-map graphs and zig-zag products")
    sub = p.add_subparsers(dest="verb", required=True)

    def out_flags(sp):
        sp.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        sp.add_argument("--format", choices=("json", "dot"), default="json")

    g = sub.add_parser("gen", help="generate a named graph")
    g.add_argument("kind", choices=("cycle", "complete", "kn", "cube", "double-cycle", "basilica", "random"))
    g.add_argument("params", nargs="*", help="size arguments, or a labelling variant for 'complete'")
    g.add_argument("--start", type=int, default=1, help="first vertex name of a cycle")
    g.add_argument("--seed", type=int, default=_default_seed())
    out_flags(g)
    g.set_defaults(func=cmd_gen)

    pr = sub.add_parser("product", help="replacement or zig-zag product of two graphs")
    pr.add_argument("--kind", choices=("replace", "zigzag"), required=True)
    pr.add_argument("g1")
    pr.add_argument("g2")
    pr.add_argument("--allow-disconnected", action="store_true")
    out_flags(pr)
    pr.set_defaults(func=cmd_product)

    an = sub.add_parser("analyze", help="analyses of a single graph")
    an.add_argument("what", choices=("parity", "correspond", "neighborhood", "spectrum", "components"))
    an.add_argument("graph", nargs="?", default="-")
    an.add_argument("--formula", choices=("auto", "numeric", "circulant", "dc"), default="auto")
    an.add_argument("--csv", help="also write the spectrum as CSV to this file")
    an.set_defaults(func=cmd_analyze)

    ch = sub.add_parser("check", help="checks between graphs")
    ch_sub = ch.add_subparsers(dest="check", required=True)
    iso = ch_sub.add_parser("iso", help="isomorphism test with certificate")
    iso.add_argument("a")
    iso.add_argument("b")
    iso.set_defaults(func=cmd_check)

    ba = sub.add_parser("basilica", help="Basilica Schreier graph checks")
    ba.add_argument("--level", type=_level_list, required=True, help="level, list or range like 1-8")
    ba.add_argument("--check", choices=("graph", "zigzag", "spectrum", "all"), default="all")
    ba.add_argument("--jobs", type=int, default=1)
    ba.set_defaults(func=cmd_basilica)

    ex = sub.add_parser("export", help="re-emit a graph as canonical JSON or DOT")
    ex.add_argument("graph", nargs="?", default="-")
    ex.add_argument("--name", default="G")
    out_flags(ex)
    ex.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except CheckFailed as exc:
        _emit_json(exc.payload)
        return 1
    except ZZLabError as exc:
        _emit_json({"error": exc.tag, "detail": str(exc)})
        return 1
    except (OSError, ValueError) as exc:
        _emit_json({"error": type(exc).__name__, "detail": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
