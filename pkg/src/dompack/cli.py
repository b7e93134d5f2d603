"""Command-line surface: solve, construct, generate, validate, scan.

Exit codes are part of the stable interface: 0 ok, 1 scan check violated,
2 parse error, 3 oversize, 4 construction failure, 5 validation failure.
All JSON output is one record per line with exact "p/q" rationals.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from multiprocessing import Pool

from . import constructions, engine, engine_twinwidth, engine_twodeg, families, oracles
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    Mode,
    XYInstance,
    from_edge_json,
    from_graph6,
    is_connected,
    to_graph6,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_OVERSIZE = 3
EXIT_CONSTRUCTION = 4
EXIT_VALIDATION = 5

FLAG_SUBCUBIC = 1
FLAG_TREE = 2
FLAG_CONNECTED = 4
FLAG_ATFREE = 8
ATFREE_FLAG_MAX_N = 12


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from exc


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    stripped = text.strip()
    try:
        if path.endswith(".json") or stripped.startswith("{"):
            return from_edge_json(stripped)
        line = next((ln for ln in text.splitlines() if ln.strip()), "")
        return from_graph6(line)
    except (Graph6Error, GraphError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from exc


def _parse_ids(arg: str | None, g: Graph) -> frozenset[int]:
    if not arg:
        return frozenset()
    if arg == "all":
        return frozenset(g.vertices())
    try:
        ids = frozenset(int(tok) for tok in arg.split(",") if tok.strip())
    except ValueError as exc:
        raise CliError(f"bad id list {arg!r}", EXIT_PARSE) from exc
    for v in ids:
        if not (0 <= v < g.n):
            raise CliError(f"vertex {v} out of range", EXIT_PARSE)
    return ids


def _frac_str(f: Fraction | None):
    return None if f is None else f"{f.numerator}/{f.denominator}"


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    mode = Mode(args.mode)
    try:
        inst = XYInstance(g, _parse_ids(args.x, g), _parse_ids(args.y, g), mode)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    try:
        if args.variant == "gamma":
            res = oracles.exact_domination(inst, max_n=args.max_n)
        else:
            res = oracles.exact_packing(inst, max_n=args.max_n)
    except oracles.OversizeError as exc:
        raise CliError(str(exc), EXIT_OVERSIZE) from exc
    print(oracles.exact_result_json(args.variant, inst, res))
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------


def _completion_width(completion: Graph) -> int:
    peo = families.recognize_chordal(completion)
    if peo is None:
        raise CliError("certificate is not chordal", EXIT_CONSTRUCTION)
    seen: set[int] = set()
    omega = 0
    for v in peo:
        omega = max(omega, 1 + len(completion.adj[v] - seen))
        seen.add(v)
    return omega - 1


def cmd_construct(args) -> int:
    cls = args.cls
    try:
        if cls == "unitdisk":
            cfg = constructions.DiskConfiguration.from_csv(_read_text(args.input))
            witness = constructions.construct_unitdisk(cfg)
        elif cls == "convex":
            if not args.certificate:
                raise CliError("--certificate (convex encoding JSON) required", EXIT_PARSE)
            g = _load_graph(args.input)
            enc = constructions.ConvexEncoding.from_json(_read_text(args.certificate))
            witness = constructions.construct_convex(g, enc)
        elif cls == "treewidth":
            if not args.certificate:
                raise CliError("--certificate (chordal completion) required", EXIT_PARSE)
            g = _load_graph(args.input)
            completion = _load_graph(args.certificate)
            witness = engine.run_treewidth(g, completion, _completion_width(completion))
        elif cls == "twinwidth":
            if not args.certificate:
                raise CliError("--certificate (contraction sequence) required", EXIT_PARSE)
            g = _load_graph(args.input)
            try:
                seq = families.ContractionSequence.from_json(_read_text(args.certificate))
            except GraphError as exc:
                raise CliError(str(exc), EXIT_PARSE) from exc
            k = max(2, seq.declared_width)
            witness = engine_twinwidth.run_twinwidth(g, seq, k)
        elif cls == "planar":
            g = _load_graph(args.input)
            rs = None
            if args.certificate:
                try:
                    rs = families.RotationSystem.from_json(_read_text(args.certificate))
                except GraphError as exc:
                    raise CliError(str(exc), EXIT_PARSE) from exc
            witness = engine.run_planar(g, rs)
        elif cls == "twodeg":
            witness = engine_twodeg.run_twodeg(_load_graph(args.input))
        elif cls == "dh":
            witness = engine.run_distance_hereditary(_load_graph(args.input))
        elif cls == "atfree":
            witness = constructions.construct_atfree(_load_graph(args.input))
        else:  # generic
            witness = constructions.construct_generic(_load_graph(args.input))
    except GraphError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    except engine.EngineError as exc:
        trace = getattr(exc, "trace", ())
        for app in trace:
            print(json.dumps(app.to_json_obj(), separators=(",", ":")), file=sys.stderr)
        raise CliError(f"construction failed: {exc}", EXIT_CONSTRUCTION) from exc
    print(witness.to_json())
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def _parse_params(spec: str | None) -> dict[str, str]:
    out: dict[str, str] = {}
    if not spec:
        return out
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise CliError(f"bad parameter {item!r} (expected key=value)", EXIT_PARSE)
        key, val = item.split("=", 1)
        out[key.strip()] = val.strip()
    return out


def cmd_generate(args) -> int:
    params = _parse_params(args.params)

    def want_int(name, default=None):
        if name not in params:
            if default is None:
                raise CliError(f"family {args.family} needs parameter {name}", EXIT_PARSE)
            return default
        try:
            return int(params[name])
        except ValueError as exc:
            raise CliError(f"parameter {name} must be an integer", EXIT_PARSE) from exc

    try:
        fam = args.family
        if fam == "chained-blocks":
            print(to_graph6(families.gen_chained_blocks(want_int("i"))))
        elif fam == "split":
            print(to_graph6(families.gen_split(want_int("k"))))
        elif fam == "threedeg":
            print(to_graph6(families.gen_threedeg(want_int("k"))))
        elif fam == "rook":
            print(to_graph6(families.gen_rook(want_int("n"))))
        elif fam == "cycle":
            print(to_graph6(families.gen_cycle(want_int("n"))))
        elif fam == "path":
            print(to_graph6(families.gen_path(want_int("n"))))
        elif fam == "petersen":
            print(to_graph6(families.gen_petersen()))
        elif fam == "random-tree":
            print(to_graph6(families.gen_random_tree(want_int("n"), want_int("seed", 0))))
        elif fam == "random-unitdisk":
            box = float(params.get("box", "10"))
            cfg = families.gen_random_unitdisk(want_int("n"), box, want_int("seed", 0))
            sys.stdout.write(cfg.to_csv())
        elif fam == "random-convex":
            enc = families.gen_random_convex(
                want_int("nx"), want_int("ny"), want_int("seed", 0)
            )
            print(enc.to_json())
        else:
            raise CliError(f"unknown family {fam!r}", EXIT_PARSE)
    except families.OversizeFamilyError as exc:
        raise CliError(str(exc), EXIT_OVERSIZE) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    return EXIT_OK


def cmd_list_families(_args) -> int:
    for entry in families.family_metadata():
        print(json.dumps(entry, separators=(",", ":")))
    return EXIT_OK


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

_CLASS_MODES = {
    "distance-hereditary": Mode.TOTAL,
    "twin-width": Mode.BLACK,
}

# Additive slack in the class's budget inequality |D| <= c|P| + offset.
_CLASS_BUDGET_OFFSETS = {
    "at-free": 2,
}


def _validate_witness_doc(doc: dict, g: Graph) -> str | None:
    if "variant" in doc:
        mode = Mode(doc.get("mode", "plain"))
        inst = XYInstance(
            g, frozenset(doc.get("x", ())), frozenset(doc.get("y", ())), mode
        )
        members = frozenset(doc["witness"])
        if len(members) != doc["value"]:
            return "witness size disagrees with value"
        if doc["variant"] == "gamma":
            if not oracles.check_xy_dominating(inst, members):
                return "witness is not a dominating set for the instance"
        elif doc["variant"] == "rho":
            if not oracles.check_xy_packing(inst, members):
                return "witness is not a packing for the instance"
        else:
            return f"unknown variant {doc['variant']!r}"
        return None
    if "class" in doc:
        mode = _CLASS_MODES.get(doc["class"], Mode.PLAIN)
        inst = XYInstance(g, mode=mode)
        d = frozenset(doc["D"])
        p = frozenset(doc["P"])
        if not oracles.check_xy_dominating(inst, d):
            return "D fails the dominating checker"
        if not oracles.check_xy_packing(inst, p):
            return "P fails the packing checker"
        num, den = doc["constant"].split("/")
        constant = Fraction(int(num), int(den))
        offset = _CLASS_BUDGET_OFFSETS.get(doc["class"], 0)
        if p and len(d) > constant * len(p) + offset:
            return "size of D exceeds the certified budget"
        if not p and d:
            return "nonempty D with empty P"
        return None
    return "unrecognized witness JSON (need 'variant' or 'class')"


def cmd_validate(args) -> int:
    what = args.what
    try:
        if what == "witness":
            doc = json.loads(_read_text(args.files[0]))
            g = _load_graph(args.files[1])
            problem = _validate_witness_doc(doc, g)
        elif what == "tw-cert":
            completion = _load_graph(args.files[0])
            g = _load_graph(args.files[1])
            if args.k is None and families.recognize_chordal(completion) is None:
                problem = "certificate is not chordal"
            else:
                k = args.k if args.k is not None else _completion_width(completion)
                problem = (
                    None
                    if families.validate_tw_certificate(g, completion, k)
                    else f"not a chordal supergraph of width <= {k}"
                )
        elif what == "tww-seq":
            seq = families.ContractionSequence.from_json(_read_text(args.files[0]))
            g = _load_graph(args.files[1])
            problem = (
                None
                if families.validate_contraction_sequence(g, seq)
                else "sequence invalid (red degree above declared width, or malformed)"
            )
        else:  # rotation
            rs = families.RotationSystem.from_json(_read_text(args.files[0]))
            g = _load_graph(args.files[1])
            problem = (
                None
                if families.validate_rotation_planarity(g, rs)
                else "rotation system fails the genus-0 face count"
            )
    except (GraphError, json.JSONDecodeError, KeyError, ValueError, IndexError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(f"cannot parse validation inputs: {exc}", EXIT_PARSE) from exc
    if problem is not None:
        print(f"invalid: {problem}", file=sys.stderr)
        return EXIT_VALIDATION
    print("ok")
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------


def _class_flags(g: Graph) -> int:
    flags = 0
    if g.max_degree() <= 3:
        flags |= FLAG_SUBCUBIC
    connected = is_connected(g)
    if connected:
        flags |= FLAG_CONNECTED
    if connected and g.edge_count == g.n - 1:
        flags |= FLAG_TREE
    if g.n <= ATFREE_FLAG_MAX_N and families.recognize_at_free(g):
        flags |= FLAG_ATFREE
    return flags


def _scan_one(task):
    g6, check = task
    g = from_graph6(g6)
    inst = XYInstance(g)
    gamma = oracles.exact_domination(inst).value
    rho = oracles.exact_packing(inst).value
    flags = _class_flags(g)
    violation = False
    equality = False
    applicable = True
    if check == "duality":
        violation = gamma < rho
        equality = gamma == rho
    elif check == "henning":
        applicable = bool(flags & FLAG_SUBCUBIC) and bool(flags & FLAG_CONNECTED)
        if applicable:
            violation = gamma > 2 * rho + 1
            equality = gamma == 2 * rho + 1
    else:  # treeeq
        applicable = bool(flags & FLAG_TREE)
        if applicable:
            violation = gamma != rho
            equality = gamma == rho
    record = {
        "graph6": g6,
        "n": g.n,
        "m": g.edge_count,
        "gamma": gamma,
        "rho": rho,
        "ratio": _frac_str(Fraction(gamma, rho)) if rho else None,
        "class_flags": flags,
        "check": check,
        "applicable": applicable,
        "violation": violation,
        "equality": equality,
    }
    return record


def _scan_sources(args, counters):
    if args.enumerate_n is not None:
        if args.enumerate_n > 7:
            raise CliError("built-in enumeration capped at n = 7", EXIT_OVERSIZE)
        for g in families.enumerate_labeled_graphs(args.enumerate_n):
            yield to_graph6(g)
        return
    for lineno, line in enumerate(_read_text(args.file).splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            from_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: skipped malformed graph6 ({exc})", file=sys.stderr)
            counters["malformed"] += 1
            continue
        yield line


def _passes_filter(g6: str, filt: str) -> bool:
    if filt == "all":
        return True
    g = from_graph6(g6)
    if filt == "subcubic":
        return g.max_degree() <= 3
    return is_connected(g) and g.edge_count == g.n - 1


def cmd_scan(args) -> int:
    _normalize_scan_source(args)
    counters = {"malformed": 0}
    tasks = (
        (g6, args.check)
        for g6 in _scan_sources(args, counters)
        if _passes_filter(g6, args.filter)
    )
    summary = {
        "graphs": 0,
        "checked": 0,
        "violations": 0,
        "equalities": 0,
        "malformed": 0,
    }
    violations = []
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            records = pool.imap(_scan_one, tasks, chunksize=64)
            for record in records:
                _emit_scan_record(record, summary, violations)
    else:
        for task in tasks:
            _emit_scan_record(_scan_one(task), summary, violations)
    summary["malformed"] = counters["malformed"]
    print(json.dumps({"summary": summary}, separators=(",", ":")))
    if violations:
        for record in violations[:10]:
            print(
                "counterexample: " + json.dumps(record, separators=(",", ":")),
                file=sys.stderr,
            )
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _emit_scan_record(record, summary, violations):
    summary["graphs"] += 1
    if record["applicable"]:
        summary["checked"] += 1
        summary["violations"] += bool(record["violation"])
        summary["equalities"] += bool(record["equality"])
    if record["violation"]:
        violations.append(record)
    print(json.dumps(record, separators=(",", ":")))


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dompack",
        description="Exact domination/packing oracles and certified constructions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="exact gamma or rho for an instance")
    sp.add_argument("input")
    sp.add_argument("--variant", choices=["gamma", "rho"], required=True)
    sp.add_argument("--mode", choices=["plain", "total", "black"], default="plain")
    sp.add_argument("--x", default="", help="comma-separated ids or 'all'")
    sp.add_argument("--y", default="", help="comma-separated ids or 'all'")
    sp.add_argument("--max-n", type=int, default=None, help="override the size guardrail")
    sp.set_defaults(func=cmd_solve)

    cp = sub.add_parser("construct", help="certified witness for a graph class")
    cp.add_argument("input")
    cp.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=[
            "planar", "treewidth", "twodeg", "twinwidth",
            "dh", "atfree", "convex", "unitdisk", "generic",
        ],
    )
    cp.add_argument("--certificate", default=None)
    cp.set_defaults(func=cmd_construct)

    gp = sub.add_parser("generate", help="emit a named family member")
    gp.add_argument("--family", required=True)
    gp.add_argument("--params", default="", help="comma-separated key=value pairs")
    gp.set_defaults(func=cmd_generate)

    lp = sub.add_parser("list-families", help="family metadata as JSON lines")
    lp.set_defaults(func=cmd_list_families)

    vp = sub.add_parser("validate", help="re-check a witness or certificate")
    vp.add_argument("--what", choices=["witness", "tw-cert", "tww-seq", "rotation"], required=True)
    vp.add_argument("--k", type=int, default=None, help="width bound for tw-cert")
    vp.add_argument("files", nargs="+")
    vp.set_defaults(func=cmd_validate)

    scp = sub.add_parser("scan", help="stream gamma/rho records with a conjecture check")
    src = scp.add_mutually_exclusive_group(required=True)
    src.add_argument("--source", nargs=2, default=None,
                     metavar=("KIND", "ARG"),
                     help="'enumerate-n N' (labeled graphs, N <= 7) or 'file PATH'")
    src.add_argument("--enumerate-n", type=int, default=None, metavar="N",
                     help="shorthand for --source enumerate-n N")
    src.add_argument("--file", default=None, help="shorthand for --source file PATH")
    scp.add_argument("--filter", choices=["all", "subcubic", "tree"], default="all")
    scp.add_argument("--check", choices=["duality", "henning", "treeeq"], default="duality")
    scp.add_argument("--jobs", type=int, default=1)
    scp.set_defaults(func=cmd_scan)
    return ap


def _normalize_scan_source(args) -> None:
    if args.source is None:
        return
    kind, arg = args.source
    if kind == "enumerate-n":
        try:
            args.enumerate_n = int(arg)
        except ValueError as exc:
            raise CliError(f"bad enumeration size {arg!r}", EXIT_PARSE) from exc
    elif kind == "file":
        args.file = arg
    else:
        raise CliError(f"unknown scan source {kind!r} (use enumerate-n or file)", EXIT_PARSE)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (oracles.OversizeError, families.OversizeFamilyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERSIZE


if __name__ == "__main__":
    sys.exit(main())
