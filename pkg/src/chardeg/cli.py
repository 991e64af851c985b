"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 a cap or randomized-search budget was exceeded.  All randomized
procedures key off --seed (or the CHARDEG_SEED environment variable),
and identical invocations produce byte-identical JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from chardeg.classify import (
    ClassifyError,
    GroupDescriptor,
    inequality_ledger,
    predicted_cut_vertex_graph,
    semidirect_degrees,
)
from chardeg.fields import FieldError
from chardeg.graphs import DegreeSetError, analyze, degree_set, graph_from_degrees
from chardeg.groups import BudgetExceeded, CapExceeded, GroupError, sl2_group
from chardeg.modules import (
    InconclusiveError,
    ModuleError,
    irreducible_catalog,
    module_from_json,
    natural_restricted,
)
from chardeg.orbits import covering_classify, orbit_decompose
from chardeg.verify import SUITES, report_json, run_checks

USAGE_ERROR = 2
CAP_ERROR = 3


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_group(spec: str):
    name, _, qs = spec.partition(":")
    if name != "sl2" or not qs.isdigit():
        raise GroupError(f"group spec must look like sl2:13, got {spec!r}")
    return sl2_group(int(qs))


def _cmd_graph(args) -> int:
    if args.degrees:
        degrees = [int(x) for x in args.degrees.split(",")]
        g = graph_from_degrees(degrees)
    elif args.family and args.q:
        g = graph_from_degrees(degree_set(args.family, args.q))
    else:
        raise DegreeSetError("graph needs --degrees or --family with --q")
    payload = {"graph": g.to_json(), "analysis": analyze(g).to_json()}
    _emit(payload, args.out)
    return 0


def _cmd_group(args) -> int:
    g = _parse_group(args.group)
    q = g.field.order
    payload = {
        "group": g.to_json(),
        "order": g.order,
        "expected_order": q * (q * q - 1),
    }
    _emit(payload, args.out)
    return 0


def _cmd_module(args) -> int:
    g = _parse_group(args.group)
    if args.action == "catalog":
        cat = irreducible_catalog(g, args.char, args.cap, seed=args.seed)
        _emit(cat.to_json(), args.out)
        return 0
    if args.action == "natural":
        m = natural_restricted(g.field.order, g)
        _emit(m.to_json(), args.out)
        return 0
    if args.action == "select":
        cat = irreducible_catalog(g, args.char, args.cap, seed=args.seed)
        hits = cat.select(dim=args.dim, faithful=args.faithful, ell=args.ell)
        if not hits:
            raise ModuleError("no catalog entry matches the selection")
        _emit(hits[args.index].module.to_json(), args.out)
        return 0
    raise ModuleError(f"unknown module action {args.action!r}")


def _cmd_orbits(args) -> int:
    with open(args.module) as fh:
        data = json.load(fh)
    group = _parse_group(args.group) if args.group else None
    m = module_from_json(data, group=group)
    if args.action == "classify":
        report = covering_classify(m, r=args.r, s=args.s)
    else:
        report = orbit_decompose(m)
    _emit(report.to_json(), args.out)
    return 0


def _cmd_classify(args) -> int:
    if args.ledger:
        rows = inequality_ledger(args.ledger, q_max=args.q_max, ell_max=args.ell_max)
        _emit({"family": args.ledger, "failing": [list(t) for t in rows]}, args.out)
        return 0
    vgk = frozenset(int(x) for x in args.vgk.split(",")) if args.vgk else frozenset({args.p})
    d = GroupDescriptor(args.case, args.q, args.p, vgk=vgk)
    report = predicted_cut_vertex_graph(d)
    _emit(report.to_json(), args.out)
    return 0 if report.ok else 1


def _cmd_extension(args) -> int:
    g = _parse_group(args.group)
    with open(args.module) as fh:
        m = module_from_json(json.load(fh), group=g)
    ds = semidirect_degrees(m)
    graph = graph_from_degrees(ds)
    payload = {
        "degrees": ds.as_sorted(),
        "assumption": "split extension; linear characters extend to inertia groups",
        "graph": graph.to_json(),
        "analysis": analyze(graph).to_json(),
    }
    _emit(payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(args.suite, seed=args.seed)
    payload = report_json(results)
    for r in sorted(results, key=lambda r: r.name):
        line = f"[{r.status.upper():5s}] {r.suite}/{r.name} ({r.elapsed:.1f}s)"
        print(line, file=sys.stderr)
    _emit(payload, args.out)
    if any(r.status == "inconclusive" for r in results):
        return CAP_ERROR
    return 0 if all(r.status == "pass" for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="chardeg",
        description="Exact toolkit for degree prime graphs of SL2(q) and its module extensions",
    )
    env_seed = os.environ.get("CHARDEG_SEED")
    default_seed = int(env_seed) if env_seed and env_seed.isdigit() else 42
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build and analyze a degree prime graph")
    p.add_argument("--degrees", help="comma-separated degree set, e.g. 1,6,15")
    p.add_argument("--family", choices=["psl2", "sl2", "pgl2"])
    p.add_argument("--q", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_graph)

    p = sub.add_parser("group", help="enumerate a matrix group")
    p.add_argument("--group", required=True, help="compact spec, e.g. sl2:13")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("module", help="build modules and catalogs")
    p.add_argument("action", choices=["catalog", "natural", "select"])
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=2, help="module field characteristic")
    p.add_argument("--cap", type=int, default=20, help="catalog dimension cap")
    p.add_argument("--dim", type=int)
    p.add_argument("--faithful", action="store_true", default=None)
    p.add_argument("--ell", type=int)
    p.add_argument("--index", type=int, default=0)
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_module)

    p = sub.add_parser("orbits", help="orbit decomposition and covering flags")
    p.add_argument("action", choices=["decompose", "classify"])
    p.add_argument("--module", required=True, help="module JSON file")
    p.add_argument("--group", help="optional sl2:q spec overriding the stored group")
    p.add_argument("--r", type=int, help="odd prime dividing q-1")
    p.add_argument("--s", type=int, help="odd prime dividing q+1")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_orbits)

    p = sub.add_parser("classify", help="predicted cut-vertex graphs and ledgers")
    p.add_argument("--case", choices=["a", "b", "c", "bare", "natural", "six_dim_f3"])
    p.add_argument("--q", type=int)
    p.add_argument("--p", type=int, help="the cut prime")
    p.add_argument("--vgk", help="comma-separated outer degree primes")
    p.add_argument("--ledger", help="inequality family name")
    p.add_argument("--q-max", type=int, dest="q_max")
    p.add_argument("--ell-max", type=int, default=8, dest="ell_max")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("extension", help="degree set of a split module extension")
    p.add_argument("--group", required=True)
    p.add_argument("--module", required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_extension)

    p = sub.add_parser("verify", help="run the acceptance harness")
    p.add_argument("--suite", choices=list(SUITES), default="all")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)
    ap.subcommand_parsers = dict(sub.choices)
    return ap


def _apply_config(ap: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Strip --config FILE from argv and install its keys as defaults.

    Config keys mirror flag names; explicit flags always win.
    """
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise FileNotFoundError("--config needs a file path")
    with open(argv[i + 1]) as fh:
        conf = json.load(fh)
    defaults = {str(k).replace("-", "_"): v for k, v in conf.items()}
    ap.set_defaults(**defaults)
    for p in ap.subcommand_parsers.values():
        known = {a.dest for a in p._actions}
        p.set_defaults(**{k: v for k, v in defaults.items() if k in known})
    return argv[:i] + argv[i + 2 :]


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        argv = _apply_config(ap, list(argv))
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.fn(args)
    except (InconclusiveError, BudgetExceeded, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR
    except (GroupError, ModuleError, FieldError, DegreeSetError, ClassifyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
