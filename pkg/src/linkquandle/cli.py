"""Command-line front end.  Every subcommand prints one JSON object on stdout.

Exit codes: 0 success (negative answers included), 2 malformed input,
3 cap exceeded, 4 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coloring, groups, invariance, linking, tcquandle
from .diagram import fuzz, read_links, serialize
from .errors import CapExceeded, DiagramError, PreconditionError, max_canonical_mu
from .lattice import INFINITE

EXIT_INPUT, EXIT_CAP, EXIT_PRECONDITION = 2, 3, 4


class InputError(Exception):
    pass


def _one_link(path):
    links = read_links(path)
    if len(links) != 1:
        raise InputError(f"{path}: expected exactly one link, found {len(links)}")
    return links[0]


def _matrix(path):
    return linking.linking_matrix(_one_link(path))


def _one_based(vs):
    return [v + 1 for v in vs]


def _target(text):
    kind, _, arg = text.partition(":")
    if kind == "xn":
        try:
            n = int(arg)
        except ValueError:
            raise InputError(f"bad target {text!r}") from None
        if n < 1:
            raise InputError("xn:N needs N >= 1")
        return coloring.xn(n)
    if kind == "table":
        try:
            T = coloring.read_table(arg)
        except (OSError, ValueError) as exc:
            raise InputError(str(exc)) from None
        report = coloring.check_axioms(T)
        if not report:
            raise InputError(f"{arg}: not a quandle ({report.axiom} fails at {report.witness})")
        return T
    raise InputError(f"unknown target {text!r}; use xn:N or table:PATH")


def cmd_parse(args):
    links = read_links(args.file)
    return {"links": [{"gauss": serialize(d), "mu": d.mu, "crossings": len(d.crossings)}
                      for d in links]}


def cmd_linking(args):
    M = _matrix(args.file)
    g = linking.linking_graph(M)
    return {
        "mu": M.mu,
        "l": [list(r) for r in M.rows],
        "symmetric": linking.is_classical_consistent(M),
        "graph": {"vertices": _one_based(sorted(g.vertices)),
                  "edges": sorted(_one_based(sorted(e)) for e in g.edges)},
        "connected_components": [_one_based(c) for c in linking.connected_components(g)],
        "articulation_points": _one_based(sorted(linking.articulation_points(g))),
        "inseparable_sublinks": [_one_based(s) for s in linking.inseparable_sublinks(M)],
    }


def cmd_tc(args):
    M = _matrix(args.file)
    fam, _ = tcquandle.family_from_linking(M)
    canon = None
    if M.mu <= max_canonical_mu():
        canon = tcquandle.canonical_form(M).to_json()
    return {
        "family": fam.to_json(),
        "orbit_indices": [None if i == INFINITE else i for i in fam.indices()],
        "canonical_form": canon,
    }


def _cert(cert, key="isomorphic"):
    if cert is None:
        return {key: False, "perm": None, "signs": None}
    return {key: True, **cert.to_json()}


def cmd_tc_iso(args):
    M1, M2 = _matrix(args.file1), _matrix(args.file2)
    if args.classical:
        return _cert(tcquandle.tc_isomorphic_classical(M1, M2))
    return _cert(tcquandle.qs_isomorphic_pm(M1, M2))


def cmd_color(args):
    d = _one_link(args.file)
    T = _target(args.target)
    methods = ["brute", "propagate", "fixedpoint"] if args.method == "all" else [args.method]
    counts = {}
    for meth in methods:
        if meth == "brute":
            counts[meth] = coloring.count_homs_bruteforce(d, T)
        elif meth == "propagate":
            counts[meth] = coloring.count_homs_tc_propagate(d, T)
        else:
            counts[meth] = coloring.count_homs_tc_fixedpoint(linking.linking_matrix(d), T)
    agree = len(set(counts.values())) == 1
    return {"k": counts[methods[0]] if agree else None,
            "methods_agree": agree, "counts": counts}


def cmd_group(args):
    d = _one_link(args.file)
    if args.quotient == "wirtinger":
        p = groups.wirtinger(d)
    else:
        p = groups.nilpotent3(linking.linking_matrix(d))
    return {"quotient": args.quotient, "presentation": groups.render(p), **p.to_json()}


def cmd_saktra(args):
    M1, M2 = _matrix(args.file1), _matrix(args.file2)
    cert = groups.saktra_condition(M1, M2, "search" if args.search else "fixed")
    if cert is None:
        return {"holds": False, "perm": None, "sublinks": None}
    return {"holds": True, **cert.to_json()}


def cmd_fuzz(args):
    d = _one_link(args.file)
    if args.steps < 0:
        raise InputError("--steps must be >= 0")
    out = fuzz(d, args.seed, args.steps)
    result = {"gauss": serialize(out), "passages": out.n_passages}
    if args.check:
        checks = invariance.compare(d, out)
        result["check"] = {"passed": all(checks.values()), "checks": checks}
    return result


def build_parser():
    ap = argparse.ArgumentParser(prog="linkquandle", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate and normalize Gauss codes")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("linking", help="linking matrix, graph and inseparable sublinks")
    p.add_argument("file")
    p.set_defaults(func=cmd_linking)

    p = sub.add_parser("tc", help="subgroup family of the tc quandle")
    p.add_argument("file")
    p.set_defaults(func=cmd_tc)

    p = sub.add_parser("tc-iso", help="decide tc-quandle isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--classical", action="store_true",
                   help="use the per-connected-component sign criterion")
    p.set_defaults(func=cmd_tc_iso)

    p = sub.add_parser("color", help="count quandle colorings")
    p.add_argument("file")
    p.add_argument("--target", required=True, help="xn:N or table:PATH")
    p.add_argument("--method", default="all",
                   choices=["brute", "propagate", "fixedpoint", "all"])
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("group", help="render a group presentation")
    p.add_argument("file")
    p.add_argument("--quotient", required=True, choices=["wirtinger", "nilpotent3"])
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("saktra", help="linking-number condition on inseparable sublinks")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--search", action="store_true", help="also search re-indexings")
    p.set_defaults(func=cmd_saktra)

    p = sub.add_parser("fuzz", help="apply random R1/R2 insertions")
    p.add_argument("file")
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--check", action="store_true", help="run the invariance checks")
    p.set_defaults(func=cmd_fuzz)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except (DiagramError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    json.dump(result, sys.stdout, sort_keys=True, separators=(",", ":"))
    sys.stdout.write("\n")
    if args.command == "color" and not result["methods_agree"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
