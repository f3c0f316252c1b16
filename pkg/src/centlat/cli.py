"""Command-line front end.

Exit codes: 0 success, 1 a published claim failed (counterexample found),
2 usage error, 3 invalid input, 4 size cap exceeded.
"""

import argparse
import logging
import sys
import time
from pathlib import Path

from . import render
from .catalog import Catalog, catalog_group, parse_group_spec
from .errors import LabError
from .groups import DEFAULT_MAX_ORDER
from .lab import (ALL_CLAIMS, PUBLISHED_CLAIMS, Limits, capability_search, open_problem_search,
                  run_check, run_suite)
from .lattice import build_lattice
from .subgroups import (DEFAULT_SUBGROUP_CAP, centralizer_lattice_bits, normal_centralizer_lattice_elements,
                        subgroup_bits)

log = logging.getLogger("centlat")

GROUP_HELP = ("group spec: C<n> cyclic, D<m> dihedral of order 2m, Q<2^n> generalized quaternion, "
              "S<n>/A<n> (n<=6), E<p>^<k> elementary abelian, 'X x Y' direct product, file:<path>")


class UsageError(Exception):
    pass


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for catalog-wide work")
    p.add_argument("--cap-order", type=int, default=DEFAULT_MAX_ORDER, help="element cap for constructed groups")
    p.add_argument("--cap-subgroup-order", type=int, default=DEFAULT_SUBGROUP_CAP,
                   help="largest group order for which all subgroups are enumerated")
    p.add_argument("--timings", action="store_true", help="include elapsed times in the output")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _catalog_args(p, default_max):
    p.add_argument("--max-order", type=int, default=default_max)
    p.add_argument("--products", action=argparse.BooleanOptionalAction, default=True,
                   help="include two-factor direct products within the order bound")
    p.add_argument("--extra", action="append", default=[], metavar="SPEC",
                   help="additional group spec (e.g. S5); may repeat")


def build_parser():
    common = _common()
    parser = argparse.ArgumentParser(
        prog="centlat",
        description="Subgroup, centralizer and normal-centralizer lattices of finite groups.",
        epilog=GROUP_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common], help="show a lattice of G")
    p.add_argument("--group", required=True, help=GROUP_HELP)
    p.add_argument("--which", choices=("subgroups", "centralizers", "normal-centralizers"), default="centralizers")

    p = sub.add_parser("check", parents=[common], help="run one checker on one group")
    p.add_argument("--group", required=True, help=GROUP_HELP)
    p.add_argument("--claim", required=True, choices=ALL_CLAIMS)
    _catalog_args(p, 64)

    p = sub.add_parser("search", parents=[common], help="catalog-wide searches")
    p.add_argument("kind", choices=("open-problem", "capability"))
    p.add_argument("--target", help="target group spec (capability search)")
    _catalog_args(p, 64)

    p = sub.add_parser("suite", parents=[common], help="run every checker over the catalog")
    _catalog_args(p, 64)

    p = sub.add_parser("info", parents=[common], help="basic facts about a group")
    p.add_argument("--group", required=True, help=GROUP_HELP)
    return parser


def _limits(args):
    return Limits(max_group_order=args.cap_order, subgroup_cap=args.cap_subgroup_order)


def _catalog(args):
    for s in args.extra:
        parse_group_spec(s)
    return Catalog(specs=list(args.extra), max_order=args.max_order, include_products=args.products)


def _group(args):
    spec = parse_group_spec(args.group)
    return spec, catalog_group(spec, max_order=args.cap_order)


def cmd_lattice(args):
    spec, g = _group(args)
    limits = _limits(args)
    if args.which == "subgroups":
        elements = subgroup_bits(g, limits.subgroup_cap)
    elif args.which == "centralizers":
        elements = centralizer_lattice_bits(g)
    else:
        elements = normal_centralizer_lattice_elements(g, limits.subgroup_cap)
    lat = build_lattice(elements)
    group = render.group_summary(spec.canonical, g)
    summary = render.lattice_summary(g, lat, args.which)
    if args.format == "json":
        return render.to_json(render.document(group, summary)), 0
    if args.format == "dot":
        return render.lattice_dot(group, summary), 0
    return render.lattice_text(group, summary), 0


def _emit_checks(args, reports, group=None):
    failed = any(not r.passed and not r.skipped for r in reports)
    if args.format == "json":
        text = render.to_json(render.document(group, None, reports, args.timings))
    else:
        text = "".join(render.check_text(r, args.timings) for r in reports)
    return text, failed


def cmd_check(args):
    spec, g = _group(args)
    limits = _limits(args)
    if args.claim == "capability":
        report = capability_search(g, _catalog(args), limits)
    else:
        report = run_check(args.claim, g, limits)
    text, failed = _emit_checks(args, [report], render.group_summary(spec.canonical, g))
    counterexample = failed and (args.claim in PUBLISHED_CLAIMS or args.claim == "capability")
    return text, 1 if counterexample else 0


def cmd_search(args):
    limits = _limits(args)
    catalog = _catalog(args)
    if args.kind == "capability":
        if not args.target:
            raise UsageError("search capability needs --target")
        target = catalog_group(args.target, max_order=args.cap_order)
        report = capability_search(target, catalog, limits)
        text, failed = _emit_checks(args, [report])
        return text, 1 if failed else 0
    reports = open_problem_search(catalog, limits, jobs=args.jobs)
    if args.format == "json":
        return render.to_json(render.document(None, None, reports, args.timings)), 0
    hits = [r for r in reports if not r.skipped]
    lines = [f"open-problem search (max order {catalog.max_order}, "
             f"{'with' if catalog.include_products else 'without'} products): "
             f"{len(hits)} groups with breaking points in the normal-centralizer lattice"]
    lines += [render.check_text(r, args.timings).rstrip() for r in reports]
    return "\n".join(lines) + "\n", 0


def cmd_suite(args):
    catalog = _catalog(args)
    result = run_suite(catalog, jobs=args.jobs, limits=_limits(args))
    print(f"suite finished in {result['elapsed']:.1f} s", file=sys.stderr)
    code = 1 if result["failures"] or not result["implication_theorem1_corollary2"] else 0
    if args.format == "json":
        return render.to_json(render.suite_document(result, catalog, args.timings)), code
    return render.suite_text(result, args.timings), code


def cmd_info(args):
    spec, g = _group(args)
    limits = _limits(args)
    info = render.group_summary(spec.canonical, g)
    orders = {}
    for o in g.element_orders:
        orders[o] = orders.get(o, 0) + 1
    info["element_orders"] = {str(k): orders[k] for k in sorted(orders)}
    info["derived_order"] = g.derived_bits.bit_count()
    info["centralizer_lattice_size"] = len(centralizer_lattice_bits(g))
    if g.order <= limits.subgroup_cap:
        info["subgroup_count"] = len(subgroup_bits(g, limits.subgroup_cap))
        info["normal_centralizer_lattice_size"] = len(normal_centralizer_lattice_elements(g, limits.subgroup_cap))
    if args.format == "json":
        return render.to_json({"tool_version": render.__version__, "info": info}), 0
    return "".join(f"{k}: {v}\n" for k, v in info.items()), 0


COMMANDS = {"lattice": cmd_lattice, "check": cmd_check, "search": cmd_search, "suite": cmd_suite, "info": cmd_info}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.format == "dot" and args.command != "lattice":
        parser.error("--format dot is only valid for the lattice command")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    start = time.perf_counter()
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.error(str(exc))
    except LabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    log.info("%s done in %.2f s", args.command, time.perf_counter() - start)
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
