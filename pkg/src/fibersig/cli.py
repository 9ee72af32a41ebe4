"""Command-line front-end.

Every subcommand reads text files in the formats documented in the README,
prints a deterministic report (stable ordering, no timestamps), and exits
with 0 on success, 1 on a parse or validation error, and 2 when an
arithmetic identity that should hold fails.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import bordism as bordism_mod
from . import complexes, octants, signature
from .catalog import catalog_for, classify
from .errors import FibersigError, InconsistencyError, ParseError, ValidationError
from .graphs import parse_fiber_text
from .naming import enumerate_disconnected

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCONSISTENT = 2


def _read(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _parse_dim(text):
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise ValidationError(f"dimension pair must look like '4,3', got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValidationError(f"dimension pair must be integers, got {text!r}")


def _cmd_classify(args, out):
    fiber = parse_fiber_text(_read(args.fiber_file), path=args.fiber_file)
    catalog = catalog_for(fiber.dimension_pair)
    cls = classify(fiber, catalog)
    if cls.kappa == 0:
        print("regular fiber, kappa = 0", file=out)
    else:
        chirality = "chiral" if cls.chiral else "achiral"
        print(f"{cls.name}, kappa = {cls.kappa}, {chirality}", file=out)
    return EXIT_OK


def _cmd_enumerate(args, out):
    names = enumerate_disconnected(_parse_dim(args.dim), args.kappa)
    for name in names:
        print(name, file=out)
    return EXIT_OK


def _cmd_sign(args, out):
    labels = octants.parse_octant_lines(
        _read(args.octant_file).splitlines(), path=args.octant_file
    )
    order = tuple(args.order.split(","))
    sheets = {"q1": 1, "q2": 2, "q3": 3}
    if args.sheets:
        sheets = {}
        for piece in args.sheets.split(","):
            if "=" not in piece:
                raise ValidationError(f"bad sheet assignment {piece!r}")
            point, sheet = piece.split("=", 1)
            sheets[point.strip()] = int(sheet)
    model = octants.TriplePointModel(labels, sheets, order)
    value = octants.iii8_sign(model)
    print(f"sign = {value:+d}", file=out)
    return EXIT_OK


def _cmd_complex(args, out):
    table = complexes.parse_incidence_text(_read(args.table_file), path=args.table_file)
    built = complexes.build_complex(table, validate=not args.no_validate)
    print(
        f"complex OK: rank C^3 = {built.rank_c3}, rank C^4 = {built.rank_c4}",
        file=out,
    )
    if args.h3:
        desc = complexes.h3(built)
        gens = ", ".join(desc.generator_strings()) or "none"
        print(f"H^3 rank {desc.rank}, generators: {gens}", file=out)
        d4 = complexes.h4(built)
        torsion = (
            " + ".join(f"Z/{t}" for t in d4.torsion) if d4.torsion else "none"
        )
        print(
            f"H^4 (table-dependent) free rank {d4.rank}, torsion: {torsion}",
            file=out,
        )
    return EXIT_OK


def _cmd_bordism(args, out):
    code = EXIT_OK
    if args.graph_file:
        graph = bordism_mod.parse_locus_text(
            _read(args.graph_file), path=args.graph_file
        )
        graph.validate()
        side0 = bordism_mod.boundary_sum(graph, 0)
        side1 = bordism_mod.boundary_sum(graph, 1)
        print(
            f"valid locus graph: {len(graph.boundary)} boundary,"
            f" {len(graph.interior)} interior, {len(graph.edges)} arcs",
            file=out,
        )
        print(f"boundary sum side 0 = {side0:+d}", file=out)
        print(f"boundary sum side 1 = {side1:+d}", file=out)
        if bordism_mod.check_invariance(graph):
            print("invariance: OK", file=out)
        else:
            print("invariance: FAILED", file=out)
            code = EXIT_INCONSISTENT
    if args.random:
        rng = random.Random(args.seed)
        failures = 0
        for _ in range(args.random):
            g = bordism_mod.random_locus_graph(rng)
            g.validate()
            if not bordism_mod.check_invariance(g):
                failures += 1
        print(
            f"random sweep: {args.random} graphs, {failures} conservation failures",
            file=out,
        )
        if failures:
            code = EXIT_INCONSISTENT
    if not args.graph_file and not args.random:
        raise ValidationError("bordism needs a graph file or --random")
    return code


def _cmd_example(args, out):
    lines, matched = signature.example_report()
    for line in lines:
        print(line, file=out)
    return EXIT_OK if matched else EXIT_INCONSISTENT


def _cmd_signature(args, out):
    summary, spheres = signature.parse_summary_text(
        _read(args.summary_file), path=args.summary_file
    )
    if spheres:
        total = signature.definite_locus_self_intersection(spheres)
        if summary.definite_self_intersection is None:
            summary = signature.StableMapSummary(
                summary.fiber_signs,
                total,
                summary.total_self_intersection,
                summary.euler_characteristic,
            )
        print(f"definite fold locus self-intersection: {total}", file=out)
    sigma = signature.signature_from_fibers(summary.fiber_signs)
    print(f"signature from fibers: {sigma:+d}", file=out)
    checks = signature.consistency_checks(summary)
    failed = False
    for check in checks:
        status = "pass" if check.passed else "FAIL"
        print(f"{status}: {check.name}: {check.detail}", file=out)
        failed = failed or not check.passed
    return EXIT_INCONSISTENT if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fibersig",
        description=(
            "Singular-fiber combinatorics: classify fiber graphs, enumerate"
            " disjoint-union classes, compute triple-point signs, chiral"
            " cochain cohomology, bordism locus checks, and signature"
            " bookkeeping."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a fiber-graph file")
    p.add_argument("fiber_file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "enumerate", help="list disconnected classes of one codimension"
    )
    p.add_argument("dim", help="dimension pair, e.g. 4,3 or 5,4")
    p.add_argument("kappa", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sign", help="sign of a triple-fold fiber from octant data")
    p.add_argument("octant_file", help="8 lines: <w1> <w2> <w3> <1|2>")
    p.add_argument("--order", default="q1,q2,q3", help="cyclic order of the points")
    p.add_argument(
        "--sheets",
        default=None,
        help="sheet of each point, e.g. q1=1,q2=2,q3=3 (default identity)",
    )
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("complex", help="build the chiral cochain complex")
    p.add_argument("table_file", help="incidence table file")
    p.add_argument("--h3", action="store_true", help="also print cohomology")
    p.add_argument(
        "--no-validate",
        action="store_true",
        help="skip the structural constraints on the table",
    )
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser("bordism", help="validate a locus graph / random sweep")
    p.add_argument("graph_file", nargs="?", default=None)
    p.add_argument("--random", type=int, default=0, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bordism)

    p = sub.add_parser("example", help="print the bundled worked example")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("signature", help="consistency checks on a map summary")
    p.add_argument("summary_file")
    p.set_defaults(func=_cmd_signature)
    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FibersigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry():
    raise SystemExit(main())
