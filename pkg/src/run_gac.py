"""
    Command line front end: face vectors of a graph or building set, family tables,
    verification suites and generating-function identities.

    Node labels are 1-indexed everywhere. Vectors are printed ascending by index
    (f_0 first). Exit codes: 0 ok/pass, 1 verification failure, 2 usage or parse
    error, 3 semantic error, 4 resource limit.
"""
import argparse
import csv
import io
import json
import pathlib
import sys

import common.utils as utils
from bounds_harness import run_suite
from building_sets import BuildingSet
from common.errors import GacError, UsageError
from face_complex import FACE_METHODS, face_vector, facet_count, is_flag
from face_polynomials import vectors_from_f
from families import FAMILY_NAMES, check_identity, family_table
from graphs import graphical_building_set
from input_utils import parse_graph_spec, read_building_set

FORMATS = ("json", "csv", "pretty")
VECTOR_KINDS = ("f", "h", "g", "gamma")


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser reporting bad invocations as UsageError instead of exiting."""
    def error(self, message):
        raise UsageError(message)


def _count(minimum: int):
    """argparse type for integers >= minimum."""
    def convert(text: str) -> int:
        try:
            value = int(text)
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"invalid integer: '{text}'") from e
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return convert


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = ArgumentParser(prog="gac", description="Face vectors and gamma-vector bounds "
                                                    "of graph-associahedra and nestohedra")
    parser.add_argument("--verbose", action="store_true", help="Progress messages on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    vectors = subparsers.add_parser("vectors", help="f, h, g and gamma of one nestohedron")
    source = vectors.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", type=str,
                        help="Named graph (path:M, cycle:M, complete:M, star:M) or JSON file")
    source.add_argument("--building-set", type=str, help="Building set text file")
    vectors.add_argument("--proper-faces-only", action="store_true",
                         help="Drop f_n (the polytope itself) from the f-vector")

    family = subparsers.add_parser("family", help="Table of a named series")
    family.add_argument("--name", type=str, required=True,
                        help=f"Family name: {', '.join(FAMILY_NAMES)}")
    family.add_argument("--max-n", type=_count(0), required=True, help="Largest dimension n")
    family.add_argument("--vector", type=str, default="h", choices=VECTOR_KINDS,
                        help="Vector kind (default: h)")

    verify = subparsers.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--suite", type=str, required=True,
                        help="connected, hamiltonian, tree, monotonicity, product, gal-flag")
    verify.add_argument("--m", type=int, default=None, help="Number of graph nodes")
    verify.add_argument("--jobs", type=str, default=None,
                        help="Worker processes (default: GAC_JOBS, then config/defaults.yml)")
    verify.add_argument("--samples", type=_count(1), default=None,
                        help="Sample this many base graphs (monotonicity only)")
    verify.add_argument("--seed", type=int, default=0, help="Sampling seed (default: 0)")
    verify.add_argument("--output", type=str, default="", help="Also save the JSON report here")
    verify.add_argument("--status-dir", type=str, default="",
                        help="Write a <suite>_m<m>_status.out status file in this directory")

    identity = subparsers.add_parser("identity", help="Check a generating-function identity")
    identity.add_argument("--id", type=str, required=True, dest="identity",
                          help="Identity name, e.g. as_functional, cy_relation, pe_ode")
    identity.add_argument("--order", type=_count(0), default=12,
                          help="Truncation order (default: 12)")

    for subparser in (vectors, family, verify, identity):
        subparser.add_argument("--format", type=str, default=None, choices=FORMATS,
                               help="Output format (default from config/defaults.yml)")
    for subparser in (vectors, verify):
        subparser.add_argument("--method", type=str, default=None, choices=FACE_METHODS,
                               help="Face counting method (default from config/defaults.yml)")
    return parser.parse_args(argv)


def _progress(args, message: str):
    if args.verbose:
        print(message, file=sys.stderr)


def _csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _pretty_vector(values) -> str:
    return "(" + ", ".join(str(value) for value in values) + ")"


def _load_input(args) -> BuildingSet:
    if args.graph:
        _progress(args, f"Building graphical building set of {args.graph} ...")
        return graphical_building_set(parse_graph_spec(args.graph))
    _progress(args, f"Reading building set {args.building_set} ...")
    return read_building_set(args.building_set)


def run_vectors(args) -> tuple:
    """All four vectors of one nestohedron plus metadata."""
    building_set = _load_input(args)
    _progress(args, f"Counting faces ({args.method}) ...")
    vectors = vectors_from_f(face_vector(building_set, args.method))
    f_values = vectors["f"].proper() if args.proper_faces_only else vectors["f"].to_list()
    payload = {
        "m": building_set.ground_size,
        "n": vectors["f"].degree,
        "building_set_size": len(building_set),
        "facets": facet_count(building_set),
        "flag": is_flag(building_set),
        "f": f_values,
        "h": vectors["h"].to_list(),
        "g": vectors["g"].to_list(),
        "gamma": vectors["gamma"].to_list(),
    }
    match args.format:
        case "json":
            text = json.dumps(payload, indent=2) + "\n"
        case "csv":
            text = _csv([[kind] + payload[kind] for kind in VECTOR_KINDS])
        case _:
            text = "".join(f"{key:<18}{value}\n" for key, value in payload.items()
                           if key not in VECTOR_KINDS)
            text += "".join(f"{kind:<18}{_pretty_vector(payload[kind])}\n"
                            for kind in VECTOR_KINDS)
    return text, 0


def run_family(args) -> tuple:
    """One row per n = 0..max_n."""
    rows = [vector.to_list() for vector in family_table(args.name, args.max_n, args.vector)]
    match args.format:
        case "json":
            payload = {"family": args.name, "vector": args.vector, "rows": rows}
            text = json.dumps(payload, indent=2) + "\n"
        case "csv":
            width = max(len(row) for row in rows)
            header = ["n"] + [f"v{idx}" for idx in range(width)]
            text = _csv([header] + [[n] + row + [""] * (width - len(row))
                                    for n, row in enumerate(rows)])
        case _:
            text = "".join(f"{args.vector}({args.name}^{n}) = {_pretty_vector(row)}\n"
                           for n, row in enumerate(rows))
    return text, 0


def _report_text(report_dict: dict, output_format: str) -> str:
    match output_format:
        case "pretty":
            verdict = "PASS" if report_dict["pass"] else "FAIL"
            text = (f"suite {report_dict['suite']} m={report_dict['m']}: {verdict} "
                    f"({report_dict['checked']} checked, "
                    f"{len(report_dict['failures'])} failures)\n")
            return text + "".join(f"  {failure['bound_violated']}: {failure['graph']} "
                                  f"gamma={failure['gamma']}\n"
                                  for failure in report_dict["failures"])
        case "csv":
            return _csv([["suite", "m", "checked", "failures", "pass"],
                         [report_dict["suite"], report_dict["m"], report_dict["checked"],
                          len(report_dict["failures"]), report_dict["pass"]]])
        case _:
            return json.dumps(report_dict, indent=2) + "\n"


def _verify(args, status_file=None) -> tuple:
    report = run_suite(args.suite, args.m, jobs=args.jobs, method=args.method,
                       samples=args.samples, seed=args.seed, verbose=args.verbose)
    report_dict = report.to_dict()
    if args.output:
        output_path = pathlib.Path(args.output)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(json.dumps(report_dict, indent=2) + "\n", encoding="utf-8")
        _progress(args, f"Saved report: {output_path}")
        if status_file is not None:
            status_file.write(f"Saved report: {output_path}\n")
    if status_file is not None:
        if report.passed:
            status_file.write("VERIFICATION COMPLETED\n")
        else:
            status_file.write("FAILED:\n")
            status_file.write(f"{len(report.failures)} bound failures\n")
    return _report_text(report_dict, args.format), 0 if report.passed else 1


def run_verify(args) -> tuple:
    """Run a suite; with --status-dir the run is recorded in a status file."""
    if not args.status_dir:
        return _verify(args)

    status_path = pathlib.Path(utils.status_path(args.status_dir, args.suite, args.m))
    status_path.parent.mkdir(parents=True, exist_ok=True)
    with open(status_path, "w", encoding="utf-8") as status_file:
        size = "" if args.m is None else f" m={args.m}"
        status_file.write(f"Processing suite {args.suite}{size}\n")
        try:
            return _verify(args, status_file)
        except Exception as e:
            status_file.write("FAILED:\n")
            status_file.write(str(e) + "\n")
            raise e


def run_identity(args) -> tuple:
    report = check_identity(args.identity, args.order)
    match args.format:
        case "pretty":
            text = f"{report.identity}: {report.message}\n"
        case "csv":
            text = _csv([["identity", "order", "verified", "first_failing_order"],
                         [report.identity, report.order, report.verified,
                          "" if report.first_failure is None else report.first_failure]])
        case _:
            text = json.dumps(report.to_dict(), indent=2) + "\n"
    return text, 0 if report.verified else 1


COMMANDS = {
    "vectors": run_vectors,
    "family": run_family,
    "verify": run_verify,
    "identity": run_identity,
}


def main(argv=None) -> int:
    """Parse, dispatch, print; every GacError becomes one stderr line and its exit code."""
    try:
        args = parse_args(argv)
        defaults = utils.load_defaults(warn=args.verbose)
        args.format = args.format or defaults["format"]
        if hasattr(args, "method"):
            args.method = args.method or defaults["method"]
        if hasattr(args, "jobs"):
            args.jobs = utils.resolve_jobs(args.jobs, defaults)
        text, exit_code = COMMANDS[args.command](args)
    except GacError as e:
        message = " ".join(str(e).split())
        print(f"error: {type(e).__name__}: {message}", file=sys.stderr)
        return e.exit_code
    sys.stdout.write(text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
