"""Command-line front end.

Exit codes: 0 success or a yes answer; 1 a no answer or a found fuzz
violation; 2 usage or parse errors; 3 semantic runtime errors such as a
blown enumeration cap or a non-monotone fixpoint step.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import fileformat, fuzz, galois
from .adf import DEFAULT_MAX_ATTACKERS, AdfFramework
from .core import Label
from .errors import (
    GraphMismatchError,
    MayMustError,
    NonMonotoneStepError,
    ParseError,
    ResourceCapError,
    UnknownArgumentError,
)
from .mma import MmaFramework, scale_warnings
from .semantics import (
    DEFAULT_MAX_ARGS,
    AcceptanceMode,
    SemanticsKind,
    accepted,
    exact_semantics,
    grounded,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maymust",
        description="May-must and condition-table argumentation on attack graphs.",
    )
    parser.add_argument("--max-args", type=int, default=DEFAULT_MAX_ARGS,
                        help="argument-count cap for enumeration (default 12)")
    parser.add_argument("--max-attackers", type=int, default=DEFAULT_MAX_ATTACKERS,
                        help="attacker-count cap per condition table (default 10)")
    commands = parser.add_subparsers(dest="command", required=True)

    exact = commands.add_parser("exact", help="print all exact labellings")
    exact.add_argument("file")

    grounded_cmd = commands.add_parser("grounded", help="print the grounded labelling")
    grounded_cmd.add_argument("file")
    grounded_cmd.add_argument("--figures", metavar="DIR", help="also render the labelled graph")

    accept = commands.add_parser("accept", help="credulous/skeptical acceptance query")
    accept.add_argument("file")
    accept.add_argument("--arg", required=True, dest="argument")
    accept.add_argument("--mode", required=True, choices=["credulous", "skeptical"])
    accept.add_argument("--label", required=True, choices=["in", "out"])
    accept.add_argument("--semantics", required=True, choices=["exact", "grounded"])

    abstract = commands.add_parser("abstract", help="emit minimal-abstraction scale documents")
    abstract.add_argument("file")
    abstract.add_argument("--all-minimal", action="store_true",
                          help="emit every minimal abstraction, not just the first")

    concretize = commands.add_parser("concretize", help="count, pick or check concretisations")
    concretize.add_argument("file")
    group = concretize.add_mutually_exclusive_group(required=True)
    group.add_argument("--count", action="store_true", help="print per-argument factors and the total")
    group.add_argument("--canonical", action="store_true", help="emit the canonical concretisation")
    group.add_argument("--enumerate", type=int, metavar="N", dest="enumerate_n",
                       help="emit up to N concretisations")
    group.add_argument("--check", metavar="ADF_FILE", help="test an adf document for membership")

    transfer = commands.add_parser("transfer", help="report certified facts from the abstraction")
    transfer.add_argument("file")
    transfer.add_argument("--figures", metavar="DIR", help="also render the labelled graphs")

    check = commands.add_parser("check", help="parse and validate a document")
    check.add_argument("file")

    fuzz_cmd = commands.add_parser("fuzz", help="run the property suite on random instances")
    fuzz_cmd.add_argument("--seed", type=int, required=True)
    fuzz_cmd.add_argument("--count", type=int, required=True)
    fuzz_cmd.add_argument("--max-args", type=int, default=4, dest="fuzz_max_args",
                          help="instance size bound (default 4)")
    return parser


def _load(path: str, max_attackers: int):
    return fileformat.parse(Path(path).read_bytes(), max_attackers=max_attackers)


def _require_kind(framework, kind, path: str):
    if not isinstance(framework, kind):
        want = "mma" if kind is MmaFramework else "adf"
        raise ParseError(f"{path} is not a {want} document")


def _cmd_exact(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    members = exact_semantics(framework, max_args=ns.max_args)
    for line in sorted(m.render() for m in members):
        print(line)
    print(f"# count: {len(members)}")
    return EXIT_OK


def _cmd_grounded(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    labelling = grounded(framework, max_args=ns.max_args)
    print(labelling.render())
    if ns.figures:
        from .plotting import draw_labelled_graph

        draw_labelled_graph(
            framework.graph, labelling, "grounded labelling",
            Path(ns.figures) / "grounded.png",
        )
    return EXIT_OK


def _cmd_accept(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    answer = accepted(
        framework,
        ns.argument,
        SemanticsKind(ns.semantics),
        AcceptanceMode(ns.mode),
        Label(ns.label),
        max_args=ns.max_args,
    )
    print("yes" if answer else "no")
    return EXIT_OK if answer else EXIT_NO


def _cmd_abstract(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    _require_kind(framework, AdfFramework, ns.file)
    abstractions = galois.minimal_abstractions(framework)
    documents = sorted(fileformat.serialize(m) for m in abstractions)
    if not ns.all_minimal:
        documents = documents[:1]
    print("\n".join(doc.rstrip("\n") for doc in documents))
    return EXIT_OK


def _cmd_concretize(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    _require_kind(framework, MmaFramework, ns.file)
    if ns.count:
        counted = galois.count_concretisations(framework, max_attackers=ns.max_attackers)
        for argument in framework.graph.arguments:
            print(f"factor {argument} {counted.factors[argument]}")
        print(f"total {counted.total}")
        return EXIT_OK
    if ns.canonical:
        adf = galois.canonical_concretisation(framework, max_attackers=ns.max_attackers)
        print(fileformat.serialize(adf), end="")
        return EXIT_OK
    if ns.enumerate_n is not None:
        documents = [
            fileformat.serialize(adf)
            for adf in galois.enumerate_concretisations(
                framework, ns.enumerate_n, max_attackers=ns.max_attackers
            )
        ]
        print("\n".join(doc.rstrip("\n") for doc in documents))
        return EXIT_OK
    candidate = _load(ns.check, ns.max_attackers)
    _require_kind(candidate, AdfFramework, ns.check)
    answer = galois.is_concretisation(candidate, framework)
    print("yes" if answer else "no")
    return EXIT_OK if answer else EXIT_NO


def _cmd_transfer(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    _require_kind(framework, AdfFramework, ns.file)
    report = galois.transfer_report(
        framework, max_args=ns.max_args, max_attackers=ns.max_attackers
    )
    for line in report.lines():
        print(line)
    if ns.figures:
        from .plotting import draw_labelled_graph

        draw_labelled_graph(
            framework.graph, report.grounded_bound, "certified grounded lower bound",
            Path(ns.figures) / "grounded_bound.png",
        )
        draw_labelled_graph(
            framework.graph, grounded(framework, max_args=ns.max_args),
            "grounded labelling", Path(ns.figures) / "grounded.png",
        )
    return EXIT_OK


def _cmd_check(ns) -> int:
    framework = _load(ns.file, ns.max_attackers)
    if isinstance(framework, MmaFramework):
        for note in scale_warnings(framework):
            print(f"warning: {note}")
    print("ok")
    return EXIT_OK


def _cmd_fuzz(ns) -> int:
    checked, violation = fuzz.run_suite(ns.seed, ns.count, ns.fuzz_max_args)
    if violation is None:
        print(f"ok: {checked} instances, no violations")
        return EXIT_OK
    print(violation.render(), end="")
    return EXIT_NO


_HANDLERS = {
    "exact": _cmd_exact,
    "grounded": _cmd_grounded,
    "accept": _cmd_accept,
    "abstract": _cmd_abstract,
    "concretize": _cmd_concretize,
    "transfer": _cmd_transfer,
    "check": _cmd_check,
    "fuzz": _cmd_fuzz,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _HANDLERS[ns.command](ns)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnknownArgumentError, GraphMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceCapError, NonMonotoneStepError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except MayMustError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
