"""Command-line interface: ``galex build|report|classify|serve``."""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path

from .context import load_context
from .dot import lattice_to_dot, poset_to_dot
from .errors import GalexError
from .figures import render_report_figures
from .lattice import DEFAULT_CONCEPT_CEILING, ConceptLattice, build_lattice, canonical_json_bytes
from .subhierarchy import ConceptPoset, ac_poset, aoc_poset, iceberg, oc_poset
from .variability import (
    VariabilityReport,
    classify_configuration,
    render_report_text,
    report_from_lattice,
)


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _poset_text(poset: ConceptPoset) -> str:
    lat = poset.lattice
    head = f"{poset.kind.value} poset"
    if poset.min_extent is not None:
        head += f" (min_extent={poset.min_extent})"
    lines = [f"{head}: {len(poset.concept_ids)} concepts, {len(poset.order_edges)} edges"]
    for cid in poset.concept_ids:
        intent = ", ".join(lat.intent_names(cid))
        extent = ", ".join(lat.extent_names(cid))
        lines.append(f"  C{cid}  intent=[{intent}]  extent=[{extent}]")
    if poset.order_edges:
        lines.append("edges: " + ", ".join(f"C{lo} -> C{hi}" for lo, hi in poset.order_edges))
    return "\n".join(lines) + "\n"


def _report_csv(report: VariabilityReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["fact", "subject", "object", "detail"])
    for a in report.core:
        writer.writerow(["core", a, "", ""])
    for a in report.dead:
        writer.writerow(["dead", a, "", ""])
    for imp in report.implications:
        writer.writerow(["implication", imp.premise, imp.conclusion,
                         "vacuous" if imp.vacuous else ""])
    for group in report.equivalence_groups:
        if len(group) > 1:
            for member in group[1:]:
                writer.writerow(["equivalence", group[0], member, ""])
    for m in report.mutex:
        writer.writerow(["mutex", m.a1, m.a2, "vacuous" if m.vacuous else ""])
    for o1, o2 in report.specializations:
        writer.writerow(["specialization", o1, o2, ""])
    for a, n in report.metrics["attribute_support"].items():
        writer.writerow(["attribute_support", a, "", n])
    for o, n in report.metrics["object_configuration_size"].items():
        writer.writerow(["configuration_size", o, "", n])
    return buf.getvalue()


def cmd_build(args: argparse.Namespace) -> int:
    lattice = build_lattice(load_context(args.context), max_concepts=args.ceiling)
    if args.format == "dot":
        _write_output(lattice_to_dot(lattice, full_labels=args.full_labels), args.out)
    else:
        _write_output(lattice.to_json_bytes().decode("utf-8"), args.out)
    return 0


def _selected_poset(args: argparse.Namespace, lattice: ConceptLattice) -> ConceptPoset | None:
    if args.aoc:
        return aoc_poset(lattice)
    if args.ac:
        return ac_poset(lattice)
    if args.oc:
        return oc_poset(lattice)
    if args.iceberg is not None:
        return iceberg(lattice, args.iceberg)
    return None


def cmd_report(args: argparse.Namespace) -> int:
    lattice = build_lattice(load_context(args.context), max_concepts=args.ceiling)
    poset = _selected_poset(args, lattice)
    if poset is not None:
        if args.format == "json":
            _write_output(poset.to_json_bytes().decode("utf-8"), args.out)
        elif args.format == "dot":
            _write_output(poset_to_dot(poset, full_labels=args.full_labels), args.out)
        else:
            _write_output(_poset_text(poset), args.out)
        return 0

    report = report_from_lattice(lattice, exhaustive=args.exhaustive)
    if args.format == "json":
        from .variability import report_json_dict

        _write_output(canonical_json_bytes(report_json_dict(report)).decode("utf-8"), args.out)
    elif args.format == "csv":
        _write_output(_report_csv(report), args.out)
    elif args.format == "dot":
        raise GalexError("dot output needs one of --aoc/--ac/--oc/--iceberg")
    else:
        _write_output(render_report_text(report), args.out)
    if args.figures:
        for path in render_report_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    ctx = load_context(args.context)
    lattice = build_lattice(ctx, max_concepts=args.ceiling)
    attrs = frozenset(ctx.attribute_index(name) for name in args.attributes)
    result = classify_configuration(ctx, lattice, attrs)
    witness_intent = (
        list(lattice.intent_names(result.witness)) if result.witness is not None else None
    )
    if args.json:
        payload = {
            "attributes": sorted(args.attributes),
            "kind": result.kind.value,
            "witness": result.witness,
            "witness_intent": witness_intent,
        }
        _write_output(canonical_json_bytes(payload).decode("utf-8"), args.out)
    else:
        given = ", ".join(sorted(args.attributes))
        lines = [f"{{{given}}} -> {result.kind.value}"]
        if result.witness is not None:
            lines.append(f"witness concept C{result.witness}: {{{', '.join(witness_intent)}}}")
        _write_output("\n".join(lines) + "\n", args.out)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import ServiceConfig, serve

    port = args.port
    env_port = os.environ.get("GALEX_PORT")
    if env_port:
        try:
            port = int(env_port)
        except ValueError:
            raise GalexError(f"GALEX_PORT must be an integer, got {env_port!r}") from None
    config = ServiceConfig(
        context_path=Path(args.context),
        host=args.host,
        port=port,
        ceiling=args.ceiling,
        static_dir=Path(args.static_dir) if args.static_dir else None,
        session_ttl_seconds=args.session_ttl,
    )
    serve(config)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galex",
        description="Concept-lattice construction and variability analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("context", help="context file (.csv or .json)")
        p.add_argument("--ceiling", type=int, default=DEFAULT_CONCEPT_CEILING,
                       help="maximum number of concepts before aborting")

    p_build = sub.add_parser("build", help="build the concept lattice and export it")
    add_common(p_build)
    p_build.add_argument("-f", "--format", choices=["json", "dot"], default="json")
    p_build.add_argument("-o", "--out", default=None, help="output file (default stdout)")
    p_build.add_argument("--full-labels", action="store_true",
                         help="DOT nodes carry full intents/extents instead of reduced labels")
    p_build.set_defaults(func=cmd_build)

    p_report = sub.add_parser("report", help="variability report or sub-hierarchy views")
    add_common(p_report)
    p_report.add_argument("-f", "--format", choices=["text", "json", "csv", "dot"],
                          default="text")
    p_report.add_argument("-o", "--out", default=None)
    p_report.add_argument("--exhaustive", action="store_true",
                          help="list group-internal and vacuous implications/mutexes too")
    view = p_report.add_mutually_exclusive_group()
    view.add_argument("--aoc", action="store_true", help="AOC-poset instead of the report")
    view.add_argument("--ac", action="store_true", help="AC-poset instead of the report")
    view.add_argument("--oc", action="store_true", help="OC-poset instead of the report")
    view.add_argument("--iceberg", type=int, metavar="N",
                      help="iceberg poset of concepts with extent size >= N")
    p_report.add_argument("--figures", metavar="DIR", default=None,
                          help="also render metric charts (PNG) into DIR")
    p_report.add_argument("--full-labels", action="store_true")
    p_report.set_defaults(func=cmd_report)

    p_classify = sub.add_parser("classify", help="classify an attribute set")
    add_common(p_classify)
    p_classify.add_argument("attributes", nargs="+", metavar="ATTRIBUTE")
    p_classify.add_argument("--json", action="store_true")
    p_classify.add_argument("-o", "--out", default=None)
    p_classify.set_defaults(func=cmd_classify)

    p_serve = sub.add_parser("serve", help="serve the HTTP API and explorer UI")
    add_common(p_serve)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000,
                         help="listen port (GALEX_PORT overrides)")
    p_serve.add_argument("--static-dir", default=None,
                         help="directory with the built explorer bundle")
    p_serve.add_argument("--session-ttl", type=float, default=1800.0,
                         help="idle session expiry in seconds")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GalexError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
