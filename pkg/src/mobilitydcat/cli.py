"""Command-line entry point.

Exit codes: 0 success, 1 findings at Violation level (or warnings under
--strict), 2 usage or operational errors. Every subcommand can emit a
machine-readable report with --json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ToolkitError
from .federation import (
    FederatedCatalog,
    HttpFetcher,
    harvest_source,
    merge_into_catalog,
    parse_source_registry,
)
from .mapping import convert_record, load_mapping_table, read_legacy_records
from .profile import (
    check_extension,
    compile_to_shapes,
    load_profile,
    minimum_profile,
)
from .rdf import Format, parse_ntriples, parse_turtle, serialize
from .service import report_to_json
from .shacl import Severity, validate
from .vocab import tabular_to_scheme, vocabularies_by_iri

from .namespaces import COMMON_PREFIXES
from .rdf import PrefixMap

PREFIXES = PrefixMap(COMMON_PREFIXES)


def _color_enabled() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _paint(text: str, code: str) -> str:
    return f"\033[{code}m{text}\033[0m" if _color_enabled() else text


def _read_input(path: str, format_name: str | None):
    """Read an RDF document from a file or stdin ('-'); returns (graph, format)."""
    if path == "-":
        if not format_name:
            raise ToolkitError("reading from stdin requires --format")
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    fmt = Format.from_name(format_name) if format_name else _guess_format(path)
    if fmt is Format.TURTLE:
        graph, _ = parse_turtle(text)
    elif fmt is Format.NTRIPLES:
        graph = parse_ntriples(text)
    else:
        raise ToolkitError("JSON-LD input is not parseable; supply Turtle or N-Triples")
    return graph, fmt


def _guess_format(path: str) -> Format:
    suffix = Path(path).suffix.lower()
    if suffix in (".nt", ".ntriples"):
        return Format.NTRIPLES
    if suffix in (".jsonld", ".json"):
        return Format.JSONLD
    return Format.TURTLE


def _load_active_profile(path: str | None):
    return load_profile(path) if path else minimum_profile()


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _severity_lines(report) -> list[str]:
    lines = []
    for result in report.results:
        label = result.severity.value.rsplit("#", 1)[-1]
        colored = _paint(label, "31" if label == "Violation" else "33")
        path = result.path.value if result.path else "-"
        lines.append(f"{colored}  {result.focus_node}  {path}  {result.message}")
    return lines


def cmd_validate(args) -> int:
    graph, _ = _read_input(args.file, args.format)
    profile = _load_active_profile(args.profile)
    vocabularies = vocabularies_by_iri()
    report = validate(graph, compile_to_shapes(profile, vocabularies), vocabularies)
    payload = report_to_json(report)
    summary = (
        f"{'PASS' if report.conforms else 'FAIL'}: "
        f"{len(report.by_severity(Severity.VIOLATION))} violations, "
        f"{len(report.by_severity(Severity.WARNING))} warnings, "
        f"{len(report.by_severity(Severity.INFO))} info"
    )
    _emit(args, payload, _severity_lines(report) + [summary])
    if not report.conforms:
        return 1
    if args.strict and report.by_severity(Severity.WARNING):
        return 1
    return 0


def cmd_convert(args) -> int:
    table = load_mapping_table(Path(args.mapping).read_text(encoding="utf-8"))
    text = sys.stdin.read() if args.legacy == "-" else Path(args.legacy).read_text(encoding="utf-8")
    records = read_legacy_records(text, args.format)
    profile = _load_active_profile(args.profile)
    vocabularies = vocabularies_by_iri()
    shapes = compile_to_shapes(profile, vocabularies)

    out_format = Format.from_name(args.to)
    all_issues = []
    violations = 0
    documents = {}
    from .rdf import Graph, merge_graphs

    combined = Graph()
    for record in records:
        graph, issues = convert_record(record, table)
        all_issues.extend(issues)
        report = validate(graph, shapes, vocabularies)
        violations += len(report.by_severity(Severity.VIOLATION))
        documents[record.record_id] = serialize(graph, out_format, PREFIXES)
        combined = merge_graphs(combined, graph)

    output_text = serialize(combined, out_format, PREFIXES)
    if args.out:
        Path(args.out).write_text(output_text, encoding="utf-8")
    payload = {
        "records": len(records),
        "issues": [
            {"recordId": i.record_id, "field": i.field_name,
             "kind": i.kind.value, "detail": i.detail}
            for i in all_issues
        ],
        "violations": violations,
        "output": args.out or None,
    }
    lines = [
        f"{i.kind.value}  {i.record_id}  {i.field_name}: {i.detail}" for i in all_issues
    ] + [f"converted {len(records)} records, {violations} validation violations"]
    if not args.out and not args.json:
        lines.append(output_text)
    _emit(args, payload, lines)
    if violations:
        return 1
    if args.strict and all_issues:
        return 1
    return 0


def cmd_vocab_build(args) -> int:
    scheme, graph = tabular_to_scheme(Path(args.csv).read_text(encoding="utf-8"))
    out_format = Format.from_name(args.to)
    text = serialize(graph, out_format, PREFIXES)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    payload = {
        "scheme": scheme.iri.value,
        "title": scheme.title,
        "version": scheme.version,
        "concepts": len(scheme),
        "output": args.out or None,
    }
    lines = [f"built scheme {scheme.iri} with {len(scheme)} concepts"]
    if not args.out and not args.json:
        lines.append(text)
    _emit(args, payload, lines)
    return 0


def cmd_check_extension(args) -> int:
    base = load_profile(args.base)
    extension = load_profile(args.extension)
    violations = check_extension(base, extension)
    payload = {
        "base": base.id.value,
        "extension": extension.id.value,
        "violations": [
            {"class": v.class_iri.value,
             "property": v.property_iri.value if v.property_iri else None,
             "kind": v.kind, "detail": v.detail}
            for v in violations
        ],
    }
    lines = [str(v) for v in violations] or ["extension is lawful"]
    _emit(args, payload, lines)
    return 1 if violations else 0


def cmd_harvest(args) -> int:
    sources = parse_source_registry(Path(args.sources).read_text(encoding="utf-8"))
    profile = _load_active_profile(args.profile)
    vocabularies = vocabularies_by_iri()
    shapes = compile_to_shapes(profile, vocabularies)
    fetcher = HttpFetcher()
    catalog = FederatedCatalog()
    per_source = {}
    for source in sources:
        records, _updated = harvest_source(source, fetcher, shapes, vocabularies)
        catalog = merge_into_catalog(catalog, records)
        per_source[source.id] = len(records)

    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        for record in catalog.records.values():
            path = out_dir / f"{record.record_id}.ttl"
            path.write_text(serialize(record.graph, Format.TURTLE, PREFIXES), encoding="utf-8")
    non_conforming = sum(
        1 for r in catalog.records.values() if not r.validation.conforms
    )
    payload = {
        "sources": per_source,
        "records": len(catalog),
        "nonConforming": non_conforming,
        "output": str(out_dir) if out_dir else None,
    }
    lines = [f"{sid}: {count} records" for sid, count in per_source.items()]
    lines.append(f"harvested {len(catalog)} records ({non_conforming} non-conforming)")
    _emit(args, payload, lines)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_app, load_config

    config = load_config(args.config)
    app = build_app(config)
    if args.harvest_on_start:
        from .service import harvest_into_app

        harvest_into_app(app)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_serialize(args) -> int:
    graph, _ = _read_input(args.file, args.format)
    out_format = Format.from_name(args.to)
    text = serialize(graph, out_format, PREFIXES)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        _emit(args, {"triples": len(graph), "output": args.out}, [f"wrote {args.out}"])
    elif args.json:
        _emit(args, {"triples": len(graph), "output": None, "document": text}, [])
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobilitydcat",
        description="Build, validate, convert, publish and federate mobility metadata.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an RDF document against a profile")
    p.add_argument("file", help="Turtle/N-Triples file, or '-' for stdin")
    p.add_argument("--profile", help="profile document (default: bundled minimum profile)")
    p.add_argument("--format", help="input format name (turtle, ntriples)")
    p.add_argument("--strict", action="store_true", help="warnings also fail")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("convert", help="convert legacy records to RDF")
    p.add_argument("legacy", help="legacy records file (CSV or JSON), or '-'")
    p.add_argument("--mapping", required=True, help="mapping table CSV")
    p.add_argument("--format", default="csv", choices=["csv", "json"],
                   help="legacy records format")
    p.add_argument("--profile", help="profile to validate converted records against")
    p.add_argument("--to", default="turtle", help="output RDF format")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--strict", action="store_true", help="conversion issues also fail")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("vocab", help="vocabulary tools")
    vocab_sub = p.add_subparsers(dest="vocab_command", required=True)
    pb = vocab_sub.add_parser("build", help="build SKOS from a vocabulary CSV")
    pb.add_argument("csv", help="vocabulary table")
    pb.add_argument("--to", default="turtle", help="output RDF format")
    pb.add_argument("--out", help="output file (default: stdout)")
    pb.set_defaults(func=cmd_vocab_build)

    p = sub.add_parser("profile", help="profile tools")
    profile_sub = p.add_subparsers(dest="profile_command", required=True)
    pc = profile_sub.add_parser("check-extension", help="check extension rules")
    pc.add_argument("base", help="base profile document")
    pc.add_argument("extension", help="extension profile document")
    pc.set_defaults(func=cmd_check_extension)

    p = sub.add_parser("harvest", help="harvest portals into a catalog")
    p.add_argument("--sources", required=True, help="source registry JSON")
    p.add_argument("--profile", help="profile for validation")
    p.add_argument("--out", help="directory for per-record Turtle files")
    p.set_defaults(func=cmd_harvest)

    p = sub.add_parser("serve", help="run the portal service")
    p.add_argument("--config", required=True, help="service config JSON")
    p.add_argument("--harvest-on-start", action="store_true")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("serialize", help="re-serialize an RDF document")
    p.add_argument("file", help="input file, or '-' for stdin")
    p.add_argument("--format", help="input format name")
    p.add_argument("--to", required=True, help="output format name")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_serialize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
