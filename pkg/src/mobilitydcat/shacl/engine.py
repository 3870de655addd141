"""Validate data graphs against loaded shapes and render reports as RDF."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

from ..namespaces import RDF_TYPE, RDFS_SUBCLASS_OF, SH, XSD_BOOLEAN
from ..rdf import BlankNode, Graph, Iri, Literal, Term, Triple, term_sort_key
from .model import (
    LoadedShapes,
    NodeKind,
    NodeShape,
    PropertyShape,
    Severity,
    ValidationReport,
    ValidationResult,
)

_COMPONENT_ORDER = (
    "minCount", "maxCount", "nodeKind", "datatype", "class", "in", "inScheme", "pattern",
)


def subclass_closure(graphs: Iterable[Graph]) -> dict[Iri, set[Iri]]:
    """class -> all superclasses (including itself), from rdfs:subClassOf triples."""
    direct: dict[Iri, set[Iri]] = {}
    for graph in graphs:
        for t in graph.match(None, Iri(RDFS_SUBCLASS_OF), None):
            if isinstance(t.subject, Iri) and isinstance(t.object, Iri):
                direct.setdefault(t.subject, set()).add(t.object)

    closure: dict[Iri, set[Iri]] = {}

    def walk(cls: Iri) -> set[Iri]:
        if cls in closure:
            return closure[cls]
        closure[cls] = {cls}  # placeholder breaks cycles
        out = {cls}
        for parent in direct.get(cls, ()):
            out |= walk(parent)
        closure[cls] = out
        return out

    for cls in list(direct):
        walk(cls)
    return closure


def _types_with_closure(data: Graph, node: Term, closure: dict[Iri, set[Iri]]) -> set[Iri]:
    out: set[Iri] = set()
    for t in data.match(node, Iri(RDF_TYPE), None):
        if isinstance(t.object, Iri):
            out |= closure.get(t.object, {t.object})
    return out


def validate(
    data: Graph,
    shapes: LoadedShapes | Iterable[NodeShape],
    vocabularies: Mapping[str, "object"] | None = None,
) -> ValidationReport:
    """Check every focus node of every targeted shape; deterministic output.

    vocabularies maps scheme IRI text to a loaded concept scheme; scheme
    membership constraints whose scheme is absent from the mapping are
    skipped (they cannot be decided offline).
    """
    if isinstance(shapes, LoadedShapes):
        shape_list: list[NodeShape] = list(shapes.shapes)
        extra = [shapes.graph] if isinstance(shapes.graph, Graph) else []
    else:
        shape_list = list(shapes)
        extra = []
    closure = subclass_closure([data, *extra])

    results: list[ValidationResult] = []
    for shape in shape_list:
        if not shape.target_classes:
            continue
        focus_nodes: dict[Term, None] = {}
        for node in data.subjects(predicate=Iri(RDF_TYPE)):
            if _types_with_closure(data, node, closure) & shape.target_classes:
                focus_nodes.setdefault(node, None)
        for focus in focus_nodes:
            for prop in shape.properties:
                results.extend(
                    _check_property(data, focus, shape, prop, closure, vocabularies)
                )

    results.sort(
        key=lambda r: (
            term_sort_key(r.focus_node),
            r.path.value if r.path else "",
            _component_rank(r.message),
            term_sort_key(r.value) if r.value is not None else (),
        )
    )
    return ValidationReport(results=tuple(results))


def _component_rank(message: str) -> int:
    for i, name in enumerate(_COMPONENT_ORDER):
        if f"[{name}]" in message:
            return i
    return len(_COMPONENT_ORDER)


def _result(
    focus: Term,
    shape: NodeShape,
    prop: PropertyShape,
    component: str,
    detail: str,
    value: Term | None = None,
) -> ValidationResult:
    message = prop.message or f"[{component}] {detail}"
    return ValidationResult(
        focus_node=focus,
        path=prop.path,
        source_shape=prop.id if prop.id is not None else shape.id,
        severity=prop.severity,
        message=message,
        value=value,
    )


def _check_property(
    data: Graph,
    focus: Term,
    shape: NodeShape,
    prop: PropertyShape,
    closure: dict[Iri, set[Iri]],
    vocabularies: Mapping[str, "object"] | None,
) -> list[ValidationResult]:
    values = [t.object for t in data.match(focus, prop.path, None)]
    out: list[ValidationResult] = []

    if prop.min_count is not None and len(values) < prop.min_count:
        out.append(_result(
            focus, shape, prop, "minCount",
            f"{len(values)} values for {prop.path.value}, minimum is {prop.min_count}",
        ))
    if prop.max_count is not None and len(values) > prop.max_count:
        out.append(_result(
            focus, shape, prop, "maxCount",
            f"{len(values)} values for {prop.path.value}, maximum is {prop.max_count}",
        ))

    for value in values:
        if prop.node_kind is not None and not _kind_ok(value, prop.node_kind):
            out.append(_result(
                focus, shape, prop, "nodeKind",
                f"value is not of kind {prop.node_kind.value.rsplit('#', 1)[-1]}",
                value,
            ))
        if prop.datatype is not None:
            if not isinstance(value, Literal) or value.datatype != prop.datatype.value:
                out.append(_result(
                    focus, shape, prop, "datatype",
                    f"value does not have datatype {prop.datatype.value}", value,
                ))
        if prop.class_requirement is not None:
            if isinstance(value, Literal) or (
                prop.class_requirement not in _types_with_closure(data, value, closure)
            ):
                out.append(_result(
                    focus, shape, prop, "class",
                    f"value is not an instance of {prop.class_requirement.value}", value,
                ))
        if prop.allowed_values is not None and value not in prop.allowed_values:
            out.append(_result(
                focus, shape, prop, "in",
                f"value is not one of the {len(prop.allowed_values)} allowed values",
                value,
            ))
        if prop.required_scheme is not None and vocabularies is not None:
            scheme = vocabularies.get(prop.required_scheme.value)
            if scheme is not None and not scheme.is_in_scheme(value):
                out.append(_result(
                    focus, shape, prop, "inScheme",
                    f"value is not a concept of scheme {prop.required_scheme.value}",
                    value,
                ))
        if prop.pattern is not None:
            text = _string_form(value)
            if text is None or not re.search(prop.pattern, text):
                out.append(_result(
                    focus, shape, prop, "pattern",
                    f"value does not match pattern {prop.pattern}", value,
                ))
    return out


def _kind_ok(value: Term, kind: NodeKind) -> bool:
    if kind is NodeKind.IRI:
        return isinstance(value, Iri)
    if kind is NodeKind.LITERAL:
        return isinstance(value, Literal)
    return isinstance(value, (Iri, BlankNode))


def _string_form(value: Term) -> str | None:
    if isinstance(value, Literal):
        return value.lexical
    if isinstance(value, Iri):
        return value.value
    return None  # blank nodes never match sh:pattern


def report_to_graph(report: ValidationReport) -> Graph:
    """Render a report with the standard SHACL results vocabulary."""
    graph = Graph()
    report_node = graph.fresh_blank()
    graph.add(Triple(report_node, Iri(RDF_TYPE), Iri(SH + "ValidationReport")))
    graph.add(Triple(
        report_node, Iri(SH + "conforms"),
        Literal("true" if report.conforms else "false", datatype=XSD_BOOLEAN),
    ))
    for result in report.results:
        node = graph.fresh_blank()
        graph.add(Triple(report_node, Iri(SH + "result"), node))
        graph.add(Triple(node, Iri(RDF_TYPE), Iri(SH + "ValidationResult")))
        graph.add(Triple(node, Iri(SH + "focusNode"), result.focus_node))
        if result.path is not None:
            graph.add(Triple(node, Iri(SH + "resultPath"), result.path))
        graph.add(Triple(node, Iri(SH + "sourceShape"), result.source_shape))
        graph.add(Triple(node, Iri(SH + "resultSeverity"), Iri(result.severity.value)))
        graph.add(Triple(node, Iri(SH + "resultMessage"), Literal(result.message)))
        if result.value is not None:
            graph.add(Triple(node, Iri(SH + "value"), result.value))
    return graph
