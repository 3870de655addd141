"""Extract node shapes from a shape graph, resolving owl:imports first."""

from __future__ import annotations

from typing import Callable, Mapping

from ..errors import MalformedList, MalformedShape, UnresolvableImport
from ..namespaces import IN_SCHEME_CONSTRAINT, OWL_IMPORTS, RDF_TYPE, SH
from ..rdf import BlankNode, Graph, Iri, Literal, Term, Triple, merge_graphs, read_rdf_list
from .model import LoadedShapes, NodeKind, NodeShape, PropertyShape, Severity

Resolver = Mapping[str, Graph] | Callable[[str], "Graph | None"]

_SUPPORTED_PARAMS = {
    SH + "path",
    SH + "minCount",
    SH + "maxCount",
    SH + "nodeKind",
    SH + "datatype",
    SH + "class",
    SH + "in",
    SH + "hasValue",
    SH + "pattern",
    SH + "severity",
    SH + "message",
    IN_SCHEME_CONSTRAINT,
    RDF_TYPE,
}


def _resolve(resolver: Resolver | None, iri: str) -> Graph | None:
    if resolver is None:
        return None
    if callable(resolver):
        return resolver(iri)
    return resolver.get(iri)


def resolve_imports(shape_graph: Graph, resolver: Resolver | None = None) -> Graph:
    """Merge every transitively imported graph, once each, cycle-safe."""
    merged = Graph(shape_graph)
    seen: set[str] = set()
    queue = [t.object.value for t in shape_graph.match(None, Iri(OWL_IMPORTS), None)
             if isinstance(t.object, Iri)]
    while queue:
        target = queue.pop(0)
        if target in seen:
            continue
        seen.add(target)
        imported = _resolve(resolver, target)
        if imported is None:
            raise UnresolvableImport(f"cannot resolve import {target!r}")
        merged = merge_graphs(merged, imported)
        queue.extend(
            t.object.value
            for t in imported.match(None, Iri(OWL_IMPORTS), None)
            if isinstance(t.object, Iri)
        )
    return merged


def _int_param(graph: Graph, node: Term, param: str) -> int | None:
    value = graph.value(node, Iri(SH + param))
    if value is None:
        return None
    if not isinstance(value, Literal):
        raise MalformedShape(f"sh:{param} must be a literal")
    try:
        return int(value.lexical)
    except ValueError as exc:
        raise MalformedShape(f"sh:{param} is not an integer: {value.lexical!r}") from exc


def _parse_property_shape(
    graph: Graph, node: Term, warnings: list[str]
) -> PropertyShape | None:
    path = graph.value(node, Iri(SH + "path"))
    if path is None:
        raise MalformedShape(f"property shape {node} has no sh:path")
    if not isinstance(path, Iri):
        warnings.append(f"unsupported non-IRI path on {node}; shape skipped")
        return None

    for t in graph.match(subject=node):
        if t.predicate.value.startswith(SH) and t.predicate.value not in _SUPPORTED_PARAMS:
            warnings.append(
                f"unsupported constraint component {t.predicate.value} on {node}"
            )

    node_kind = None
    nk = graph.value(node, Iri(SH + "nodeKind"))
    if isinstance(nk, Iri):
        node_kind = NodeKind.from_iri(nk.value)
        if node_kind is None:
            warnings.append(f"unsupported nodeKind {nk.value} on {node}")

    datatype = graph.value(node, Iri(SH + "datatype"))
    class_req = graph.value(node, Iri(SH + "class"))
    scheme = graph.value(node, Iri(IN_SCHEME_CONSTRAINT))

    allowed: tuple[Term, ...] | None = None
    in_list = graph.value(node, Iri(SH + "in"))
    if in_list is not None:
        try:
            allowed = tuple(read_rdf_list(graph, in_list))
        except MalformedList as exc:
            raise MalformedShape(f"bad sh:in list on {node}: {exc}") from exc
    has_value = graph.value(node, Iri(SH + "hasValue"))
    if has_value is not None:
        allowed = (allowed or ()) + (has_value,)

    pattern = graph.value(node, Iri(SH + "pattern"))
    severity = Severity.VIOLATION
    sev = graph.value(node, Iri(SH + "severity"))
    if isinstance(sev, Iri):
        severity = Severity.from_iri(sev.value)

    message = graph.value(node, Iri(SH + "message"))

    return PropertyShape(
        path=path,
        min_count=_int_param(graph, node, "minCount"),
        max_count=_int_param(graph, node, "maxCount"),
        node_kind=node_kind,
        datatype=datatype if isinstance(datatype, Iri) else None,
        class_requirement=class_req if isinstance(class_req, Iri) else None,
        allowed_values=allowed,
        required_scheme=scheme if isinstance(scheme, Iri) else None,
        pattern=pattern.lexical if isinstance(pattern, Literal) else None,
        severity=severity,
        message=message.lexical if isinstance(message, Literal) else None,
        id=node,
    )


def shapes_to_graph(loaded: LoadedShapes) -> Graph:
    """Render loaded shapes back into a SHACL shape graph.

    Includes the ontology triples (e.g. subclass axioms) the shapes carried.
    """
    from ..namespaces import XSD_INTEGER

    graph = Graph()
    if isinstance(loaded.graph, Graph):
        for t in loaded.graph.match(None, Iri("http://www.w3.org/2000/01/rdf-schema#subClassOf"), None):
            graph.add(t)
    for shape in loaded.shapes:
        graph.add(Triple(shape.id, Iri(RDF_TYPE), Iri(SH + "NodeShape")))
        for target in sorted(shape.target_classes, key=lambda i: i.value):
            graph.add(Triple(shape.id, Iri(SH + "targetClass"), target))
        for prop in shape.properties:
            node = prop.id if prop.id is not None else graph.fresh_blank()
            graph.add(Triple(shape.id, Iri(SH + "property"), node))
            graph.add(Triple(node, Iri(SH + "path"), prop.path))
            if prop.min_count is not None:
                graph.add(Triple(node, Iri(SH + "minCount"),
                                 Literal(str(prop.min_count), datatype=XSD_INTEGER)))
            if prop.max_count is not None:
                graph.add(Triple(node, Iri(SH + "maxCount"),
                                 Literal(str(prop.max_count), datatype=XSD_INTEGER)))
            if prop.node_kind is not None:
                graph.add(Triple(node, Iri(SH + "nodeKind"), Iri(prop.node_kind.value)))
            if prop.datatype is not None:
                graph.add(Triple(node, Iri(SH + "datatype"), prop.datatype))
            if prop.class_requirement is not None:
                graph.add(Triple(node, Iri(SH + "class"), prop.class_requirement))
            if prop.allowed_values is not None:
                head = _write_list(graph, prop.allowed_values)
                graph.add(Triple(node, Iri(SH + "in"), head))
            if prop.required_scheme is not None:
                graph.add(Triple(node, Iri(IN_SCHEME_CONSTRAINT), prop.required_scheme))
            if prop.pattern is not None:
                graph.add(Triple(node, Iri(SH + "pattern"), Literal(prop.pattern)))
            if prop.message is not None:
                graph.add(Triple(node, Iri(SH + "message"), Literal(prop.message)))
            graph.add(Triple(node, Iri(SH + "severity"), Iri(prop.severity.value)))
    return graph


def _write_list(graph: Graph, items) -> Term:
    from ..namespaces import RDF_FIRST, RDF_NIL, RDF_REST

    if not items:
        return Iri(RDF_NIL)
    nodes = [graph.fresh_blank() for _ in items]
    for i, item in enumerate(items):
        graph.add(Triple(nodes[i], Iri(RDF_FIRST), item))
        rest: Term = nodes[i + 1] if i + 1 < len(items) else Iri(RDF_NIL)
        graph.add(Triple(nodes[i], Iri(RDF_REST), rest))
    return nodes[0]


def load_shapes(shape_graph: Graph, resolver: Resolver | None = None) -> LoadedShapes:
    """Resolve imports, then collect every node shape with its property shapes.

    Untargeted shapes are retained (they are inert during validation).
    Unsupported constraint components become warnings, never errors.
    """
    merged = resolve_imports(shape_graph, resolver)
    warnings: list[str] = []

    shape_nodes: dict[Term, None] = {}
    for t in merged.match(None, Iri(RDF_TYPE), Iri(SH + "NodeShape")):
        shape_nodes.setdefault(t.subject, None)
    for t in merged.match(None, Iri(SH + "targetClass"), None):
        shape_nodes.setdefault(t.subject, None)

    shapes: list[NodeShape] = []
    for node in shape_nodes:
        targets = frozenset(
            o for o in merged.objects(node, Iri(SH + "targetClass")) if isinstance(o, Iri)
        )
        properties: list[PropertyShape] = []
        for prop_node in merged.objects(node, Iri(SH + "property")):
            parsed = _parse_property_shape(merged, prop_node, warnings)
            if parsed is not None:
                properties.append(parsed)
        closed = merged.value(node, Iri(SH + "closed"))
        if isinstance(closed, Literal) and closed.lexical == "true":
            warnings.append(f"sh:closed on {node} is not enforced")
        shapes.append(
            NodeShape(id=node, target_classes=targets, properties=tuple(properties))
        )

    return LoadedShapes(shapes=tuple(shapes), warnings=tuple(warnings), graph=merged)
