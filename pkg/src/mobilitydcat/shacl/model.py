"""Shape and report types for the SHACL subset this toolkit understands.

Supported constraint components: minCount, maxCount, nodeKind, datatype,
class, in, hasValue (one-element in), pattern, severity, targetClass, plus
one custom parameter binding property values to a SKOS concept scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..errors import MalformedShape
from ..namespaces import SH
from ..rdf import BlankNode, Iri, Term


class Severity(Enum):
    VIOLATION = SH + "Violation"
    WARNING = SH + "Warning"
    INFO = SH + "Info"

    @classmethod
    def from_iri(cls, iri: str) -> "Severity":
        for sev in cls:
            if sev.value == iri:
                return sev
        raise MalformedShape(f"unknown severity {iri!r}")


class NodeKind(Enum):
    IRI = SH + "IRI"
    LITERAL = SH + "Literal"
    BLANK_NODE_OR_IRI = SH + "BlankNodeOrIRI"

    @classmethod
    def from_iri(cls, iri: str) -> "NodeKind | None":
        for kind in cls:
            if kind.value == iri:
                return kind
        return None


@dataclass(frozen=True)
class PropertyShape:
    path: Iri
    min_count: int | None = None
    max_count: int | None = None
    node_kind: NodeKind | None = None
    datatype: Iri | None = None
    class_requirement: Iri | None = None
    allowed_values: tuple[Term, ...] | None = None
    required_scheme: Iri | None = None
    pattern: str | None = None
    severity: Severity = Severity.VIOLATION
    message: str | None = None
    id: Term | None = None  # shape node, cited as sh:sourceShape in reports

    def __post_init__(self):
        if self.min_count is not None and self.min_count < 0:
            raise MalformedShape("negative minCount")
        if self.max_count is not None and self.max_count < 0:
            raise MalformedShape("negative maxCount")
        if (
            self.min_count is not None
            and self.max_count is not None
            and self.min_count > self.max_count
        ):
            raise MalformedShape(
                f"minCount {self.min_count} exceeds maxCount {self.max_count}"
            )
        if self.allowed_values is not None and self.required_scheme is not None:
            raise MalformedShape("allowedValues and requiredScheme are exclusive")


@dataclass(frozen=True)
class NodeShape:
    id: Term
    target_classes: frozenset[Iri] = frozenset()
    properties: tuple[PropertyShape, ...] = ()
    closed: bool = False  # reserved; always False in this version


@dataclass(frozen=True)
class ValidationResult:
    focus_node: Term
    path: Iri | None
    source_shape: Term
    severity: Severity
    message: str
    value: Term | None = None


@dataclass(frozen=True)
class ValidationReport:
    results: tuple[ValidationResult, ...]

    @property
    def conforms(self) -> bool:
        return not any(r.severity is Severity.VIOLATION for r in self.results)

    def by_severity(self, severity: Severity) -> list[ValidationResult]:
        return [r for r in self.results if r.severity is severity]


@dataclass(frozen=True)
class LoadedShapes:
    """Shapes extracted from a shape graph, plus what came along with them.

    graph keeps the merged (import-resolved) shape graph so validation can
    reuse its rdfs:subClassOf statements; warnings list every constraint
    component the loader saw but does not support.
    """

    shapes: tuple[NodeShape, ...]
    warnings: tuple[str, ...] = ()
    graph: "object | None" = None  # Graph; typed loosely to avoid cycle

    def __iter__(self):
        return iter(self.shapes)

    def __len__(self):
        return len(self.shapes)
