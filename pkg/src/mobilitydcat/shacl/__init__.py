"""SHACL-subset engine: shape loading, validation, structured reports."""

from .engine import report_to_graph, subclass_closure, validate
from .loader import load_shapes, resolve_imports, shapes_to_graph
from .model import (
    LoadedShapes,
    NodeKind,
    NodeShape,
    PropertyShape,
    Severity,
    ValidationReport,
    ValidationResult,
)

__all__ = [
    "LoadedShapes",
    "NodeKind",
    "NodeShape",
    "PropertyShape",
    "Severity",
    "ValidationReport",
    "ValidationResult",
    "load_shapes",
    "report_to_graph",
    "resolve_imports",
    "shapes_to_graph",
    "subclass_closure",
    "validate",
]
