"""Compile a profile into node shapes.

Obligation mapping: mandatory properties get minCount >= 1 at Violation,
recommended ones minCount 1 at Warning, optional ones carry no count
constraint. Range and vocabulary constraints inherit the shape's severity
(so everything on a recommended property warns rather than fails).
"""

from __future__ import annotations

from typing import Mapping

from ..rdf import Graph, Iri, Triple
from ..namespaces import RDFS_SUBCLASS_OF
from ..shacl import LoadedShapes, NodeShape, PropertyShape, Severity
from .model import UNBOUNDED, Obligation, Profile, PropertyProfile


def _local_name(iri: Iri) -> str:
    text = iri.value
    for sep in ("#", "/"):
        if sep in text:
            text = text.rsplit(sep, 1)[-1]
            break
    return text or "node"


def _shape_iri(profile: Profile, class_iri: Iri) -> Iri:
    return Iri(f"{profile.id.value.rstrip('/')}/shapes/{_local_name(class_iri)}")


def _property_shape(
    profile: Profile,
    prop: PropertyProfile,
    shape_id: Iri,
    vocabularies: Mapping[str, "object"] | None,
    inline_vocabulary_values: bool,
) -> PropertyShape:
    severity = (
        Severity.WARNING if prop.obligation is Obligation.RECOMMENDED else Severity.VIOLATION
    )
    min_count = None
    if prop.obligation in (Obligation.MANDATORY, Obligation.RECOMMENDED):
        min_count = max(1, prop.min_card)
    max_count = None if prop.max_card is UNBOUNDED else prop.max_card

    allowed_values = None
    required_scheme = None
    if prop.vocabulary is not None:
        scheme = (vocabularies or {}).get(prop.vocabulary.value)
        if inline_vocabulary_values and scheme is not None:
            # compatibility mode: enumerate the scheme into a plain sh:in list
            allowed_values = tuple(sorted(
                (c.iri for c in scheme.concepts), key=lambda i: i.value
            ))
        else:
            required_scheme = prop.vocabulary

    return PropertyShape(
        path=prop.property_iri,
        min_count=min_count,
        max_count=max_count,
        datatype=prop.datatype,
        class_requirement=prop.range_class,
        allowed_values=allowed_values,
        required_scheme=required_scheme,
        severity=severity,
        id=Iri(f"{shape_id.value}/{_local_name(prop.property_iri)}"),
    )


def compile_to_shapes(
    profile: Profile,
    vocabularies: Mapping[str, "object"] | None = None,
    inline_vocabulary_values: bool = False,
) -> LoadedShapes:
    """One node shape per class profile; deterministic output.

    The returned shape set carries a small ontology graph holding the
    profile's subclass declarations so validation can honour them.
    """
    ontology = Graph()
    shapes = []
    for cls in profile.classes:
        shape_id = _shape_iri(profile, cls.class_iri)
        if cls.sub_class_of is not None:
            ontology.add(Triple(cls.class_iri, Iri(RDFS_SUBCLASS_OF), cls.sub_class_of))
        properties = tuple(
            _property_shape(profile, prop, shape_id, vocabularies, inline_vocabulary_values)
            for prop in cls.properties
        )
        shapes.append(NodeShape(
            id=shape_id,
            target_classes=frozenset({cls.class_iri}),
            properties=properties,
        ))
    return LoadedShapes(shapes=tuple(shapes), warnings=(), graph=ontology)
