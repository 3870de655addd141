"""SKOS controlled vocabularies: model, tabular conversion, bundled data."""

from .bundled import (
    VOCABULARY_FILES,
    load_bundled_vocabularies,
    vocabularies_by_iri,
    vocabulary_slug,
)
from .model import Concept, ConceptScheme
from .tabular import scheme_to_graph, scheme_to_table, tabular_to_scheme

__all__ = [
    "Concept",
    "ConceptScheme",
    "VOCABULARY_FILES",
    "load_bundled_vocabularies",
    "scheme_to_graph",
    "scheme_to_table",
    "tabular_to_scheme",
    "vocabularies_by_iri",
    "vocabulary_slug",
]
