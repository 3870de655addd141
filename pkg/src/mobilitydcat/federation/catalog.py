"""Catalog merging and cross-portal search over indexed records."""

from __future__ import annotations

from typing import Iterable

from ..namespaces import DCAT, DCT, FOAF, MOBILITYDCATAP, RDFS_LABEL, VCARD
from ..rdf import Graph, Iri, Literal
from .model import CatalogRecord, FederatedCatalog, IndexEntry, SearchQuery

_THEME_PREDICATES = (Iri(MOBILITYDCATAP + "mobilityTheme"), Iri(DCAT + "theme"))
_TRANSPORT_PREDICATES = (Iri(MOBILITYDCATAP + "transportMode"),)
_STANDARD_PREDICATES = (
    Iri(MOBILITYDCATAP + "mobilityDataStandard"),
    Iri(DCT + "conformsTo"),
)
_TEXT_PREDICATES = (Iri(DCT + "title"), Iri(DCT + "description"))
_NAME_PREDICATES = (Iri(FOAF + "name"), Iri(RDFS_LABEL), Iri(VCARD + "fn"))


def build_index_entry(record: CatalogRecord) -> IndexEntry:
    graph = record.graph
    themes = set()
    transport_modes = set()
    standards = set()
    publishers = set()
    text_parts = []

    for predicate in _THEME_PREDICATES:
        themes.update(o.value for o in graph.objects(None, predicate) if isinstance(o, Iri))
    for predicate in _TRANSPORT_PREDICATES:
        transport_modes.update(
            o.value for o in graph.objects(None, predicate) if isinstance(o, Iri)
        )
    for predicate in _STANDARD_PREDICATES:
        standards.update(o.value for o in graph.objects(None, predicate) if isinstance(o, Iri))

    for publisher in graph.objects(None, Iri(DCT + "publisher")):
        if isinstance(publisher, Literal):
            publishers.add(publisher.lexical.lower())
        else:
            if isinstance(publisher, Iri):
                publishers.add(publisher.value.lower())
            for name_pred in _NAME_PREDICATES:
                for name in graph.objects(publisher, name_pred):
                    if isinstance(name, Literal):
                        publishers.add(name.lexical.lower())

    for predicate in _TEXT_PREDICATES:
        for value in graph.objects(None, predicate):
            if isinstance(value, Literal):
                text_parts.append(value.lexical.lower())

    return IndexEntry(
        themes=frozenset(themes),
        transport_modes=frozenset(transport_modes),
        standards=frozenset(standards),
        publishers=frozenset(publishers),
        text=" \n ".join(sorted(text_parts)),
    )


def merge_into_catalog(
    catalog: FederatedCatalog, records: Iterable[CatalogRecord]
) -> FederatedCatalog:
    """Functional upsert by (dataset IRI, source id); newer harvests win."""
    merged = dict(catalog.records)
    index = dict(catalog.index)
    for record in records:
        existing = merged.get(record.key)
        if existing is not None and existing.harvested_at > record.harvested_at:
            continue
        merged[record.key] = record
        index[record.key] = build_index_entry(record)
    return FederatedCatalog(records=merged, index=index)


def matches(query: SearchQuery, record: CatalogRecord, entry: IndexEntry) -> bool:
    if query.theme is not None and query.theme not in entry.themes:
        return False
    if query.transport_mode is not None and query.transport_mode not in entry.transport_modes:
        return False
    if query.standard is not None and query.standard not in entry.standards:
        return False
    if query.publisher is not None and query.publisher.lower() not in entry.publishers:
        return False
    if query.text is not None and query.text.lower() not in entry.text:
        return False
    return True


def search(catalog: FederatedCatalog, query: SearchQuery) -> list[CatalogRecord]:
    """Conjunction of criteria; deterministic (dataset IRI, source id) order."""
    hits = [
        record
        for key, record in catalog.records.items()
        if matches(query, record, catalog.index[key])
    ]
    hits.sort(key=lambda r: (r.dataset_iri.value, r.source_id))
    return hits
