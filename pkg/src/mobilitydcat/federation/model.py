"""Federation data model: sources, harvested records, the merged catalog."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime
from typing import Mapping

from ..errors import TableSyntaxError
from ..rdf import Format, Graph, Iri
from ..shacl import ValidationReport


@dataclass(frozen=True)
class SourcePortal:
    id: str
    endpoint_url: str
    preferred_format: Format = Format.TURTLE
    last_etag: str | None = None
    last_harvest: datetime | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("source id must be nonempty")
        Iri(self.endpoint_url)  # must be absolute


@dataclass(frozen=True)
class CatalogRecord:
    dataset_iri: Iri
    source_id: str
    graph: Graph
    validation: ValidationReport
    harvested_at: datetime

    @property
    def key(self) -> tuple[str, str]:
        return (self.dataset_iri.value, self.source_id)

    @property
    def record_id(self) -> str:
        """Stable, URL-safe identifier derived from provenance."""
        digest = hashlib.sha256(
            f"{self.source_id}\n{self.dataset_iri.value}".encode("utf-8")
        )
        return digest.hexdigest()[:16]


@dataclass(frozen=True)
class SearchQuery:
    text: str | None = None
    theme: str | None = None
    transport_mode: str | None = None
    publisher: str | None = None
    standard: str | None = None

    def __post_init__(self):
        if not any(
            (self.text, self.theme, self.transport_mode, self.publisher, self.standard)
        ):
            raise ValueError("a search query needs at least one criterion")


@dataclass(frozen=True)
class IndexEntry:
    """Searchable facets extracted from one record's graph."""

    themes: frozenset[str] = frozenset()
    transport_modes: frozenset[str] = frozenset()
    standards: frozenset[str] = frozenset()
    publishers: frozenset[str] = frozenset()  # lowercased display texts and IRIs
    text: str = ""  # lowercased titles + descriptions


@dataclass(frozen=True)
class FederatedCatalog:
    records: Mapping[tuple[str, str], CatalogRecord] = field(default_factory=dict)
    index: Mapping[tuple[str, str], IndexEntry] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "records", dict(self.records))
        object.__setattr__(self, "index", dict(self.index))

    def __len__(self) -> int:
        return len(self.records)

    def record_by_id(self, record_id: str) -> CatalogRecord | None:
        for record in self.records.values():
            if record.record_id == record_id:
                return record
        return None


def parse_source_registry(text: str) -> list[SourcePortal]:
    """Registry file: JSON list of {id, endpointUrl, preferredFormat}."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableSyntaxError(f"registry is not valid JSON: {exc}") from exc
    if not isinstance(payload, list):
        raise TableSyntaxError("registry must be a JSON list")
    sources = []
    for entry in payload:
        try:
            sources.append(SourcePortal(
                id=entry["id"],
                endpoint_url=entry["endpointUrl"],
                preferred_format=Format.from_name(entry.get("preferredFormat", "turtle")),
            ))
        except (KeyError, TypeError) as exc:
            raise TableSyntaxError(f"bad registry entry {entry!r}: {exc}") from exc
    ids = [s.id for s in sources]
    if len(set(ids)) != len(ids):
        raise TableSyntaxError("duplicate source ids in registry")
    return sources
