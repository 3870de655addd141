"""Harvest metadata from portal endpoints into per-dataset catalog records."""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import datetime, timezone
from typing import Mapping, Protocol

from ..errors import FetchFailed, ParseError, ParseFailed
from ..namespaces import DCAT, RDF_TYPE
from ..rdf import BlankNode, Format, Graph, Iri, parse_ntriples, parse_turtle
from ..shacl import LoadedShapes, validate
from .model import CatalogRecord, SourcePortal

DATASET_CLASS = Iri(DCAT + "Dataset")


@dataclass(frozen=True)
class FetchResponse:
    status: int
    headers: Mapping[str, str]
    body: bytes = b""

    def __post_init__(self):
        object.__setattr__(
            self, "headers", {k.lower(): v for k, v in dict(self.headers).items()}
        )

    def header(self, name: str) -> str | None:
        return self.headers.get(name.lower())


class Fetcher(Protocol):
    def fetch(self, url: str, headers: Mapping[str, str]) -> FetchResponse: ...


class HttpFetcher:
    """Default fetcher backed by requests."""

    def __init__(self, timeout: float = 30.0):
        self.timeout = timeout

    def fetch(self, url: str, headers: Mapping[str, str]) -> FetchResponse:
        import requests

        try:
            response = requests.get(url, headers=dict(headers), timeout=self.timeout)
        except requests.RequestException as exc:
            raise FetchFailed(f"GET {url} failed: {exc}") from exc
        return FetchResponse(
            status=response.status_code,
            headers=dict(response.headers),
            body=response.content,
        )


def split_datasets(graph: Graph) -> dict[Iri, Graph]:
    """Per-dataset description subgraphs.

    Each subgraph holds every triple reachable from its dataset node along
    subject-to-object edges, stopping at other dataset nodes. Shared resources
    are copied into each referencing subgraph so records stay self-contained.
    """
    dataset_nodes = [
        s for s in graph.subjects(Iri(RDF_TYPE), DATASET_CLASS) if isinstance(s, Iri)
    ]
    stop = set(dataset_nodes)
    out: dict[Iri, Graph] = {}
    for dataset in dataset_nodes:
        sub = Graph()
        visited = {dataset}
        queue = [dataset]
        while queue:
            node = queue.pop(0)
            for t in graph.match(subject=node):
                sub.add(t)
                obj = t.object
                if (
                    isinstance(obj, (Iri, BlankNode))
                    and obj not in visited
                    and obj not in stop
                ):
                    visited.add(obj)
                    queue.append(obj)
        out[dataset] = sub
    return out


def _parse_body(body: bytes, format: Format, base: str) -> Graph:
    try:
        text = body.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseFailed(f"body is not UTF-8: {exc}") from exc
    try:
        if format is Format.TURTLE:
            graph, _ = parse_turtle(text, base=base)
            return graph
        if format is Format.NTRIPLES:
            return parse_ntriples(text)
    except ParseError as exc:
        raise ParseFailed(f"body is not valid {format.media_type}: {exc}") from exc
    raise ParseFailed(f"harvest input format {format.media_type} is not parseable")


def harvest_source(
    source: SourcePortal,
    fetcher: Fetcher,
    shapes: LoadedShapes,
    vocabularies: Mapping[str, "object"] | None = None,
    now: datetime | None = None,
) -> tuple[list[CatalogRecord], SourcePortal]:
    """GET the portal, honouring ETags; one validated record per dataset.

    A 304 yields no records and leaves the source untouched. No datasets in
    a 200 body is not an error, just an empty harvest.
    """
    headers = {"Accept": source.preferred_format.media_type}
    if source.last_etag:
        headers["If-None-Match"] = source.last_etag
    response = fetcher.fetch(source.endpoint_url, headers)

    if response.status == 304:
        return [], source
    if response.status != 200:
        raise FetchFailed(f"GET {source.endpoint_url} returned {response.status}")

    graph = _parse_body(response.body, source.preferred_format, source.endpoint_url)
    stamp = now or datetime.now(timezone.utc)
    records = [
        CatalogRecord(
            dataset_iri=dataset,
            source_id=source.id,
            graph=subgraph,
            validation=validate(subgraph, shapes, vocabularies=vocabularies),
            harvested_at=stamp,
        )
        for dataset, subgraph in split_datasets(graph).items()
    ]
    updated = replace(
        source,
        last_etag=response.header("ETag") or source.last_etag,
        last_harvest=stamp,
    )
    return records, updated
