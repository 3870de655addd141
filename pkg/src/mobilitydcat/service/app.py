"""HTTP service: spec resources with content negotiation, catalog API,
validation and serialization endpoints, vocabulary API."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

from fastapi import FastAPI, Query, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, RedirectResponse
from pydantic import BaseModel, Field

from ..errors import (
    MalformedAcceptHeader,
    MalformedIri,
    NotAcceptable,
    ParseError,
    ParseFailed,
    ToolkitError,
    UnknownRoute,
    UnsupportedFormat,
)
from ..federation import (
    CatalogRecord,
    FederatedCatalog,
    SearchQuery,
    SourcePortal,
    merge_into_catalog,
    search,
)
from ..namespaces import RDF_TYPE
from ..profile import (
    PROFILE_VERSIONS,
    UNBOUNDED,
    Profile,
    compile_to_shapes,
    load_profile,
    minimum_profile,
    profile_for_version,
)
from ..rdf import (
    BlankNode,
    Format,
    Graph,
    Iri,
    Literal,
    PrefixMap,
    Triple,
    parse_ntriples,
    parse_turtle,
    serialize,
)
from ..namespaces import COMMON_PREFIXES
from ..shacl import ValidationReport, report_to_graph, shapes_to_graph, validate
from ..vocab import load_bundled_vocabularies, vocabularies_by_iri, vocabulary_slug
from .config import ServiceConfig
from .html import graph_html, page, profile_html, record_html
from .negotiation import Representation, negotiate, negotiate_media_type
from .routing import resolve_version_route

PREFIXES = PrefixMap(COMMON_PREFIXES)

_RDF_MEDIA_TYPES = {
    "text/turtle": Format.TURTLE,
    "application/n-triples": Format.NTRIPLES,
    "application/ld+json": Format.JSONLD,
}


def profile_to_json(profile: Profile) -> dict:
    return {
        "id": profile.id.value,
        "version": profile.version,
        "namespace": profile.namespace.value,
        "baseProfile": profile.base_profile.value if profile.base_profile else None,
        "classes": [
            {
                "classIri": cls.class_iri.value,
                "subClassOf": cls.sub_class_of.value if cls.sub_class_of else None,
                "properties": [
                    {
                        "propertyIri": prop.property_iri.value,
                        "obligation": str(prop.obligation),
                        "minCard": prop.min_card,
                        "maxCard": "*" if prop.max_card is UNBOUNDED else prop.max_card,
                        "rangeClass": prop.range_class.value if prop.range_class else None,
                        "datatype": prop.datatype.value if prop.datatype else None,
                        "vocabulary": prop.vocabulary.value if prop.vocabulary else None,
                    }
                    for prop in cls.properties
                ],
            }
            for cls in profile.classes
        ],
    }


def report_to_json(report: ValidationReport) -> dict:
    return {
        "conforms": report.conforms,
        "results": [
            {
                "focusNode": str(r.focus_node),
                "path": r.path.value if r.path else None,
                "sourceShape": str(r.source_shape),
                "severity": r.severity.value.rsplit("#", 1)[-1],
                "message": r.message,
                "value": str(r.value) if r.value is not None else None,
            }
            for r in report.results
        ],
    }


def record_summary(record: CatalogRecord) -> dict:
    titles = [
        t.object.lexical
        for t in record.graph.match(record.dataset_iri, None, None)
        if t.predicate.value.endswith("title") and isinstance(t.object, Literal)
    ]
    return {
        "id": record.record_id,
        "datasetIri": record.dataset_iri.value,
        "sourceId": record.source_id,
        "title": titles[0] if titles else None,
        "conforms": record.validation.conforms,
        "harvestedAt": record.harvested_at.isoformat(),
    }


class SerializeValue(BaseModel):
    iri: str | None = None
    value: str | None = None
    language: str | None = None
    datatype: str | None = None


class SerializeNode(BaseModel):
    id: str | None = None
    type: str | None = None
    properties: dict[str, list[SerializeValue]] = Field(default_factory=dict)


class SerializeRequest(BaseModel):
    nodes: list[SerializeNode]


def _structured_to_graph(payload: SerializeRequest) -> Graph:
    graph = Graph()
    for node in payload.nodes:
        if node.id is None:
            subject: Iri | BlankNode = graph.fresh_blank()
        elif node.id.startswith("_:"):
            subject = BlankNode(node.id[2:])
        else:
            subject = Iri(node.id)
        if node.type:
            graph.add(Triple(subject, Iri(RDF_TYPE), Iri(node.type)))
        for predicate, values in node.properties.items():
            for value in values:
                if value.iri is not None:
                    obj = Iri(value.iri)
                elif value.value is not None:
                    if value.language:
                        obj = Literal(value.value, language=value.language)
                    elif value.datatype:
                        obj = Literal(value.value, datatype=value.datatype)
                    else:
                        obj = Literal(value.value)
                else:
                    raise ParseFailed(f"value for {predicate} has neither iri nor value")
                graph.add(Triple(subject, Iri(predicate), obj))
    return graph


def _rdf_response(graph: Graph, representation: Representation, html_title: str) -> Response:
    if representation is Representation.HTML:
        return Response(graph_html(html_title, graph), media_type="text/html")
    body = serialize(graph, representation.format, PREFIXES)
    return Response(body, media_type=representation.media_type)


def create_app(
    profile: Profile | None = None,
    sources: list[SourcePortal] | None = None,
    catalog: FederatedCatalog | None = None,
    vocabularies: Mapping[str, "object"] | None = None,
) -> FastAPI:
    app = FastAPI(title="mobilityDCAT-AP portal service", version="1.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"],
    )

    state = app.state
    state.profile = profile or minimum_profile()
    state.vocabularies = dict(vocabularies) if vocabularies else vocabularies_by_iri()
    state.shapes = compile_to_shapes(state.profile, state.vocabularies)
    state.catalog = catalog or FederatedCatalog()
    state.sources = sources or []

    @app.exception_handler(ToolkitError)
    async def toolkit_error_handler(request: Request, exc: ToolkitError):
        status = 500
        if isinstance(exc, (MalformedAcceptHeader,)):
            status = 400
        elif isinstance(exc, UnknownRoute):
            status = 404
        elif isinstance(exc, NotAcceptable):
            status = 406
        elif isinstance(exc, (ParseFailed, ParseError, MalformedIri, UnsupportedFormat)):
            status = 422
        return JSONResponse({"error": type(exc).__name__, "detail": str(exc)}, status)

    # --- specification resources with content negotiation -------------------

    @app.get("/mobilitydcat-ap")
    async def spec_root(request: Request):
        route = resolve_version_route("/mobilitydcat-ap")
        return RedirectResponse(route.canonical_path, status_code=303)

    @app.get("/mobilitydcat-ap/{version}")
    async def spec_version(version: str, request: Request):
        route = resolve_version_route(f"/mobilitydcat-ap/{version}")
        versioned = profile_for_version(route.version)
        representation = negotiate(request.headers.get("accept"))
        if representation is Representation.HTML:
            return Response(profile_html(versioned), media_type="text/html")
        shapes = compile_to_shapes(versioned, state.vocabularies)
        return _rdf_response(
            shapes_to_graph(shapes), representation, f"mobilityDCAT-AP {route.version}"
        )

    # --- structured profile for the Generator UI -----------------------------

    @app.get("/api/profile")
    async def api_profile():
        return profile_to_json(state.profile)

    # --- catalog search and record access ------------------------------------

    @app.get("/api/records")
    async def api_records(
        theme: str | None = None,
        transportMode: str | None = Query(default=None),
        publisher: str | None = None,
        standard: str | None = None,
        text: str | None = None,
    ):
        catalog: FederatedCatalog = state.catalog
        if any((theme, transportMode, publisher, standard, text)):
            query = SearchQuery(
                text=text, theme=theme, transport_mode=transportMode,
                publisher=publisher, standard=standard,
            )
            records = search(catalog, query)
        else:
            records = sorted(
                catalog.records.values(),
                key=lambda r: (r.dataset_iri.value, r.source_id),
            )
        return {"count": len(records), "records": [record_summary(r) for r in records]}

    @app.get("/api/records/{record_id}")
    async def api_record(record_id: str, request: Request):
        record = state.catalog.record_by_id(record_id)
        if record is None:
            raise UnknownRoute(f"no record {record_id!r}")
        representation = negotiate(request.headers.get("accept"))
        if representation is Representation.HTML:
            return Response(record_html(record), media_type="text/html")
        return _rdf_response(record.graph, representation, record.dataset_iri.value)

    # --- validation and serialization ----------------------------------------

    @app.post("/api/validate")
    async def api_validate(request: Request):
        body = (await request.body()).decode("utf-8", errors="replace")
        content_type = request.headers.get("content-type", "text/turtle")
        media = content_type.split(";")[0].strip().lower()
        fmt = _RDF_MEDIA_TYPES.get(media)
        if fmt is None:
            raise UnsupportedFormat(f"cannot validate bodies of type {content_type!r}")
        try:
            if fmt is Format.TURTLE:
                graph, _ = parse_turtle(body)
            elif fmt is Format.NTRIPLES:
                graph = parse_ntriples(body)
            else:
                raise ParseFailed("JSON-LD request bodies are not parseable; send Turtle")
        except ParseError as exc:
            raise ParseFailed(str(exc)) from exc
        report = validate(graph, state.shapes, vocabularies=state.vocabularies)

        chosen = negotiate_media_type(
            request.headers.get("accept"),
            ["application/json", "text/turtle", "application/ld+json",
             "application/n-triples"],
        )
        if chosen == "application/json":
            return JSONResponse(report_to_json(report))
        fmt_out = _RDF_MEDIA_TYPES[chosen]
        return Response(
            serialize(report_to_graph(report), fmt_out, PREFIXES), media_type=chosen
        )

    @app.post("/api/serialize")
    async def api_serialize(payload: SerializeRequest, format: str = "turtle"):
        fmt = Format.from_name(format)
        graph = _structured_to_graph(payload)
        return Response(serialize(graph, fmt, PREFIXES), media_type=fmt.media_type)

    # --- vocabularies ----------------------------------------------------------

    @app.get("/api/vocabularies")
    async def api_vocabularies():
        bundled = load_bundled_vocabularies()
        return [
            {
                "name": name,
                "slug": vocabulary_slug(name),
                "iri": scheme.iri.value,
                "title": scheme.title,
                "version": scheme.version,
                "conceptCount": len(scheme),
            }
            for name, scheme in sorted(bundled.items())
        ]

    @app.get("/api/vocabularies/{slug}")
    async def api_vocabulary(slug: str, request: Request):
        from ..vocab import scheme_to_graph

        bundled = load_bundled_vocabularies()
        by_slug = {vocabulary_slug(name): (name, s) for name, s in bundled.items()}
        if slug not in by_slug:
            raise UnknownRoute(f"no vocabulary {slug!r}")
        name, scheme = by_slug[slug]
        accept = request.headers.get("accept") or "application/json"
        chosen = negotiate_media_type(
            accept,
            ["application/json", "text/turtle", "application/ld+json",
             "application/n-triples"],
        )
        if chosen != "application/json":
            fmt = _RDF_MEDIA_TYPES[chosen]
            return Response(serialize(scheme_to_graph(scheme), fmt, PREFIXES),
                            media_type=chosen)
        return {
            "name": name,
            "iri": scheme.iri.value,
            "title": scheme.title,
            "version": scheme.version,
            "concepts": [
                {
                    "iri": c.iri.value,
                    "labels": dict(c.pref_labels),
                    "definitions": dict(c.definitions),
                    "broader": c.broader.value if c.broader else None,
                }
                for c in scheme.concepts
            ],
        }

    @app.get("/")
    async def index():
        return Response(
            page("mobilityDCAT-AP portal service",
                 "<p>See <a href='/api/profile'>/api/profile</a>, "
                 "<a href='/api/records'>/api/records</a>, "
                 "<a href='/api/vocabularies'>/api/vocabularies</a>, "
                 "<a href='/mobilitydcat-ap'>/mobilitydcat-ap</a>.</p>"),
            media_type="text/html",
        )

    return app


def build_app(config: ServiceConfig) -> FastAPI:
    """Assemble the app from a config file: profile, sources, empty catalog."""
    profile = (
        load_profile(config.profile_path) if config.profile_path else minimum_profile()
    )
    sources: list[SourcePortal] = []
    if config.source_registry_path:
        from ..federation import parse_source_registry

        sources = parse_source_registry(
            Path(config.source_registry_path).read_text(encoding="utf-8")
        )
    return create_app(profile=profile, sources=sources)


def harvest_into_app(app: FastAPI, fetcher=None) -> int:
    """Harvest every configured source into the app's catalog; returns record count."""
    from ..federation import HttpFetcher, harvest_source

    fetcher = fetcher or HttpFetcher()
    state = app.state
    total = 0
    updated_sources = []
    for source in state.sources:
        records, updated = harvest_source(
            source, fetcher, state.shapes, state.vocabularies
        )
        state.catalog = merge_into_catalog(state.catalog, records)
        updated_sources.append(updated)
        total += len(records)
    state.sources = updated_sources
    return total
