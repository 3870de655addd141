import random
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone

import pytest

from mobilitydcat.errors import FetchFailed, ParseFailed
from mobilitydcat.federation import (
    FederatedCatalog,
    FetchResponse,
    SearchQuery,
    SourcePortal,
    harvest_source,
    merge_into_catalog,
    parse_source_registry,
    search,
    split_datasets,
)
from mobilitydcat.namespaces import DCT, MOBILITYDCATAP
from mobilitydcat.profile import compile_to_shapes, minimum_profile
from mobilitydcat.rdf import Format, Graph, Iri, Literal, parse_turtle
from mobilitydcat.vocab import vocabularies_by_iri

FREQ_DAILY = "http://publications.europa.eu/resource/authority/frequency/DAILY"
THEME_SHARING = "https://w3id.org/mobilitydcat-ap/mobility-theme/sharing-services"
THEME_PT = "https://w3id.org/mobilitydcat-ap/mobility-theme/public-transport"

PORTAL_ONE = f"""
@prefix dcat: <http://www.w3.org/ns/dcat#> .
@prefix dct: <http://purl.org/dc/terms/> .
@prefix foaf: <http://xmlns.com/foaf/0.1/> .
@prefix mobilitydcatap: <https://w3id.org/mobilitydcat-ap#> .

<http://p1.example.org/ds/bike> a dcat:Dataset ;
    dct:title "Bike share stations"@en ;
    dct:description "Station locations and live availability"@en ;
    dct:publisher <http://p1.example.org/org/city> ;
    dct:accrualPeriodicity <{FREQ_DAILY}> ;
    mobilitydcatap:mobilityTheme <{THEME_SHARING}> .

<http://p1.example.org/org/city> foaf:name "City of Exampleton" .

<http://p1.example.org/ds/bus> a dcat:Dataset ;
    dct:title "Bus GTFS feed"@en ;
    dct:description "Static timetable data"@en ;
    dct:publisher "Transit Agency" ;
    dct:accrualPeriodicity <{FREQ_DAILY}> ;
    mobilitydcatap:mobilityTheme <{THEME_PT}> .
"""

# one dataset, missing the mandatory update frequency
PORTAL_TWO_NT = "\n".join([
    '<http://p2.example.org/ds/parking> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/ns/dcat#Dataset> .',
    f'<http://p2.example.org/ds/parking> <{DCT}title> "Parking occupancy" .',
    f'<http://p2.example.org/ds/parking> <{DCT}description> "Occupancy of park and ride sites" .',
    f'<http://p2.example.org/ds/parking> <{MOBILITYDCATAP}mobilityTheme> <{THEME_PT}> .',
]) + "\n"


@dataclass
class FakePortal:
    body: str
    media_type: str
    etag: str | None = None


class FakeFetcher:
    def __init__(self, portals):
        self.portals = portals
        self.calls = []

    def fetch(self, url, headers):
        self.calls.append((url, dict(headers)))
        portal = self.portals[url]
        if portal.etag and headers.get("If-None-Match") == portal.etag:
            return FetchResponse(304, {"ETag": portal.etag})
        response_headers = {"Content-Type": portal.media_type}
        if portal.etag:
            response_headers["ETag"] = portal.etag
        return FetchResponse(200, response_headers, portal.body.encode("utf-8"))


@pytest.fixture(scope="module")
def shapes():
    return compile_to_shapes(minimum_profile())


@pytest.fixture(scope="module")
def vocabularies():
    return vocabularies_by_iri()


class TestSplitDatasets:
    def test_two_datasets_two_subgraphs(self):
        graph, _ = parse_turtle(PORTAL_ONE)
        parts = split_datasets(graph)
        assert set(parts) == {
            Iri("http://p1.example.org/ds/bike"), Iri("http://p1.example.org/ds/bus"),
        }

    def test_union_covers_all_reachable_triples(self):
        graph, _ = parse_turtle(PORTAL_ONE)
        parts = split_datasets(graph)
        union = {t for sub in parts.values() for t in sub}
        assert union == set(graph)  # every triple is reachable from a dataset here

    def test_shared_node_copied_into_each_record(self):
        text = PORTAL_ONE.replace(
            'dct:publisher "Transit Agency"',
            "dct:publisher <http://p1.example.org/org/city>",
        )
        graph, _ = parse_turtle(text)
        parts = split_datasets(graph)
        name_triple = Iri("http://p1.example.org/org/city")
        for sub in parts.values():
            assert sub.match(name_triple, None, None), "publisher details must be copied"

    def test_stops_at_other_dataset_nodes(self):
        text = PORTAL_ONE + (
            "<http://p1.example.org/ds/bike> dct:relation <http://p1.example.org/ds/bus> .\n"
        )
        graph, _ = parse_turtle(text)
        parts = split_datasets(graph)
        bike = parts[Iri("http://p1.example.org/ds/bike")]
        # link triple present, but the bus dataset's own description is not pulled in
        assert bike.match(None, Iri(DCT + "relation"), None)
        assert not bike.match(Iri("http://p1.example.org/ds/bus"), None, None)


class TestHarvest:
    def test_two_records_with_provenance(self, shapes, vocabularies):
        source = SourcePortal("p1", "http://p1.example.org/catalog.ttl")
        fetcher = FakeFetcher({source.endpoint_url: FakePortal(PORTAL_ONE, "text/turtle")})
        records, updated = harvest_source(source, fetcher, shapes, vocabularies)
        assert len(records) == 2
        assert {r.source_id for r in records} == {"p1"}
        assert updated.last_harvest is not None
        accept = fetcher.calls[0][1]["Accept"]
        assert accept == "text/turtle"

    def test_etag_304_path(self, shapes, vocabularies):
        source = SourcePortal("p3", "http://p3.example.org/catalog.ttl")
        fetcher = FakeFetcher({
            source.endpoint_url: FakePortal(PORTAL_ONE, "text/turtle", etag='"v1"'),
        })
        records, updated = harvest_source(source, fetcher, shapes, vocabularies)
        assert len(records) == 2
        assert updated.last_etag == '"v1"'
        again, final = harvest_source(updated, fetcher, shapes, vocabularies)
        assert again == []
        assert final == updated
        assert fetcher.calls[1][1]["If-None-Match"] == '"v1"'

    def test_non_conforming_record_is_kept_and_flagged(self, shapes, vocabularies):
        source = SourcePortal("p2", "http://p2.example.org/catalog.nt", Format.NTRIPLES)
        fetcher = FakeFetcher({
            source.endpoint_url: FakePortal(PORTAL_TWO_NT, "application/n-triples"),
        })
        records, _ = harvest_source(source, fetcher, shapes, vocabularies)
        assert len(records) == 1
        report = records[0].validation
        assert not report.conforms
        assert any(
            r.path == Iri(DCT + "accrualPeriodicity") for r in report.results
        )

    def test_http_error_raises_fetch_failed(self, shapes):
        class ErrorFetcher:
            def fetch(self, url, headers):
                return FetchResponse(500, {})

        source = SourcePortal("p", "http://broken.example.org/")
        with pytest.raises(FetchFailed):
            harvest_source(source, ErrorFetcher(), shapes)

    def test_bad_body_raises_parse_failed(self, shapes):
        source = SourcePortal("p", "http://bad.example.org/")
        fetcher = FakeFetcher({source.endpoint_url: FakePortal("this is { not turtle", "text/turtle")})
        with pytest.raises(ParseFailed):
            harvest_source(source, fetcher, shapes)

    def test_no_datasets_is_empty_not_error(self, shapes):
        source = SourcePortal("p", "http://empty.example.org/")
        fetcher = FakeFetcher({source.endpoint_url: FakePortal(
            "@prefix ex: <http://ex.org/> . ex:s ex:p ex:o .", "text/turtle",
        )})
        records, _ = harvest_source(source, fetcher, shapes)
        assert records == []


def _harvest_all(shapes, vocabularies):
    sources = [
        SourcePortal("p1", "http://p1.example.org/catalog.ttl"),
        SourcePortal("p2", "http://p2.example.org/catalog.nt", Format.NTRIPLES),
    ]
    fetcher = FakeFetcher({
        "http://p1.example.org/catalog.ttl": FakePortal(PORTAL_ONE, "text/turtle"),
        "http://p2.example.org/catalog.nt": FakePortal(PORTAL_TWO_NT, "application/n-triples"),
    })
    catalog = FederatedCatalog()
    for source in sources:
        records, _ = harvest_source(source, fetcher, shapes, vocabularies)
        catalog = merge_into_catalog(catalog, records)
    return catalog


class TestCatalog:
    def test_merge_counts(self, shapes, vocabularies):
        catalog = _harvest_all(shapes, vocabularies)
        assert len(catalog) == 3

    def test_upsert_replaces_older(self, shapes, vocabularies):
        catalog = _harvest_all(shapes, vocabularies)
        key = next(iter(catalog.records))
        record = catalog.records[key]
        newer = CatalogRecordReplacer(record, record.harvested_at + timedelta(hours=1))
        updated = merge_into_catalog(catalog, [newer])
        assert len(updated) == 3
        assert updated.records[key].harvested_at == newer.harvested_at

    def test_older_does_not_replace(self, shapes, vocabularies):
        catalog = _harvest_all(shapes, vocabularies)
        key = next(iter(catalog.records))
        record = catalog.records[key]
        older = CatalogRecordReplacer(record, record.harvested_at - timedelta(hours=1))
        updated = merge_into_catalog(catalog, [older])
        assert updated.records[key].harvested_at == record.harvested_at

    def test_same_dataset_from_two_sources_kept_apart(self, shapes, vocabularies):
        catalog = _harvest_all(shapes, vocabularies)
        record = next(iter(catalog.records.values()))
        clone = CatalogRecordReplacer(record, record.harvested_at, source_id="mirror")
        updated = merge_into_catalog(catalog, [clone])
        assert len(updated) == 4

    def test_harvest_idempotence_modulo_timestamp(self, shapes, vocabularies):
        source = SourcePortal("p1", "http://p1.example.org/catalog.ttl")
        fetcher = FakeFetcher({source.endpoint_url: FakePortal(PORTAL_ONE, "text/turtle")})
        first, updated = harvest_source(source, fetcher, shapes, vocabularies)
        second, _ = harvest_source(updated, fetcher, shapes, vocabularies)
        catalog = merge_into_catalog(
            merge_into_catalog(FederatedCatalog(), first), second
        )
        assert len(catalog) == len(first)
        by_key_first = {r.key: r for r in first}
        for key, record in catalog.records.items():
            original = by_key_first[key]
            assert record.graph == original.graph
            assert record.validation == original.validation


def CatalogRecordReplacer(record, harvested_at, source_id=None):
    from dataclasses import replace

    return replace(
        record,
        harvested_at=harvested_at,
        **({"source_id": source_id} if source_id else {}),
    )


@pytest.fixture(scope="module")
def catalog():
    return _harvest_all(compile_to_shapes(minimum_profile()), vocabularies_by_iri())


class TestSearch:

    def test_theme_search_crosses_portals(self, catalog):
        hits = search(catalog, SearchQuery(theme=THEME_PT))
        assert {r.dataset_iri.value for r in hits} == {
            "http://p1.example.org/ds/bus", "http://p2.example.org/ds/parking",
        }

    def test_text_search(self, catalog):
        hits = search(catalog, SearchQuery(text="bike"))
        assert [r.dataset_iri.value for r in hits] == ["http://p1.example.org/ds/bike"]

    def test_conjunction(self, catalog):
        hits = search(catalog, SearchQuery(theme=THEME_PT, publisher="Transit Agency"))
        assert [r.dataset_iri.value for r in hits] == ["http://p1.example.org/ds/bus"]

    def test_publisher_via_name_node(self, catalog):
        hits = search(catalog, SearchQuery(publisher="City of Exampleton"))
        assert [r.dataset_iri.value for r in hits] == ["http://p1.example.org/ds/bike"]

    def test_no_match_is_empty(self, catalog):
        assert search(catalog, SearchQuery(theme="http://nothing.example.org/")) == []

    def test_results_subset_of_catalog(self, catalog):
        hits = search(catalog, SearchQuery(text="a"))
        assert all(r.key in catalog.records for r in hits)

    def test_query_needs_a_criterion(self):
        with pytest.raises(ValueError):
            SearchQuery()

    def test_conjunction_bound_against_oracle(self, catalog):
        # brute-force filter oracle: scan record graphs directly
        def oracle(query):
            out = []
            for record in catalog.records.values():
                graph = record.graph
                ok = True
                if query.theme:
                    ok &= any(
                        t.object == Iri(query.theme)
                        and t.predicate.value.endswith(("mobilityTheme", "theme"))
                        for t in graph
                    )
                if query.publisher:
                    wanted = query.publisher.lower()
                    texts = set()
                    for t in graph:
                        if t.predicate == Iri(DCT + "publisher"):
                            if isinstance(t.object, Literal):
                                texts.add(t.object.lexical.lower())
                            else:
                                texts.add(str(t.object).lower())
                                for t2 in graph.match(subject=t.object):
                                    if isinstance(t2.object, Literal):
                                        texts.add(t2.object.lexical.lower())
                    ok &= wanted in texts
                if query.text:
                    blob = " ".join(
                        t.object.lexical.lower() for t in graph
                        if isinstance(t.object, Literal)
                        and t.predicate.value in (DCT + "title", DCT + "description")
                    )
                    ok &= query.text.lower() in blob
                if ok:
                    out.append(record.key)
            return sorted(out)

        rng = random.Random(31)
        themes = [THEME_PT, THEME_SHARING, "http://none.example.org/x", None]
        publishers = ["transit agency", "city of exampleton", "nobody", None]
        texts = ["bike", "bus", "parking", "data", "zzz", None]
        for _ in range(120):
            criteria = {
                "theme": rng.choice(themes),
                "publisher": rng.choice(publishers),
                "text": rng.choice(texts),
            }
            if not any(criteria.values()):
                continue
            query = SearchQuery(**criteria)
            invalid = search(catalog, query)
            assert sorted(r.key for r in invalid) == oracle(query)

    def test_conjunction_cardinality_bound(self, catalog):
        both = search(catalog, SearchQuery(theme=THEME_PT, text="bus"))
        theme_only = search(catalog, SearchQuery(theme=THEME_PT))
        text_only = search(catalog, SearchQuery(text="bus"))
        assert len(both) <= min(len(theme_only), len(text_only))


class TestRegistry:
    def test_parse_registry(self):
        text = (
            '[{"id": "p1", "endpointUrl": "http://p1.example.org/catalog.ttl",'
            ' "preferredFormat": "turtle"},'
            ' {"id": "p2", "endpointUrl": "http://p2.example.org/catalog.nt",'
            ' "preferredFormat": "ntriples"}]'
        )
        sources = parse_source_registry(text)
        assert [s.id for s in sources] == ["p1", "p2"]
        assert sources[1].preferred_format is Format.NTRIPLES

    def test_duplicate_ids_rejected(self):
        text = (
            '[{"id": "p", "endpointUrl": "http://a.example.org/"},'
            ' {"id": "p", "endpointUrl": "http://b.example.org/"}]'
        )
        with pytest.raises(Exception):
            parse_source_registry(text)
