"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they print.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import pytest

from mobilitydcat.errors import NotAcceptable, UnknownRoute
from mobilitydcat.federation import (
    FederatedCatalog,
    FetchResponse,
    SearchQuery,
    SourcePortal,
    harvest_source,
    merge_into_catalog,
    search,
)
from mobilitydcat.namespaces import DCT, MOBILITYDCATAP
from mobilitydcat.profile import (
    Obligation,
    check_extension,
    compile_to_shapes,
    dcat_ap_base_profile,
    minimum_profile,
    mobility_shapes,
)
from mobilitydcat.rdf import (
    Format,
    Graph,
    Iri,
    is_isomorphic,
    parse_ntriples,
    parse_turtle,
    serialize,
)
from mobilitydcat.service.negotiation import Representation, negotiate
from mobilitydcat.service.routing import resolve_version_route
from mobilitydcat.shacl import Severity, load_shapes, validate
from mobilitydcat.vocab import (
    VOCABULARY_FILES,
    load_bundled_vocabularies,
    scheme_to_table,
    tabular_to_scheme,
    vocabularies_by_iri,
)

from conftest import permutation_oracle_isomorphic, random_graph, random_profile, relabel_randomly
from test_shacl_fixtures import FIXTURES, PRELUDE, _normalize

V = "Violation"


def report_line(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {status}: {name}{suffix}")
    assert ok, f"{name}{suffix}"


# --- round-trip suite ---------------------------------------------------------

def test_round_trip_suite():
    rng = random.Random(20250501)
    start = time.monotonic()
    failures = 0
    for _ in range(500):
        graph = random_graph(rng, max_triples=50, max_blanks=6)
        for fmt in (Format.TURTLE, Format.NTRIPLES):
            text = serialize(graph, fmt)
            back = parse_turtle(text)[0] if fmt is Format.TURTLE else parse_ntriples(text)
            if not is_isomorphic(back, graph):
                failures += 1
    elapsed = time.monotonic() - start
    report_line(
        "round-trip suite (500 graphs, Turtle + N-Triples)",
        failures == 0 and elapsed < 10.0,
        f"{failures} failures, {elapsed:.2f}s",
    )


# --- isomorphism oracle ---------------------------------------------------------

def test_isomorphism_oracle_agreement():
    rng = random.Random(77)
    disagreements = 0
    for i in range(200):
        g1 = random_graph(rng, max_triples=16, max_blanks=6)
        if i % 2 == 0:
            g2 = relabel_randomly(g1, rng)
        else:
            g2 = random_graph(rng, max_triples=16, max_blanks=6)
        if is_isomorphic(g1, g2) != permutation_oracle_isomorphic(g1, g2):
            disagreements += 1
    report_line(
        "isomorphism agrees with permutation oracle on 200 pairs",
        disagreements == 0,
        f"{disagreements} disagreements",
    )


# --- SHACL oracle fixtures ------------------------------------------------------

def test_shacl_fixture_corpus():
    mismatches = []
    for name, (data_ttl, shapes_ttl, expected) in FIXTURES.items():
        data, _ = parse_turtle(PRELUDE + data_ttl)
        loaded = load_shapes(parse_turtle(PRELUDE + shapes_ttl)[0])
        if _normalize(validate(data, loaded)) != expected:
            mismatches.append(name)
    report_line(
        f"SHACL fixture corpus ({len(FIXTURES)} cases) reproduced exactly",
        len(FIXTURES) >= 20 and not mismatches,
        f"mismatches: {mismatches}" if mismatches else "",
    )


# --- mandatory update frequency ---------------------------------------------------

RECORD_WITHOUT_FREQUENCY = f"""
@prefix dcat: <http://www.w3.org/ns/dcat#> .
@prefix dct: <http://purl.org/dc/terms/> .
@prefix mobilitydcatap: <{MOBILITYDCATAP}> .
<https://example.org/ds/1> a dcat:Dataset ;
    dct:title "Traffic counts"@en ;
    dct:description "Hourly traffic counts"@en ;
    mobilitydcatap:mobilityTheme <https://w3id.org/mobilitydcat-ap/mobility-theme/traffic-flow> .
"""


def test_mandatory_frequency_check():
    vocabularies = vocabularies_by_iri()
    shapes = compile_to_shapes(minimum_profile(), vocabularies)
    data, _ = parse_turtle(RECORD_WITHOUT_FREQUENCY)
    report = validate(data, shapes, vocabularies)
    violations = report.by_severity(Severity.VIOLATION)
    ok_fail = (
        not report.conforms
        and len(violations) == 1
        and violations[0].path == Iri(DCT + "accrualPeriodicity")
    )
    fixed = Graph(data)
    fixed.add_all(parse_turtle(
        "<https://example.org/ds/1> <http://purl.org/dc/terms/accrualPeriodicity> "
        "<http://publications.europa.eu/resource/authority/frequency/DAILY> ."
        , base="https://example.org/")[0])
    ok_flip = validate(fixed, shapes, vocabularies).conforms
    report_line(
        "missing update frequency yields exactly one violation; adding it conforms",
        ok_fail and ok_flip,
    )


# --- extension rules ---------------------------------------------------------------

def test_extension_rules():
    base = dcat_ap_base_profile()
    minimum = minimum_profile()

    # raising optional -> mandatory is accepted (the bundled pair does exactly that)
    raised_ok = check_extension(base, minimum) == []

    # lowering any base-mandatory property to optional is reported
    from dataclasses import replace

    lowering_reported = True
    for cls in base.classes:
        for prop in cls.properties:
            if prop.obligation is not Obligation.MANDATORY:
                continue
            lowered_prop = replace(prop, obligation=Obligation.OPTIONAL, min_card=0)
            lowered_cls = replace(
                cls,
                properties=tuple(
                    lowered_prop if p.property_iri == prop.property_iri else p
                    for p in cls.properties
                ),
            )
            lowered = replace(
                minimum,
                classes=tuple(
                    lowered_cls if c.class_iri == cls.class_iri else c
                    for c in minimum.classes
                ) + tuple(
                    c for c in (lowered_cls,)
                    if minimum.class_profile(cls.class_iri) is None
                ),
            )
            violations = check_extension(base, lowered)
            if not any(
                v.kind == "obligation-lowered" and v.property_iri == prop.property_iri
                for v in violations
            ):
                lowering_reported = False

    rng = random.Random(1234)
    reflexive_clean = all(check_extension(p, p) == [] for p in
                          (random_profile(rng) for _ in range(100)))

    report_line(
        "extension rules: raises accepted, lowerings reported, 100 reflexive checks clean",
        raised_ok and lowering_reported and reflexive_clean,
    )


# --- eleven vocabularies --------------------------------------------------------------

def test_eleven_vocabularies():
    expected_names = {
        "Application Layer Protocol", "Communication Method",
        "Conditions for Access and Usage", "Mobility Theme",
        "Mobility Data Standard", "Georeferencing Method", "Grammar",
        "Network Coverage", "Intended Information Service", "Transport Mode",
        "Update Frequency",
    }
    vocabularies = load_bundled_vocabularies()
    names_ok = set(vocabularies) == expected_names == set(VOCABULARY_FILES)
    lossless = all(
        tabular_to_scheme(scheme_to_table(s))[0] == s for s in vocabularies.values()
    )
    report_line(
        "exactly eleven bundled vocabularies, lossless tabular round trip",
        len(vocabularies) == 11 and names_ok and lossless,
    )


# --- shape-import resolution -------------------------------------------------------

def test_shape_import_resolution():
    loaded = mobility_shapes()
    # a record violating only the *base* profile: dataset with no title
    record = f"""
    @prefix dcat: <http://www.w3.org/ns/dcat#> .
    @prefix dct: <http://purl.org/dc/terms/> .
    @prefix mobilitydcatap: <{MOBILITYDCATAP}> .
    <https://example.org/ds/untitled> a dcat:Dataset ;
        dct:description "No title here"@en ;
        dct:accrualPeriodicity <http://publications.europa.eu/resource/authority/frequency/DAILY> ;
        mobilitydcatap:mobilityTheme <https://w3id.org/mobilitydcat-ap/mobility-theme/parking> .
    """
    data, _ = parse_turtle(record)
    report = validate(data, loaded, vocabularies_by_iri())
    base_violation = any(
        r.path == Iri(DCT + "title") and r.severity is Severity.VIOLATION
        for r in report.results
    )
    shape_sources = {str(s.id) for s in loaded.shapes}
    has_base_shapes = any("data.europa.eu" in s for s in shape_sources)
    has_mobility_shapes = any("mobilitydcat" in s for s in shape_sources)
    report_line(
        "mobility shapes import the base fragment; base violation detected",
        base_violation and has_base_shapes and has_mobility_shapes,
    )


# --- federation integration ----------------------------------------------------------

FREQ_DAILY = "http://publications.europa.eu/resource/authority/frequency/DAILY"
THEME_PT = "https://w3id.org/mobilitydcat-ap/mobility-theme/public-transport"
THEME_PARKING = "https://w3id.org/mobilitydcat-ap/mobility-theme/parking"

PORTAL_A = f"""
@prefix dcat: <http://www.w3.org/ns/dcat#> .
@prefix dct: <http://purl.org/dc/terms/> .
@prefix mobilitydcatap: <{MOBILITYDCATAP}> .
<http://a.example.org/ds/1> a dcat:Dataset ;
    dct:title "Bus timetables"@en ; dct:description "GTFS"@en ;
    dct:publisher "Agency A" ;
    dct:accrualPeriodicity <{FREQ_DAILY}> ;
    mobilitydcatap:mobilityTheme <{THEME_PT}> .
<http://a.example.org/ds/2> a dcat:Dataset ;
    dct:title "Park and ride"@en ; dct:description "Occupancy"@en ;
    dct:publisher "Agency A" ;
    dct:accrualPeriodicity <{FREQ_DAILY}> ;
    mobilitydcatap:mobilityTheme <{THEME_PARKING}> .
"""

PORTAL_B_NT = "\n".join([
    '<http://b.example.org/ds/rail> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://www.w3.org/ns/dcat#Dataset> .',
    f'<http://b.example.org/ds/rail> <{DCT}title> "Rail departures" .',
    f'<http://b.example.org/ds/rail> <{DCT}description> "Real-time departures" .',
    f'<http://b.example.org/ds/rail> <{DCT}publisher> "Agency B" .',
    f'<http://b.example.org/ds/rail> <{MOBILITYDCATAP}mobilityTheme> <{THEME_PT}> .',
]) + "\n"  # missing update frequency: non-conforming on purpose

PORTAL_C = f"""
@prefix dcat: <http://www.w3.org/ns/dcat#> .
@prefix dct: <http://purl.org/dc/terms/> .
@prefix mobilitydcatap: <{MOBILITYDCATAP}> .
<http://c.example.org/ds/bikes> a dcat:Dataset ;
    dct:title "Bike sharing"@en ; dct:description "Stations"@en ;
    dct:publisher "Agency C" ;
    dct:accrualPeriodicity <{FREQ_DAILY}> ;
    mobilitydcatap:mobilityTheme <{THEME_PT}> .
"""


@dataclass
class _Portal:
    body: str
    media_type: str
    etag: str | None = None


class _Fetcher:
    def __init__(self, portals):
        self.portals = portals

    def fetch(self, url, headers):
        portal = self.portals[url]
        if portal.etag and headers.get("If-None-Match") == portal.etag:
            return FetchResponse(304, {"ETag": portal.etag})
        response_headers = {"Content-Type": portal.media_type}
        if portal.etag:
            response_headers["ETag"] = portal.etag
        return FetchResponse(200, response_headers, portal.body.encode("utf-8"))


def test_federation_integration():
    vocabularies = vocabularies_by_iri()
    shapes = compile_to_shapes(minimum_profile(), vocabularies)
    fetcher = _Fetcher({
        "http://a.example.org/catalog.ttl": _Portal(PORTAL_A, "text/turtle"),
        "http://b.example.org/catalog.nt": _Portal(PORTAL_B_NT, "application/n-triples"),
        "http://c.example.org/catalog.ttl": _Portal(PORTAL_C, "text/turtle", etag='"c1"'),
    })
    sources = [
        SourcePortal("a", "http://a.example.org/catalog.ttl"),
        SourcePortal("b", "http://b.example.org/catalog.nt", Format.NTRIPLES),
        SourcePortal("c", "http://c.example.org/catalog.ttl"),
    ]
    catalog = FederatedCatalog()
    updated_sources = []
    for source in sources:
        records, updated = harvest_source(source, fetcher, shapes, vocabularies)
        catalog = merge_into_catalog(catalog, records)
        updated_sources.append(updated)

    counts_ok = len(catalog) == 4
    provenance_ok = {r.source_id for r in catalog.records.values()} == {"a", "b", "c"}
    flagged = [r for r in catalog.records.values() if not r.validation.conforms]
    flagged_ok = len(flagged) == 1 and flagged[0].source_id == "b"

    # ETag: re-harvest of portal c takes the 304 path and changes nothing
    again, final = harvest_source(updated_sources[2], fetcher, shapes, vocabularies)
    etag_ok = again == [] and final == updated_sources[2]

    # cross-portal theme search returns the union across sources
    hits = search(catalog, SearchQuery(theme=THEME_PT))
    union_ok = {(r.dataset_iri.value, r.source_id) for r in hits} == {
        ("http://a.example.org/ds/1", "a"),
        ("http://b.example.org/ds/rail", "b"),
        ("http://c.example.org/ds/bikes", "c"),
    }

    # 100 random queries against a brute-force filter oracle over the index
    rng = random.Random(55)
    themes = [THEME_PT, THEME_PARKING, "http://none.example.org/t", None]
    publishers = ["agency a", "Agency B", "nobody", None]
    texts = ["bike", "rail", "occupancy", "zzz", None]

    def oracle(query: SearchQuery):
        out = []
        for key, record in catalog.records.items():
            entry = catalog.index[key]
            ok = True
            if query.theme is not None:
                ok &= query.theme in entry.themes
            if query.publisher is not None:
                ok &= query.publisher.lower() in entry.publishers
            if query.text is not None:
                ok &= query.text.lower() in entry.text
            if ok:
                out.append(key)
        return sorted(out)

    oracle_ok = True
    done = 0
    while done < 100:
        criteria = {
            "theme": rng.choice(themes),
            "publisher": rng.choice(publishers),
            "text": rng.choice(texts),
        }
        if not any(criteria.values()):
            continue
        done += 1
        query = SearchQuery(**criteria)
        if sorted(r.key for r in search(catalog, query)) != oracle(query):
            oracle_ok = False

    report_line(
        "federation: counts, provenance, flagging, 304 re-harvest, theme union, "
        "100-query oracle agreement",
        counts_ok and provenance_ok and flagged_ok and etag_ok and union_ok and oracle_ok,
    )


# --- content negotiation ------------------------------------------------------------

NEGOTIATION_TABLE = [
    ("text/turtle", Representation.TURTLE),
    ("text/html", Representation.HTML),
    ("application/ld+json;q=0.9, text/turtle;q=0.8", Representation.JSONLD),
    ("*/*", Representation.TURTLE),
    ("text/*", Representation.TURTLE),
    ("application/*", Representation.JSONLD),
    ("text/turtle;q=0, */*", Representation.JSONLD),
    ("text/html, text/turtle", Representation.TURTLE),
    ("application/n-triples;q=0.5, text/html;q=0.4", Representation.NTRIPLES),
    ("image/png", None),
    ("text/turtle;q=0, application/ld+json;q=0", None),
    ("application/n-triples", Representation.NTRIPLES),
]


def test_content_negotiation_table():
    assert len(NEGOTIATION_TABLE) == 12
    failures = []
    for header, expected in NEGOTIATION_TABLE:
        try:
            outcome = negotiate(header)
        except NotAcceptable:
            outcome = None
        if outcome != expected:
            failures.append((header, expected, outcome))
    report_line(
        "content negotiation: 12-header decision table",
        not failures,
        f"failures: {failures}" if failures else "",
    )


# --- version routing -----------------------------------------------------------------

def test_version_routing():
    latest = resolve_version_route("/mobilitydcat-ap")
    ok = latest.version == "1.1.0" and not latest.explicit
    for version in ("1.0.0", "1.0.1", "1.1.0"):
        route = resolve_version_route(f"/mobilitydcat-ap/{version}")
        ok = ok and route.version == version and route.explicit
    for path in ("/mobilitydcat-ap/9.9.9", "/mobilitydcat-ap/1.2", "/nope", "/mobilitydcat-ap/1.0.0/x"):
        try:
            resolve_version_route(path)
            ok = False
        except UnknownRoute:
            pass
    report_line("version routing over the published version list", ok)
