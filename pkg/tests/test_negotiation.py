import pytest

from mobilitydcat.errors import MalformedAcceptHeader, NotAcceptable, UnknownRoute
from mobilitydcat.service.negotiation import AcceptPreference, Representation, negotiate
from mobilitydcat.service.routing import resolve_version_route

T, J, N, H = (
    Representation.TURTLE,
    Representation.JSONLD,
    Representation.NTRIPLES,
    Representation.HTML,
)

# the full decision table: header -> winner (None = 406)
DECISION_TABLE = [
    ("text/turtle", T),
    ("text/html", H),
    ("application/ld+json;q=0.9, text/turtle;q=0.8", J),
    ("*/*", T),  # server preference breaks the tie
    ("text/*", T),  # turtle beats html within text/*
    ("application/*", J),  # json-ld beats n-triples by server preference
    ("text/turtle;q=0, */*", J),  # q=0 excludes turtle, next preference wins
    ("text/html, text/turtle", T),  # equal q: server preference
    ("application/n-triples;q=0.5, text/html;q=0.4", N),
    ("image/png", None),
    ("text/turtle;q=0, application/ld+json;q=0", None),
    ("application/n-triples", N),
]


class TestNegotiate:
    @pytest.mark.parametrize("header,expected", DECISION_TABLE)
    def test_decision_table(self, header, expected):
        if expected is None:
            with pytest.raises(NotAcceptable):
                negotiate(header)
        else:
            assert negotiate(header) is expected

    def test_missing_header_means_anything(self):
        assert negotiate(None) is T

    def test_specific_match_overrides_wildcard_q(self):
        # wildcard grants q=1 but the exact entry q=0.2 governs turtle
        header = "*/*;q=1, text/turtle;q=0.2"
        assert negotiate(header) is J

    def test_restricted_availability(self):
        assert negotiate("*/*", available=[H]) is H
        with pytest.raises(NotAcceptable):
            negotiate("text/turtle", available=[H])

    @pytest.mark.parametrize("bad", ["gibberish", "text/turtle;q=high", "text/turtle;q=2"])
    def test_malformed_headers(self, bad):
        with pytest.raises(MalformedAcceptHeader):
            negotiate(bad)

    def test_parse_preserves_order_and_default_q(self):
        pref = AcceptPreference.parse("text/html, application/ld+json;q=0.5")
        assert [e.media_type for e in pref.entries] == ["text/html", "application/ld+json"]
        assert [e.q for e in pref.entries] == [1.0, 0.5]

    def test_deterministic(self):
        for header, expected in DECISION_TABLE:
            if expected is not None:
                assert negotiate(header) is negotiate(header)


class TestVersionRouting:
    def test_unversioned_resolves_to_latest(self):
        route = resolve_version_route("/mobilitydcat-ap")
        assert route.version == "1.1.0"
        assert not route.explicit
        assert route.canonical_path == "/mobilitydcat-ap/1.1.0"

    @pytest.mark.parametrize("version", ["1.0.0", "1.0.1", "1.1.0"])
    def test_published_versions_resolve(self, version):
        route = resolve_version_route(f"/mobilitydcat-ap/{version}")
        assert route.version == version and route.explicit

    @pytest.mark.parametrize("path", [
        "/mobilitydcat-ap/9.9.9",
        "/mobilitydcat-ap/2",
        "/mobilitydcat-ap/1.0.0/extra",
        "/other-resource",
        "/",
    ])
    def test_everything_else_is_not_found(self, path):
        with pytest.raises(UnknownRoute):
            resolve_version_route(path)
