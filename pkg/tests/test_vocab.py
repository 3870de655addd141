import pytest

from mobilitydcat.errors import (
    CyclicBroader,
    DanglingBroader,
    DuplicateConceptIri,
    MissingLabel,
    TableSyntaxError,
    UnknownConcept,
)
from mobilitydcat.namespaces import EU_AUTHORITY, MOBILITYDCATAP_VOCAB, SKOS
from mobilitydcat.rdf import Iri, Literal
from mobilitydcat.vocab import (
    VOCABULARY_FILES,
    load_bundled_vocabularies,
    scheme_to_table,
    tabular_to_scheme,
)

TABLE = """\
#meta: scheme=http://ex.org/scheme/freq
#meta: title=Frequency
#meta: version=1.0.0
iri,prefLabel@en,prefLabel@de,definition@en,broader
http://ex.org/freq/daily,Daily,Täglich,Every day,
http://ex.org/freq/weekly,Weekly,Wöchentlich,,
http://ex.org/freq/workdays,Workdays,Werktags,,http://ex.org/freq/daily
"""


class TestTabularToScheme:
    def test_counts_and_in_scheme_triples(self):
        scheme, graph = tabular_to_scheme(TABLE)
        assert len(scheme) == 3
        assert len(graph.match(None, Iri(SKOS + "inScheme"), None)) == 3

    def test_broader_triple(self):
        _, graph = tabular_to_scheme(TABLE)
        broaders = graph.match(None, Iri(SKOS + "broader"), None)
        assert len(broaders) == 1
        assert broaders[0].subject == Iri("http://ex.org/freq/workdays")
        assert broaders[0].object == Iri("http://ex.org/freq/daily")

    def test_labels_language_tagged(self):
        _, graph = tabular_to_scheme(TABLE)
        labels = {t.object for t in graph.match(Iri("http://ex.org/freq/daily"),
                                                Iri(SKOS + "prefLabel"), None)}
        assert Literal("Täglich", language="de") in labels

    def test_duplicate_iri_rejected(self):
        bad = TABLE + "http://ex.org/freq/daily,Dupe,,,\n"
        with pytest.raises(DuplicateConceptIri):
            tabular_to_scheme(bad)

    def test_dangling_broader_rejected(self):
        bad = TABLE + "http://ex.org/freq/x,X,,,http://ex.org/other/elsewhere\n"
        with pytest.raises(DanglingBroader):
            tabular_to_scheme(bad)

    def test_broader_cycle_rejected(self):
        cyclic = """\
#meta: scheme=http://ex.org/s
#meta: title=S
#meta: version=1.0.0
iri,prefLabel@en,broader
http://ex.org/a,A,http://ex.org/b
http://ex.org/b,B,http://ex.org/a
"""
        with pytest.raises(CyclicBroader):
            tabular_to_scheme(cyclic)

    def test_missing_label_rejected(self):
        bad = TABLE + "http://ex.org/freq/anon,,,,\n"
        with pytest.raises(MissingLabel):
            tabular_to_scheme(bad)

    def test_unknown_column_rejected(self):
        bad = TABLE.replace("broader", "color")
        with pytest.raises(TableSyntaxError):
            tabular_to_scheme(bad)

    def test_missing_meta_rejected(self):
        with pytest.raises(TableSyntaxError):
            tabular_to_scheme("iri,prefLabel@en\nhttp://ex.org/a,A\n")

    def test_round_trip_is_lossless(self):
        scheme, _ = tabular_to_scheme(TABLE)
        again, _ = tabular_to_scheme(scheme_to_table(scheme))
        assert again == scheme


class TestLookups:
    def setup_method(self):
        self.scheme, _ = tabular_to_scheme(TABLE)

    def test_membership(self):
        assert self.scheme.is_in_scheme(Iri("http://ex.org/freq/daily"))
        assert not self.scheme.is_in_scheme(Literal("daily"))
        assert not self.scheme.is_in_scheme(Iri("http://other.org/daily"))

    def test_label_preference_order(self):
        assert self.scheme.label_for(Iri("http://ex.org/freq/daily"), ["de", "en"]) == "Täglich"
        assert self.scheme.label_for(Iri("http://ex.org/freq/daily"), ["en"]) == "Daily"

    def test_label_fallback_lowest_language(self):
        # no French label: falls back to the lexicographically lowest tag (de)
        assert self.scheme.label_for(Iri("http://ex.org/freq/daily"), ["fr"]) == "Täglich"

    def test_unknown_concept(self):
        with pytest.raises(UnknownConcept):
            self.scheme.label_for(Iri("http://ex.org/freq/nope"), ["en"])


class TestBundled:
    def test_exactly_eleven_schemes(self):
        vocabularies = load_bundled_vocabularies()
        assert len(vocabularies) == 11
        assert set(vocabularies) == set(VOCABULARY_FILES)

    def test_update_frequency_present_and_nonempty(self):
        scheme = load_bundled_vocabularies()["Update Frequency"]
        assert len(scheme) > 0

    def test_every_concept_in_its_own_scheme(self):
        for scheme in load_bundled_vocabularies().values():
            for concept in scheme.concepts:
                assert scheme.is_in_scheme(concept.iri)

    def test_namespaces_are_project_or_eu_authority(self):
        for scheme in load_bundled_vocabularies().values():
            for concept in scheme.concepts:
                assert concept.iri.value.startswith(
                    (MOBILITYDCATAP_VOCAB, EU_AUTHORITY)
                ), concept.iri

    def test_update_frequency_extends_eu_authority_table(self):
        scheme = load_bundled_vocabularies()["Update Frequency"]
        origins = {c.iri.value.startswith(EU_AUTHORITY) for c in scheme.concepts}
        assert origins == {True, False}  # both reused and newly minted members

    def test_all_load_losslessly_through_tabular_round_trip(self):
        for scheme in load_bundled_vocabularies().values():
            again, _ = tabular_to_scheme(scheme_to_table(scheme))
            assert again == scheme
