"""Parser for the toolkit's plain-text profile documents.

The format is line oriented and human editable:

    # comment
    profile: <https://w3id.org/mobilitydcat-ap>
    version: 1.1.0
    namespace: <https://w3id.org/mobilitydcat-ap#>
    extends: <http://data.europa.eu/r5r>              # optional
    prefix dcat: <http://www.w3.org/ns/dcat#>          # any number
    subscheme <sub-scheme-iri> of <super-scheme-iri>   # any number

    class dcat:Dataset
      dct:title            | mandatory   | 1..*
      dct:accrualPeriodicity | mandatory | 1..1 | | <scheme-iri>
    class mobilitydcatap:MobilityDataStandard subclassof dct:Standard

Property lines hold up to five '|' columns: property IRI, obligation,
min..max cardinality, range (an xsd: IRI means datatype, any other IRI a
range class), vocabulary (concept scheme IRI). Extra columns are rejected.
"""

from __future__ import annotations

import re

from ..errors import MalformedIri, ProfileSyntaxError
from ..namespaces import XSD
from ..rdf import Iri
from .model import UNBOUNDED, ClassProfile, Obligation, Profile, PropertyProfile, Unbounded

_HEADER_KEYS = ("profile", "version", "namespace", "extends")


class _DocParser:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.prefixes: dict[str, str] = {}

    def fail(self, line_no: int, message: str) -> ProfileSyntaxError:
        return ProfileSyntaxError(f"line {line_no}: {message}")

    def iri(self, token: str, line_no: int) -> Iri:
        token = token.strip()
        if token.startswith("<") and token.endswith(">"):
            try:
                return Iri(token[1:-1])
            except MalformedIri as exc:
                raise self.fail(line_no, str(exc))
        prefix, sep, local = token.partition(":")
        if sep and prefix in self.prefixes:
            return Iri(self.prefixes[prefix] + local)
        if sep and not prefix.startswith("http") and prefix not in self.prefixes:
            raise self.fail(line_no, f"undeclared prefix {prefix!r}")
        try:
            return Iri(token)
        except MalformedIri as exc:
            raise self.fail(line_no, str(exc))

    def parse(self) -> Profile:
        header: dict[str, str] = {}
        sub_schemes: dict[Iri, Iri] = {}
        classes: list[ClassProfile] = []
        current_class: Iri | None = None
        current_parent: Iri | None = None
        current_props: list[PropertyProfile] = []

        def close_class():
            nonlocal current_class, current_parent, current_props
            if current_class is not None:
                classes.append(ClassProfile(
                    class_iri=current_class,
                    properties=tuple(current_props),
                    sub_class_of=current_parent,
                ))
            current_class, current_parent, current_props = None, None, []

        for line_no, raw in enumerate(self.lines, start=1):
            # '#' starts a comment only at line start or after whitespace
            # (IRIs legally contain '#').
            if raw.lstrip().startswith("#"):
                continue
            cut = re.search(r"\s#", raw)
            line = raw[: cut.start()] if cut else raw
            stripped = line.strip()
            if not stripped:
                continue

            if stripped.startswith("prefix "):
                rest = stripped[len("prefix "):].strip()
                label, sep, ns = rest.partition(":")
                if not sep:
                    raise self.fail(line_no, "prefix line needs 'prefix label: <iri>'")
                self.prefixes[label.strip()] = self.iri(ns.strip(), line_no).value
                continue

            if stripped.startswith("subscheme "):
                rest = stripped[len("subscheme "):]
                sub_text, sep, super_text = rest.partition(" of ")
                if not sep:
                    raise self.fail(line_no, "subscheme line needs '<sub> of <super>'")
                sub_schemes[self.iri(sub_text, line_no)] = self.iri(super_text, line_no)
                continue

            if stripped.startswith("class ") or stripped == "class":
                close_class()
                rest = stripped[len("class"):].strip()
                if not rest:
                    raise self.fail(line_no, "class line needs an IRI")
                head, sep, parent = rest.partition(" subclassof ")
                current_class = self.iri(head, line_no)
                current_parent = self.iri(parent, line_no) if sep else None
                continue

            key, sep, value = stripped.partition(":")
            if sep and key.strip() in _HEADER_KEYS and current_class is None:
                header[key.strip()] = value.strip()
                continue

            if "|" in stripped or current_class is not None:
                if current_class is None:
                    raise self.fail(line_no, "property line outside any class section")
                current_props.append(self._property_line(stripped, line_no))
                continue

            raise self.fail(line_no, f"unrecognised line {stripped!r}")

        close_class()

        for required in ("profile", "version", "namespace"):
            if required not in header:
                raise ProfileSyntaxError(f"missing '{required}:' header")

        return Profile(
            id=self.iri(header["profile"], 0),
            version=header["version"],
            namespace=self.iri(header["namespace"], 0),
            classes=tuple(classes),
            base_profile=self.iri(header["extends"], 0) if "extends" in header else None,
            sub_schemes=sub_schemes,
        )

    def _property_line(self, line: str, line_no: int) -> PropertyProfile:
        columns = [c.strip() for c in line.split("|")]
        if len(columns) > 5:
            raise self.fail(line_no, f"too many columns ({len(columns)}; at most 5 allowed)")
        if len(columns) < 2:
            raise self.fail(line_no, "property line needs at least 'iri | obligation'")
        while len(columns) < 5:
            columns.append("")
        prop_text, obligation_text, card_text, range_text, vocab_text = columns

        obligation = Obligation.from_text(obligation_text)
        min_card, max_card = self._cardinality(card_text, obligation, line_no)

        range_class = None
        datatype = None
        if range_text:
            range_iri = self.iri(range_text, line_no)
            if range_iri.value.startswith(XSD):
                datatype = range_iri
            else:
                range_class = range_iri

        return PropertyProfile(
            property_iri=self.iri(prop_text, line_no),
            obligation=obligation,
            min_card=min_card,
            max_card=max_card,
            range_class=range_class,
            datatype=datatype,
            vocabulary=self.iri(vocab_text, line_no) if vocab_text else None,
        )

    def _cardinality(
        self, text: str, obligation: Obligation, line_no: int
    ) -> tuple[int, int | Unbounded]:
        if not text:
            # defaults derived from the obligation
            return (1 if obligation is Obligation.MANDATORY else 0, UNBOUNDED)
        low, sep, high = text.partition("..")
        if not sep:
            raise self.fail(line_no, f"cardinality {text!r} must look like 'min..max'")
        try:
            min_card = int(low)
        except ValueError:
            raise self.fail(line_no, f"bad minimum cardinality {low!r}")
        if high.strip() == "*":
            return min_card, UNBOUNDED
        try:
            return min_card, int(high)
        except ValueError:
            raise self.fail(line_no, f"bad maximum cardinality {high!r}")


def parse_profile(text: str) -> Profile:
    return _DocParser(text).parse()


def load_profile(path) -> Profile:
    """Parse a profile document from a file path."""
    from pathlib import Path

    return parse_profile(Path(path).read_text(encoding="utf-8"))
