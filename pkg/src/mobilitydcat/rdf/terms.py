"""RDF terms and triples as immutable, structurally compared values."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import InvalidLiteral, InvalidTriple, MalformedIri
from ..namespaces import RDF_LANG_STRING, XSD_STRING

# Absolute IRI: a scheme followed by anything free of whitespace and the
# characters Turtle forbids inside <...>.
_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_ILLEGAL_IRI_RE = re.compile(r'[\x00-\x20<>"{}|^`\\]')
_LANG_TAG_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")


@dataclass(frozen=True, slots=True)
class Iri:
    """An absolute IRI."""

    value: str

    def __post_init__(self):
        if not _SCHEME_RE.match(self.value):
            raise MalformedIri(f"not an absolute IRI: {self.value!r}")
        if _ILLEGAL_IRI_RE.search(self.value):
            raise MalformedIri(f"illegal character in IRI: {self.value!r}")

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class BlankNode:
    """A blank node with a graph-scoped label."""

    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    """An RDF literal.

    Exactly one of two configurations holds: a plain datatype with no
    language tag, or the language-string datatype with a tag.
    """

    lexical: str
    datatype: str = XSD_STRING
    language: str | None = None

    def __post_init__(self):
        if self.language is not None:
            if not _LANG_TAG_RE.match(self.language):
                raise InvalidLiteral(f"malformed language tag: {self.language!r}")
            # A language-tagged literal created with the default datatype is
            # normalised to rdf:langString; any other datatype is an error.
            if self.datatype == XSD_STRING:
                object.__setattr__(self, "datatype", RDF_LANG_STRING)
            elif self.datatype != RDF_LANG_STRING:
                raise InvalidLiteral(
                    "language tag requires the language-string datatype, "
                    f"got {self.datatype!r}"
                )
        elif self.datatype == RDF_LANG_STRING:
            raise InvalidLiteral("language-string literal without a language tag")
        else:
            # Datatype must itself be an absolute IRI.
            Iri(self.datatype)

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        if self.datatype == XSD_STRING:
            return f'"{self.lexical}"'
        return f'"{self.lexical}"^^<{self.datatype}>'


Term = Union[Iri, BlankNode, Literal]


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Iri | BlankNode
    predicate: Iri
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise InvalidTriple("literal subject")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise InvalidTriple(f"bad subject: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise InvalidTriple(f"predicate must be an IRI: {self.predicate!r}")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise InvalidTriple(f"bad object: {self.object!r}")

    def __str__(self) -> str:
        def fmt(t: Term) -> str:
            return f"<{t}>" if isinstance(t, Iri) else str(t)

        return f"{fmt(self.subject)} {fmt(self.predicate)} {fmt(self.object)} ."


def term_sort_key(term: Term) -> tuple:
    """Total order over terms: IRIs first, then blank nodes, then literals.

    Blank nodes compare by label here; serializers that need an order stable
    under relabeling canonicalise labels first (see rdf.isomorphism).
    """
    if isinstance(term, Iri):
        return (0, term.value)
    if isinstance(term, BlankNode):
        return (1, term.label)
    return (2, term.lexical, term.datatype, term.language or "")
