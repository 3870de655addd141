"""Deterministic serialization of graphs to Turtle, N-Triples and JSON-LD.

Output is a pure function of (graph, format, prefixes): triples are grouped
by subject and ordered by a total term order, and blank nodes are relabeled
canonically, so two calls always produce identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from ..errors import UnsupportedFormat
from ..namespaces import RDF_LANG_STRING, RDF_TYPE, XSD_STRING
from .graph import Graph
from .isomorphism import canonical_blank_order
from .terms import BlankNode, Iri, Literal, Term, Triple


class Format(Enum):
    TURTLE = "text/turtle"
    NTRIPLES = "application/n-triples"
    JSONLD = "application/ld+json"

    @property
    def media_type(self) -> str:
        return self.value

    @property
    def file_extension(self) -> str:
        return {"text/turtle": ".ttl",
                "application/n-triples": ".nt",
                "application/ld+json": ".jsonld"}[self.value]

    @classmethod
    def from_media_type(cls, media_type: str) -> "Format":
        base = media_type.split(";")[0].strip().lower()
        for fmt in cls:
            if fmt.value == base:
                return fmt
        raise UnsupportedFormat(f"unsupported media type {media_type!r}")

    @classmethod
    def from_name(cls, name: str) -> "Format":
        key = name.strip().lower().lstrip(".")
        aliases = {
            "turtle": cls.TURTLE, "ttl": cls.TURTLE,
            "ntriples": cls.NTRIPLES, "nt": cls.NTRIPLES,
            "n-triples": cls.NTRIPLES,
            "jsonld": cls.JSONLD, "json-ld": cls.JSONLD, "json": cls.JSONLD,
        }
        if key in aliases:
            return aliases[key]
        raise UnsupportedFormat(f"unknown format name {name!r}")


@dataclass(frozen=True)
class PrefixMap:
    """Ordered prefix-label to namespace bindings plus an optional base IRI."""

    bindings: Mapping[str, str] = field(default_factory=dict)
    base: str | None = None

    def __post_init__(self):
        for prefix, ns in self.bindings.items():
            Iri(ns)  # namespaces must be absolute
            if prefix and not re.fullmatch(r"[^\s:]+", prefix):
                raise ValueError(f"bad prefix label {prefix!r}")
        object.__setattr__(self, "bindings", dict(self.bindings))

    def shrink(self, iri: str) -> str | None:
        """Compact an IRI to prefix:local if a binding allows it."""
        best: tuple[int, str, str] | None = None
        for prefix, ns in self.bindings.items():
            if iri.startswith(ns) and len(ns) > (best[0] if best else -1):
                local = iri[len(ns):]
                if _SAFE_LOCAL_RE.fullmatch(local):
                    best = (len(ns), prefix, local)
        if best is None:
            return None
        return f"{best[1]}:{best[2]}"


# Locals we are willing to emit without escaping; anything else falls back
# to the full <IRI> form.
_SAFE_LOCAL_RE = re.compile(r"(?!.*\.\.)[A-Za-z0-9_][A-Za-z0-9_.\-]*(?<!\.)|")

_STRING_ESCAPES = {
    "\\": "\\\\",
    '"': '\\"',
    "\n": "\\n",
    "\r": "\\r",
    "\t": "\\t",
    "\b": "\\b",
    "\f": "\\f",
}


def _escape_string(text: str) -> str:
    out = []
    for ch in text:
        if ch in _STRING_ESCAPES:
            out.append(_STRING_ESCAPES[ch])
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def _canonical_labels(graph: Graph) -> dict[BlankNode, str]:
    return {b: f"b{i}" for i, b in enumerate(canonical_blank_order(graph))}


def _sort_key(term: Term, labels: dict[BlankNode, str]) -> tuple:
    if isinstance(term, Iri):
        return (0, term.value)
    if isinstance(term, BlankNode):
        return (1, labels[term])
    return (2, term.lexical, term.datatype, term.language or "")


def serialize(graph: Graph, format: Format, prefixes: PrefixMap | None = None) -> str:
    """Render a graph as text in the requested format."""
    prefixes = prefixes or PrefixMap()
    if format is Format.TURTLE:
        return _to_turtle(graph, prefixes)
    if format is Format.NTRIPLES:
        return _to_ntriples(graph)
    if format is Format.JSONLD:
        return _to_jsonld(graph, prefixes)
    raise UnsupportedFormat(f"unsupported format {format!r}")


# --- N-Triples ---------------------------------------------------------------

def _nt_term(term: Term, labels: dict[BlankNode, str]) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if isinstance(term, BlankNode):
        return f"_:{labels[term]}"
    lex = _escape_string(term.lexical)
    if term.language:
        return f'"{lex}"@{term.language}'
    if term.datatype == XSD_STRING:
        return f'"{lex}"'
    return f'"{lex}"^^<{term.datatype}>'


def _to_ntriples(graph: Graph) -> str:
    labels = _canonical_labels(graph)
    lines = sorted(
        f"{_nt_term(t.subject, labels)} {_nt_term(t.predicate, labels)} "
        f"{_nt_term(t.object, labels)} ."
        for t in graph
    )
    return "\n".join(lines) + ("\n" if lines else "")


# --- Turtle -------------------------------------------------------------------

def _ttl_iri(iri: Iri, prefixes: PrefixMap) -> str:
    compact = prefixes.shrink(iri.value)
    return compact if compact else f"<{iri.value}>"


def _ttl_literal(lit: Literal, prefixes: PrefixMap) -> str:
    lex = f'"{_escape_string(lit.lexical)}"'
    if lit.language:
        return f"{lex}@{lit.language}"
    if lit.datatype == XSD_STRING:
        return lex
    return f"{lex}^^{_ttl_iri(Iri(lit.datatype), prefixes)}"


def _to_turtle(graph: Graph, prefixes: PrefixMap) -> str:
    labels = _canonical_labels(graph)
    triples = sorted(
        graph,
        key=lambda t: (
            _sort_key(t.subject, labels),
            _sort_key(t.predicate, labels),
            _sort_key(t.object, labels),
        ),
    )
    by_subject: dict[Term, list[Triple]] = {}
    for t in triples:
        by_subject.setdefault(t.subject, []).append(t)

    # A blank node referenced by exactly one triple is printed inline as
    # [ ... ] unless that would recurse through a reference cycle.
    ref_count: dict[BlankNode, int] = {}
    for t in triples:
        if isinstance(t.object, BlankNode):
            ref_count[t.object] = ref_count.get(t.object, 0) + 1
    inline = {b for b, n in ref_count.items() if n == 1}
    parent: dict[BlankNode, Term] = {
        t.object: t.subject for t in triples
        if isinstance(t.object, BlankNode) and t.object in inline
    }
    for b in list(inline):
        seen = {b}
        node = parent.get(b)
        while isinstance(node, BlankNode) and node in inline:
            if node in seen:
                inline.difference_update(seen)
                break
            seen.add(node)
            node = parent.get(node)

    def render_term(term: Term, indent: str) -> str:
        if isinstance(term, Iri):
            return _ttl_iri(term, prefixes)
        if isinstance(term, Literal):
            return _ttl_literal(term, prefixes)
        if term in inline:
            return render_inline(term, indent)
        return f"_:{labels[term]}"

    def render_predicates(subject: Term, indent: str) -> str:
        parts = []
        for t in by_subject.get(subject, []):
            pred = "a" if t.predicate.value == RDF_TYPE else _ttl_iri(t.predicate, prefixes)
            parts.append(f"{pred} {render_term(t.object, indent)}")
        return f" ;\n{indent}".join(parts)

    def render_inline(node: BlankNode, indent: str) -> str:
        inner = indent + "    "
        body = render_predicates(node, inner)
        if not body:
            return "[]"
        return f"[ {body} ]"

    out: list[str] = []
    for prefix, ns in prefixes.bindings.items():
        out.append(f"@prefix {prefix}: <{ns}> .")
    if out:
        out.append("")

    for subject in by_subject:
        if isinstance(subject, BlankNode) and subject in inline:
            continue
        if isinstance(subject, Iri):
            head = _ttl_iri(subject, prefixes)
        else:
            head = f"_:{labels[subject]}"
        body = render_predicates(subject, "    ")
        out.append(f"{head} {body} .")
    return "\n".join(out) + ("\n" if out else "")


# --- JSON-LD (flattened) -------------------------------------------------------

def _jsonld_id(term: Term, labels: dict[BlankNode, str]) -> str:
    if isinstance(term, Iri):
        return term.value
    return f"_:{labels[term]}"  # type: ignore[index]


def _jsonld_value(term: Term, labels: dict[BlankNode, str]) -> dict:
    if isinstance(term, Literal):
        obj: dict = {"@value": term.lexical}
        if term.language:
            obj["@language"] = term.language
        elif term.datatype != XSD_STRING:
            obj["@type"] = term.datatype
        return obj
    return {"@id": _jsonld_id(term, labels)}


def _to_jsonld(graph: Graph, prefixes: PrefixMap) -> str:
    labels = _canonical_labels(graph)
    nodes: dict[str, dict] = {}
    for t in graph:
        node = nodes.setdefault(_jsonld_id(t.subject, labels), {})
        if t.predicate.value == RDF_TYPE and isinstance(t.object, (Iri, BlankNode)):
            node.setdefault("@type", []).append(_jsonld_id(t.object, labels))
        else:
            node.setdefault(t.predicate.value, []).append(_jsonld_value(t.object, labels))

    flattened = []
    for node_id in sorted(nodes):
        node = {"@id": node_id}
        body = nodes[node_id]
        if "@type" in body:
            node["@type"] = sorted(body["@type"])
        for pred in sorted(k for k in body if k != "@type"):
            node[pred] = sorted(body[pred], key=lambda v: json.dumps(v, sort_keys=True))
        flattened.append(node)

    doc: dict = {}
    if prefixes.bindings:
        doc["@context"] = dict(prefixes.bindings)
    doc["@graph"] = flattened
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
