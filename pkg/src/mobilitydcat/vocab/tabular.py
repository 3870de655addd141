"""CSV <-> SKOS conversion for controlled vocabularies.

The tabular format is plain CSV with metadata header lines:

    #meta: scheme=https://w3id.org/mobilitydcat-ap/update-frequency
    #meta: title=Update Frequency
    #meta: version=1.0.0
    iri,prefLabel@en,prefLabel@de,definition@en,broader
    http://.../DAILY,Daily,Täglich,Updated every day,

Columns are the concept IRI, one prefLabel column per language, optional
definition columns per language, and an optional broader column.
"""

from __future__ import annotations

import csv
import io

from ..errors import MalformedIri, TableSyntaxError
from ..namespaces import DCT, OWL_VERSION_INFO, RDF_TYPE, SKOS
from ..rdf import Graph, Iri, Literal, Triple
from .model import Concept, ConceptScheme

_META_PREFIX = "#meta:"


def _parse_meta(lines: list[str]) -> dict[str, str]:
    meta: dict[str, str] = {}
    for line in lines:
        body = line[len(_META_PREFIX):].strip()
        key, sep, value = body.partition("=")
        if not sep:
            raise TableSyntaxError(f"malformed meta line {line!r}")
        meta[key.strip()] = value.strip()
    return meta


def tabular_to_scheme(text: str) -> tuple[ConceptScheme, Graph]:
    """Read a vocabulary table; returns the scheme and its SKOS rendering."""
    meta_lines = []
    data_lines = []
    for line in text.split("\n"):
        if line.startswith(_META_PREFIX):
            meta_lines.append(line)
        elif line.strip():
            data_lines.append(line)

    meta = _parse_meta(meta_lines)
    for key in ("scheme", "title", "version"):
        if key not in meta:
            raise TableSyntaxError(f"missing '#meta: {key}=...' header")
    try:
        scheme_iri = Iri(meta["scheme"])
    except MalformedIri as exc:
        raise TableSyntaxError(f"bad scheme IRI: {exc}") from exc

    rows = list(csv.reader(io.StringIO("\n".join(data_lines))))
    if not rows:
        raise TableSyntaxError("no header row")
    header = [h.strip() for h in rows[0]]
    if not header or header[0] != "iri":
        raise TableSyntaxError("first column must be 'iri'")

    label_langs: dict[int, str] = {}
    definition_langs: dict[int, str] = {}
    broader_col: int | None = None
    for i, name in enumerate(header[1:], start=1):
        if name.startswith("prefLabel@"):
            label_langs[i] = name[len("prefLabel@"):]
        elif name.startswith("definition@"):
            definition_langs[i] = name[len("definition@"):]
        elif name == "broader":
            broader_col = i
        else:
            raise TableSyntaxError(f"unknown column {name!r}")
    if not label_langs:
        raise TableSyntaxError("at least one prefLabel@<lang> column required")

    concepts: list[Concept] = []
    for row_no, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        if len(row) > len(header):
            raise TableSyntaxError(f"row {row_no} has more cells than the header")
        cells = [cell.strip() for cell in row] + [""] * (len(header) - len(row))
        try:
            iri = Iri(cells[0])
        except MalformedIri as exc:
            raise TableSyntaxError(f"row {row_no}: {exc}") from exc
        labels = {lang: cells[i] for i, lang in label_langs.items() if cells[i]}
        definitions = {lang: cells[i] for i, lang in definition_langs.items() if cells[i]}
        broader = None
        if broader_col is not None and cells[broader_col]:
            try:
                broader = Iri(cells[broader_col])
            except MalformedIri as exc:
                raise TableSyntaxError(f"row {row_no}: {exc}") from exc
        concepts.append(Concept(
            iri=iri,
            pref_labels=labels,
            definitions=definitions,
            broader=broader,
            scheme=scheme_iri,
        ))

    scheme = ConceptScheme(
        iri=scheme_iri,
        title=meta["title"],
        version=meta["version"],
        concepts=tuple(concepts),
    )
    return scheme, scheme_to_graph(scheme)


def scheme_to_graph(scheme: ConceptScheme) -> Graph:
    """SKOS rendering: scheme node, concept typing, in-scheme, labels, broader."""
    graph = Graph()
    graph.add(Triple(scheme.iri, Iri(RDF_TYPE), Iri(SKOS + "ConceptScheme")))
    graph.add(Triple(scheme.iri, Iri(DCT + "title"), Literal(scheme.title)))
    graph.add(Triple(scheme.iri, Iri(OWL_VERSION_INFO), Literal(scheme.version)))
    for concept in scheme.concepts:
        graph.add(Triple(concept.iri, Iri(RDF_TYPE), Iri(SKOS + "Concept")))
        graph.add(Triple(concept.iri, Iri(SKOS + "inScheme"), scheme.iri))
        for lang, text in concept.pref_labels.items():
            graph.add(Triple(concept.iri, Iri(SKOS + "prefLabel"), Literal(text, language=lang)))
        for lang, text in concept.definitions.items():
            graph.add(Triple(concept.iri, Iri(SKOS + "definition"), Literal(text, language=lang)))
        if concept.broader is not None:
            graph.add(Triple(concept.iri, Iri(SKOS + "broader"), concept.broader))
    return graph


def scheme_to_table(scheme: ConceptScheme) -> str:
    """Inverse of tabular_to_scheme, lossless for the supported columns."""
    label_langs = sorted({lang for c in scheme.concepts for lang in c.pref_labels})
    definition_langs = sorted({lang for c in scheme.concepts for lang in c.definitions})
    has_broader = any(c.broader is not None for c in scheme.concepts)

    header = (
        ["iri"]
        + [f"prefLabel@{lang}" for lang in label_langs]
        + [f"definition@{lang}" for lang in definition_langs]
        + (["broader"] if has_broader else [])
    )
    buffer = io.StringIO()
    buffer.write(f"#meta: scheme={scheme.iri}\n")
    buffer.write(f"#meta: title={scheme.title}\n")
    buffer.write(f"#meta: version={scheme.version}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for concept in scheme.concepts:
        row = [concept.iri.value]
        row += [concept.pref_labels.get(lang, "") for lang in label_langs]
        row += [concept.definitions.get(lang, "") for lang in definition_langs]
        if has_broader:
            row.append(concept.broader.value if concept.broader else "")
        writer.writerow(row)
    return buffer.getvalue()
