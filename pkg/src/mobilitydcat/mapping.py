"""Convert legacy flat metadata records to profile-conformant RDF.

A declarative mapping table (CSV) renames legacy fields to property IRIs and
translates enumerated legacy values to concept IRIs. Conversion never fails
on record content: everything that cannot be mapped becomes a structured
issue alongside the produced graph.

Mapping table layout::

    #meta: target-class=http://www.w3.org/ns/dcat#Dataset
    #meta: id-template=https://example.org/dataset/{recordId}
    kind,field,value,target
    field,supplier,,http://purl.org/dc/terms/publisher
    value,frequency,daily,http://.../update-frequency/DAILY

Legacy records arrive either as CSV (one row per record, the ``recordId``
column naming the record, multi-values separated by ``|``) or as a JSON
object keyed by record id.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence
from urllib.parse import quote

from .errors import MalformedIri, OrphanValueMapping, TableSyntaxError
from .namespaces import RDF_TYPE
from .rdf import Graph, Iri, Literal, Triple

_META_PREFIX = "#meta:"


@dataclass(frozen=True)
class LegacyRecord:
    record_id: str
    fields: Mapping[str, Sequence[str]]

    def __post_init__(self):
        if not self.record_id:
            raise ValueError("record id must be nonempty")
        if any(not name for name in self.fields):
            raise ValueError("field names must be nonempty")
        object.__setattr__(
            self, "fields", {k: tuple(v) for k, v in self.fields.items()}
        )


class IssueKind(Enum):
    UNMAPPED_FIELD = "UnmappedField"
    UNMAPPED_VALUE = "UnmappedValue"
    EMPTY_VALUE = "EmptyValue"


@dataclass(frozen=True)
class ConversionIssue:
    record_id: str
    field_name: str
    kind: IssueKind
    detail: str


@dataclass(frozen=True)
class MappingTable:
    field_mappings: Mapping[str, Iri]  # legacy field name -> property IRI
    value_mappings: Mapping[tuple[str, str], Iri]  # (field, legacy value) -> concept
    target_class: Iri
    id_template: str  # contains the {recordId} placeholder

    def __post_init__(self):
        for (field_name, _value) in self.value_mappings:
            if field_name not in self.field_mappings:
                raise OrphanValueMapping(
                    f"value mapping for unmapped field {field_name!r}"
                )
        if "{recordId}" not in self.id_template:
            raise TableSyntaxError("id-template must contain {recordId}")
        object.__setattr__(self, "field_mappings", dict(self.field_mappings))
        object.__setattr__(self, "value_mappings", dict(self.value_mappings))

    def enumerated_fields(self) -> set[str]:
        return {field_name for field_name, _ in self.value_mappings}


def load_mapping_table(text: str) -> MappingTable:
    meta: dict[str, str] = {}
    data_lines = []
    for line in text.split("\n"):
        if line.startswith(_META_PREFIX):
            body = line[len(_META_PREFIX):].strip()
            key, sep, value = body.partition("=")
            if not sep:
                raise TableSyntaxError(f"malformed meta line {line!r}")
            meta[key.strip()] = value.strip()
        elif line.strip():
            data_lines.append(line)

    for key in ("target-class", "id-template"):
        if key not in meta:
            raise TableSyntaxError(f"missing '#meta: {key}=...' header")

    rows = list(csv.reader(io.StringIO("\n".join(data_lines))))
    if not rows or [c.strip() for c in rows[0]] != ["kind", "field", "value", "target"]:
        raise TableSyntaxError("header must be 'kind,field,value,target'")

    field_mappings: dict[str, Iri] = {}
    value_mappings: dict[tuple[str, str], Iri] = {}
    for row_no, row in enumerate(rows[1:], start=2):
        if not any(cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row] + [""] * (4 - len(row))
        kind, field_name, value, target = cells[:4]
        try:
            target_iri = Iri(target)
        except MalformedIri as exc:
            raise TableSyntaxError(f"row {row_no}: {exc}") from exc
        if kind == "field":
            field_mappings[field_name] = target_iri
        elif kind == "value":
            value_mappings[(field_name, value)] = target_iri
        else:
            raise TableSyntaxError(f"row {row_no}: unknown kind {kind!r}")

    try:
        target_class = Iri(meta["target-class"])
    except MalformedIri as exc:
        raise TableSyntaxError(f"bad target-class: {exc}") from exc

    return MappingTable(
        field_mappings=field_mappings,
        value_mappings=value_mappings,
        target_class=target_class,
        id_template=meta["id-template"],
    )


def mint_subject(table: MappingTable, record_id: str) -> Iri:
    # legacy identifiers routinely contain spaces and slashes
    return Iri(table.id_template.replace("{recordId}", quote(record_id, safe="")))


def convert_record(
    record: LegacyRecord, table: MappingTable
) -> tuple[Graph, list[ConversionIssue]]:
    """One triple per mapped (field, nonempty value); problems become issues.

    The subject is typed with the table's target class so the result is
    validatable against compiled profile shapes.
    """
    graph = Graph()
    issues: list[ConversionIssue] = []
    subject = mint_subject(table, record.record_id)
    graph.add(Triple(subject, Iri(RDF_TYPE), table.target_class))
    enumerated = table.enumerated_fields()

    for field_name, values in record.fields.items():
        property_iri = table.field_mappings.get(field_name)
        if property_iri is None:
            issues.append(ConversionIssue(
                record.record_id, field_name, IssueKind.UNMAPPED_FIELD,
                f"no mapping for legacy field {field_name!r}",
            ))
            continue
        for value in values:
            if not value.strip():
                issues.append(ConversionIssue(
                    record.record_id, field_name, IssueKind.EMPTY_VALUE,
                    "empty value skipped",
                ))
                continue
            concept = table.value_mappings.get((field_name, value))
            if concept is not None:
                graph.add(Triple(subject, property_iri, concept))
            else:
                # enumerated fields degrade to literals but flag the value
                if field_name in enumerated:
                    issues.append(ConversionIssue(
                        record.record_id, field_name, IssueKind.UNMAPPED_VALUE,
                        f"no concept for value {value!r}; kept as literal",
                    ))
                graph.add(Triple(subject, property_iri, Literal(value)))
    return graph, issues


def read_legacy_records(text: str, format: str) -> list[LegacyRecord]:
    """Read records from 'csv' (recordId column, '|' multi-values) or 'json'."""
    if format == "json":
        payload = json.loads(text)
        if not isinstance(payload, dict):
            raise TableSyntaxError("JSON records file must be an object keyed by record id")
        records = []
        for record_id, fields in payload.items():
            normalized = {
                name: list(v) if isinstance(v, list) else [str(v)]
                for name, v in fields.items()
            }
            records.append(LegacyRecord(record_id=record_id, fields=normalized))
        return records
    if format == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows:
            return []
        header = [h.strip() for h in rows[0]]
        if "recordId" not in header:
            raise TableSyntaxError("CSV records need a 'recordId' column")
        id_col = header.index("recordId")
        records = []
        for row in rows[1:]:
            if not any(cell.strip() for cell in row):
                continue
            cells = list(row) + [""] * (len(header) - len(row))
            fields = {
                header[i]: [v for v in cells[i].split("|") if v]
                for i in range(len(header))
                if i != id_col and cells[i].strip()
            }
            records.append(LegacyRecord(record_id=cells[id_col].strip(), fields=fields))
        return records
    raise TableSyntaxError(f"unknown legacy record format {format!r}")
