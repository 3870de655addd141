"""Minimal server-rendered HTML views (plain tables, no assets)."""

from __future__ import annotations

from html import escape

from ..federation import CatalogRecord
from ..profile import UNBOUNDED, Profile
from ..rdf import Graph

_PAGE = """<!doctype html>
<html lang="en">
<head><meta charset="utf-8"><title>{title}</title>
<style>
body {{ font-family: sans-serif; margin: 2rem; }}
table {{ border-collapse: collapse; }}
td, th {{ border: 1px solid #999; padding: 0.3rem 0.6rem; text-align: left; }}
caption {{ font-weight: bold; margin-bottom: 0.5rem; text-align: left; }}
</style>
</head>
<body>
<h1>{title}</h1>
{body}
</body>
</html>
"""


def page(title: str, body: str) -> str:
    return _PAGE.format(title=escape(title), body=body)


def profile_html(profile: Profile) -> str:
    sections = []
    for cls in profile.classes:
        rows = []
        for prop in cls.properties:
            max_card = "*" if prop.max_card is UNBOUNDED else str(prop.max_card)
            rows.append(
                "<tr>"
                f"<td>{escape(prop.property_iri.value)}</td>"
                f"<td>{escape(str(prop.obligation))}</td>"
                f"<td>{prop.min_card}..{escape(max_card)}</td>"
                f"<td>{escape(prop.range_class.value if prop.range_class else (prop.datatype.value if prop.datatype else ''))}</td>"
                f"<td>{escape(prop.vocabulary.value if prop.vocabulary else '')}</td>"
                "</tr>"
            )
        parent = (
            f" (subclass of {escape(cls.sub_class_of.value)})" if cls.sub_class_of else ""
        )
        sections.append(
            f"<table><caption>{escape(cls.class_iri.value)}{parent}</caption>"
            "<tr><th>Property</th><th>Obligation</th><th>Cardinality</th>"
            "<th>Range</th><th>Vocabulary</th></tr>"
            + "".join(rows)
            + "</table><br>"
        )
    heading = f"{profile.id.value} {profile.version}"
    return page(heading, "".join(sections))


def _graph_table(graph: Graph) -> str:
    rows = [
        "<tr>"
        f"<td>{escape(str(t.subject))}</td>"
        f"<td>{escape(str(t.predicate))}</td>"
        f"<td>{escape(str(t.object))}</td>"
        "</tr>"
        for t in graph
    ]
    return (
        "<table><tr><th>Subject</th><th>Predicate</th><th>Object</th></tr>"
        + "".join(rows)
        + "</table>"
    )


def graph_html(title: str, graph: Graph) -> str:
    return page(title, _graph_table(graph))


def record_html(record: CatalogRecord) -> str:
    status = "conforms" if record.validation.conforms else "does not conform"
    header = (
        f"<p>Source: {escape(record.source_id)} &mdash; harvested "
        f"{escape(record.harvested_at.isoformat())} &mdash; {status}</p>"
    )
    return page(record.dataset_iri.value, header + _graph_table(record.graph))
