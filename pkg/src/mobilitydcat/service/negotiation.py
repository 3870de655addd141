"""HTTP content negotiation over the toolkit's representations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..errors import MalformedAcceptHeader, NotAcceptable
from ..rdf import Format


class Representation(Enum):
    TURTLE = "text/turtle"
    JSONLD = "application/ld+json"
    NTRIPLES = "application/n-triples"
    HTML = "text/html"

    @property
    def media_type(self) -> str:
        return self.value

    @property
    def format(self) -> Format | None:
        """The matching RDF serialization; None for the HTML view."""
        if self is Representation.HTML:
            return None
        return Format.from_media_type(self.value)


# ties break in this order
SERVER_PREFERENCE = (
    Representation.TURTLE,
    Representation.JSONLD,
    Representation.NTRIPLES,
    Representation.HTML,
)


@dataclass(frozen=True)
class AcceptEntry:
    media_type: str  # "type/subtype", "type/*" or "*/*"
    q: float = 1.0

    def specificity(self) -> int:
        if self.media_type == "*/*":
            return 1
        if self.media_type.endswith("/*"):
            return 2
        return 3

    def matches(self, media_type: str) -> bool:
        if self.media_type == "*/*":
            return True
        if self.media_type.endswith("/*"):
            return media_type.split("/", 1)[0] == self.media_type.split("/", 1)[0]
        return self.media_type == media_type


@dataclass(frozen=True)
class AcceptPreference:
    entries: tuple[AcceptEntry, ...]

    @classmethod
    def parse(cls, header: str | None) -> "AcceptPreference":
        if header is None or not header.strip():
            return cls(entries=(AcceptEntry("*/*"),))
        entries = []
        for part in header.split(","):
            part = part.strip()
            if not part:
                continue
            segments = [s.strip() for s in part.split(";")]
            media_type = segments[0].lower()
            if "/" not in media_type or " " in media_type or not media_type:
                raise MalformedAcceptHeader(f"bad media range {segments[0]!r}")
            q = 1.0
            for param in segments[1:]:
                key, sep, value = param.partition("=")
                if key.strip().lower() == "q":
                    if not sep:
                        raise MalformedAcceptHeader(f"bad q parameter in {part!r}")
                    try:
                        q = float(value.strip())
                    except ValueError as exc:
                        raise MalformedAcceptHeader(f"bad q value {value!r}") from exc
                    if not 0.0 <= q <= 1.0:
                        raise MalformedAcceptHeader(f"q out of range: {q}")
            entries.append(AcceptEntry(media_type, q))
        if not entries:
            raise MalformedAcceptHeader(f"empty Accept header {header!r}")
        return cls(entries=tuple(entries))


def negotiate_media_type(
    accept: AcceptPreference | str | None, ordered_media_types: list[str]
) -> str:
    """Highest-q acceptable media type; the given order breaks ties.

    The q of a media type comes from its most specific matching entry;
    q=0 excludes; nothing acceptable raises NotAcceptable.
    """
    if not isinstance(accept, AcceptPreference):
        accept = AcceptPreference.parse(accept)

    def quality(media_type: str) -> float | None:
        matching = [e for e in accept.entries if e.matches(media_type)]
        if not matching:
            return None
        best_specificity = max(e.specificity() for e in matching)
        return max(e.q for e in matching if e.specificity() == best_specificity)

    best: tuple[float, int] | None = None
    chosen: str | None = None
    for index, media_type in enumerate(ordered_media_types):
        q = quality(media_type)
        if q is None or q == 0.0:
            continue
        rank = (q, -index)
        if best is None or rank > best:
            best = rank
            chosen = media_type
    if chosen is None:
        raise NotAcceptable("no acceptable representation")
    return chosen


def negotiate(
    accept: AcceptPreference | str | None,
    available: Iterable[Representation] = SERVER_PREFERENCE,
) -> Representation:
    """Pick among the toolkit's representations; server preference breaks ties."""
    available = set(available)
    ordered = [r.media_type for r in SERVER_PREFERENCE if r in available]
    chosen = negotiate_media_type(accept, ordered)
    return next(r for r in SERVER_PREFERENCE if r.media_type == chosen)
