"""Application-profile model: classes, properties, obligations, cardinalities."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Mapping

from ..errors import ProfileConsistencyError
from ..rdf import Iri

_SEMVER_RE = re.compile(r"^\d+\.\d+\.\d+$")


class Obligation(IntEnum):
    """Totally ordered: optional < recommended < mandatory."""

    OPTIONAL = 0
    RECOMMENDED = 1
    MANDATORY = 2

    @classmethod
    def from_text(cls, text: str) -> "Obligation":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ProfileConsistencyError(f"unknown obligation {text!r}") from None

    def __str__(self) -> str:
        return self.name.lower()


class Unbounded:
    """Explicit upper-bound marker; compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "*"


UNBOUNDED = Unbounded()


def card_le(a: int | Unbounded, b: int | Unbounded) -> bool:
    if isinstance(b, Unbounded):
        return True
    if isinstance(a, Unbounded):
        return False
    return a <= b


@dataclass(frozen=True)
class PropertyProfile:
    property_iri: Iri
    obligation: Obligation
    min_card: int = 0
    max_card: int | Unbounded = UNBOUNDED
    range_class: Iri | None = None
    datatype: Iri | None = None
    vocabulary: Iri | None = None  # concept scheme binding

    def __post_init__(self):
        if self.min_card < 0:
            raise ProfileConsistencyError(f"{self.property_iri}: negative minCard")
        if isinstance(self.max_card, int) and self.max_card < 1:
            raise ProfileConsistencyError(f"{self.property_iri}: maxCard must be >= 1")
        if not card_le(self.min_card, self.max_card):
            raise ProfileConsistencyError(
                f"{self.property_iri}: minCard {self.min_card} exceeds maxCard {self.max_card}"
            )
        if self.obligation is Obligation.MANDATORY and self.min_card < 1:
            raise ProfileConsistencyError(
                f"{self.property_iri}: mandatory property needs minCard >= 1"
            )
        if self.obligation is Obligation.OPTIONAL and self.min_card != 0:
            raise ProfileConsistencyError(
                f"{self.property_iri}: optional property must have minCard 0"
            )


@dataclass(frozen=True)
class ClassProfile:
    class_iri: Iri
    properties: tuple[PropertyProfile, ...] = ()
    sub_class_of: Iri | None = None

    def __post_init__(self):
        seen = set()
        for prop in self.properties:
            if prop.property_iri in seen:
                raise ProfileConsistencyError(
                    f"duplicate property {prop.property_iri} in {self.class_iri}"
                )
            seen.add(prop.property_iri)

    def property(self, iri: Iri) -> PropertyProfile | None:
        for prop in self.properties:
            if prop.property_iri == iri:
                return prop
        return None


@dataclass(frozen=True)
class Profile:
    id: Iri
    version: str
    namespace: Iri
    classes: tuple[ClassProfile, ...] = ()
    base_profile: Iri | None = None
    # sub-scheme declarations (sub -> super) used by extension narrowing checks
    sub_schemes: Mapping[Iri, Iri] = field(default_factory=dict)

    def __post_init__(self):
        if not _SEMVER_RE.match(self.version):
            raise ProfileConsistencyError(f"version {self.version!r} is not MAJOR.MINOR.PATCH")
        seen = set()
        for cls in self.classes:
            if cls.class_iri in seen:
                raise ProfileConsistencyError(f"duplicate class {cls.class_iri}")
            seen.add(cls.class_iri)
        object.__setattr__(self, "sub_schemes", dict(self.sub_schemes))

    def class_profile(self, iri: Iri) -> ClassProfile | None:
        for cls in self.classes:
            if cls.class_iri == iri:
                return cls
        return None

    def scheme_narrows(self, sub: Iri, super_: Iri) -> bool:
        """True when sub equals or is transitively declared a sub-scheme of super."""
        seen = set()
        node: Iri | None = sub
        while node is not None and node not in seen:
            if node == super_:
                return True
            seen.add(node)
            node = self.sub_schemes.get(node)
        return False
