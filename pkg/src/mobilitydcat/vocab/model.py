"""SKOS concept schemes with multilingual labels and broader hierarchy."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import (
    CyclicBroader,
    DanglingBroader,
    DuplicateConceptIri,
    MissingLabel,
    UnknownConcept,
)
from ..rdf import Iri, Term


@dataclass(frozen=True)
class Concept:
    iri: Iri
    pref_labels: Mapping[str, str]  # language tag -> text
    definitions: Mapping[str, str] = field(default_factory=dict)
    broader: Iri | None = None
    scheme: Iri | None = None

    def __post_init__(self):
        if not self.pref_labels:
            raise MissingLabel(f"concept {self.iri} has no preferred label")
        object.__setattr__(self, "pref_labels", dict(self.pref_labels))
        object.__setattr__(self, "definitions", dict(self.definitions))


@dataclass(frozen=True)
class ConceptScheme:
    iri: Iri
    title: str
    version: str
    concepts: tuple[Concept, ...]

    def __post_init__(self):
        seen: dict[Iri, Concept] = {}
        for concept in self.concepts:
            if concept.iri in seen:
                raise DuplicateConceptIri(f"{concept.iri} appears twice in {self.iri}")
            seen[concept.iri] = concept
        for concept in self.concepts:
            if concept.broader is not None and concept.broader not in seen:
                raise DanglingBroader(
                    f"{concept.iri} declares broader {concept.broader}, "
                    f"which is not in scheme {self.iri}"
                )
        # broader must be acyclic
        for concept in self.concepts:
            node = concept
            trail = set()
            while node.broader is not None:
                if node.iri in trail:
                    raise CyclicBroader(f"broader cycle through {node.iri}")
                trail.add(node.iri)
                node = seen[node.broader]
        object.__setattr__(self, "_by_iri", seen)

    def __len__(self) -> int:
        return len(self.concepts)

    def __contains__(self, term: object) -> bool:
        return isinstance(term, Iri) and term in self._by_iri

    def concept(self, iri: Iri) -> Concept:
        try:
            return self._by_iri[iri]
        except KeyError:
            raise UnknownConcept(f"{iri} is not in scheme {self.iri}") from None

    def is_in_scheme(self, value: Term) -> bool:
        """True iff value is an IRI equal to some concept IRI of this scheme."""
        return isinstance(value, Iri) and value in self._by_iri

    def label_for(self, concept_iri: Iri, lang_preference: Sequence[str] = ("en",)) -> str:
        """First label matching the preference order; deterministic fallback
        to the lexicographically lowest language tag."""
        concept = self.concept(concept_iri)
        for lang in lang_preference:
            if lang in concept.pref_labels:
                return concept.pref_labels[lang]
        lowest = min(concept.pref_labels)
        return concept.pref_labels[lowest]
