"""The eleven controlled vocabularies shipped with the toolkit.

Bundled members are a representative, non-normative subset; the published
vocabulary files are the source of truth for full membership.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..errors import BundleCorrupt, ToolkitError
from .model import ConceptScheme
from .tabular import tabular_to_scheme

VOCABULARY_FILES = {
    "Application Layer Protocol": "application-layer-protocol.csv",
    "Communication Method": "communication-method.csv",
    "Conditions for Access and Usage": "conditions-for-access-and-usage.csv",
    "Mobility Theme": "mobility-theme.csv",
    "Mobility Data Standard": "mobility-data-standard.csv",
    "Georeferencing Method": "georeferencing-method.csv",
    "Grammar": "grammar.csv",
    "Network Coverage": "network-coverage.csv",
    "Intended Information Service": "intended-information-service.csv",
    "Transport Mode": "transport-mode.csv",
    "Update Frequency": "update-frequency.csv",
}


@lru_cache(maxsize=1)
def load_bundled_vocabularies() -> dict[str, ConceptScheme]:
    """All eleven schemes, keyed by display name."""
    schemes: dict[str, ConceptScheme] = {}
    root = resources.files("mobilitydcat") / "data" / "vocabularies"
    for name, filename in VOCABULARY_FILES.items():
        try:
            text = (root / filename).read_text(encoding="utf-8")
            scheme, _ = tabular_to_scheme(text)
        except (ToolkitError, OSError) as exc:
            raise BundleCorrupt(f"vocabulary {name!r} failed to load: {exc}") from exc
        if len(scheme) == 0:
            raise BundleCorrupt(f"vocabulary {name!r} is empty")
        schemes[name] = scheme
    return schemes


def vocabularies_by_iri() -> dict[str, ConceptScheme]:
    """Same schemes keyed by scheme IRI text, as the validator expects."""
    return {s.iri.value: s for s in load_bundled_vocabularies().values()}


def vocabulary_slug(name: str) -> str:
    return VOCABULARY_FILES[name].removesuffix(".csv")
