"""Access to the profile documents and shape graphs shipped with the package."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..rdf import Graph, parse_turtle
from ..shacl import LoadedShapes, load_shapes
from .model import Profile
from .parser import parse_profile

PROFILE_VERSIONS = ("1.0.0", "1.0.1", "1.1.0")
CURRENT_VERSION = "1.1.0"

BASE_SHAPES_IRI = "http://data.europa.eu/r5r/shacl"
MOBILITY_SHAPES_IRI = "https://w3id.org/mobilitydcat-ap/shacl"


def _data_text(relative: str) -> str:
    return (resources.files("mobilitydcat") / "data" / relative).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def profile_for_version(version: str) -> Profile:
    if version not in PROFILE_VERSIONS:
        raise KeyError(f"no bundled profile for version {version!r}")
    return parse_profile(_data_text(f"profiles/mobilitydcat-ap-{version}.profile"))


def minimum_profile() -> Profile:
    """The bundled minimum profile at its current version."""
    return profile_for_version(CURRENT_VERSION)


@lru_cache(maxsize=None)
def dcat_ap_base_profile() -> Profile:
    return parse_profile(_data_text("profiles/dcat-ap-2.0.1.profile"))


@lru_cache(maxsize=None)
def _shape_graph(name: str) -> Graph:
    graph, _ = parse_turtle(_data_text(f"shapes/{name}"))
    return graph


def bundled_shape_resolver() -> dict[str, Graph]:
    return {
        BASE_SHAPES_IRI: _shape_graph("dcat-ap.shapes.ttl"),
        MOBILITY_SHAPES_IRI: _shape_graph("mobilitydcat-ap.shapes.ttl"),
    }


def mobility_shapes() -> LoadedShapes:
    """The bundled mobility shape graph with its base import resolved."""
    return load_shapes(_shape_graph("mobilitydcat-ap.shapes.ttl"), bundled_shape_resolver())
