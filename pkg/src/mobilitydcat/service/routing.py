"""Versioned-IRI routing for the published specification resources."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import UnknownRoute
from ..profile import CURRENT_VERSION, PROFILE_VERSIONS

_SEMVER_RE = re.compile(r"^\d+\.\d+\.\d+$")

RESOURCE_NAME = "mobilitydcat-ap"


@dataclass(frozen=True)
class VersionRoute:
    resource_path: str
    version: str
    explicit: bool  # False when the unversioned path resolved to the latest

    @property
    def canonical_path(self) -> str:
        return f"/{RESOURCE_NAME}/{self.version}"


def resolve_version_route(path: str) -> VersionRoute:
    """Map request paths onto published versions.

    The unversioned path resolves to the latest release and is served via a
    see-other redirect to the versioned IRI; unknown resources or versions
    are not found.
    """
    segments = [s for s in path.split("/") if s]
    if not segments or segments[0] != RESOURCE_NAME:
        raise UnknownRoute(f"unknown resource {path!r}")
    if len(segments) == 1:
        return VersionRoute(path, CURRENT_VERSION, explicit=False)
    if len(segments) == 2:
        version = segments[1]
        if _SEMVER_RE.match(version) and version in PROFILE_VERSIONS:
            return VersionRoute(path, version, explicit=True)
        raise UnknownRoute(f"unknown version {version!r}")
    raise UnknownRoute(f"unknown resource {path!r}")
